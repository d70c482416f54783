#include "lll/wdag.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace lll {

WDag WDag::from_arcs(std::vector<int> labels, const std::vector<std::pair<int, int>>& arcs)
{
    WDag d;
    d.labels = std::move(labels);
    d.succ.assign(d.labels.size(), {});
    const int n = d.size();
    for (auto [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("wdag arc out of range: " + std::to_string(u) + "->" + std::to_string(v));
        d.succ[u].push_back(v);
    }
    for (auto& s : d.succ) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("duplicate wdag arc");
    }
    return d;
}

bool WDag::has_arc(int u, int v) const
{
    return std::binary_search(succ[u].begin(), succ[u].end(), v);
}

std::vector<std::pair<int, int>> WDag::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v : succ[u]) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<int>> WDag::predecessors() const
{
    std::vector<std::vector<int>> pred(labels.size());
    for (int u = 0; u < size(); ++u)
        for (int v : succ[u]) pred[v].push_back(u);
    return pred;
}

static bool related(const DependencyGraph& g, int a, int b)
{
    return a == b || g.adjacent(a, b);
}

WDag wdag_from_sequence(const DependencyGraph& g, const std::vector<int>& s)
{
    std::vector<std::pair<int, int>> arcs;
    for (int v : s)
        if (v < 1 || v > g.size()) throw std::invalid_argument("sequence label out of range");
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t l = k + 1; l < s.size(); ++l)
            if (related(g, s[k], s[l])) arcs.emplace_back(static_cast<int>(k), static_cast<int>(l));
    return WDag::from_arcs(s, arcs);
}

std::vector<int> topological_order(const WDag& d)
{
    const int n = d.size();
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : d.succ[u]) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (int v : d.succ[u])
            if (--indeg[v] == 0) ready.push(v);
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("wdag has a directed cycle");
    return order;
}

bool validate_wdag(const WDag& d, const DependencyGraph& g)
{
    const int n = d.size();
    for (int l : d.labels)
        if (l < 1 || l > g.size()) return false;
    try {
        topological_order(d);
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool arc = d.has_arc(u, v) || d.has_arc(v, u);
            if (arc != related(g, d.labels[u], d.labels[v])) return false;
        }
    return true;
}

std::vector<int> sinks(const WDag& d)
{
    std::vector<int> out;
    for (int v = 0; v < d.size(); ++v)
        if (d.succ[v].empty()) out.push_back(v);
    return out;
}

std::vector<std::vector<char>> reachability(const WDag& d)
{
    const int n = d.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    auto order = topological_order(d);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        for (int v : d.succ[u]) {
            reach[u][v] = 1;
            for (int w = 0; w < n; ++w)
                if (reach[v][w]) reach[u][w] = 1;
        }
    }
    return reach;
}

std::vector<int> canonical_form(const WDag& d)
{
    const int n = d.size();
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : d.succ[u]) ++indeg[v];
    // Sources always carry distinct labels (equal labels are joined by an arc), so the
    // smallest-label choice is unique.
    std::set<std::pair<int, int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.emplace(d.labels[v], v);
    std::vector<int> out;
    while (!ready.empty()) {
        auto [label, u] = *ready.begin();
        ready.erase(ready.begin());
        out.push_back(label);
        for (int v : d.succ[u])
            if (--indeg[v] == 0) ready.emplace(d.labels[v], v);
    }
    if (static_cast<int>(out.size()) != n) throw std::invalid_argument("wdag has a directed cycle");
    return out;
}

PrefixResult prefix(const WDag& d, const std::vector<int>& U)
{
    const int n = d.size();
    auto pred = d.predecessors();
    std::vector<char> keep(n, 0);
    std::vector<int> stack;
    for (int u : U) {
        if (u < 0 || u >= n) throw std::invalid_argument("prefix node out of range");
        if (!keep[u]) {
            keep[u] = 1;
            stack.push_back(u);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : pred[v])
            if (!keep[u]) {
                keep[u] = 1;
                stack.push_back(u);
            }
    }
    PrefixResult r;
    std::vector<int> index(n, -1);
    std::vector<int> labels;
    for (int v = 0; v < n; ++v)
        if (keep[v]) {
            index[v] = static_cast<int>(r.nodes.size());
            r.nodes.push_back(v);
            labels.push_back(d.labels[v]);
        }
    std::vector<std::pair<int, int>> arcs;
    for (int u : r.nodes)
        for (int v : d.succ[u])
            if (keep[v]) arcs.emplace_back(index[u], index[v]);
    r.dag = WDag::from_arcs(std::move(labels), arcs);
    return r;
}

static bool is_antichain(const std::vector<int>& U, const std::vector<std::vector<char>>& reach)
{
    for (int a : U)
        for (int b : U)
            if (a != b && reach[a][b]) return false;
    return true;
}

bool is_prefix(const WDag& h, const WDag& d)
{
    if (h.size() > d.size()) return false;
    if (h.size() == 0) return true;
    // D(U) = D(sinks of D(U)), so it is enough to try antichains with H's sink labels.
    std::vector<int> want;
    for (int s : sinks(h)) want.push_back(h.labels[s]);
    std::sort(want.begin(), want.end());
    const auto target = canonical_form(h);
    const auto reach = reachability(d);
    const int n = d.size();
    std::vector<int> U;
    bool found = false;
    auto rec = [&](auto&& self, int start) -> void {
        if (found) return;
        if (U.size() == want.size()) {
            std::vector<int> got;
            for (int u : U) got.push_back(d.labels[u]);
            std::sort(got.begin(), got.end());
            if (got != want || !is_antichain(U, reach)) return;
            auto pr = prefix(d, U);
            if (pr.dag.size() == h.size() && canonical_form(pr.dag) == target) found = true;
            return;
        }
        for (int v = start; v < n; ++v) {
            U.push_back(v);
            self(self, v + 1);
            U.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

std::size_t count_single_sink_prefixes(const WDag& d)
{
    const int n = d.size();
    std::set<std::vector<int>> seen;
    if (n <= 20) {
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> U;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) U.push_back(v);
            auto pr = prefix(d, U);
            if (sinks(pr.dag).size() == 1) seen.insert(canonical_form(pr.dag));
        }
    } else {
        for (int v = 0; v < n; ++v) seen.insert(canonical_form(prefix(d, {v}).dag));
    }
    return seen.size();
}

PwdagEnumeration enumerate_pwdags(const DependencyGraph& g, int node_cap, std::size_t max_count)
{
    if (node_cap < 0) throw std::invalid_argument("node cap must be nonnegative");
    PwdagEnumeration out;
    const int m = g.size();
    std::vector<int> seq;
    auto commute = [&](int a, int b) { return !related(g, a, b); };
    auto single_sink = [&]() {
        int count = 0;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            bool sink = true;
            for (std::size_t l = k + 1; l < seq.size() && sink; ++l)
                if (!commute(seq[k], seq[l])) sink = false;
            if (sink && ++count > 1) return false;
        }
        return count == 1;
    };
    // Grow label sequences in lexicographic normal form: each wdag is the class of its
    // linear extensions, and the lex-least extension is its unique representative.
    auto rec = [&](auto&& self) -> void {
        if (out.truncated) return;
        if (!seq.empty() && single_sink()) {
            if (out.dags.size() >= max_count) {
                out.truncated = true;
                return;
            }
            out.dags.push_back(wdag_from_sequence(g, seq));
        }
        if (static_cast<int>(seq.size()) == node_cap) return;
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (int t = static_cast<int>(seq.size()) - 1; t >= 0 && commute(seq[t], c); --t)
                if (seq[t] > c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            seq.push_back(c);
            self(self);
            seq.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::pair<int, int> group_key(const WDag& d)
{
    auto s = sinks(d);
    if (s.size() != 1) throw std::invalid_argument("group key needs a single-sink wdag");
    int i = d.labels[s[0]];
    return {i, static_cast<int>(std::count(d.labels.begin(), d.labels.end(), i))};
}

static bool path_avoiding_arc(const WDag& d, int u, int v)
{
    // Is there a path u ~> v other than the arc u->v itself?
    std::vector<char> seen(d.size(), 0);
    std::vector<int> stack;
    for (int w : d.succ[u])
        if (w != v) {
            seen[w] = 1;
            stack.push_back(w);
        }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (int y : d.succ[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    return false;
}

bool is_reversible(const WDag& d, int u, int v)
{
    if (u < 0 || v < 0 || u >= d.size() || v >= d.size() || !d.has_arc(u, v))
        throw std::invalid_argument("not an arc of the wdag");
    return !path_avoiding_arc(d, u, v);
}

std::vector<std::pair<int, int>> m_reversible_arcs(const WDag& d, const Matching& m)
{
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : d.arcs())
        if (d.labels[u] != d.labels[v] && m.contains(d.labels[u], d.labels[v]) && is_reversible(d, u, v))
            out.emplace_back(u, v);
    return out;
}

ReversibleNodes m_reversible_nodes(const WDag& d, const Matching& m)
{
    ReversibleNodes r;
    r.member.assign(d.size(), 0);
    for (auto [u, v] : m_reversible_arcs(d, m)) r.member[u] = r.member[v] = 1;
    for (int v = 0; v < d.size(); ++v)
        if (r.member[v]) r.by_label[d.labels[v]].push_back(v);
    return r;
}

static std::vector<int> list_nodes(const WDag& d, const std::vector<int>& order, int i, int j)
{
    std::vector<int> out;
    for (int v : order)
        if (d.labels[v] == i || d.labels[v] == j) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> disjoint_reversible_pairs(const WDag& d, const Matching& m)
{
    std::vector<std::pair<int, int>> out;
    auto order = topological_order(d);
    for (auto [i, j] : m.pairs()) {
        auto list = list_nodes(d, order, i, j);
        std::size_t k = 0;
        while (k + 1 < list.size()) {
            int u = list[k], v = list[k + 1];
            if (d.labels[u] != d.labels[v] && d.has_arc(u, v) && is_reversible(d, u, v)) {
                out.emplace_back(u, v);
                k += 2;
            } else {
                ++k;
            }
        }
    }
    return out;
}

WDag reverse_arc(const WDag& d, int u, int v)
{
    auto s = sinks(d);
    if (s.size() != 1) throw std::invalid_argument("reverse_arc needs a single-sink wdag");
    if (!is_reversible(d, u, v)) throw std::invalid_argument("arc is not reversible");
    auto arcs = d.arcs();
    for (auto& a : arcs)
        if (a.first == u && a.second == v) a = {v, u};
    return prefix(WDag::from_arcs(d.labels, arcs), {s[0]}).dag;
}

int list_position(const WDag& d, int v, const Matching& m)
{
    int i = m.partner(d.labels[v]);
    if (i == 0) throw std::invalid_argument("node label is not matched");
    auto pred = d.predecessors();
    int count = 0;
    for (int u : pred[v])
        if (d.labels[u] == i || d.labels[u] == d.labels[v]) ++count;
    return count + 1;
}

bool consistent_with_table(const WDag& d, const EventSystem& sys, const ResamplingTable& x)
{
    const int n = d.size();
    const auto reach = reachability(d);
    for (int v = 0; v < n; ++v) {
        const auto& vbl = sys.event(d.labels[v]).vbl;
        std::vector<Value> values;
        values.reserve(vbl.size());
        for (int j : vbl) {
            std::size_t idx = 1;
            for (int u = 0; u < n; ++u) {
                if (!reach[u][v]) continue;
                const auto& w = sys.event(d.labels[u]).vbl;
                if (std::binary_search(w.begin(), w.end(), j)) ++idx;
            }
            if (!x.has(j, idx)) return false;
            values.push_back(x.at(j, idx));
        }
        if (!sys.holds(d.labels[v], values)) return false;
    }
    return true;
}

AuxiliaryTable AuxiliaryTable::from_rows(std::map<Edge, std::vector<int>> rows)
{
    for (const auto& [e, row] : rows)
        for (int c : row)
            if (c != e.first && c != e.second) throw std::invalid_argument("auxiliary entry outside its pair");
    AuxiliaryTable t(0);
    t.rows_ = std::move(rows);
    return t;
}

bool AuxiliaryTable::has(int a, int b, std::size_t k) const
{
    if (k < 1) return false;
    if (!rows_) return true;
    auto it = rows_->find(make_edge(a, b));
    return it != rows_->end() && k <= it->second.size();
}

int AuxiliaryTable::at(int a, int b, std::size_t k) const
{
    if (!has(a, b, k)) throw std::out_of_range("auxiliary table entry missing");
    Edge e = make_edge(a, b);
    if (rows_) return rows_->at(e)[k - 1];
    std::uint64_t key = (static_cast<std::uint64_t>(e.first) << 32) ^ static_cast<std::uint64_t>(e.second);
    std::uint64_t bits = mix64(derive_seed(seed_, key) ^ mix64(k));
    return (bits >> 63) ? e.second : e.first;
}

static bool arc_inconsistent(const WDag& d, int u, int v, const AuxiliaryTable& y, const Matching& m)
{
    return y.at(d.labels[u], d.labels[v], static_cast<std::size_t>(list_position(d, u, m))) == d.labels[v];
}

bool consistent_with_tables(const WDag& d, const EventSystem& sys, const ResamplingTable& x,
                            const AuxiliaryTable& y, const Matching& m)
{
    if (!consistent_with_table(d, sys, x)) return false;
    for (auto [u, v] : m_reversible_arcs(d, m))
        if (arc_inconsistent(d, u, v, y, m) && consistent_with_table(reverse_arc(d, u, v), sys, x)) return false;
    return true;
}

RepairResult repair_to_consistent(const WDag& d0, const EventSystem& sys, const ResamplingTable& x,
                                  const AuxiliaryTable& y, const Matching& m)
{
    if (sinks(d0).size() != 1) throw std::invalid_argument("repair needs a single-sink wdag");
    if (!consistent_with_table(d0, sys, x)) throw std::invalid_argument("starting wdag is not consistent with the table");
    RepairResult r;
    r.dag = d0;
    std::set<std::vector<int>> seen;
    r.visited.push_back(canonical_form(d0));
    seen.insert(r.visited.back());
    for (;;) {
        bool moved = false;
        for (auto [u, v] : m_reversible_arcs(r.dag, m)) {
            if (!arc_inconsistent(r.dag, u, v, y, m)) continue;
            WDag next = reverse_arc(r.dag, u, v);
            if (!consistent_with_table(next, sys, x)) continue;
            auto key = canonical_form(next);
            if (!seen.insert(key).second) throw std::logic_error("repair revisited a wdag");
            r.visited.push_back(std::move(key));
            r.dag = std::move(next);
            ++r.steps;
            moved = true;
            break;
        }
        if (!moved) return r;
    }
}

Rational wdag_weight(const WDag& d, const ProbabilityVector& p)
{
    Rational w = 1;
    for (int l : d.labels) w *= p.at(l - 1);
    return w;
}

}  // namespace lll
