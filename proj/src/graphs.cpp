#include "lll/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

namespace lll {

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

DependencyGraph::DependencyGraph(int m) : DependencyGraph(m, {}) {}

DependencyGraph::DependencyGraph(int m, const std::vector<Edge>& edges) : m_(m)
{
    if (m < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(m), {});
    matrix_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        Edge e = make_edge(a, b);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [a, b] : edges_) {
        adj_[a - 1].push_back(b);
        adj_[b - 1].push_back(a);
        matrix_[(a - 1) * m_ + (b - 1)] = 1;
        matrix_[(b - 1) * m_ + (a - 1)] = 1;
    }
    for (auto& l : adj_) std::sort(l.begin(), l.end());
}

void DependencyGraph::check_vertex(int v) const
{
    if (v < 1 || v > m_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m_));
}

bool DependencyGraph::adjacent(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return matrix_[(u - 1) * m_ + (v - 1)] != 0;
}

const std::vector<int>& DependencyGraph::neighbors(int v) const
{
    check_vertex(v);
    return adj_[v - 1];
}

int DependencyGraph::max_degree() const
{
    int d = 0;
    for (const auto& l : adj_) d = std::max(d, static_cast<int>(l.size()));
    return d;
}

DependencyGraph DependencyGraph::induced(const std::vector<int>& vertices) const
{
    std::vector<Edge> es;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(vertices[a], vertices[b]))
                es.push_back({static_cast<int>(a) + 1, static_cast<int>(b) + 1});
    return DependencyGraph(static_cast<int>(vertices.size()), es);
}

BipartiteGraph::BipartiteGraph(int events, int variables, const std::vector<std::pair<int, int>>& edges)
    : m_(events), n_(variables)
{
    if (events < 0 || variables < 0) throw std::invalid_argument("negative bipartite size");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 1 || i > m_) throw std::out_of_range("event index " + std::to_string(i) + " out of range");
        if (j < 1 || j > n_) throw std::out_of_range("variable index " + std::to_string(j) + " out of range");
        if (!seen.insert({i, j}).second) throw std::invalid_argument("duplicate bipartite edge");
    }
    edges_.assign(seen.begin(), seen.end());
    vbl_.assign(static_cast<std::size_t>(m_), {});
    ev_.assign(static_cast<std::size_t>(n_), {});
    for (auto [i, j] : edges_) {
        vbl_[i - 1].push_back(j);
        ev_[j - 1].push_back(i);
    }
    for (auto& l : ev_) std::sort(l.begin(), l.end());
}

const std::vector<int>& BipartiteGraph::vbl(int event) const
{
    if (event < 1 || event > m_) throw std::out_of_range("event index out of range");
    return vbl_[event - 1];
}

const std::vector<int>& BipartiteGraph::events_of(int variable) const
{
    if (variable < 1 || variable > n_) throw std::out_of_range("variable index out of range");
    return ev_[variable - 1];
}

int BipartiteGraph::max_event_degree() const
{
    int d = 0;
    for (const auto& l : vbl_) d = std::max(d, static_cast<int>(l.size()));
    return d;
}

Matching::Matching(const DependencyGraph& g, const std::vector<Edge>& pairs)
{
    for (auto [a, b] : pairs) {
        if (a == b || a < 1 || b < 1 || a > g.size() || b > g.size() || !g.adjacent(a, b))
            throw std::invalid_argument("matched pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is not an edge");
        if (partner_.count(a) || partner_.count(b))
            throw std::invalid_argument("matching pairs share vertex");
        partner_[a] = b;
        partner_[b] = a;
        pairs_.push_back(make_edge(a, b));
    }
    std::sort(pairs_.begin(), pairs_.end());
}

int Matching::partner(int v) const
{
    auto it = partner_.find(v);
    return it == partner_.end() ? 0 : it->second;
}

bool Matching::contains(int u, int v) const { return u != v && partner(u) == v; }

DependencyGraph base_graph(const BipartiteGraph& b)
{
    std::set<Edge> es;
    for (int j = 1; j <= b.variables(); ++j) {
        const auto& ev = b.events_of(j);
        for (std::size_t x = 0; x < ev.size(); ++x)
            for (std::size_t y = x + 1; y < ev.size(); ++y) es.insert(make_edge(ev[x], ev[y]));
    }
    return DependencyGraph(b.events(), std::vector<Edge>(es.begin(), es.end()));
}

// Lex-BFS ordering, then check that its reverse is a perfect elimination ordering.
bool is_chordal(const DependencyGraph& g)
{
    int n = g.size();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n) + 1);
    std::vector<int> order, position(static_cast<std::size_t>(n) + 1, -1);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (position[v] < 0 && (best < 0 || label[v] > label[best])) best = v;
        position[best] = step;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (position[w] < 0) label[w].push_back(n - step);
    }
    for (int v : order) {
        int parent = -1;
        std::vector<int> earlier;
        for (int w : g.neighbors(v))
            if (position[w] < position[v]) {
                earlier.push_back(w);
                if (parent < 0 || position[w] > position[parent]) parent = w;
            }
        for (int w : earlier)
            if (w != parent && !g.adjacent(w, parent)) return false;
    }
    return true;
}

bool is_induced_cycle(const DependencyGraph& g, const std::vector<int>& cycle)
{
    std::size_t k = cycle.size();
    if (k < 3) return false;
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != k) return false;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
        }
    return true;
}

namespace {

// Shortest induced cycle of length >= 4 inside the alive vertex set; empty if none.
std::vector<int> shortest_chordless_cycle(const DependencyGraph& g, const std::vector<char>& alive)
{
    int n = g.size();
    std::vector<int> path;
    std::function<bool(int, int)> extend = [&](int length, int s) -> bool {
        int j = static_cast<int>(path.size());
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (w <= s || !alive[w]) continue;
            bool ok = true;
            for (int t = 1; t + 1 < j && ok; ++t)
                if (g.adjacent(w, path[t])) ok = false;
            if (!ok) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            bool touches_start = g.adjacent(w, s);
            if (j == length - 1) {
                if (!touches_start) continue;
                path.push_back(w);
                return true;
            }
            if (j > 1 && touches_start) continue;
            path.push_back(w);
            if (extend(length, s)) return true;
            path.pop_back();
        }
        return false;
    };
    for (int length = 4; length <= n; ++length)
        for (int s = 1; s <= n; ++s) {
            if (!alive[s]) continue;
            path.assign(1, s);
            if (extend(length, s)) return path;
        }
    return {};
}

}  // namespace

ChordlessCycleSet find_disjoint_chordless_cycles(const DependencyGraph& g)
{
    ChordlessCycleSet out;
    std::vector<char> alive(static_cast<std::size_t>(g.size()) + 1, 1);
    for (;;) {
        auto c = shortest_chordless_cycle(g, alive);
        if (c.empty()) break;
        for (int v : c) alive[v] = 0;
        out.cycles.push_back(c);
    }
    out.disjoint = true;
    return out;
}

Matching greedy_max_intersection_matching(const DependencyGraph& g, const std::map<Edge, Rational>& w)
{
    std::vector<Edge> remaining = g.edges();
    for (const auto& e : remaining)
        if (!w.count(e))
            throw std::invalid_argument("weight missing for edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
    std::vector<Edge> chosen;
    while (!remaining.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < remaining.size(); ++k)
            if (w.at(remaining[k]) > w.at(remaining[best])) best = k;  // edges are sorted, so ties keep the first
        Edge e = remaining[best];
        chosen.push_back(e);
        std::vector<Edge> next;
        for (const auto& f : remaining)
            if (f.first != e.first && f.first != e.second && f.second != e.first && f.second != e.second)
                next.push_back(f);
        remaining.swap(next);
    }
    return Matching(g, chosen);
}

bool is_linear(const BipartiteGraph& b)
{
    std::map<std::pair<int, int>, int> shared;
    for (int j = 1; j <= b.variables(); ++j) {
        const auto& ev = b.events_of(j);
        for (std::size_t x = 0; x < ev.size(); ++x)
            for (std::size_t y = x + 1; y < ev.size(); ++y)
                if (++shared[{ev[x], ev[y]}] > 1) return false;
    }
    return true;
}

BipartiteGraph simplify(const BipartiteGraph& b)
{
    std::map<std::vector<int>, int> by_neighbourhood;
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    for (int j = 1; j <= b.variables(); ++j) {
        const auto& ev = b.events_of(j);
        if (ev.size() == 1) continue;
        auto it = by_neighbourhood.find(ev);
        if (it != by_neighbourhood.end()) continue;
        by_neighbourhood[ev] = ++next;
        for (int i : ev) edges.push_back({i, next});
    }
    return BipartiteGraph(b.events(), next, edges);
}

BipartiteGraph edge_variable_graph(const DependencyGraph& g)
{
    if (g.edges().empty()) throw std::invalid_argument("edge_variable_graph: graph has no edges");
    std::vector<std::pair<int, int>> es;
    int j = 0;
    for (auto [a, b] : g.edges()) {
        ++j;
        es.push_back({a, j});
        es.push_back({b, j});
    }
    return BipartiteGraph(g.size(), j, es);
}

BipartiteGraph restrict_events(const BipartiteGraph& b, const std::vector<int>& left)
{
    std::map<int, int> var_id;
    std::vector<std::pair<int, int>> es;
    std::vector<int> vars;
    for (int i : left)
        for (int j : b.vbl(i)) vars.push_back(j);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (std::size_t k = 0; k < vars.size(); ++k) var_id[vars[k]] = static_cast<int>(k) + 1;
    for (std::size_t k = 0; k < left.size(); ++k)
        for (int j : b.vbl(left[k])) es.push_back({static_cast<int>(k) + 1, var_id[j]});
    return BipartiteGraph(static_cast<int>(left.size()), static_cast<int>(vars.size()), es);
}

std::vector<int> bfs_distances(const DependencyGraph& g, int source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.size()) + 1, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const DependencyGraph& g)
{
    if (g.size() == 0) return true;
    auto d = bfs_distances(g, 1);
    for (int v = 1; v <= g.size(); ++v)
        if (d[v] < 0) return false;
    return true;
}

int diameter(const DependencyGraph& g)
{
    int best = 0;
    for (int s = 1; s <= g.size(); ++s) {
        auto d = bfs_distances(g, s);
        for (int v = 1; v <= g.size(); ++v) {
            if (d[v] < 0) throw std::invalid_argument("diameter of a disconnected graph");
            best = std::max(best, d[v]);
        }
    }
    return best;
}

std::vector<int> shortest_path(const DependencyGraph& g, int s, int t)
{
    auto dt = bfs_distances(g, t);
    if (dt[s] < 0) return {};
    std::vector<int> path{s};
    int v = s;
    while (v != t) {
        for (int w : g.neighbors(v))
            if (dt[w] == dt[v] - 1) {
                v = w;
                break;
            }
        path.push_back(v);
    }
    return path;
}

DependencyGraph cycle_graph(int l)
{
    std::vector<Edge> es;
    for (int i = 1; i <= l; ++i) es.push_back(make_edge(i, i % l + 1));
    return DependencyGraph(l, es);
}

DependencyGraph path_graph(int n)
{
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
    return DependencyGraph(n, es);
}

DependencyGraph complete_graph(int n)
{
    std::vector<Edge> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.push_back({i, j});
    return DependencyGraph(n, es);
}

}  // namespace lll
