#include "lll/homomorphic.hpp"

#include <stdexcept>

namespace lll {

int HomomorphicGraph::vertex(int event, Part part) const
{
    int v = part == Part::Plain ? plain.at(event - 1) : part == Part::Up ? up.at(event - 1) : down.at(event - 1);
    if (v == 0) throw std::invalid_argument("no such vertex in the homomorphic graph");
    return v;
}

std::string HomomorphicGraph::name(int v) const
{
    const auto& o = origin.at(v - 1);
    std::string s = std::to_string(o.event);
    if (o.part == Part::Up) s += "^";
    if (o.part == Part::Down) s += "v";
    return s;
}

HomomorphicGraph homomorphic_graph(const DependencyGraph& g, const Matching& m, const ProbabilityVector& p,
                                   const ProbabilityVector& pminus, const ProbabilityVector& pprime)
{
    const int n = g.size();
    validate_probability_vector(p, n);
    if (static_cast<int>(pminus.size()) != n || static_cast<int>(pprime.size()) != n)
        throw std::invalid_argument("reduced vectors have the wrong length");
    HomomorphicGraph h;
    h.plain.assign(n, 0);
    h.up.assign(n, 0);
    h.down.assign(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (m.matched(i)) {
            if (pminus[i - 1] < pprime[i - 1])
                throw std::invalid_argument("p- below p' at event " + std::to_string(i));
            h.origin.push_back({i, Part::Up});
            h.up[i - 1] = static_cast<int>(h.origin.size());
            h.p.push_back(pprime[i - 1]);
            h.origin.push_back({i, Part::Down});
            h.down[i - 1] = static_cast<int>(h.origin.size());
            h.p.push_back(pminus[i - 1] - pprime[i - 1]);
        } else {
            h.origin.push_back({i, Part::Plain});
            h.plain[i - 1] = static_cast<int>(h.origin.size());
            h.p.push_back(pminus[i - 1]);
        }
    }
    auto copies = [&](int i) {
        std::vector<int> c;
        for (int v : {h.plain[i - 1], h.up[i - 1], h.down[i - 1]})
            if (v) c.push_back(v);
        return c;
    };
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        auto c = copies(i);
        if (c.size() == 2) edges.push_back(make_edge(c[0], c[1]));
    }
    for (auto [a, b] : g.edges()) {
        auto ca = copies(a), cb = copies(b);
        for (int x : ca)
            for (int y : cb) edges.push_back(make_edge(x, y));
    }
    h.graph = DependencyGraph(static_cast<int>(h.origin.size()), edges);
    return h;
}

std::vector<int> matched_nodes(const WDag& d, const Matching& m)
{
    std::vector<int> out;
    for (int v = 0; v < d.size(); ++v)
        if (m.matched(d.labels[v])) out.push_back(v);
    return out;
}

std::vector<Partition4> partitions_psi(const WDag& d, const Matching& m)
{
    auto nodes = matched_nodes(d, m);
    auto rev = m_reversible_nodes(d, m);
    std::vector<int> free;
    Partition4 base;
    base.part.assign(d.size(), 0);
    for (int v : nodes) {
        if (rev.member[v])
            base.part[v] = 1;
        else
            free.push_back(v);
    }
    if (free.size() > 15) throw std::length_error("too many partitions to enumerate");
    std::vector<Partition4> out;
    const std::size_t total = std::size_t{1} << (2 * free.size());
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        Partition4 s = base;
        for (std::size_t k = 0; k < free.size(); ++k)
            s.part[free[k]] = 1 + static_cast<int>((code >> (2 * (free.size() - 1 - k))) & 3);
        out.push_back(std::move(s));
    }
    return out;
}

WDag map_h(const WDag& d, const Partition4& s, const Matching& m, const HomomorphicGraph& h)
{
    const int n = d.size();
    if (static_cast<int>(s.part.size()) != n) throw std::invalid_argument("partition size mismatch");
    auto order = topological_order(d);
    std::vector<int> rank(n);
    for (int k = 0; k < n; ++k) rank[order[k]] = k;

    std::vector<int> labels(n), origin(n);
    for (int v = 0; v < n; ++v) {
        int i = d.labels[v];
        origin[v] = v;
        int block = s.part[v];
        if (m.matched(i) != (block != 0)) throw std::invalid_argument("partition does not cover the matched nodes");
        labels[v] = block == 0 ? h.vertex(i, Part::Plain) : h.vertex(i, block == 1 ? Part::Up : Part::Down);
    }
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) {
        if (s.part[v] != 3 && s.part[v] != 4) continue;
        int j = m.partner(d.labels[v]);
        labels.push_back(h.vertex(j, s.part[v] == 3 ? Part::Up : Part::Down));
        origin.push_back(v);
        arcs.emplace_back(static_cast<int>(labels.size()) - 1, v);
    }
    const int total = static_cast<int>(labels.size());
    for (int a = 0; a < total; ++a)
        for (int b = 0; b < total; ++b) {
            if (rank[origin[a]] >= rank[origin[b]]) continue;
            if (labels[a] == labels[b] || h.graph.adjacent(labels[a], labels[b])) arcs.emplace_back(a, b);
        }
    return WDag::from_arcs(std::move(labels), arcs);
}

WDag split_labels(const WDag& d, const std::vector<int>& r, const Matching& m, const HomomorphicGraph& h)
{
    auto nodes = matched_nodes(d, m);
    if (r.size() != nodes.size()) throw std::invalid_argument("split bit string has the wrong length");
    WDag out = d;
    for (int v = 0; v < d.size(); ++v)
        if (!m.matched(d.labels[v])) out.labels[v] = h.vertex(d.labels[v], Part::Plain);
    for (std::size_t k = 0; k < nodes.size(); ++k)
        out.labels[nodes[k]] = h.vertex(d.labels[nodes[k]], r[k] ? Part::Down : Part::Up);
    return out;
}

WeightSums weight_sums(const DependencyGraph& g, const ProbabilityVector& p, int node_cap)
{
    if (static_cast<int>(p.size()) != g.size()) throw std::invalid_argument("probability vector has the wrong length");
    WeightSums w;
    w.by_size.assign(node_cap, Rational(0));
    auto en = enumerate_pwdags(g, node_cap);
    w.truncated = en.truncated;
    for (const auto& d : en.dags) w.by_size[d.size() - 1] += wdag_weight(d, p);
    Rational run = 0;
    for (const auto& s : w.by_size) {
        run += s;
        w.cumulative.push_back(run);
    }
    return w;
}

Rational tighter_weight(const WDag& d, const ProbabilityVector& p, const ProbabilityVector& pprime, const Matching& m)
{
    auto rev = m_reversible_nodes(d, m);
    Rational w = 1;
    for (int v = 0; v < d.size(); ++v) w *= rev.member[v] ? pprime.at(d.labels[v] - 1) : p.at(d.labels[v] - 1);
    return w;
}

}  // namespace lll
