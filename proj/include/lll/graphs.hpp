#ifndef LLL_GRAPHS_HPP
#define LLL_GRAPHS_HPP

#include <map>
#include <utility>
#include <vector>

#include "lll/rational.hpp"

namespace lll {

using Edge = std::pair<int, int>;  // always stored with first < second

Edge make_edge(int u, int v);

// Undirected simple graph on vertices 1..m.
class DependencyGraph {
public:
    DependencyGraph() = default;
    explicit DependencyGraph(int m);
    DependencyGraph(int m, const std::vector<Edge>& edges);

    int size() const { return m_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    // Graph induced on the given vertices, renumbered 1..k in the given order.
    DependencyGraph induced(const std::vector<int>& vertices) const;

    bool operator==(const DependencyGraph& other) const { return m_ == other.m_ && edges_ == other.edges_; }

private:
    void check_vertex(int v) const;

    int m_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

// Events 1..m on the left, variables 1..n on the right.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int events, int variables, const std::vector<std::pair<int, int>>& edges);

    int events() const { return m_; }
    int variables() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& vbl(int event) const;
    const std::vector<int>& events_of(int variable) const;
    int max_event_degree() const;

    bool operator==(const BipartiteGraph& other) const
    {
        return m_ == other.m_ && n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int m_ = 0, n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> vbl_, ev_;
};

class Matching {
public:
    Matching() = default;
    Matching(const DependencyGraph& g, const std::vector<Edge>& pairs);

    const std::vector<Edge>& pairs() const { return pairs_; }
    int partner(int v) const;  // 0 when unmatched
    bool matched(int v) const { return partner(v) != 0; }
    bool contains(int u, int v) const;
    bool empty() const { return pairs_.empty(); }

private:
    std::vector<Edge> pairs_;
    std::map<int, int> partner_;
};

struct ChordlessCycleSet {
    std::vector<std::vector<int>> cycles;
    bool disjoint = true;
};

DependencyGraph base_graph(const BipartiteGraph& b);
bool is_chordal(const DependencyGraph& g);
bool is_induced_cycle(const DependencyGraph& g, const std::vector<int>& cycle);
ChordlessCycleSet find_disjoint_chordless_cycles(const DependencyGraph& g);
Matching greedy_max_intersection_matching(const DependencyGraph& g, const std::map<Edge, Rational>& w);
bool is_linear(const BipartiteGraph& b);
BipartiteGraph simplify(const BipartiteGraph& b);
BipartiteGraph edge_variable_graph(const DependencyGraph& g);
// Events restricted to `left` (renumbered 1..|left|), keeping only variables they touch.
BipartiteGraph restrict_events(const BipartiteGraph& b, const std::vector<int>& left);

std::vector<int> bfs_distances(const DependencyGraph& g, int source);  // -1 when unreachable
bool is_connected(const DependencyGraph& g);
int diameter(const DependencyGraph& g);  // throws on a disconnected graph
// A shortest path from s to t (inclusive), empty if unreachable.
std::vector<int> shortest_path(const DependencyGraph& g, int s, int t);

// Common graph families.
DependencyGraph cycle_graph(int l);
DependencyGraph path_graph(int n);
DependencyGraph complete_graph(int n);

}  // namespace lll

#endif
