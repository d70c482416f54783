#ifndef LLL_HOMOMORPHIC_HPP
#define LLL_HOMOMORPHIC_HPP

#include <string>
#include <vector>

#include "lll/graphs.hpp"
#include "lll/shearer.hpp"
#include "lll/wdag.hpp"

namespace lll {

enum class Part { Plain, Up, Down };

struct SplitVertex {
    int event = 0;
    Part part = Part::Plain;
};

// G^M: every matched vertex i becomes i-up and i-down; vertices built from the two ends
// of an edge (or from the same vertex) are pairwise adjacent.
struct HomomorphicGraph {
    DependencyGraph graph;
    ProbabilityVector p;
    std::vector<SplitVertex> origin;  // origin[v-1]
    std::vector<int> plain, up, down; // indexed by event-1, 0 when absent

    int vertex(int event, Part part) const;
    std::string name(int v) const;
};

HomomorphicGraph homomorphic_graph(const DependencyGraph& g, const Matching& m, const ProbabilityVector& p,
                                   const ProbabilityVector& pminus, const ProbabilityVector& pprime);

// part[v] in {0,1,2,3,4}: 0 for nodes outside the matched-label set, else the block S_k.
struct Partition4 {
    std::vector<int> part;
};

std::vector<int> matched_nodes(const WDag& d, const Matching& m);
std::vector<Partition4> partitions_psi(const WDag& d, const Matching& m);

WDag map_h(const WDag& d, const Partition4& s, const Matching& m, const HomomorphicGraph& h);

// R has one bit per matched node, in node order: 0 keeps the up copy, 1 the down copy.
WDag split_labels(const WDag& d, const std::vector<int>& r, const Matching& m, const HomomorphicGraph& h);

struct WeightSums {
    std::vector<Rational> by_size;     // index n-1 holds the sum over pwdags with n nodes
    std::vector<Rational> cumulative;
    bool truncated = false;
};
WeightSums weight_sums(const DependencyGraph& g, const ProbabilityVector& p, int node_cap);

Rational tighter_weight(const WDag& d, const ProbabilityVector& p, const ProbabilityVector& pprime, const Matching& m);

}  // namespace lll

#endif
