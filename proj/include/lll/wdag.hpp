#ifndef LLL_WDAG_HPP
#define LLL_WDAG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lll/events.hpp"
#include "lll/graphs.hpp"
#include "lll/shearer.hpp"

namespace lll {

// Labelled DAG. Nodes are 0..n-1, labels are event indices (1-based).
struct WDag {
    std::vector<int> labels;
    std::vector<std::vector<int>> succ;  // sorted

    static WDag from_arcs(std::vector<int> labels, const std::vector<std::pair<int, int>>& arcs);

    int size() const { return static_cast<int>(labels.size()); }
    bool has_arc(int u, int v) const;
    std::vector<std::pair<int, int>> arcs() const;
    std::vector<std::vector<int>> predecessors() const;
};

// D_s: arc v_k -> v_l (k < l) iff s_k == s_l or (s_k, s_l) is an edge.
WDag wdag_from_sequence(const DependencyGraph& g, const std::vector<int>& s);

bool validate_wdag(const WDag& d, const DependencyGraph& g);
std::vector<int> topological_order(const WDag& d);  // least node id first; throws on a cycle
std::vector<int> sinks(const WDag& d);
// reach[u][v] != 0 iff there is a directed path of length >= 1 from u to v.
std::vector<std::vector<char>> reachability(const WDag& d);

// Label sequence of the topological order that always takes the smallest available label.
// For wdags of one graph this determines the wdag up to isomorphism.
std::vector<int> canonical_form(const WDag& d);

struct PrefixResult {
    WDag dag;
    std::vector<int> nodes;  // original node of each prefix node
};
PrefixResult prefix(const WDag& d, const std::vector<int>& U);
bool is_prefix(const WDag& h, const WDag& d);
// Distinct (up to isomorphism) single-sink prefixes, by enumerating every node subset U.
std::size_t count_single_sink_prefixes(const WDag& d);

struct PwdagEnumeration {
    std::vector<WDag> dags;  // in canonical-form order
    bool truncated = false;
};
PwdagEnumeration enumerate_pwdags(const DependencyGraph& g, int node_cap, std::size_t max_count = 5'000'000);
std::pair<int, int> group_key(const WDag& d);  // (sink label i, number of nodes labelled i)

bool is_reversible(const WDag& d, int u, int v);
std::vector<std::pair<int, int>> m_reversible_arcs(const WDag& d, const Matching& m);

struct ReversibleNodes {
    std::vector<char> member;                // member[v] iff v in the node set of some M-reversible arc
    std::map<int, std::vector<int>> by_label;
};
ReversibleNodes m_reversible_nodes(const WDag& d, const Matching& m);

// Greedy over each List(D,i,i'): take the k-th/(k+1)-th pair when reversible and skip two.
std::vector<std::pair<int, int>> disjoint_reversible_pairs(const WDag& d, const Matching& m);

// phi(D,u,v): reverse the reversible arc u->v, then keep the prefix at the old sink.
WDag reverse_arc(const WDag& d, int u, int v);

// Position of v in List(D, L(v), i) for (L(v), i) in M.
int list_position(const WDag& d, int v, const Matching& m);

bool consistent_with_table(const WDag& d, const EventSystem& sys, const ResamplingTable& x);

// Fair coins Y[(i,i')][k] in {i, i'}, one row per unordered matched pair.
class AuxiliaryTable {
public:
    explicit AuxiliaryTable(std::uint64_t seed) : seed_(seed) {}
    static AuxiliaryTable from_rows(std::map<Edge, std::vector<int>> rows);

    bool has(int a, int b, std::size_t k) const;
    int at(int a, int b, std::size_t k) const;

private:
    std::uint64_t seed_ = 0;
    std::optional<std::map<Edge, std::vector<int>>> rows_;
};

bool consistent_with_tables(const WDag& d, const EventSystem& sys, const ResamplingTable& x,
                            const AuxiliaryTable& y, const Matching& m);

struct RepairResult {
    WDag dag;
    std::size_t steps = 0;
    std::vector<std::vector<int>> visited;  // canonical forms, in order
};
// Throws std::logic_error if the loop ever returns to a wdag it has already visited.
RepairResult repair_to_consistent(const WDag& d0, const EventSystem& sys, const ResamplingTable& x,
                                  const AuxiliaryTable& y, const Matching& m);

Rational wdag_weight(const WDag& d, const ProbabilityVector& p);

}  // namespace lll

#endif
