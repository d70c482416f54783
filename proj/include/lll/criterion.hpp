#ifndef LLL_CRITERION_HPP
#define LLL_CRITERION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lll/graphs.hpp"
#include "lll/lattice.hpp"
#include "lll/real_interval.hpp"
#include "lll/shearer.hpp"

namespace lll {

struct IntersectionSetting {
    DependencyGraph g;
    ProbabilityVector p;
    Matching m;
    std::map<Edge, Rational> delta;  // one entry per matched pair
    std::string delta_source = "input";
};

void validate_setting(const IntersectionSetting& s);

struct ReducedVectors {
    ProbabilityVector pminus, pprime, c;  // c is 0 at unmatched events
};

ReducedVectors reduced_vectors(const IntersectionSetting& s);
// p-_i + p-_j (p-_i - p'_i) >= p_i for every matched pair, checked exactly both ways round.
bool split_mass_covers(const IntersectionSetting& s, const ReducedVectors& r);

struct Verdict {
    bool accepted = false;
    std::optional<Rational> bound_on_ET;
    std::string evidence;
};

struct IntersectionVerdict {
    Verdict verdict;
    ReducedVectors reduced;
    ProbabilityVector scaled;  // (1+eps) p-
    bool clamped = false;
    std::optional<std::vector<int>> witness;
};

IntersectionVerdict intersection_lll_verdict(const IntersectionSetting& s, const Rational& eps);

struct Digamma {
    RealInterval value, plus;
    int events = 0, variables = 0, delta_d = 0, delta_b = 0;
};

// On the events `left` (all events when empty) and the variables they touch; p indexed by event.
Digamma digamma(const BipartiteGraph& b, const ProbabilityVector& p, const std::vector<int>& left = {});

// Certified lower bounds (squares of digamma-plus rounded down), one per event subset.
std::vector<Rational> matching_intersection_lower_bound(const BipartiteGraph& b, const ProbabilityVector& p,
                                                        const std::vector<std::vector<int>>& left_sets);

struct CycleR {
    RealInterval r, rplus;
};
CycleR r_cycle(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& cycle);

struct BeyondVerdict {
    Verdict verdict;                 // decided by the 1/545 threshold
    bool accepted_544 = false;
    RealInterval r_plus_sum;
    Rational threshold_545, threshold_544;  // rounded down
    GapEstimate gap;
};

// gap must be the estimate of d((1+eps) p, G).
BeyondVerdict beyond_shearer_verdict(const DependencyGraph& g, const ProbabilityVector& p, const Rational& eps,
                                     const ChordlessCycleSet& cycles, const GapEstimate& gap);

// True when p lies outside Shearer's bound; entries >= 1 count as outside.
bool beyond_bound(const DependencyGraph& g, const ProbabilityVector& p);

ProbabilityVector transfer_along_path(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& path,
                                      const Rational& q);

struct TransferConditions {
    bool a = false, b = false, c = false;
    bool all() const { return a && b && c; }
};

TransferConditions probability_transfer_conditions(const DependencyGraph& g, const ProbabilityVector& p,
                                                   const Rational& pa, const std::vector<std::vector<int>>& sets,
                                                   const std::vector<std::vector<int>>& targets, int K, int d);

struct LatticeGap {
    RealInterval q;
    Digamma digamma;
    int diameter = 0, max_degree = 0, unit_vertices = 0;
};

// Max degree of the periodic lattice generated by the unit (interior of a 3^k expansion).
int lattice_max_degree(const LatticeUnit& unit);
LatticeGap lattice_gap_q(const LatticeUnit& unit, const Rational& pa);

// For A on (X,Y) and A' on (Y,Z) with independent X1,Y1,Y2,Z1: the probability that A holds on
// (X1,Y1), A' on (Y2,Z1), and A fails on (X1,Y2) or A' fails on (Y1,Z1).
struct SwapProbability {
    Rational compound, bound;  // bound = Pr(A)Pr(A') - Pr(A and A')^2
};
SwapProbability swap_probability(const std::vector<Rational>& px, const std::vector<Rational>& py,
                                 const std::vector<Rational>& pz, const std::vector<std::vector<char>>& a,
                                 const std::vector<std::vector<char>>& a2);

}  // namespace lll

#endif
