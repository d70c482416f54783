#ifndef LLL_SHEARER_HPP
#define LLL_SHEARER_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lll/graphs.hpp"
#include "lll/rational.hpp"

namespace lll {

using ProbabilityVector = std::vector<Rational>;

// Largest graph accepted for full independent-set enumeration.
inline constexpr int kMaxShearerVertices = 30;

// Throws unless |p| == m and every entry lies in (0,1].
void validate_probability_vector(const ProbabilityVector& p, int m);

// Ind(G) including the empty set, by size and then lexicographically.
std::vector<std::vector<int>> independent_sets(const DependencyGraph& g, int max_vertices = kMaxShearerVertices);

Rational q_polynomial(const DependencyGraph& g, const ProbabilityVector& p, const std::vector<int>& I);

struct ShearerReport {
    bool in_bound = false;
    Rational q_empty;
    std::vector<Rational> q_singletons;                           // q_{i}, index i-1
    std::optional<std::vector<int>> witness;                      // first I with q_I <= 0
    std::vector<std::pair<std::vector<int>, Rational>> q_values;  // every I, when requested
};

// Checks q_I > 0 for every independent I. Events with probability 0 are vacuous, so sets
// containing them are skipped; this keeps the region down-closed on the closed cube.
ShearerReport in_shearer_bound(const DependencyGraph& g, const ProbabilityVector& p, bool record_all = false);
bool shearer_member(const DependencyGraph& g, const ProbabilityVector& p);

struct ScaleInterval {
    Rational lo, hi;
    bool clamped = false;  // the largest admissible scale (max entry 1) is still in bound
};

ScaleInterval boundary_scale(const DependencyGraph& g, const ProbabilityVector& direction, const Rational& resolution);

struct GapEstimate {
    Rational lower, upper, resolution;
    bool in_bound = false;    // then lower = upper = -1
    bool converged = true;    // false when the box budget ran out before upper - lower <= resolution
    std::size_t boxes = 0;
    ProbabilityVector witness;  // an out-of-bound x <= p with |p - x|_1 = lower
};

GapEstimate l1_gap(const DependencyGraph& g, const ProbabilityVector& p, const Rational& resolution,
                   std::size_t max_boxes = 4'000'000);

Rational expected_resample_bound(const DependencyGraph& g, const ProbabilityVector& p);

}  // namespace lll

#endif
