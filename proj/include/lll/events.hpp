#ifndef LLL_EVENTS_HPP
#define LLL_EVENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lll/graphs.hpp"
#include "lll/rational.hpp"

namespace lll {

// A sampled value: the index for finite variables, u for a uniform sample u/2^64.
using Value = std::uint64_t;
using u128 = unsigned __int128;

// ceil(a * 2^64), clamped to [0, 2^64]: u/2^64 >= a  iff  u >= uniform_threshold(a).
u128 uniform_threshold(const Rational& a);

struct Distribution {
    enum class Kind { Uniform01, Finite };
    Kind kind = Kind::Uniform01;
    std::vector<Rational> masses;
    std::vector<u128> thresholds;  // uniform_threshold of the cumulative masses

    static Distribution uniform01();
    static Distribution finite(std::vector<Rational> masses);  // masses >= 0 summing to 1
    std::size_t domain_size() const { return masses.size(); }
};

// Allowed values of one variable inside an elementary event.
// Uniform variables: a union of half-open intervals [a,b) within [0,1]. Finite: a set of indices.
struct AllowedSet {
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<int> values;

    static AllowedSet interval(const Rational& a, const Rational& b);
    static AllowedSet union_of(std::vector<std::pair<Rational, Rational>> parts);
    static AllowedSet of_values(std::vector<int> values);
};


struct Event {
    std::vector<int> vbl;                                  // sorted variable ids
    std::optional<std::vector<AllowedSet>> box;            // aligned with vbl
    std::optional<std::vector<std::vector<int>>> table;    // satisfying tuples, finite variables only
    std::function<bool(const std::vector<Value>&)> predicate;  // values aligned with vbl
};

class EventSystem {
public:
    int add_variable(Distribution d);
    int add_box_event(const std::vector<std::pair<int, AllowedSet>>& constraints);
    int add_table_event(std::vector<int> vbl, std::vector<std::vector<int>> tuples);
    int add_predicate_event(std::vector<int> vbl, std::function<bool(const std::vector<Value>&)> predicate);

    int variable_count() const { return static_cast<int>(vars_.size()); }
    int event_count() const { return static_cast<int>(events_.size()); }
    const Distribution& variable(int j) const;
    const Event& event(int i) const;
    bool elementary() const;

    bool holds(int i, const std::vector<Value>& values) const;

    BipartiteGraph bipartite() const;
    DependencyGraph base_graph() const;

    // Exact probabilities under the ideal distributions (Lebesgue measure for uniform variables).
    Rational probability(int i, std::uint64_t product_cap = 10'000'000) const;
    Rational intersection_probability(int i, int k, std::uint64_t product_cap = 10'000'000) const;

    Value sample(int j, std::uint64_t random_bits) const;

private:
    void check_variable(int j) const;

    std::vector<Distribution> vars_;
    std::vector<Event> events_;
};

Rational measure(const Distribution& d, const AllowedSet& s);
Value sample_value(const Distribution& d, std::uint64_t random_bits);
AllowedSet intersect(const Distribution& d, const AllowedSet& a, const AllowedSet& b);

// Counter-based seeding: every derived stream is a pure function of its inputs.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// X[j][k] for variable j and sample index k >= 1; column 1 is the initial assignment.
class ResamplingTable {
public:
    ResamplingTable(const EventSystem& sys, std::uint64_t seed);
    static ResamplingTable from_rows(std::vector<std::vector<Value>> rows);  // rows[j-1][k-1]

    bool has(int j, std::size_t k) const;
    Value at(int j, std::size_t k) const;
    std::uint64_t seed() const { return seed_; }

private:
    ResamplingTable() = default;
    std::vector<Distribution> dists_;
    std::uint64_t seed_ = 0;
    std::optional<std::vector<std::vector<Value>>> rows_;
};

}  // namespace lll

#endif
