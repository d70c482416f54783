#include <doctest.h>

#include <random>

#include "lll/shearer.hpp"

using namespace lll;

namespace {

ProbabilityVector uniform(int m, const Rational& x) { return ProbabilityVector(m, x); }

bool independent(const DependencyGraph& g, unsigned mask)
{
    for (auto [u, v] : g.edges())
        if ((mask >> (u - 1) & 1) && (mask >> (v - 1) & 1)) return false;
    return true;
}

// Oracle: q_I straight from the alternating sum over all vertex subsets.
Rational brute_q(const DependencyGraph& g, const ProbabilityVector& p, unsigned I)
{
    Rational q = 0;
    for (unsigned J = 0; J < (1u << g.size()); ++J) {
        if ((J & I) != I || !independent(g, J)) continue;
        Rational t = (__builtin_popcount(J ^ I) % 2) ? -1 : 1;
        for (int v = 0; v < g.size(); ++v)
            if (J >> v & 1) t *= p[v];
        q += t;
    }
    return q;
}

bool brute_member(const DependencyGraph& g, const ProbabilityVector& p)
{
    for (unsigned I = 0; I < (1u << g.size()); ++I)
        if (independent(g, I) && brute_q(g, p, I) <= 0) return false;
    return true;
}

std::vector<int> members(unsigned mask)
{
    std::vector<int> out;
    for (int v = 0; mask >> v; ++v)
        if (mask >> v & 1) out.push_back(v + 1);
    return out;
}

DependencyGraph random_graph(std::mt19937_64& rng, int n)
{
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % 2) es.emplace_back(u, v);
    return DependencyGraph(n, es);
}

ProbabilityVector random_p(std::mt19937_64& rng, int n, long den)
{
    ProbabilityVector p;
    for (int i = 0; i < n; ++i) p.push_back(ratio(1 + static_cast<long>(rng() % (den / 2)), den));
    return p;
}

}  // namespace

TEST_CASE("independent sets")
{
    using S = std::vector<std::vector<int>>;
    CHECK(independent_sets(complete_graph(3)) == S{{}, {1}, {2}, {3}});
    CHECK(independent_sets(cycle_graph(4)) == S{{}, {1}, {2}, {3}, {4}, {1, 3}, {2, 4}});
    CHECK(independent_sets(DependencyGraph(3)).size() == 8);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto g = random_graph(rng, 7);
        std::size_t count = 0;
        for (unsigned mask = 0; mask < 128; ++mask) count += independent(g, mask);
        auto sets = independent_sets(g);
        REQUIRE(sets.size() == count);
        for (std::size_t k = 1; k < sets.size(); ++k) REQUIRE(sets[k - 1].size() <= sets[k].size());
    }
}

TEST_CASE("q polynomial")
{
    const Rational x(2, 7);
    CHECK(q_polynomial(DependencyGraph(1), {x}, {}) == 1 - x);
    CHECK(q_polynomial(DependencyGraph(1), {x}, {1}) == x);
    CHECK(q_polynomial(cycle_graph(4), uniform(4, Rational(1, 4)), {}) == Rational(1, 8));
    CHECK(q_polynomial(complete_graph(3), uniform(3, Rational(1, 3)), {}) == 0);
    CHECK_THROWS(q_polynomial(complete_graph(3), uniform(3, Rational(1, 4)), {1, 2}));
}

TEST_CASE("q polynomial agrees with the alternating-sum oracle")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        auto g = random_graph(rng, 6);
        auto p = random_p(rng, 6, 20);
        for (unsigned I = 0; I < 64; ++I)
            if (independent(g, I)) REQUIRE(q_polynomial(g, p, members(I)) == brute_q(g, p, I));
    }
}

TEST_CASE("membership")
{
    auto k3 = complete_graph(3);
    CHECK(in_shearer_bound(k3, uniform(3, Rational(1, 3) - Rational(1, 100))).in_bound);
    auto r = in_shearer_bound(k3, uniform(3, Rational(1, 3)));
    CHECK_FALSE(r.in_bound);
    REQUIRE(r.witness);
    CHECK(r.witness->empty());
    CHECK(in_shearer_bound(cycle_graph(4), uniform(4, Rational(1, 4))).in_bound);
    CHECK_THROWS(in_shearer_bound(k3, uniform(2, Rational(1, 4))));
    CHECK_THROWS(in_shearer_bound(k3, {Rational(1, 4), Rational(0), Rational(5, 4)}));
    CHECK_THROWS(in_shearer_bound(cycle_graph(kMaxShearerVertices + 1), uniform(kMaxShearerVertices + 1, Rational(1, 10))));
}

TEST_CASE("membership agrees with the oracle and is down-closed")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 150; ++t) {
        auto g = random_graph(rng, 5);
        auto p = random_p(rng, 5, 8);
        const bool in = in_shearer_bound(g, p).in_bound;
        REQUIRE(in == brute_member(g, p));
        if (!in) continue;
        ProbabilityVector lower = p;
        for (auto& x : lower) x *= ratio(1 + static_cast<long>(rng() % 10), 10);
        REQUIRE(shearer_member(g, lower));
    }
}

TEST_CASE("recorded q values cover every independent set")
{
    auto r = in_shearer_bound(cycle_graph(4), uniform(4, Rational(1, 5)), true);
    CHECK(r.q_values.size() == 7);
    for (const auto& [I, q] : r.q_values) CHECK(q == q_polynomial(cycle_graph(4), uniform(4, Rational(1, 5)), I));
}

TEST_CASE("boundary scale")
{
    const Rational res(1, 1024);
    auto k3 = boundary_scale(complete_graph(3), uniform(3, Rational(1)), res);
    CHECK(k3.lo < Rational(1, 3));
    CHECK(k3.hi >= Rational(1, 3));
    CHECK(k3.hi - k3.lo <= res);

    auto k1 = boundary_scale(DependencyGraph(1), {Rational(1)}, res);
    CHECK_FALSE(k1.clamped);  // p = 1 gives q_empty = 0
    CHECK(k1.hi == 1);
    CHECK(k1.lo >= 1 - res);
    // An entry equal to 1 already forces q_empty <= 0, so the clamp point is never inside.
    auto two = boundary_scale(DependencyGraph(2), {Rational(1, 2), Rational(1, 2)}, res);
    CHECK_FALSE(two.clamped);
    CHECK(two.hi == 2);

    // C4 boundary along the diagonal: 1 - 4x + 2x^2 = 0 at x = (2 - sqrt 2)/2.
    auto c4 = boundary_scale(cycle_graph(4), uniform(4, Rational(1)), res);
    CHECK(c4.hi - c4.lo <= res);
    CHECK(1 - 4 * c4.lo + 2 * c4.lo * c4.lo > 0);
    CHECK(1 - 4 * c4.hi + 2 * c4.hi * c4.hi <= 0);
    CHECK(to_double(c4.lo) == doctest::Approx(0.2929).epsilon(0.01));
}

TEST_CASE("boundary scale brackets the boundary on random directions")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        auto g = random_graph(rng, 5);
        auto dir = random_p(rng, 5, 10);
        auto s = boundary_scale(g, dir, Rational(1, 256));
        ProbabilityVector lo, hi;
        for (const auto& x : dir) lo.push_back(s.lo * x), hi.push_back(s.hi * x);
        REQUIRE(brute_member(g, lo));
        if (!s.clamped) REQUIRE_FALSE(brute_member(g, hi));
        REQUIRE(s.hi - s.lo <= Rational(1, 256));
    }
}

TEST_CASE("L1 gap")
{
    auto in = l1_gap(cycle_graph(4), uniform(4, Rational(1, 5)), Rational(1, 64));
    CHECK(in.in_bound);
    CHECK(in.lower == -1);
    CHECK(in.upper == -1);

    // K3 leaves the bound exactly when the sum reaches 1, so d = sum - 1.
    auto k3 = l1_gap(complete_graph(3), {Rational(1, 2), Rational(1, 3), Rational(1, 3)}, Rational(1, 256));
    CHECK_FALSE(k3.in_bound);
    CHECK(k3.converged);
    CHECK(k3.lower <= Rational(1, 6));
    CHECK(k3.upper >= Rational(1, 6));
    CHECK(k3.upper - k3.lower <= Rational(1, 256));
    CHECK_FALSE(shearer_member(complete_graph(3), k3.witness));

    // Both ends of a bracket of width res/16 lie within res of the boundary.
    const Rational res(1, 512);
    auto s = boundary_scale(cycle_graph(4), uniform(4, Rational(1)), res / 16);
    auto hi = l1_gap(cycle_graph(4), uniform(4, s.hi), res / 2);
    CHECK(hi.converged);
    CHECK(hi.upper <= res);
    CHECK(hi.lower >= 0);
    CHECK(l1_gap(cycle_graph(4), uniform(4, s.lo), res / 2).in_bound);
}

TEST_CASE("L1 gap bounds bracket a sampled lower witness")
{
    // Any out-of-bound x <= p with 0 <= p - x gives |p - x|_1 <= d.
    std::mt19937_64 rng(31);
    auto g = cycle_graph(4);
    ProbabilityVector p{Rational(2, 5), Rational(1, 3), Rational(2, 5), Rational(3, 10)};
    auto gap = l1_gap(g, p, Rational(1, 128));
    REQUIRE(gap.converged);
    for (int t = 0; t < 400; ++t) {
        ProbabilityVector x;
        Rational moved = 0;
        for (const auto& pi : p) {
            Rational xi = pi * ratio(static_cast<long>(rng() % 21), 20);
            moved += pi - xi;
            x.push_back(xi);
        }
        bool zero = false;
        for (auto& xi : x) zero = zero || xi == 0;
        if (zero || shearer_member(g, x)) continue;
        REQUIRE(moved <= gap.upper);
    }
}

TEST_CASE("expected resample bound")
{
    CHECK(expected_resample_bound(DependencyGraph(1), {Rational(1, 2)}) == 1);
    const Rational eps(1, 9);
    CHECK(expected_resample_bound(DependencyGraph(1), {1 / (1 + eps)}) == 1 / eps);
    auto c4 = cycle_graph(4);
    auto p = uniform(4, Rational(1, 8));
    Rational sum = 0;
    for (unsigned i = 0; i < 4; ++i) sum += brute_q(c4, p, 1u << i);
    CHECK(expected_resample_bound(c4, p) == sum / brute_q(c4, p, 0));
    CHECK_THROWS(expected_resample_bound(complete_graph(3), uniform(3, Rational(1, 3))));
}

TEST_CASE("extremal cycle values and slopes")
{
    for (int l = 4; l <= 8; ++l)
        CHECK(q_polynomial(cycle_graph(l), uniform(l, Rational(1, 4)), {}) == ratio(2, 1 << l));
    // q_empty is affine in each coordinate, so a difference quotient is exact.
    for (int l = 4; l <= 7; ++l) {
        auto g = cycle_graph(l);
        auto p = uniform(l, Rational(1, 4));
        auto p2 = p;
        p2.back() += Rational(1, 1000000);
        Rational slope = (q_polynomial(g, p2, {}) - q_polynomial(g, p, {})) * 1000000;
        CHECK(slope == ratio(-(l - 1), 1 << (l - 2)));
        // Oracle: -q_empty of the path left after deleting the last vertex and its neighbours.
        CHECK(slope == -brute_q(g.induced([&] {
                                     std::vector<int> vs;
                                     for (int v = 2; v <= l - 2; ++v) vs.push_back(v);
                                     return vs;
                                 }()),
                                uniform(l - 3, Rational(1, 4)), 0));
        auto raised = p;
        raised.back() += ratio(1, 4 * (l - 1));
        CHECK(shearer_member(g, raised));
    }
}
