#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lll/graphs.hpp"
#include "lll/lattice.hpp"

using namespace lll;

namespace {

// Every graph on n vertices, by edge bitmask over the pairs (u,v), u < v.
std::vector<DependencyGraph> all_graphs(int n)
{
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    std::vector<DependencyGraph> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) es.push_back(pairs[k]);
        out.emplace_back(n, es);
    }
    return out;
}

// Oracle: some vertex subset of size >= 4 induces a connected 2-regular graph.
bool has_long_induced_cycle(const DependencyGraph& g)
{
    const int n = g.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v + 1);
        bool two_regular = true;
        for (int v : vs) {
            int d = 0;
            for (int w : vs) d += g.adjacent(v, w);
            two_regular = two_regular && d == 2;
        }
        if (two_regular && is_connected(g.induced(vs))) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("base graph joins events sharing a variable")
{
    CHECK(base_graph(BipartiteGraph(2, 1, {{1, 1}, {2, 1}})).edges() == std::vector<Edge>{{1, 2}});
    CHECK(base_graph(BipartiteGraph(2, 2, {{1, 1}, {2, 2}})).edges().empty());
    CHECK(base_graph(edge_variable_graph(cycle_graph(4))) == cycle_graph(4));
}

TEST_CASE("base graph inverts the edge-variable graph on graphs without isolated vertices")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            bool isolated = false;
            for (int v = 1; v <= n; ++v) isolated = isolated || g.degree(v) == 0;
            if (isolated) continue;
            REQUIRE(base_graph(edge_variable_graph(g)) == g);
        }
}

TEST_CASE("edge-variable graph")
{
    auto b = edge_variable_graph(DependencyGraph(2, {{1, 2}}));
    CHECK(b.events() == 2);
    CHECK(b.variables() == 1);
    CHECK(b.edges().size() == 2);
    auto c = edge_variable_graph(cycle_graph(4));
    CHECK(c.variables() == 4);
    for (int i = 1; i <= 4; ++i) CHECK(c.vbl(i).size() == 2);
    for (int j = 1; j <= 4; ++j) CHECK(c.events_of(j).size() == 2);
    CHECK(base_graph(edge_variable_graph(complete_graph(3))) == complete_graph(3));
    CHECK_THROWS(edge_variable_graph(DependencyGraph(3)));
}

TEST_CASE("graph validation")
{
    CHECK_THROWS(DependencyGraph(3, {{1, 1}}));
    CHECK_THROWS(DependencyGraph(3, {{1, 4}}));
    CHECK_THROWS(Matching(path_graph(3), {{1, 2}, {2, 3}}));
    CHECK_THROWS(Matching(path_graph(3), {{1, 3}}));
}

TEST_CASE("chordality")
{
    CHECK(is_chordal(complete_graph(3)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    // C5 with chords 1-3 and 1-4 is a fan of triangles.
    CHECK(is_chordal(DependencyGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}, {1, 4}})));
    // C5 with chord 1-3 leaves the induced 4-cycle 1-3-4-5.
    CHECK_FALSE(is_chordal(DependencyGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}})));
}

TEST_CASE("chordality agrees with brute-force induced cycles up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) REQUIRE(is_chordal(g) == !has_long_induced_cycle(g));
}

TEST_CASE("chordality agrees with brute-force induced cycles on random 7-vertex graphs")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 3000; ++t) {
        std::vector<Edge> es;
        for (int u = 1; u <= 7; ++u)
            for (int v = u + 1; v <= 7; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        DependencyGraph g(7, es);
        REQUIRE(is_chordal(g) == !has_long_induced_cycle(g));
    }
}

TEST_CASE("disjoint chordless cycles")
{
    CHECK(find_disjoint_chordless_cycles(complete_graph(3)).cycles.empty());
    auto c4 = find_disjoint_chordless_cycles(cycle_graph(4));
    REQUIRE(c4.cycles.size() == 1);
    CHECK(c4.cycles[0].size() == 4);
    DependencyGraph two(8, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {5, 6}, {6, 7}, {7, 8}, {5, 8}, {4, 5}});
    auto r = find_disjoint_chordless_cycles(two);
    REQUIRE(r.cycles.size() == 2);
    std::set<int> seen;
    for (const auto& c : r.cycles) {
        CHECK(is_induced_cycle(two, c));
        seen.insert(c.begin(), c.end());
    }
    CHECK(seen.size() == 8);
    CHECK(r.disjoint);
}

TEST_CASE("cycle search is empty exactly on chordal graphs")
{
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            auto r = find_disjoint_chordless_cycles(g);
            REQUIRE(r.cycles.empty() == is_chordal(g));
            std::set<int> used;
            for (const auto& c : r.cycles) {
                REQUIRE(c.size() >= 4);
                REQUIRE(is_induced_cycle(g, c));
                for (int v : c) REQUIRE(used.insert(v).second);
            }
        }
}

TEST_CASE("greedy matching")
{
    std::map<Edge, Rational> w{{{1, 2}, Rational(3, 10)}, {{2, 3}, Rational(1, 2)}, {{3, 4}, Rational(1, 5)}};
    CHECK(greedy_max_intersection_matching(path_graph(4), w).pairs() == std::vector<Edge>{{2, 3}});
    CHECK(greedy_max_intersection_matching(path_graph(2), {{{1, 2}, Rational(1)}}).pairs() ==
          std::vector<Edge>{{1, 2}});
    const auto c4 = cycle_graph(4);
    std::map<Edge, Rational> eq;
    for (auto e : c4.edges()) eq[e] = Rational(1, 7);
    CHECK(greedy_max_intersection_matching(cycle_graph(4), eq).pairs() == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("greedy matching is maximal and dominates deleted edges")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        std::vector<Edge> es;
        for (int u = 1; u <= 7; ++u)
            for (int v = u + 1; v <= 7; ++v)
                if (rng() % 3 == 0) es.emplace_back(u, v);
        DependencyGraph g(7, es);
        std::map<Edge, Rational> w;
        for (auto e : es) w[e] = Rational(static_cast<long>(rng() % 10), 10);
        auto m = greedy_max_intersection_matching(g, w);
        for (auto [u, v] : es) {
            REQUIRE((m.matched(u) || m.matched(v)));
            if (m.contains(u, v)) continue;
            Rational best = 0;
            for (int x : {u, v})
                if (m.matched(x)) best = std::max(best, w.at(make_edge(x, m.partner(x))));
            REQUIRE(w.at(make_edge(u, v)) <= best);
        }
    }
}

TEST_CASE("linearity and simplification")
{
    CHECK_FALSE(is_linear(BipartiteGraph(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})));
    CHECK(is_linear(edge_variable_graph(complete_graph(4))));
    CHECK(is_linear(BipartiteGraph(2, 2, {{1, 1}, {2, 2}})));

    auto pend = simplify(BipartiteGraph(2, 2, {{1, 1}, {2, 1}, {1, 2}}));
    CHECK(pend.variables() == 1);
    auto merged = simplify(BipartiteGraph(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    CHECK(merged.variables() == 1);
    CHECK(is_linear(merged));

    // C4 edge variables plus one pendant variable per event.
    auto core = edge_variable_graph(cycle_graph(4));
    auto es = core.edges();
    for (int i = 1; i <= 4; ++i) es.emplace_back(i, 4 + i);
    auto s = simplify(BipartiteGraph(4, 8, es));
    CHECK(s == simplify(core));
    CHECK(s.variables() == 4);
}

TEST_CASE("simplification preserves linearity")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const int m = 2 + static_cast<int>(rng() % 4), n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i <= m; ++i) {
            es.emplace_back(i, 1 + static_cast<int>(rng() % n));
            for (int j = 1; j <= n; ++j)
                if (rng() % 3 == 0) es.emplace_back(i, j);
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        BipartiteGraph b(m, n, es);
        if (is_linear(b)) REQUIRE(is_linear(simplify(b)));
    }
}

TEST_CASE("distances and paths")
{
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diameter(path_graph(5)) == 4);
    CHECK_THROWS(diameter(DependencyGraph(2)));
    auto p = shortest_path(cycle_graph(6), 1, 4);
    CHECK(p.size() == 4);
    CHECK(shortest_path(DependencyGraph(2), 1, 2).empty());
}

TEST_CASE("translational unit expansion")
{
    auto sq = square_unit();
    CHECK(sq.graph.size() == 25);
    CHECK(diameter(sq.graph) == 8);
    auto big = expand_translational_unit(sq.graph, sq.position, sq.shifts, {2, 2}, sq.class_modulus);
    CHECK(big.graph.size() == 100);
    CHECK(big.graph.edges().size() == 180);
    auto one = expand_translational_unit(sq.graph, sq.position, sq.shifts, {1, 1}, sq.class_modulus);
    CHECK(one.graph == sq.graph);

    auto cube = cubic_unit();
    CHECK(cube.graph.size() == 27);
    auto box = expand_translational_unit(cube.graph, cube.position, cube.shifts, {2, 1, 1}, cube.class_modulus);
    CHECK(box.graph.size() == 54);
    // 6x3x3 box: 5*3*3 + 6*2*3 + 6*3*2 bonds.
    CHECK(box.graph.edges().size() == 45 + 36 + 36);

    auto hex = hexagonal_unit();
    CHECK(hex.graph.size() == 54);
    CHECK(hex.graph.edges().size() == 72);
    CHECK(diameter(hex.graph) == 11);
    CHECK(hex.graph.max_degree() == 3);
}

TEST_CASE("expansion rejects inconsistent copies")
{
    // A unit whose bond 1-2 disagrees with the shifted copy's non-bond at the same positions.
    DependencyGraph unit(3, {{1, 2}});
    std::vector<Point> pos{{0}, {1}, {2}};
    CHECK_THROWS(expand_translational_unit(unit, pos, {{1}}, {2}));
}
