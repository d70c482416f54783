#include "lll/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lll/criterion.hpp"
#include "lll/homomorphic.hpp"
#include "lll/lattice.hpp"
#include "lll/mt_engine.hpp"
#include "lll/shearer.hpp"
#include "lll/wdag.hpp"

namespace lll {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den)
{
    std::uniform_int_distribution<long> d(lo, hi);
    return ratio(d(rng), den);
}

// 1. q_empty of C_l at 1/4.
std::vector<AcceptanceLine> criterion1()
{
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int l = 4; l <= 8; ++l) {
        Rational q = q_polynomial(cycle_graph(l), ProbabilityVector(l, Rational(1, 4)), {});
        Rational want(1, 1);
        want /= pow(Rational(2), static_cast<unsigned>(l - 1));
        if (q != want) ok = false;
        detail += "l=" + std::to_string(l) + ":" + to_string(q) + (q == want ? " " : "(want " + to_string(want) + ") ");
    }
    double s = since(t0);
    if (s >= 1.0) ok = false;
    return {{1, "extremal cycle q_empty = 2^(1-l), l=4..8", ok, detail + "in " + fmt("%.3fs", s), s}};
}

// 2. Lattice gap q against the published values.
std::vector<AcceptanceLine> criterion2()
{
    struct Row {
        const char* name;
        const char* pa;
        double target, tol;
    };
    const Row rows[] = {{"square", "0.1193", 1.858e-22, 0.05},
                        {"hexagonal", "0.1547", 2.597e-25, 0.10},
                        {"cubic", "0.0744", 7.445e-23, 0.10}};
    std::vector<AcceptanceLine> out;
    for (const auto& r : rows) {
        auto t0 = Clock::now();
        auto g = lattice_gap_q(builtin_lattice(r.name), parse_rational(r.pa));
        double s = since(t0);
        double lo = g.q.lower_double(), hi = g.q.upper_double();
        bool ok = std::fabs(lo / r.target - 1) <= r.tol && std::fabs(hi / r.target - 1) <= r.tol && s < 10.0;
        std::ostringstream d;
        d << "q=" << fmt("%.4e", g.q.mid_double()) << " target " << fmt("%.4e", r.target) << " ratio "
          << fmt("%.4f", g.q.mid_double() / r.target) << " tol " << r.tol << " (D=" << g.diameter
          << ", Delta=" << g.max_degree << ", |V_U|=" << g.unit_vertices << ") in " << fmt("%.3fs", s);
        out.push_back({2, std::string("lattice gap q, ") + r.name + " p_a=" + r.pa, ok, d.str(), s});
    }
    return out;
}

// 3. Slope of q_empty in the last coordinate, and the raised vector in bound.
std::vector<AcceptanceLine> criterion3()
{
    auto t0 = Clock::now();
    bool slope_ok = true, bound_ok = true;
    std::string detail;
    const Rational h(1, 1000000);
    for (int l = 4; l <= 7; ++l) {
        auto g = cycle_graph(l);
        ProbabilityVector lam(l, Rational(1, 4));
        ProbabilityVector up = lam;
        up[l - 1] += h;
        Rational slope = (q_polynomial(g, up, {}) - q_polynomial(g, lam, {})) / h;
        Rational want = -Rational(l - 2) / pow(Rational(2), static_cast<unsigned>(l - 3));
        Rational diff = slope - want;
        if (abs(diff) > h) slope_ok = false;
        ProbabilityVector raised = lam;
        raised[l - 1] += Rational(1, 4 * (l - 1));
        bool in = shearer_member(g, raised);
        if (!in) bound_ok = false;
        detail += "l=" + std::to_string(l) + ": slope " + to_string(slope) + " stated " + to_string(want) +
                  (in ? ", raised in bound; " : ", raised NOT in bound; ");
    }
    double s = since(t0);
    return {{3, "q_empty slope -(l-2)/2^(l-3) and raised vector in bound, l=4..7", slope_ok && bound_ok,
             detail + "slope " + (slope_ok ? "matches" : "mismatch") + ", bound " + (bound_ok ? "ok" : "fails"), s}};
}

EventSystem small_system(int which)
{
    EventSystem sys;
    auto u = [&] { return sys.add_variable(Distribution::uniform01()); };
    auto below = [](const char* a) { return AllowedSet::interval(0, parse_rational(a)); };
    switch (which) {
    case 0:
        u();
        sys.add_box_event({{1, below("1/2")}});
        break;
    case 1:
        u(), u();
        sys.add_box_event({{1, below("1/2")}, {2, below("1/2")}});
        sys.add_box_event({{2, AllowedSet::interval(Rational(1, 3), 1)}});
        break;
    case 2:
        u(), u(), u(), u();
        sys.add_box_event({{1, below("1/2")}, {2, below("1/2")}});
        sys.add_box_event({{2, below("1/2")}, {3, below("1/2")}});
        sys.add_box_event({{3, below("1/2")}, {4, below("1/2")}});
        break;
    default:
        u(), u(), u(), u();
        sys.add_box_event({{1, below("1/2")}, {2, below("1/2")}});
        sys.add_box_event({{1, below("2/3")}, {3, below("1/2")}});
        sys.add_box_event({{1, AllowedSet::interval(Rational(1, 4), 1)}, {4, below("1/2")}});
        break;
    }
    return sys;
}

// 4. T equals the number of distinct single-sink prefixes of D_s.
std::vector<AcceptanceLine> criterion4()
{
    auto t0 = Clock::now();
    std::vector<EventSystem> systems;
    for (int k = 0; k < 4; ++k) systems.push_back(small_system(k));
    int checked = 0, bad = 0, longest = 0;
    for (std::uint64_t k = 0; checked < 200 && k < 100000; ++k) {
        const auto& sys = systems[k % systems.size()];
        auto rule = SelectionRule::by_name(SelectionRule::names()[(k / systems.size()) % 3], sys.base_graph());
        auto st = run_mt(sys, rule, derive_seed(0xFAC7ULL, k), 1000);
        if (st.truncated || st.T < 1 || st.T > 8) continue;
        ++checked;
        longest = std::max<int>(longest, static_cast<int>(st.T));
        if (count_single_sink_prefixes(witness_dag_of_run(sys, st)) != st.T) ++bad;
    }
    double s = since(t0);
    bool ok = checked == 200 && bad == 0;
    return {{4, "T = number of single-sink prefixes over 200 runs", ok,
             std::to_string(checked) + " runs checked, " + std::to_string(bad) + " mismatches, longest T=" +
                 std::to_string(longest),
             s}};
}

// A_i = [X_i < a] and [X_{i+1} < a] on C4: p = a^2 and adjacent intersections a^3.
EventSystem c4_overlap_instance(const Rational& a)
{
    EventSystem sys;
    for (int j = 0; j < 4; ++j) sys.add_variable(Distribution::uniform01());
    for (int i = 1; i <= 4; ++i)
        sys.add_box_event({{i, AllowedSet::interval(0, a)}, {i % 4 + 1, AllowedSet::interval(0, a)}});
    return sys;
}

// 5. Monte-Carlo mean of T stays below m/eps on accepted instances.
std::vector<AcceptanceLine> criterion5()
{
    struct Inst {
        const char* a;
        const char* eps;
    };
    const Inst insts[] = {{"1/2", "1/10"}, {"2709/5000", "1/500"}};
    std::vector<AcceptanceLine> out;
    for (const auto& in : insts) {
        auto t0 = Clock::now();
        Rational a = parse_rational(in.a), eps = parse_rational(in.eps);
        EventSystem sys = c4_overlap_instance(a);
        IntersectionSetting s;
        s.g = sys.base_graph();
        for (int i = 1; i <= sys.event_count(); ++i) s.p.push_back(sys.probability(i));
        auto inter = measure_pair_intersections(sys);
        s.m = greedy_max_intersection_matching(s.g, inter);
        for (auto e : s.m.pairs()) s.delta[e] = inter.at(e);
        s.delta_source = "measured";
        auto v = intersection_lll_verdict(s, eps);
        bool plain = shearer_member(s.g, s.p);
        std::ostringstream d;
        d << "p=" << to_string(s.p[0]) << (plain ? " (in bound)" : " (beyond bound)") << ", verdict "
          << (v.verdict.accepted ? "accepted" : "rejected");
        bool ok = v.verdict.accepted;
        if (ok) {
            double bound = to_double(*v.verdict.bound_on_ET);
            d << ", bound " << bound;
            const auto names = SelectionRule::names();
            for (std::size_t k = 0; k < names.size(); ++k) {
                const auto& name = names[k];
                auto rule = SelectionRule::by_name(name, s.g);
                auto r = estimate_expected_steps(sys, rule, 100000, derive_seed(0x50DULL, k));
                bool rule_ok = r.truncated == 0 && r.mean <= bound + 3 * r.stderr_;
                ok = ok && rule_ok;
                d << "; " << name << " mean " << fmt("%.4f", r.mean) << " se " << fmt("%.4f", r.stderr_)
                  << (r.truncated ? " truncated " + std::to_string(r.truncated) : "");
            }
        }
        double sec = since(t0);
        out.push_back({5, std::string("mean T <= 4/eps + 3 se, C4 a=") + in.a + " eps=" + in.eps, ok, d.str(), sec});
    }
    return out;
}

// 6. map_h injective, split_labels bijective per size, weight identities.
std::vector<AcceptanceLine> criterion6()
{
    struct Case {
        const char* name;
        DependencyGraph g;
        std::vector<Edge> m;
        ProbabilityVector p;
        Rational delta;
        int cap;
    };
    std::vector<Case> cases = {
        {"single edge", path_graph(2), {{1, 2}}, {Rational(1, 4), Rational(1, 3)}, Rational(1, 8), 4},
        {"C4 with (1,2) matched", cycle_graph(4), {{1, 2}},
         {Rational(1, 5), Rational(1, 4), Rational(1, 5), Rational(1, 4)}, Rational(1, 10), 5}};
    std::vector<AcceptanceLine> out;
    for (const auto& c : cases) {
        auto t0 = Clock::now();
        IntersectionSetting s;
        s.g = c.g;
        s.p = c.p;
        s.m = Matching(c.g, c.m);
        for (auto e : c.m) s.delta[e] = c.delta;
        auto red = reduced_vectors(s);
        auto h = homomorphic_graph(c.g, s.m, c.p, red.pminus, red.pprime);
        auto pw = enumerate_pwdags(c.g, c.cap);

        bool injective = true, images_valid = true, dominated = true;
        std::size_t pairs = 0;
        std::set<std::vector<int>> images;
        std::map<int, std::set<std::vector<int>>> split_images;
        bool split_distinct = true, split_valid = true;
        for (const auto& d : pw.dags) {
            Rational total = 0;
            for (const auto& part : partitions_psi(d, s.m)) {
                WDag img = map_h(d, part, s.m, h);
                ++pairs;
                if (!validate_wdag(img, h.graph) || sinks(img).size() != 1) images_valid = false;
                if (!images.insert(canonical_form(img)).second) injective = false;
                total += wdag_weight(img, h.p);
            }
            if (tighter_weight(d, c.p, red.pprime, s.m) > total) dominated = false;
            const std::size_t k = matched_nodes(d, s.m).size();
            for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
                std::vector<int> r(k);
                for (std::size_t t = 0; t < k; ++t) r[t] = (bits >> t) & 1;
                WDag img = split_labels(d, r, s.m, h);
                if (!validate_wdag(img, h.graph) || sinks(img).size() != 1) split_valid = false;
                if (!split_images[d.size()].insert(canonical_form(img)).second) split_distinct = false;
            }
        }
        auto pwh = enumerate_pwdags(h.graph, c.cap);
        std::map<int, std::set<std::vector<int>>> target;
        for (const auto& d : pwh.dags) target[d.size()].insert(canonical_form(d));
        bool bijective = split_distinct && split_valid && split_images == target;

        auto wh = weight_sums(h.graph, h.p, c.cap);
        auto wg = weight_sums(c.g, red.pminus, c.cap);
        bool weights_equal = wh.by_size == wg.by_size && !wh.truncated && !wg.truncated;
        double sec = since(t0);
        bool ok = injective && images_valid && dominated && bijective && weights_equal && !pw.truncated && sec < 60;
        std::ostringstream d;
        d << pw.dags.size() << " pwdags, " << pairs << " (D,S) pairs; map_h " << (injective ? "injective" : "NOT injective")
          << (images_valid ? "" : " (invalid image)") << "; split_labels " << (bijective ? "bijective" : "NOT bijective")
          << " onto " << pwh.dags.size() << " pwdags of G^M; per-size sums " << (weights_equal ? "equal" : "DIFFER")
          << "; domination " << (dominated ? "holds" : "FAILS") << "; " << fmt("%.2fs", sec);
        out.push_back({6, std::string("injection and weight identities, ") + c.name + " cap " + std::to_string(c.cap), ok,
                       d.str(), sec});
    }
    return out;
}

// 7. Compound swap event against Pr(A)Pr(A') - Pr(A and A')^2.
std::vector<AcceptanceLine> criterion7()
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(0x9209ULL);
    std::uniform_int_distribution<int> size(1, 3), weight(1, 9), coin(0, 1);
    auto masses = [&](int n) {
        std::vector<Rational> m;
        Rational total = 0;
        for (int k = 0; k < n; ++k) {
            m.emplace_back(weight(rng));
            total += m.back();
        }
        for (auto& x : m) x /= total;
        return m;
    };
    auto table = [&](int r, int c) {
        std::vector<std::vector<char>> t(r, std::vector<char>(c));
        for (auto& row : t)
            for (auto& x : row) x = static_cast<char>(coin(rng));
        return t;
    };
    int bad = 0, strict = 0;
    for (int k = 0; k < 100; ++k) {
        int nx = size(rng), ny = size(rng), nz = size(rng);
        auto px = masses(nx), py = masses(ny), pz = masses(nz);
        auto r = swap_probability(px, py, pz, table(nx, ny), table(ny, nz));
        if (r.compound > r.bound) ++bad;
        if (r.compound < r.bound) ++strict;
    }
    double s = since(t0);
    return {{7, "swap event probability <= Pr(A)Pr(A') - Pr(A and A')^2, 100 cases", bad == 0,
             std::to_string(bad) + " violations, " + std::to_string(strict) + " strict", s}};
}

// 8. Pr[D(i,r) ~ X] = Pr[D(i,r) ~ (X,Y)] on the single-edge instance.
std::vector<AcceptanceLine> criterion8()
{
    auto t0 = Clock::now();
    const auto g = path_graph(2);
    const Matching m(g, {{1, 2}});
    auto pw = enumerate_pwdags(g, 3);
    std::map<std::pair<int, int>, std::vector<const WDag*>> groups;
    for (const auto& d : pw.dags) {
        auto key = group_key(d);
        if (key.second <= 2) groups[key].push_back(&d);
    }
    int mismatches = 0, instances = 0, repairs = 0, repair_bad = 0, repair_steps = 0;
    bool revisit = false;
    for (int a1 = 1; a1 < 16; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
            EventSystem sys;
            sys.add_variable(Distribution::finite({Rational(1, 2), Rational(1, 2)}));
            sys.add_variable(Distribution::finite({Rational(1, 2), Rational(1, 2)}));
            std::vector<std::vector<int>> tuples;
            for (int t = 0; t < 4; ++t)
                if (a1 & (1 << t)) tuples.push_back({t & 1, t >> 1});
            sys.add_table_event({1, 2}, tuples);
            sys.add_table_event({2}, {{a2}});
            ++instances;
            for (const auto& [key, members] : groups) {
                int count_x = 0, count_xy = 0;
                for (int x = 0; x < 64; ++x) {
                    std::vector<std::vector<Value>> rows(2, std::vector<Value>(3));
                    for (int c = 0; c < 3; ++c) {
                        rows[0][c] = (x >> c) & 1;
                        rows[1][c] = (x >> (3 + c)) & 1;
                    }
                    auto xt = ResamplingTable::from_rows(rows);
                    std::vector<const WDag*> consistent;
                    for (const WDag* d : members)
                        if (consistent_with_table(*d, sys, xt)) consistent.push_back(d);
                    if (!consistent.empty()) count_x += 8;
                    for (int y = 0; y < 8; ++y) {
                        std::vector<int> coins;
                        for (int c = 0; c < 3; ++c) coins.push_back((y >> c) & 1 ? 2 : 1);
                        auto yt = AuxiliaryTable::from_rows({{make_edge(1, 2), coins}});
                        bool any = false;
                        for (const WDag* d : consistent)
                            if (consistent_with_tables(*d, sys, xt, yt, m)) any = true;
                        if (any) ++count_xy;
                        for (const WDag* d : consistent) {
                            ++repairs;
                            try {
                                auto r = repair_to_consistent(*d, sys, xt, yt, m);
                                repair_steps += static_cast<int>(r.steps);
                                if (group_key(r.dag) != key || !consistent_with_tables(r.dag, sys, xt, yt, m)) ++repair_bad;
                            } catch (const std::logic_error&) {
                                revisit = true;
                            }
                        }
                    }
                }
                if (count_x != count_xy) ++mismatches;
            }
        }
    double s = since(t0);
    bool ok = mismatches == 0 && repair_bad == 0 && !revisit;
    return {{8, "Pr[D(i,r) ~ X] = Pr[D(i,r) ~ (X,Y)], r <= 2, all tables", ok,
             std::to_string(instances) + " event pairs x " + std::to_string(groups.size()) + " classes, " +
                 std::to_string(mismatches) + " mismatches; " + std::to_string(repairs) + " repairs (" +
                 std::to_string(repair_steps) + " steps), " + std::to_string(repair_bad) + " bad" +
                 (revisit ? ", a wdag was revisited" : ", no revisits"),
             s}};
}

AllowedSet random_allowed(std::mt19937_64& rng)
{
    // One or two intervals with denominators 97; total measure at least 30/97.
    std::uniform_int_distribution<int> parts(1, 2), len(30, 97);
    int total = len(rng);
    if (parts(rng) == 1 || total < 2) {
        std::uniform_int_distribution<int> start(0, 97 - total);
        int a = start(rng);
        return AllowedSet::interval(ratio(a, 97), ratio(a + total, 97));
    }
    std::uniform_int_distribution<int> split(1, total - 1);
    int first = split(rng), gap_room = 97 - total;
    std::uniform_int_distribution<int> gap(0, gap_room);
    int g1 = gap(rng);
    std::uniform_int_distribution<int> gap2(0, gap_room - g1);
    int g2 = gap2(rng);
    return AllowedSet::union_of({{ratio(g1, 97), ratio(g1 + first, 97)},
                                 {ratio(g1 + first + g2, 97), ratio(g1 + total + g2, 97)}});
}

// 9. Total pairwise intersection on elementary systems over the bipartite 8-cycle.
std::vector<AcceptanceLine> criterion9()
{
    auto t0 = Clock::now();
    const auto b = edge_variable_graph(cycle_graph(4));
    std::mt19937_64 rng(0x4E3ULL);
    int bad = 0, positive = 0;
    Rational min_slack = -1;
    for (int k = 0; k < 100; ++k) {
        EventSystem sys;
        for (int j = 1; j <= b.variables(); ++j) sys.add_variable(Distribution::uniform01());
        for (int i = 1; i <= b.events(); ++i) {
            std::vector<std::pair<int, AllowedSet>> cons;
            for (int j : b.vbl(i)) cons.emplace_back(j, random_allowed(rng));
            sys.add_box_event(cons);
        }
        ProbabilityVector p;
        for (int i = 1; i <= sys.event_count(); ++i) p.push_back(sys.probability(i));
        auto dg = digamma(b, p);
        Rational lhs = 0;
        for (const auto& [e, v] : measure_pair_intersections(sys)) lhs += v;
        RealInterval rhs = RealInterval(static_cast<long>(b.events())).sqrt() * RealInterval(static_cast<long>(dg.delta_d)) *
                           RealInterval(static_cast<long>(dg.delta_b)).square() * dg.value;
        if (dg.value.certainly_positive()) ++positive;
        if (lhs < rhs.upper()) ++bad;
        Rational slack = lhs - rhs.upper();
        if (min_slack < 0 || slack < min_slack) min_slack = slack;
    }
    double s = since(t0);
    return {{9, "sum of pairwise intersections >= sqrt(m) Delta_D Delta_B^2 digamma, 100 systems", bad == 0,
             std::to_string(bad) + " violations, " + std::to_string(positive) + " with digamma > 0, min slack " +
                 fmt("%.3g", to_double(min_slack)),
             s}};
}

// 10. Transfer along a shortest path keeps a vector beyond the bound.
std::vector<AcceptanceLine> criterion10()
{
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xE1ULL);
    int cases = 0, bad = 0, tries = 0;
    while (cases < 50 && tries < 100000) {
        ++tries;
        const int l = cases % 2 == 0 ? 4 : 5;
        auto g = cycle_graph(l);
        ProbabilityVector p;
        for (int i = 0; i < l; ++i) p.push_back(random_rational(rng, 15, 70, 100));
        if (!beyond_bound(g, p)) continue;
        std::uniform_int_distribution<int> pick(1, l);
        int i = pick(rng), ip = pick(rng);
        if (i == ip) continue;
        auto dist = bfs_distances(g, ip);
        std::vector<int> path{i};
        while (path.back() != ip) {
            std::vector<int> next;
            for (int w : g.neighbors(path.back()))
                if (dist[w] == dist[path.back()] - 1) next.push_back(w);
            std::uniform_int_distribution<std::size_t> choose(0, next.size() - 1);
            path.push_back(next[choose(rng)]);
        }
        Rational q = p[ip - 1] * random_rational(rng, 0, 100, 100);
        if (!beyond_bound(g, transfer_along_path(g, p, path, q))) ++bad;
        ++cases;
    }
    double s = since(t0);
    return {{10, "transfer along shortest paths stays beyond the bound, 50 vectors", cases == 50 && bad == 0,
             std::to_string(cases) + " cases, " + std::to_string(bad) + " fell inside", s}};
}

// 11. l1_gap sanity.
std::vector<AcceptanceLine> criterion11()
{
    auto t0 = Clock::now();
    std::string detail;
    bool ok = true;
    struct In {
        DependencyGraph g;
        ProbabilityVector p;
    };
    std::vector<In> inside = {{complete_graph(1), {Rational(1, 2)}},
                              {complete_graph(3), ProbabilityVector(3, Rational(3, 10))},
                              {cycle_graph(4), ProbabilityVector(4, Rational(1, 4))}};
    for (const auto& c : inside) {
        auto gap = l1_gap(c.g, c.p, Rational(1, 256));
        if (!gap.in_bound || gap.lower != -1 || gap.upper != -1) ok = false;
    }
    detail += ok ? "in-bound vectors give -1; " : "in-bound marker wrong; ";

    const Rational res(1, 256);
    for (const auto& g : {complete_graph(3), cycle_graph(4), path_graph(3)}) {
        ProbabilityVector dir(g.size(), Rational(1));
        auto sc = boundary_scale(g, dir, res / (4 * g.size()));
        ProbabilityVector hi(g.size(), sc.hi), lo(g.size(), sc.lo);
        auto gh = l1_gap(g, hi, res / 2);
        auto gl = l1_gap(g, lo, res / 2);
        bool here = !gh.in_bound && gh.lower >= 0 && gh.upper <= res && gl.in_bound;
        ok = ok && here;
        detail += "boundary m=" + std::to_string(g.size()) + " d in [" + fmt("%.2e", to_double(gh.lower)) + "," +
                  fmt("%.2e", to_double(gh.upper)) + "]" + (here ? "; " : " FAIL; ");
    }
    auto k3 = l1_gap(complete_graph(3), {Rational(1, 2), Rational(1, 3), Rational(1, 3)}, res);
    bool k3ok = k3.lower <= Rational(1, 6) && Rational(1, 6) <= k3.upper && k3.upper - k3.lower <= res;
    ok = ok && k3ok;
    detail += "K3 (1/2,1/3,1/3): [" + fmt("%.6f", to_double(k3.lower)) + "," + fmt("%.6f", to_double(k3.upper)) + "]";
    double s = since(t0);
    return {{11, "gap sanity: -1 inside, |d| <= resolution at the boundary, K3 contains 1/6", ok, detail, s}};
}

}  // namespace

std::vector<AcceptanceLine> run_acceptance(int criterion)
{
    switch (criterion) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    case 11: return criterion11();
    default: throw std::invalid_argument("acceptance criteria are numbered 1.." + std::to_string(kAcceptanceCount));
    }
}

std::string format_line(const AcceptanceLine& line)
{
    return std::string(line.pass ? "PASS" : "FAIL") + " [" + std::to_string(line.criterion) + "] " + line.label + " -- " +
           line.detail;
}

}  // namespace lll
