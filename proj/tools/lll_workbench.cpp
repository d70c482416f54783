// Command-line front end: one subcommand per workbench operation.
// Exit codes: 0 ok, 1 verdict rejects (output still valid), 2 input error, 3 cap exceeded.
// Library caps throw std::length_error; everything else invalid maps to 2.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lll/acceptance.hpp"
#include "lll/criterion.hpp"
#include "lll/homomorphic.hpp"
#include "lll/io.hpp"
#include "lll/lattice.hpp"
#include "lll/mt_engine.hpp"
#include "lll/shearer.hpp"
#include "lll/wdag.hpp"

using namespace lll;

namespace {

enum Exit { kOk = 0, kReject = 1, kInput = 2, kCap = 3 };

struct Options {
    std::string graph, bipartite, system, p, delta, matching, eps = "1/10", resolution = "1/1024", out, format = "json";
    std::string lattice, pa, rule = "lowest", unit, only;
    std::uint64_t seed = 1;
    std::size_t trials = 1000, node_cap = 6, step_cap = kDefaultStepCap, box_cap = 4'000'000;
    bool all_q = false, with_wdag = false;
};

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.out + "'");
    f << text;
    if (!f) throw InputError("failed writing '" + o.out + "'");
}

void emit_json(const Options& o, const json& j) { emit(o, j.dump(2) + "\n"); }

DependencyGraph load_graph(const Options& o)
{
    if (o.graph.empty()) throw InputError("--graph is required");
    return graph_from_json(read_json_or_inline(o.graph));
}

ProbabilityVector load_p(const std::string& text)
{
    if (text.empty()) throw InputError("--p is required");
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec) || text.front() == '[' || text.front() == '{')
        return probabilities_from_json(read_json_or_inline(text));
    try {
        return parse_rational_list(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--p: ") + e.what());
    }
}

Rational load_rational(const char* flag, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

EventSystem load_system(const Options& o)
{
    if (o.system.empty()) throw InputError("--system is required");
    return system_from_json(read_json_or_inline(o.system));
}

void check_p(const DependencyGraph& g, const ProbabilityVector& p)
{
    try {
        validate_probability_vector(p, g.size());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--p: ") + e.what());
    }
}

json sets_json(const std::vector<int>& s) { return json(s); }

int cmd_shearer_check(const Options& o)
{
    auto g = load_graph(o);
    auto p = load_p(o.p);
    check_p(g, p);
    auto rep = in_shearer_bound(g, p, o.all_q);
    json q1 = json::array();
    for (const auto& q : rep.q_singletons) q1.push_back(to_string(q));
    json j = {{"command", "shearer-check"},
              {"graph", graph_to_json(g)},
              {"p", probabilities_to_json(p)},
              {"in_bound", rep.in_bound},
              {"q_empty", to_string(rep.q_empty)},
              {"q_singletons", q1},
              {"witness", rep.witness ? sets_json(*rep.witness) : json(nullptr)}};
    if (o.all_q) {
        json all = json::array();
        for (const auto& [I, q] : rep.q_values) all.push_back({{"set", I}, {"q", to_string(q)}});
        j["q_values"] = all;
    }
    emit_json(o, j);
    return rep.in_bound ? kOk : kReject;
}

int cmd_boundary(const Options& o)
{
    auto g = load_graph(o);
    auto dir = load_p(o.p);
    if (static_cast<int>(dir.size()) != g.size()) throw InputError("--p: direction has the wrong length");
    auto res = load_rational("--resolution", o.resolution);
    auto sc = boundary_scale(g, dir, res);
    emit_json(o, {{"command", "boundary"},
                  {"graph", graph_to_json(g)},
                  {"direction", probabilities_to_json(dir)},
                  {"resolution", to_string(res)},
                  {"lo", to_string(sc.lo)},
                  {"hi", to_string(sc.hi)},
                  {"lo_decimal", to_double(sc.lo)},
                  {"hi_decimal", to_double(sc.hi)},
                  {"clamped", sc.clamped}});
    return kOk;
}

json gap_json(const GapEstimate& gap)
{
    json j = {{"in_bound", gap.in_bound},
              {"lower", to_string(gap.lower)},
              {"upper", to_string(gap.upper)},
              {"lower_decimal", to_double(gap.lower)},
              {"upper_decimal", to_double(gap.upper)},
              {"resolution", to_string(gap.resolution)},
              {"converged", gap.converged},
              {"boxes", gap.boxes}};
    if (!gap.in_bound) j["witness"] = probabilities_to_json(gap.witness);
    return j;
}

int cmd_gap(const Options& o)
{
    auto g = load_graph(o);
    auto p = load_p(o.p);
    check_p(g, p);
    auto res = load_rational("--resolution", o.resolution);
    auto gap = l1_gap(g, p, res, o.box_cap);
    json j = gap_json(gap);
    j["command"] = "gap";
    j["graph"] = graph_to_json(g);
    j["p"] = probabilities_to_json(p);
    emit_json(o, j);
    return gap.converged ? kOk : kCap;
}

int cmd_mt_run(const Options& o)
{
    auto sys = load_system(o);
    auto rule = SelectionRule::by_name(o.rule, sys.base_graph());
    auto st = run_mt(sys, rule, o.seed, o.step_cap);
    json j = run_stats_to_json(sys, st);
    j["command"] = "mt-run";
    j["rule"] = rule.name();
    j["step_cap"] = o.step_cap;
    if (o.with_wdag) j["witness_dag"] = wdag_to_json(witness_dag_of_run(sys, st));
    emit_json(o, j);
    return st.truncated ? kCap : kOk;
}

int cmd_mt_estimate(const Options& o)
{
    auto sys = load_system(o);
    auto rule = SelectionRule::by_name(o.rule, sys.base_graph());
    if (o.trials < 1) throw InputError("--trials must be at least 1");
    auto r = estimate_expected_steps(sys, rule, o.trials, o.seed, o.step_cap);
    if (o.format == "csv") {
        std::ostringstream s;
        write_batch_csv(s, r);
        emit(o, s.str());
    } else {
        emit_json(o, {{"command", "mt-estimate"},
                      {"rule", rule.name()},
                      {"seed", o.seed},
                      {"trials", o.trials},
                      {"step_cap", o.step_cap},
                      {"mean", r.mean},
                      {"stderr", r.stderr_},
                      {"completed", r.completed},
                      {"truncated", r.truncated}});
    }
    return r.truncated ? kCap : kOk;
}

// Setting from --graph/--p/--matching/--delta, or from --system with measured intersections.
IntersectionSetting load_setting(const Options& o, std::optional<EventSystem>& sys)
{
    IntersectionSetting s;
    std::map<Edge, Rational> measured;
    if (!o.system.empty()) {
        sys = load_system(o);
        s.g = sys->base_graph();
        for (int i = 1; i <= sys->event_count(); ++i) s.p.push_back(sys->probability(i));
        measured = measure_pair_intersections(*sys);
    } else {
        s.g = load_graph(o);
    }
    if (!o.p.empty()) s.p = load_p(o.p);
    check_p(s.g, s.p);
    if (!o.matching.empty()) {
        s.m = parse_matching(s.g, o.matching);
    } else if (sys) {
        s.m = greedy_max_intersection_matching(s.g, measured);
    }
    if (o.delta.empty() || o.delta == "measure") {
        if (!sys && !s.m.empty()) throw InputError("--delta is required without --system");
        for (auto e : s.m.pairs()) s.delta[e] = measured.at(e);
        s.delta_source = "measured";
        // Pairs that never intersect carry no delta; drop them from the matching.
        std::vector<Edge> keep;
        for (auto e : s.m.pairs())
            if (s.delta[e] > 0) keep.push_back(e);
        if (keep.size() != s.m.pairs().size()) {
            s.m = Matching(s.g, keep);
            std::map<Edge, Rational> d;
            for (auto e : keep) d[e] = s.delta[e];
            s.delta = d;
        }
    } else {
        auto ds = load_p(o.delta);
        if (ds.size() != s.m.pairs().size()) throw InputError("--delta needs one value per matched pair");
        for (std::size_t k = 0; k < ds.size(); ++k) s.delta[s.m.pairs()[k]] = ds[k];
        s.delta_source = "input";
    }
    try {
        validate_setting(s);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return s;
}

int cmd_criterion(const Options& o)
{
    std::optional<EventSystem> sys;
    auto s = load_setting(o, sys);
    auto eps = load_rational("--eps", o.eps);
    if (eps <= 0) throw InputError("--eps must be positive");
    auto v = intersection_lll_verdict(s, eps);
    json delta = json::object();
    for (const auto& [e, d] : s.delta) delta[std::to_string(e.first) + "-" + std::to_string(e.second)] = to_string(d);
    json j = {{"command", "criterion"},
              {"inputs",
               {{"graph", graph_to_json(s.g)},
                {"p", probabilities_to_json(s.p)},
                {"matching", matching_to_json(s.m)},
                {"delta", delta},
                {"delta_source", s.delta_source},
                {"eps", to_string(eps)}}},
              {"p_minus", probabilities_to_json(v.reduced.pminus)},
              {"p_prime", probabilities_to_json(v.reduced.pprime)},
              {"c", probabilities_to_json(v.reduced.c)},
              {"scaled", probabilities_to_json(v.scaled)},
              {"split_mass_covers_p", split_mass_covers(s, v.reduced)},
              {"plain_shearer_in_bound", shearer_member(s.g, s.p)},
              {"accepted", v.verdict.accepted},
              {"clamped", v.clamped},
              {"evidence", v.verdict.evidence},
              {"bound_on_ET", v.verdict.bound_on_ET ? json(to_string(*v.verdict.bound_on_ET)) : json(nullptr)},
              {"rounding", "exact rational arithmetic"}};
    emit_json(o, j);
    return v.verdict.accepted ? kOk : kReject;
}

int cmd_beyond(const Options& o)
{
    auto g = load_graph(o);
    auto p = load_p(o.p);
    check_p(g, p);
    auto eps = load_rational("--eps", o.eps);
    if (eps <= 0) throw InputError("--eps must be positive");
    auto res = load_rational("--resolution", o.resolution);
    ProbabilityVector scaled;
    for (const auto& x : p) scaled.push_back((1 + eps) * x);
    for (const auto& x : scaled)
        if (x > 1) throw InputError("(1+eps) p has an entry above 1");
    auto cycles = find_disjoint_chordless_cycles(g);
    auto gap = l1_gap(g, scaled, res, o.box_cap);
    auto v = beyond_shearer_verdict(g, p, eps, cycles, gap);
    json cyc = json::array();
    for (const auto& c : cycles.cycles) {
        auto r = r_cycle(g, p, c);
        cyc.push_back({{"cycle", c}, {"r_lower", r.r.lower_string()}, {"r_plus_lower", r.rplus.lower_string()},
                       {"r_plus_upper", r.rplus.upper_string()}});
    }
    json j = {{"command", "beyond"},
              {"inputs", {{"graph", graph_to_json(g)}, {"p", probabilities_to_json(p)}, {"eps", to_string(eps)}}},
              {"cycles", cyc},
              {"gap", gap_json(gap)},
              {"threshold_545", to_string(v.threshold_545)},
              {"threshold_544", to_string(v.threshold_544)},
              {"threshold_545_decimal", to_double(v.threshold_545)},
              {"threshold_544_decimal", to_double(v.threshold_544)},
              {"accepted", v.verdict.accepted},
              {"accepted_544", v.accepted_544},
              {"evidence", v.verdict.evidence},
              {"bound_on_ET", v.verdict.bound_on_ET ? json(to_string(*v.verdict.bound_on_ET)) : json(nullptr)},
              {"rounding", "thresholds rounded down, gap upper bound exact"}};
    emit_json(o, j);
    return v.verdict.accepted ? kOk : kReject;
}

int cmd_lattice_gap(const Options& o)
{
    LatticeUnit unit;
    if (!o.unit.empty()) {
        unit = unit_from_json(read_json_or_inline(o.unit));
    } else {
        try {
            unit = builtin_lattice(o.lattice.empty() ? "square" : o.lattice);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (o.pa.empty()) throw InputError("--pa is required");
    auto pa = load_rational("--pa", o.pa);
    auto r = lattice_gap_q(unit, pa);
    emit_json(o, {{"command", "lattice-gap"},
                  {"lattice", unit.name},
                  {"p_a", to_string(pa)},
                  {"q", r.q.mid_double()},
                  {"q_lower", r.q.lower_string()},
                  {"q_upper", r.q.upper_string()},
                  {"diameter", r.diameter},
                  {"max_degree", r.max_degree},
                  {"unit_vertices", r.unit_vertices},
                  {"vertex_count_used", "unit"},
                  {"digamma_lower", r.digamma.value.lower_string()},
                  {"digamma_upper", r.digamma.value.upper_string()},
                  {"rounding", "interval arithmetic, 256-bit directed rounding"}});
    return kOk;
}

int cmd_wdag_sum(const Options& o)
{
    auto g = load_graph(o);
    auto p = load_p(o.p);
    check_p(g, p);
    if (o.node_cap < 1 || o.node_cap > 12) throw InputError("--node-cap must lie in 1..12");
    const int cap = static_cast<int>(o.node_cap);
    auto w = weight_sums(g, p, cap);
    if (o.format == "csv") {
        std::ostringstream s;
        write_weight_csv(s, w);
        emit(o, s.str());
        return w.truncated ? kCap : kOk;
    }
    json rows = json::array();
    for (std::size_t n = 0; n < w.by_size.size(); ++n)
        rows.push_back({{"size", n + 1}, {"sum", to_string(w.by_size[n])}, {"cumulative", to_string(w.cumulative[n])}});
    json j = {{"command", "wdag-sum"}, {"graph", graph_to_json(g)}, {"p", probabilities_to_json(p)},
              {"node_cap", cap}, {"sums", rows}, {"truncated", w.truncated}};
    if (!o.matching.empty()) {
        Options oo = o;
        oo.p = o.p;
        std::optional<EventSystem> none;
        auto s = load_setting(oo, none);
        auto red = reduced_vectors(s);
        auto h = homomorphic_graph(g, s.m, p, red.pminus, red.pprime);
        auto en = enumerate_pwdags(g, cap);
        std::vector<Rational> tight(cap, Rational(0));
        for (const auto& d : en.dags) tight[d.size() - 1] += tighter_weight(d, p, red.pprime, s.m);
        auto wm = weight_sums(h.graph, h.p, cap);
        auto wminus = weight_sums(g, red.pminus, cap);
        json extra = json::array();
        for (int n = 0; n < cap; ++n)
            extra.push_back({{"size", n + 1},
                             {"tighter", to_string(tight[n])},
                             {"p_minus", to_string(wminus.by_size[n])},
                             {"homomorphic", to_string(wm.by_size[n])}});
        j["matched"] = extra;
    }
    emit_json(o, j);
    return w.truncated ? kCap : kOk;
}

int cmd_selftest(const Options& o)
{
    int first = 1, last = kAcceptanceCount;
    if (!o.only.empty()) {
        try {
            first = last = std::stoi(o.only);
        } catch (const std::exception&) {
            throw InputError("--only must be a criterion number");
        }
        if (first < 1 || first > kAcceptanceCount) throw InputError("--only must lie in 1..11");
    }
    std::ostringstream s;
    bool ok = true;
    for (int n = first; n <= last; ++n) {
        for (const auto& line : run_acceptance(n)) {
            s << format_line(line) << '\n';
            ok = ok && line.pass;
        }
        if (o.out.empty()) {
            std::cout << s.str();
            std::cout.flush();
            s.str("");
        }
    }
    if (!o.out.empty()) emit(o, s.str());
    return ok ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lovasz local lemma workbench"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto graph_p = [&](CLI::App* c) {
        c->add_option("--graph", o.graph, "dependency graph JSON file or inline JSON");
        c->add_option("--p", o.p, "probabilities: a,b,... or JSON array/file");
    };
    auto sys_opts = [&](CLI::App* c) {
        c->add_option("--system", o.system, "event system JSON file");
        c->add_option("--seed", o.seed, "master seed");
        c->add_option("--rule", o.rule, "selection rule: lowest, random, neighbor");
        c->add_option("--step-cap", o.step_cap, "resampling step cap per run")->check(CLI::PositiveNumber);
    };

    std::map<std::string, int (*)(const Options&)> handlers = {
        {"shearer-check", cmd_shearer_check}, {"boundary", cmd_boundary},   {"gap", cmd_gap},
        {"mt-run", cmd_mt_run},               {"mt-estimate", cmd_mt_estimate}, {"wdag-sum", cmd_wdag_sum},
        {"criterion", cmd_criterion},         {"beyond", cmd_beyond},       {"lattice-gap", cmd_lattice_gap},
        {"selftest", cmd_selftest}};

    auto* c = app.add_subcommand("shearer-check", "exact membership in Shearer's bound");
    graph_p(c), common(c);
    c->add_flag("--all", o.all_q, "report q_I for every independent set");

    c = app.add_subcommand("boundary", "bisect the boundary scale along a direction");
    graph_p(c), common(c);
    c->add_option("--resolution", o.resolution, "bracket width (rational)");

    c = app.add_subcommand("gap", "bounds on the L1 gap to Shearer's bound");
    graph_p(c), common(c);
    c->add_option("--resolution", o.resolution, "bracket width (rational)");
    c->add_option("--box-cap", o.box_cap, "branch-and-bound box budget")->check(CLI::PositiveNumber);

    c = app.add_subcommand("mt-run", "one Moser-Tardos run");
    sys_opts(c), common(c);
    c->add_flag("--wdag", o.with_wdag, "include the witness DAG of the run");

    c = app.add_subcommand("mt-estimate", "mean and standard error of T over seeded runs");
    sys_opts(c), common(c);
    c->add_option("--trials", o.trials, "number of runs")->check(CLI::PositiveNumber);

    c = app.add_subcommand("wdag-sum", "per-size weight sums over proper wdags");
    graph_p(c), common(c);
    c->add_option("--node-cap", o.node_cap, "largest pwdag size, 1..12");
    c->add_option("--matching", o.matching, "u-v,... or JSON");
    c->add_option("--delta", o.delta, "one value per matched pair");

    c = app.add_subcommand("criterion", "intersection LLL verdict");
    graph_p(c), common(c);
    c->add_option("--system", o.system, "measure p and delta from an event system");
    c->add_option("--matching", o.matching, "u-v,... or JSON (default: greedy on measured intersections)");
    c->add_option("--delta", o.delta, "one value per matched pair, or 'measure'");
    c->add_option("--eps", o.eps, "slack eps > 0 (rational)");

    c = app.add_subcommand("beyond", "verdict from disjoint chordless cycles and the L1 gap");
    graph_p(c), common(c);
    c->add_option("--eps", o.eps, "slack eps > 0 (rational)");
    c->add_option("--resolution", o.resolution, "bracket width (rational)");
    c->add_option("--box-cap", o.box_cap, "branch-and-bound box budget")->check(CLI::PositiveNumber);

    c = app.add_subcommand("lattice-gap", "gap q for a translational unit");
    common(c);
    c->add_option("--lattice", o.lattice, "square, hexagonal or cubic");
    c->add_option("--unit", o.unit, "custom unit JSON");
    c->add_option("--pa", o.pa, "boundary activity p_a");

    c = app.add_subcommand("selftest", "run the acceptance suite");
    common(c);
    c->add_option("--only", o.only, "run a single criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }
    try {
        for (auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(o);
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInput;
    } catch (const std::length_error& e) {
        std::fprintf(stderr, "cap exceeded: %s\n", e.what());
        return kCap;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kInput;
    }
    return kOk;
}
