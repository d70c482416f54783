#include "lll/io.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lll {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing key '") + key + "'");
    return *it;
}

int int_of(const json& j, const char* what)
{
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<int>();
}

std::vector<std::pair<int, int>> pairs_of(const json& j, const char* what)
{
    if (!j.is_array()) fail(std::string(what) + " must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) fail(std::string(what) + ": expected a pair, got " + e.dump());
        out.emplace_back(int_of(e[0], what), int_of(e[1], what));
    }
    return out;
}

// Domain errors from the constructors become input errors.
template <class F>
auto guarded(const char* what, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        fail(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path + ": " + e.what());
    }
}

json read_json_or_inline(const std::string& text)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return read_json_file(text);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail("inline JSON: " + std::string(e.what()));
    }
}

Rational rational_from_json(const json& j)
{
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        // Numbers go through their shortest decimal text so 0.1193 stays 1193/10000.
        if (j.is_number()) return parse_rational(j.dump());
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad rational ") + j.dump() + ": " + e.what());
    }
    fail("expected a rational (string or number), got " + j.dump());
}

json rational_to_json(const Rational& q) { return to_string(q); }

DependencyGraph graph_from_json(const json& j)
{
    int m = int_of(field(j, "m"), "m");
    auto edges = pairs_of(field(j, "edges"), "edges");
    return guarded("graph", [&] {
        if (m < 1) throw std::invalid_argument("m must be positive");
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.emplace_back(u, v);
        return DependencyGraph(m, es);
    });
}

json graph_to_json(const DependencyGraph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"m", g.size()}, {"edges", edges}};
}

BipartiteGraph bipartite_from_json(const json& j)
{
    int m = int_of(field(j, "events"), "events");
    int n = int_of(field(j, "vars"), "vars");
    auto edges = pairs_of(field(j, "edges"), "edges");
    return guarded("bipartite graph", [&] {
        if (m < 1 || n < 1) throw std::invalid_argument("events and vars must be positive");
        BipartiteGraph b(m, n, edges);
        for (int i = 1; i <= m; ++i)
            if (b.vbl(i).empty()) throw std::invalid_argument("event " + std::to_string(i) + " has no variable");
        return b;
    });
}

json bipartite_to_json(const BipartiteGraph& b)
{
    json edges = json::array();
    for (auto [i, v] : b.edges()) edges.push_back({i, v});
    return {{"events", b.events()}, {"vars", b.variables()}, {"edges", edges}};
}

ProbabilityVector probabilities_from_json(const json& j)
{
    const json& arr = j.is_object() ? field(j, "p") : j;
    if (!arr.is_array()) fail("probability vector must be an array");
    ProbabilityVector p;
    for (const auto& x : arr) p.push_back(rational_from_json(x));
    return p;
}

json probabilities_to_json(const ProbabilityVector& p)
{
    json out = json::array();
    for (const auto& x : p) out.push_back(rational_to_json(x));
    return out;
}

EventSystem system_from_json(const json& j)
{
    EventSystem sys;
    const json& vars = field(j, "variables");
    if (!vars.is_array() || vars.empty()) fail("variables must be a nonempty array");
    for (const auto& v : vars) {
        const json& kind = field(v, "kind");
        if (kind == "uniform01") {
            sys.add_variable(Distribution::uniform01());
        } else if (kind == "finite") {
            std::vector<Rational> masses;
            const json& ms = field(v, "masses");
            if (!ms.is_array()) fail("masses must be an array");
            for (const auto& m : ms) masses.push_back(rational_from_json(m));
            guarded("finite variable", [&] { return sys.add_variable(Distribution::finite(masses)); });
        } else {
            fail("unknown variable kind " + kind.dump());
        }
    }
    const json& events = field(j, "events");
    if (!events.is_array() || events.empty()) fail("events must be a nonempty array");
    for (const auto& e : events) {
        if (e.contains("constraints")) {
            std::vector<std::pair<int, AllowedSet>> cons;
            for (const auto& c : field(e, "constraints")) {
                int var = int_of(field(c, "var"), "var");
                if (c.contains("intervals")) {
                    std::vector<std::pair<Rational, Rational>> parts;
                    for (const auto& iv : c["intervals"]) {
                        if (!iv.is_array() || iv.size() != 2) fail("interval must be a pair, got " + iv.dump());
                        Rational a = rational_from_json(iv[0]), b = rational_from_json(iv[1]);
                        if (a < 0 || a > b || b > 1) fail("interval " + iv.dump() + " is not within [0,1] with a <= b");
                        parts.emplace_back(a, b);
                    }
                    cons.emplace_back(var, guarded("interval", [&] { return AllowedSet::union_of(parts); }));
                } else {
                    std::vector<int> vals;
                    for (const auto& x : field(c, "values")) vals.push_back(int_of(x, "value"));
                    cons.emplace_back(var, AllowedSet::of_values(vals));
                }
            }
            guarded("event", [&] { return sys.add_box_event(cons); });
        } else {
            std::vector<int> vbl;
            for (const auto& x : field(e, "vbl")) vbl.push_back(int_of(x, "vbl"));
            std::vector<std::vector<int>> tuples;
            for (const auto& t : field(e, "tuples")) {
                std::vector<int> row;
                for (const auto& x : t) row.push_back(int_of(x, "tuple entry"));
                tuples.push_back(row);
            }
            guarded("event", [&] { return sys.add_table_event(vbl, tuples); });
        }
    }
    return sys;
}

json system_to_json(const EventSystem& sys)
{
    json vars = json::array();
    for (int j = 1; j <= sys.variable_count(); ++j) {
        const auto& d = sys.variable(j);
        if (d.kind == Distribution::Kind::Uniform01) {
            vars.push_back({{"kind", "uniform01"}});
        } else {
            vars.push_back({{"kind", "finite"}, {"masses", probabilities_to_json(d.masses)}});
        }
    }
    json events = json::array();
    for (int i = 1; i <= sys.event_count(); ++i) {
        const auto& e = sys.event(i);
        if (e.box) {
            json cons = json::array();
            for (std::size_t k = 0; k < e.vbl.size(); ++k) {
                const auto& s = (*e.box)[k];
                json c = {{"var", e.vbl[k]}};
                if (sys.variable(e.vbl[k]).kind == Distribution::Kind::Uniform01) {
                    json ivs = json::array();
                    for (const auto& [a, b] : s.intervals) ivs.push_back({to_string(a), to_string(b)});
                    c["intervals"] = ivs;
                } else {
                    c["values"] = s.values;
                }
                cons.push_back(c);
            }
            events.push_back({{"constraints", cons}});
        } else if (e.table) {
            events.push_back({{"vbl", e.vbl}, {"tuples", *e.table}});
        } else {
            throw std::invalid_argument("event " + std::to_string(i) + " has no serialisable form");
        }
    }
    return {{"variables", vars}, {"events", events}};
}

WDag wdag_from_json(const json& j)
{
    std::vector<int> labels;
    for (const auto& x : field(j, "labels")) labels.push_back(int_of(x, "label"));
    auto arcs = pairs_of(field(j, "arcs"), "arcs");
    return guarded("wdag", [&] {
        WDag d = WDag::from_arcs(labels, arcs);
        topological_order(d);
        return d;
    });
}

json wdag_to_json(const WDag& d)
{
    json arcs = json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"labels", d.labels}, {"arcs", arcs}};
}

Matching matching_from_json(const DependencyGraph& g, const json& j)
{
    auto pairs = pairs_of(j.is_object() ? field(j, "pairs") : j, "matching");
    return guarded("matching", [&] {
        std::vector<Edge> es(pairs.begin(), pairs.end());
        return Matching(g, es);
    });
}

Matching parse_matching(const DependencyGraph& g, const std::string& text)
{
    std::error_code ec;
    if (text.empty()) return Matching(g, {});
    if (std::filesystem::is_regular_file(text, ec) || text.front() == '[' || text.front() == '{')
        return matching_from_json(g, read_json_or_inline(text));
    std::vector<Edge> es;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) fail("matching pair '" + item + "' is not of the form u-v");
        try {
            es.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            fail("matching pair '" + item + "' is not of the form u-v");
        }
    }
    return guarded("matching", [&] { return Matching(g, es); });
}

json matching_to_json(const Matching& m)
{
    json out = json::array();
    for (auto [u, v] : m.pairs()) out.push_back({u, v});
    return out;
}

LatticeUnit unit_from_json(const json& j)
{
    LatticeUnit u;
    u.name = j.value("name", std::string("custom"));
    u.graph = graph_from_json(field(j, "graph"));
    auto points = [&](const char* key) {
        std::vector<Point> out;
        for (const auto& p : field(j, key)) {
            Point pt;
            for (const auto& x : p) pt.push_back(int_of(x, key));
            out.push_back(pt);
        }
        return out;
    };
    u.position = points("positions");
    u.shifts = points("shifts");
    if (static_cast<int>(u.position.size()) != u.graph.size()) fail("unit needs one position per vertex");
    u.class_modulus = j.contains("class_modulus") ? int_of(j["class_modulus"], "class_modulus") : 1;
    u.lattice_degree = j.contains("lattice_degree") ? int_of(j["lattice_degree"], "lattice_degree") : 0;
    if (u.class_modulus < 1) fail("class_modulus must be positive");
    return u;
}

json run_stats_to_json(const EventSystem& sys, const RunStats& st)
{
    json values = json::array();
    for (std::size_t j = 0; j < st.final_assignment.size(); ++j) {
        const Value u = st.final_assignment[j];
        if (sys.variable(static_cast<int>(j) + 1).kind == Distribution::Kind::Finite) {
            values.push_back(u);
        } else {
            Rational r(mpz_class(std::to_string(u), 10));
            r /= Rational(mpz_class(1) << 64);
            r.canonicalize();
            values.push_back(to_string(r));
        }
    }
    json counts = json::object();
    for (std::size_t i = 0; i < st.per_event_counts.size(); ++i)
        counts[std::to_string(i + 1)] = st.per_event_counts[i];
    return {{"seed", st.seed},
            {"T", st.T},
            {"truncated", st.truncated},
            {"sequence", st.sequence},
            {"final_assignment", values},
            {"per_event_counts", counts}};
}

void write_batch_csv(std::ostream& out, const BatchResult& r)
{
    out << "seed,T,truncated\n";
    for (const auto& run : r.runs) out << run.seed << ',' << run.T << ',' << (run.truncated ? 1 : 0) << '\n';
}

void write_weight_csv(std::ostream& out, const WeightSums& w)
{
    out << "size,sum,cumulative\n";
    for (std::size_t n = 0; n < w.by_size.size(); ++n)
        out << n + 1 << ',' << to_string(w.by_size[n]) << ',' << to_string(w.cumulative[n]) << '\n';
}

}  // namespace lll
