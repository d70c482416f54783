#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lll/criterion.hpp"
#include "lll/io.hpp"

using namespace lll;

namespace {

std::string temp_file(const std::string& name, const std::string& text)
{
    std::string path = "/tmp/lll_io_test_" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational(" 1 / 4 ") == Rational(1, 4));
    CHECK(parse_rational("0.1193") == Rational(1193, 10000));
    CHECK(parse_rational("0.5") == Rational(1, 2));
    CHECK(parse_rational(".25") == Rational(1, 4));
    CHECK(parse_rational("2.") == 2);
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(parse_rational("-0.75") == Rational(-3, 4));
    CHECK(parse_rational("+7") == 7);
    // Results are canonical, so equal values print alike.
    CHECK(to_string(parse_rational("10/20")) == "1/2");
    CHECK(to_string(parse_rational("0.50")) == "1/2");
    for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.2.3", "1e", "e5", "--1", "1/-2", "0x10", "."})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    CHECK(parse_rational_list("1/4, 0.5,1") == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1)});
    CHECK_THROWS(parse_rational_list(""));
    CHECK(ratio(6, -4) == Rational(-3, 2));
    CHECK(ratio(6, 4).get_den() == 2);
    CHECK_THROWS(ratio(1, 0));
}

TEST_CASE("rationals in JSON")
{
    CHECK(rational_from_json(json("1/3")) == Rational(1, 3));
    CHECK(rational_from_json(json::parse("0.1193")) == Rational(1193, 10000));
    CHECK(rational_from_json(json(2)) == 2);
    CHECK(rational_to_json(ratio(2, 6) * 3) == json("1"));
    CHECK(rational_to_json(Rational(3, 8)) == json("3/8"));
    CHECK_THROWS_AS(rational_from_json(json::array()), InputError);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), InputError);
}

TEST_CASE("graph round trip")
{
    auto g = graph_from_json(json::parse(R"({"m":4,"edges":[[1,2],[2,3],[3,4],[4,1]]})"));
    CHECK(g == cycle_graph(4));
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(graph_to_json(path_graph(3)) == json::parse(R"({"m":3,"edges":[[1,2],[2,3]]})"));
    CHECK(graph_from_json(json::parse(R"({"m":2,"edges":[]})")).edges().empty());
    for (const char* bad : {R"({"edges":[]})", R"({"m":0,"edges":[]})", R"({"m":2,"edges":[[1,3]]})",
                            R"({"m":2,"edges":[[1,1]]})", R"({"m":2,"edges":[[1]]})", R"({"m":"2","edges":[]})",
                            R"([1,2])"})
        CHECK_THROWS_AS(graph_from_json(json::parse(bad)), InputError);
}

TEST_CASE("bipartite round trip")
{
    auto b = bipartite_from_json(json::parse(R"({"events":2,"vars":3,"edges":[[1,1],[1,2],[2,2],[2,3]]})"));
    CHECK(b.events() == 2);
    CHECK(b.variables() == 3);
    CHECK(b.vbl(1) == std::vector<int>{1, 2});
    CHECK(bipartite_from_json(bipartite_to_json(b)) == b);
    auto c = edge_variable_graph(cycle_graph(4));
    CHECK(bipartite_from_json(bipartite_to_json(c)) == c);
    // Every event needs at least one variable.
    CHECK_THROWS_AS(bipartite_from_json(json::parse(R"({"events":2,"vars":1,"edges":[[1,1]]})")), InputError);
    CHECK_THROWS_AS(bipartite_from_json(json::parse(R"({"events":1,"vars":1,"edges":[[1,2]]})")), InputError);
}

TEST_CASE("probability vectors")
{
    auto p = probabilities_from_json(json::parse(R"(["1/4", 0.5, 1])"));
    CHECK(p == ProbabilityVector{Rational(1, 4), Rational(1, 2), Rational(1)});
    CHECK(probabilities_from_json(json::parse(R"({"p":["1/3"]})")) == ProbabilityVector{Rational(1, 3)});
    CHECK(probabilities_to_json(p) == json::parse(R"(["1/4","1/2","1"])"));
    CHECK(probabilities_from_json(probabilities_to_json(p)) == p);
    CHECK_THROWS_AS(probabilities_from_json(json::parse(R"("1/4")")), InputError);
    CHECK_THROWS_AS(probabilities_from_json(json::parse(R"([true])")), InputError);
}

TEST_CASE("event system round trip")
{
    const char* text = R"({
      "variables":[{"kind":"uniform01"},{"kind":"finite","masses":["1/3","2/3"]}],
      "events":[{"constraints":[{"var":1,"intervals":[[0,"1/4"],["1/2","3/4"]]},{"var":2,"values":[1]}]},
                {"vbl":[2],"tuples":[[0]]}]})";
    auto sys = system_from_json(json::parse(text));
    CHECK(sys.variable_count() == 2);
    CHECK(sys.event_count() == 2);
    CHECK(sys.probability(1) == Rational(1, 2) * Rational(2, 3));
    CHECK(sys.probability(2) == Rational(1, 3));
    CHECK(sys.intersection_probability(1, 2) == 0);
    auto same = system_from_json(json::parse(R"({
      "variables":[{"kind":"uniform01"},{"kind":"finite","masses":["1/3","2/3"]}],
      "events":[{"constraints":[{"var":1,"intervals":[[0,"1/4"]]},{"var":2,"values":[1]}]},{"vbl":[2],"tuples":[[1]]}]})"));
    CHECK(same.intersection_probability(1, 2) == Rational(1, 6));
    CHECK(same.intersection_probability(2, 1) == Rational(1, 6));
    auto again = system_from_json(system_to_json(sys));
    CHECK(system_to_json(again) == system_to_json(sys));
    CHECK(again.probability(1) == sys.probability(1));
    CHECK(again.bipartite() == sys.bipartite());

    const char* bads[] = {
        R"({"variables":[],"events":[{"vbl":[1],"tuples":[[0]]}]})",
        R"({"variables":[{"kind":"normal"}],"events":[{"vbl":[1],"tuples":[[0]]}]})",
        R"({"variables":[{"kind":"finite","masses":["1/2","1/3"]}],"events":[{"vbl":[1],"tuples":[[0]]}]})",
        R"({"variables":[{"kind":"uniform01"}],"events":[{"constraints":[{"var":2,"intervals":[[0,1]]}]}]})",
        R"({"variables":[{"kind":"uniform01"}],"events":[{"constraints":[{"var":1,"intervals":[[1,0]]}]}]})",
        R"({"variables":[{"kind":"uniform01"}],"events":[{"constraints":[{"var":1,"intervals":[[0]]}]}]})",
        R"({"variables":[{"kind":"finite","masses":[1]}],"events":[{"vbl":[1],"tuples":[[3]]}]})",
        R"({"variables":[{"kind":"uniform01"}],"events":[]})",
        R"({"variables":[{"kind":"uniform01"}]})",
    };
    for (const char* bad : bads) {
        INFO(std::string(bad));
        CHECK_THROWS_AS(system_from_json(json::parse(bad)), InputError);
    }
}

TEST_CASE("wdag round trip")
{
    auto d = wdag_from_json(json::parse(R"({"labels":[1,2,1],"arcs":[[0,1],[1,2],[0,2]]})"));
    CHECK(d.labels == std::vector<int>{1, 2, 1});
    CHECK(wdag_from_json(wdag_to_json(d)).arcs() == d.arcs());
    CHECK_THROWS_AS(wdag_from_json(json::parse(R"({"labels":[1,2],"arcs":[[0,1],[1,0]]})")), InputError);
    CHECK_THROWS_AS(wdag_from_json(json::parse(R"({"labels":[1,2],"arcs":[[0,2]]})")), InputError);
    CHECK_THROWS_AS(wdag_from_json(json::parse(R"({"arcs":[]})")), InputError);
}

TEST_CASE("matching input")
{
    auto g = cycle_graph(4);
    CHECK(parse_matching(g, "1-2,3-4").pairs() == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(parse_matching(g, "2-1").pairs() == std::vector<Edge>{{1, 2}});
    CHECK(parse_matching(g, "[[4,1]]").pairs() == std::vector<Edge>{{1, 4}});
    CHECK(parse_matching(g, R"({"pairs":[[2,3]]})").pairs() == std::vector<Edge>{{2, 3}});
    CHECK(parse_matching(g, "").pairs().empty());
    auto m = parse_matching(g, "1-2,3-4");
    CHECK(matching_from_json(g, matching_to_json(m)).pairs() == m.pairs());
    CHECK(matching_to_json(m) == json::parse("[[1,2],[3,4]]"));
    CHECK_THROWS_AS(parse_matching(g, "1-3"), InputError);
    CHECK_THROWS_AS(parse_matching(g, "1-2,2-3"), InputError);
    CHECK_THROWS_AS(parse_matching(g, "12"), InputError);
    CHECK_THROWS_AS(parse_matching(g, "a-b"), InputError);
}

TEST_CASE("lattice unit input")
{
    auto u = unit_from_json(json::parse(R"({"name":"strip","graph":{"m":3,"edges":[[1,2],[2,3]]},
        "positions":[[0],[1],[2]],"shifts":[[3]]})"));
    CHECK(u.name == "strip");
    CHECK(u.graph == path_graph(3));
    CHECK(u.class_modulus == 1);
    CHECK(u.shifts == std::vector<Point>{{3}});
    CHECK(lattice_max_degree(u) == 2);
    CHECK_THROWS_AS(unit_from_json(json::parse(R"({"graph":{"m":2,"edges":[[1,2]]},"positions":[[0]],"shifts":[[2]]})")),
                    InputError);
    CHECK_THROWS_AS(unit_from_json(json::parse(
                        R"({"graph":{"m":1,"edges":[]},"positions":[[0]],"shifts":[[1]],"class_modulus":0})")),
                    InputError);
}

TEST_CASE("reading files")
{
    auto ok = temp_file("ok.json", R"({"m":2,"edges":[[1,2]]})");
    CHECK(graph_from_json(read_json_file(ok)) == path_graph(2));
    CHECK(graph_from_json(read_json_or_inline(ok)) == path_graph(2));
    CHECK(graph_from_json(read_json_or_inline(R"({"m":1,"edges":[]})")).size() == 1);

    auto bad = temp_file("bad.json", "{\n  \"m\": 2,\n  \"edges\": [[1,2]\n}\n");
    try {
        read_json_file(bad);
        FAIL("malformed file was accepted");
    } catch (const InputError& e) {
        std::string what = e.what();
        CHECK(what.find(bad) != std::string::npos);
        CHECK(what.find("line 4") != std::string::npos);
        CHECK(what.find("column") != std::string::npos);
    }
    CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), InputError);
    CHECK_THROWS_AS(read_json_or_inline("{not json"), InputError);
    std::remove(ok.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("CSV writers")
{
    BatchResult r;
    r.runs = {{11, 3, false}, {12, 1000, true}};
    std::ostringstream out;
    write_batch_csv(out, r);
    CHECK(out.str() == "seed,T,truncated\n11,3,0\n12,1000,1\n");

    WeightSums w;
    w.by_size = {Rational(1, 2), Rational(1, 4)};
    w.cumulative = {Rational(1, 2), Rational(3, 4)};
    std::ostringstream wout;
    write_weight_csv(wout, w);
    CHECK(wout.str() == "size,sum,cumulative\n1,1/2,1/2\n2,1/4,3/4\n");
}

TEST_CASE("run stats report exact sample values")
{
    EventSystem sys;
    sys.add_variable(Distribution::uniform01());
    sys.add_variable(Distribution::finite({Rational(1, 2), Rational(1, 2)}));
    sys.add_box_event({{1, AllowedSet::interval(0, Rational(1, 2))}});
    RunStats st;
    st.seed = 5;
    st.sequence = {1, 1};
    st.T = 2;
    st.final_assignment = {Value(1) << 62, 1};
    st.per_event_counts = {2};
    auto j = run_stats_to_json(sys, st);
    CHECK(j["final_assignment"] == json::parse(R"(["1/4", 1])"));
    CHECK(j["T"] == 2);
    CHECK(j["seed"] == 5);
    CHECK(j["truncated"] == false);
    CHECK(j["sequence"] == json::parse("[1,1]"));
    CHECK(j["per_event_counts"] == json::parse(R"({"1":2})"));

    st.final_assignment = {3, 0};
    CHECK(run_stats_to_json(sys, st)["final_assignment"][0] == "3/18446744073709551616");
}
