#ifndef LLL_IO_HPP
#define LLL_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lll/events.hpp"
#include "lll/graphs.hpp"
#include "lll/homomorphic.hpp"
#include "lll/lattice.hpp"
#include "lll/mt_engine.hpp"
#include "lll/shearer.hpp"
#include "lll/wdag.hpp"

namespace lll {

using json = nlohmann::json;

// Malformed or inconsistent input; the message names the file and, for syntax errors, the location.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path);
// Inline text is used as-is unless it names an existing file, which is then read as JSON.
json read_json_or_inline(const std::string& text);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& q);

DependencyGraph graph_from_json(const json& j);
json graph_to_json(const DependencyGraph& g);

BipartiteGraph bipartite_from_json(const json& j);
json bipartite_to_json(const BipartiteGraph& b);

ProbabilityVector probabilities_from_json(const json& j);
json probabilities_to_json(const ProbabilityVector& p);

// {"variables":[{"kind":"uniform01"} | {"kind":"finite","masses":[...]}],
//  "events":[{"constraints":[{"var":j,"intervals":[[a,b],...]} | {"var":j,"values":[...]}]}
//           | {"vbl":[...],"tuples":[[...],...]}]}
EventSystem system_from_json(const json& j);
json system_to_json(const EventSystem& sys);

WDag wdag_from_json(const json& j);
json wdag_to_json(const WDag& d);

// [[u,v],...] or {"pairs":[[u,v],...]}; inline text "u-v,u-v" is also accepted by the CLI.
Matching matching_from_json(const DependencyGraph& g, const json& j);
Matching parse_matching(const DependencyGraph& g, const std::string& text);
json matching_to_json(const Matching& m);

// {"name":..., "graph":{...}, "positions":[[...],...], "shifts":[[...],...], "class_modulus":k}
LatticeUnit unit_from_json(const json& j);

// Final values: uniform samples as exact dyadic rationals, finite ones as indices.
json run_stats_to_json(const EventSystem& sys, const RunStats& st);
void write_batch_csv(std::ostream& out, const BatchResult& r);
void write_weight_csv(std::ostream& out, const WeightSums& w);

}  // namespace lll

#endif
