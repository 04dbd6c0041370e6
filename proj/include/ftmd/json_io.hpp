#pragma once

#include <json.hpp>

#include "ftmd/compose.hpp"
#include "ftmd/decomposition.hpp"
#include "ftmd/graph.hpp"
#include "ftmd/resolve.hpp"
#include "ftmd/verify.hpp"

// JSON wire formats. Readers throw Error(MalformedInput) on shape or type
// problems and the usual construction errors on semantic ones.
//
//   graph          {"n": int, "edges": [[u, v], ...]}
//   decomposition  {"pieces": [{"n", "edges", "anchors": {"<local>": "<name>"}}, ...]}
//   rooted product {"base": graph,
//                   "family": [{"graph": graph, "root": int}, ...]
//                           | {"graph": graph, "root": int, "copies": "per-base-vertex"}}

namespace ftmd::json_io {

using Json = nlohmann::json;

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const Json& j);

/// Uniform families are written in the compact "copies" form.
Json to_json(const RootedProductSpec& spec);
RootedProductSpec rooted_product_from_json(const Json& j);
/// True when j looks like a rooted-product document (has "base").
bool is_rooted_product(const Json& j);

Json to_json(const FtReport& r);
FtReport ft_report_from_json(const Json& j);

Json to_json(const TheoremResult& r);
TheoremResult theorem_result_from_json(const Json& j);

/// Timings are left out unless asked for, keeping output byte-stable.
Json to_json(const VerifyReport& r, bool timings = false);
Json to_json(const BatchSummary& s, bool timings = false);

/// Parses text, mapping parse errors to MalformedInput.
Json parse(const std::string& text);

}  // namespace ftmd::json_io
