#include "ftmd/json_io.hpp"

#include "ftmd/error.hpp"

namespace ftmd::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

template <typename T, typename Read>
T guarded(Read&& read) {
  try {
    return read();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

PieceSpec piece_from_json(const Json& j) {
  PieceSpec spec{graph_from_json(j), {}};
  if (j.contains("anchors")) {
    const Json& anchors = j.at("anchors");
    if (!anchors.is_object()) malformed("anchors must be an object");
    for (const auto& [key, name] : anchors.items()) {
      std::size_t used = 0;
      int local = 0;
      try {
        local = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) malformed("anchor key '" + key + "' is not a vertex");
      if (!name.is_string()) malformed("anchor names must be strings");
      spec.anchors.emplace(local, name.get<std::string>());
    }
  }
  return spec;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = integer(field(j, "n"), "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("edges must be an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair");
    list.emplace_back(integer(e[0], "edge endpoint"), integer(e[1], "edge endpoint"));
  }
  return Graph::build(n, list);
}

Json to_json(const Decomposition& dec) {
  Json pieces = Json::array();
  for (const auto& spec : dec.pieces()) {
    Json p = to_json(spec.graph);
    Json anchors = Json::object();
    for (const auto& [local, name] : spec.anchors) anchors[std::to_string(local)] = name;
    p["anchors"] = anchors;
    pieces.push_back(p);
  }
  return {{"pieces", pieces}};
}

Decomposition decomposition_from_json(const Json& j) {
  const Json& pieces = field(j, "pieces");
  if (!pieces.is_array()) malformed("pieces must be an array");
  std::vector<PieceSpec> specs;
  for (const auto& p : pieces) specs.push_back(piece_from_json(p));
  return Decomposition::point_attach(std::move(specs));
}

bool is_rooted_product(const Json& j) { return j.is_object() && j.contains("base"); }

Json to_json(const RootedProductSpec& spec) {
  Json out{{"base", to_json(spec.base)}};
  if (spec.is_uniform() && !spec.family.empty()) {
    out["family"] = {{"graph", to_json(spec.family.front().graph)},
                     {"root", spec.family.front().root},
                     {"copies", "per-base-vertex"}};
    return out;
  }
  Json family = Json::array();
  for (const auto& r : spec.family) {
    family.push_back({{"graph", to_json(r.graph)}, {"root", r.root}});
  }
  out["family"] = family;
  return out;
}

RootedProductSpec rooted_product_from_json(const Json& j) {
  Graph base = graph_from_json(field(j, "base"));
  const Json& family = field(j, "family");
  auto rooted = [](const Json& f) {
    return RootedGraph{graph_from_json(field(f, "graph")), integer(field(f, "root"), "root")};
  };
  if (family.is_object()) {
    const Json& copies = field(family, "copies");
    if (copies != "per-base-vertex") malformed("copies must be \"per-base-vertex\"");
    auto h = rooted(family);
    return RootedProductSpec::uniform(std::move(base), std::move(h.graph), h.root);
  }
  if (!family.is_array()) malformed("family must be an array or a copies object");
  RootedProductSpec spec{std::move(base), {}};
  for (const auto& f : family) spec.family.push_back(rooted(f));
  if (spec.family.size() != static_cast<std::size_t>(spec.base.order())) {
    malformed("family needs one rooted graph per base vertex");
  }
  return spec;
}

Json to_json(const FtReport& r) {
  Json out{{"value", r.value}, {"witness", r.witness}, {"method", r.method}};
  if (r.all_bases) out["all_bases"] = *r.all_bases;
  return out;
}

FtReport ft_report_from_json(const Json& j) {
  return guarded<FtReport>([&] {
    FtReport r;
    r.value = j.at("value").get<int>();
    r.witness = j.at("witness").get<VertexSet>();
    r.method = j.at("method").get<std::string>();
    if (j.contains("all_bases")) r.all_bases = j.at("all_bases").get<std::vector<VertexSet>>();
    return r;
  });
}

Json to_json(const TheoremResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.preconditions) {
    Json check{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.waived) check["waived"] = true;
    checks.push_back(check);
  }
  Json out{{"theorem", r.theorem},
           {"value", r.value ? Json(*r.value) : Json(nullptr)},
           {"preconditions", checks},
           {"components", r.components},
           {"notes", r.notes}};
  if (r.bounds) out["bounds"] = {r.bounds->first, r.bounds->second};
  if (r.witness) out["witness"] = *r.witness;
  if (r.witness_ft_resolving) out["witness_ft_resolving"] = *r.witness_ft_resolving;
  return out;
}

TheoremResult theorem_result_from_json(const Json& j) {
  return guarded<TheoremResult>([&] {
    TheoremResult r;
    r.theorem = j.at("theorem").get<std::string>();
    if (!j.at("value").is_null()) r.value = j.at("value").get<int>();
    for (const auto& c : j.at("preconditions")) {
      r.preconditions.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                                 c.at("detail").get<std::string>(), c.value("waived", false)});
    }
    r.components = j.at("components").get<std::vector<int>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("bounds")) {
      r.bounds = std::pair{j.at("bounds").at(0).get<int>(), j.at("bounds").at(1).get<int>()};
    }
    if (j.contains("witness")) r.witness = j.at("witness").get<VertexSet>();
    if (j.contains("witness_ft_resolving")) {
      r.witness_ft_resolving = j.at("witness_ft_resolving").get<bool>();
    }
    return r;
  });
}

Json to_json(const VerifyReport& r, bool timings) {
  Json out{{"theorem", to_json(r.theorem)},
           {"composite_order", r.composite_order},
           {"oracle", r.oracle},
           {"oracle_witness", r.oracle_witness},
           {"verdict", std::string(to_string(r.verdict))}};
  if (timings) out["timings_ms"] = {{"theorem", r.theorem_ms}, {"oracle", r.oracle_ms}};
  return out;
}

Json to_json(const BatchSummary& s, bool timings) {
  Json instances = Json::array();
  for (const auto& r : s.reports) instances.push_back(to_json(r, timings));
  return {{"seed", s.seed},
          {"count", s.reports.size()},
          {"agree", s.agree},
          {"mismatch", s.mismatch},
          {"precondition_failed", s.precondition_failed},
          {"instances", instances}};
}

}  // namespace ftmd::json_io
