#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ftmd/attach.hpp"
#include "ftmd/error.hpp"
#include "ftmd/families.hpp"
#include "ftmd/json_io.hpp"
#include "ftmd/kernels.hpp"
#include "ftmd/resolve.hpp"
#include "ftmd/verify.hpp"

namespace ftmd::cli {

namespace {

using json_io::Json;
using Clock = std::chrono::steady_clock;

constexpr int kDefaultOracleCap = 16;

struct Config {
  std::string input = "-";
  std::string format = "edgelist";
  std::string output = "human";
  std::string at;
  std::string theorem;
  std::string invariant;
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 0;
  int count = 0;
  int max_order = 16;
  int oracle_cap = kDefaultOracleCap;
  bool relaxed_cor3 = false;
  bool timings = false;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded: return kCapExceeded;
    case ErrorCode::PreconditionFailed: return kPreconditionFailed;
    default: return kMalformed;
  }
}

OracleCaps caps_for(const Config& c) {
  return {c.oracle_cap, std::clamp(c.oracle_cap - 2, 2, kernels::kMaxLatticeOrder)};
}

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const Config& c) {
  const auto text = read_text(c.input);
  if (c.format == "json") return json_io::graph_from_json(json_io::parse(text));
  std::istringstream in(text);
  return read_edge_list(in);
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::IllegalParameter, "bad vertex '" + item + "' in --at");
    }
    out.push_back(v);
  }
  return out;
}

std::string render_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

std::string render_list(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

int cmd_compute(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const auto caps = caps_for(c);
  const bool needs_at = c.invariant == "fdim-star" || c.invariant == "theta";
  if (needs_at && c.at.empty()) {
    throw Error(ErrorCode::IllegalParameter, c.invariant + " needs --at");
  }
  const VertexSet at = needs_at ? parse_vertex_list(c.at) : VertexSet{};

  const auto start = Clock::now();
  FtReport report;
  if (c.invariant == "mdim") {
    require_order_within(g.order(), caps.search, "mdim");
    report = metric_dimension(g);
  } else if (c.invariant == "fdim") {
    require_order_within(g.order(), caps.search, "fdim");
    report = fdim(g);
  } else if (c.invariant == "fdim-plus") {
    report = fdim_plus(g, caps);
  } else if (c.invariant == "fdim-star") {
    report = fdim_star(g, at, caps);
  } else {
    report.value = theta(g, at, caps);
  }
  const double elapsed = ms_since(start);

  if (c.output == "json") {
    Json j = json_io::to_json(report);
    j["invariant"] = c.invariant;
    j["order"] = g.order();
    if (needs_at) j["at"] = at;
    if (c.timings) j["timings_ms"] = {{"total", elapsed}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "invariant", c.invariant);
  row(out, "order", std::to_string(g.order()));
  if (needs_at) row(out, "at", render_set(at));
  row(out, "value", std::to_string(report.value));
  if (c.invariant != "theta") row(out, "witness", render_set(report.witness));
  if (c.timings) row(out, "time (ms)", std::to_string(elapsed));
  return kOk;
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions o;
  o.caps = caps_for(c);
  o.oracle_cap = c.oracle_cap;
  o.relaxed_cor3 = c.relaxed_cor3;
  return o;
}

void render_result(std::ostream& out, const TheoremResult& r) {
  row(out, "theorem", r.theorem);
  if (r.bounds) {
    row(out, "bounds", "[" + std::to_string(r.bounds->first) + ", " +
                           std::to_string(r.bounds->second) + "]");
  } else {
    row(out, "value", r.value ? std::to_string(*r.value) : "-");
  }
  if (!r.components.empty()) row(out, "components", render_list(r.components));
  if (r.witness) {
    row(out, "witness", render_set(*r.witness));
    if (r.witness_ft_resolving) {
      row(out, "witness ok", *r.witness_ft_resolving ? "yes" : "no");
    }
  }
  for (const auto& check : r.preconditions) {
    const char* status = check.passed ? "PASS" : check.waived ? "WAIVED" : "FAIL";
    out << "  [" << status << "] " << check.name;
    if (!check.detail.empty()) out << "  (" << check.detail << ")";
    out << '\n';
  }
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
}

int cmd_compose(const Config& c, std::ostream& out) {
  const Json doc = json_io::parse(read_text(c.input));
  const auto tag = parse_theorem_tag(c.theorem);
  const auto options = verify_options(c);
  const auto start = Clock::now();
  const TheoremResult r = json_io::is_rooted_product(doc)
                              ? apply_theorem(json_io::rooted_product_from_json(doc), tag, options)
                              : apply_theorem(json_io::decomposition_from_json(doc), tag, options);
  const double elapsed = ms_since(start);
  if (c.output == "json") {
    Json j = json_io::to_json(r);
    if (c.timings) j["timings_ms"] = {{"total", elapsed}};
    out << j.dump(2) << '\n';
  } else {
    render_result(out, r);
    if (c.timings) row(out, "time (ms)", std::to_string(elapsed));
  }
  return r.preconditions_hold() ? kOk : kPreconditionFailed;
}

std::string theorem_cell(const TheoremResult& r) {
  if (r.bounds) return "[" + std::to_string(r.bounds->first) + "," +
                       std::to_string(r.bounds->second) + "]";
  return r.value ? std::to_string(*r.value) : "-";
}

void render_reports(std::ostream& out, const std::vector<VerifyReport>& reports, bool timings) {
  out << std::left << std::setw(6) << "#" << std::setw(8) << "order" << std::setw(10)
      << "theorem" << std::setw(8) << "oracle" << "verdict";
  if (timings) out << "  theorem_ms  oracle_ms";
  out << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << std::left << std::setw(6) << i << std::setw(8) << r.composite_order << std::setw(10)
        << theorem_cell(r.theorem) << std::setw(8) << r.oracle << to_string(r.verdict);
    if (timings) out << "  " << r.theorem_ms << "  " << r.oracle_ms;
    out << '\n';
  }
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto tag = parse_theorem_tag(c.theorem);
  const auto options = verify_options(c);
  if (c.count > 0) {
    const auto summary = verify_batch(tag, c.seed, c.count, options, c.max_order);
    if (c.output == "json") {
      out << json_io::to_json(summary, c.timings).dump(2) << '\n';
    } else {
      render_reports(out, summary.reports, c.timings);
      out << "seed " << summary.seed << ": " << summary.agree << " agree, " << summary.mismatch
          << " mismatch, " << summary.precondition_failed << " precondition-failed\n";
    }
    return summary.mismatch > 0 ? kMismatch : kOk;
  }
  const Json doc = json_io::parse(read_text(c.input));
  const VerifyReport report =
      json_io::is_rooted_product(doc)
          ? verify(json_io::rooted_product_from_json(doc), tag, options)
          : verify(json_io::decomposition_from_json(doc), tag, options);
  if (c.output == "json") {
    out << json_io::to_json(report, c.timings).dump(2) << '\n';
  } else {
    render_result(out, report.theorem);
    row(out, "oracle", std::to_string(report.oracle));
    row(out, "oracle basis", render_set(report.oracle_witness));
    row(out, "verdict", std::string(to_string(report.verdict)));
  }
  switch (report.verdict) {
    case Verdict::Agree: return kOk;
    case Verdict::Mismatch: return kMismatch;
    case Verdict::PreconditionFailed: return kPreconditionFailed;
  }
  return kOk;
}

int cmd_generate(const Config& c, std::ostream& out) {
  auto generated = families::generate(c.family, c.params);
  if (auto* g = std::get_if<Graph>(&generated)) {
    if (c.format == "json") {
      out << json_io::to_json(*g).dump(2) << '\n';
    } else {
      out << write_edge_list(*g);
    }
  } else {
    out << json_io::to_json(std::get<Decomposition>(generated)).dump(2) << '\n';
  }
  return kOk;
}

int default_oracle_cap() {
  const char* env = std::getenv("FTMD_ORACLE_CAP");
  if (!env || !*env) return kDefaultOracleCap;
  std::size_t used = 0;
  int cap = 0;
  try {
    cap = std::stoi(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || cap < 2) {
    throw Error(ErrorCode::IllegalParameter,
                std::string("FTMD_ORACLE_CAP must be an integer >= 2, got '") + env + "'");
  }
  return cap;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  try {
    c.oracle_cap = default_oracle_cap();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }

  CLI::App app{"Exact fault-tolerant metric dimension solver"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"edgelist", "json"});
  const auto outputs = CLI::IsMember({"human", "json"});
  const auto theorems = CLI::IsMember({"prop1", "thm2", "cor3", "blocks", "cor5", "prop7", "prop9"});

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "Input file, - for stdin");
    sub->add_option("--oracle-cap", c.oracle_cap, "Largest order handed to exhaustive search")
        ->check(CLI::Range(2, 64));
    sub->add_option("--output", c.output, "human or json")->check(outputs);
    sub->add_flag("--timings", c.timings, "Include wall-clock timings");
  };

  auto* compute = app.add_subcommand("compute", "Compute one invariant of a graph");
  compute->add_option("invariant", c.invariant)
      ->required()
      ->check(CLI::IsMember({"mdim", "fdim", "fdim-plus", "fdim-star", "theta"}));
  add_common(compute);
  compute->add_option("--format", c.format, "edgelist or json")->check(formats);
  compute->add_option("--at", c.at, "Anchor vertices, comma separated");

  auto* compose = app.add_subcommand("compose", "Apply a closed-form result to a composite");
  add_common(compose);
  compose->add_option("--theorem", c.theorem)->required()->check(theorems);
  compose->add_flag("--relaxed-cor3", c.relaxed_cor3, "Waive the cor3 per-piece hypotheses");

  auto* verify_cmd = app.add_subcommand("verify", "Check a closed-form result against the oracle");
  add_common(verify_cmd);
  verify_cmd->add_option("--theorem", c.theorem)->required()->check(theorems);
  verify_cmd->add_flag("--relaxed-cor3", c.relaxed_cor3, "Waive the cor3 per-piece hypotheses");
  verify_cmd->add_option("--seed", c.seed, "Batch seed");
  verify_cmd->add_option("--count", c.count, "Batch size; samples instead of reading --input")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-order", c.max_order, "Largest sampled composite")
      ->check(CLI::Range(2, 64));

  auto* generate = app.add_subcommand("generate", "Emit a named graph family");
  generate->add_option("family", c.family)->required();
  generate->add_option("params", c.params);
  generate->add_option("--format", c.format, "edgelist or json")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (compute->parsed()) return cmd_compute(c, out);
    if (compose->parsed()) return cmd_compose(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    return cmd_generate(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
}

}  // namespace ftmd::cli
