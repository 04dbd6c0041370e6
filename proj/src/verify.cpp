#include "ftmd/verify.hpp"

#include <chrono>
#include <exception>

#include "ftmd/error.hpp"
#include "ftmd/graph.hpp"
#include "ftmd/resolve.hpp"
#include "ftmd/sampler.hpp"

namespace ftmd {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Verdict judge(TheoremTag tag, const TheoremResult& t, int oracle) {
  if (!t.preconditions_hold()) return Verdict::PreconditionFailed;
  if (t.witness_ft_resolving && !*t.witness_ft_resolving) return Verdict::Mismatch;
  switch (tag) {
    case TheoremTag::Prop1:
      return oracle >= *t.value ? Verdict::Agree : Verdict::Mismatch;
    case TheoremTag::Prop9:
      return (oracle >= t.bounds->first && oracle <= t.bounds->second) ? Verdict::Agree
                                                                       : Verdict::Mismatch;
    default:
      return oracle == *t.value ? Verdict::Agree : Verdict::Mismatch;
  }
}

template <typename ComputeTheorem>
VerifyReport run(const Graph& composite, TheoremTag tag, const VerifyOptions& options,
                 ComputeTheorem&& compute) {
  require_order_within(composite.order(), options.oracle_cap, "verify composite");
  VerifyReport report;
  report.composite_order = composite.order();

  auto start = Clock::now();
  report.theorem = compute();
  report.theorem_ms = elapsed_ms(start);

  start = Clock::now();
  auto oracle = fdim(composite);
  report.oracle_ms = elapsed_ms(start);
  report.oracle = oracle.value;
  report.oracle_witness = std::move(oracle.witness);

  report.verdict = judge(tag, report.theorem, report.oracle);
  return report;
}

}  // namespace

std::string_view to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::Prop1: return "prop1";
    case TheoremTag::Thm2: return "thm2";
    case TheoremTag::Cor3: return "cor3";
    case TheoremTag::Blocks: return "blocks";
    case TheoremTag::Cor5: return "cor5";
    case TheoremTag::Prop7: return "prop7";
    case TheoremTag::Prop9: return "prop9";
  }
  return "unknown";
}

TheoremTag parse_theorem_tag(std::string_view name) {
  for (auto tag : {TheoremTag::Prop1, TheoremTag::Thm2, TheoremTag::Cor3, TheoremTag::Blocks,
                   TheoremTag::Cor5, TheoremTag::Prop7, TheoremTag::Prop9}) {
    if (to_string(tag) == name) return tag;
  }
  throw Error(ErrorCode::IllegalParameter, "unknown theorem '" + std::string(name) + "'");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::PreconditionFailed: return "precondition-failed";
  }
  return "unknown";
}

TheoremResult apply_theorem(const Decomposition& dec, TheoremTag tag,
                            const VerifyOptions& options) {
  switch (tag) {
    case TheoremTag::Prop1: return prop1(dec, options.caps);
    case TheoremTag::Thm2: return theorem2_fdim(dec, options.caps);
    case TheoremTag::Cor3: return corollary3_fdim(dec, options.relaxed_cor3, options.caps);
    case TheoremTag::Blocks: return block_graph_fdim(dec);
    default:
      throw Error(ErrorCode::IllegalParameter,
                  std::string(to_string(tag)) + " needs a rooted-product input");
  }
}

TheoremResult apply_theorem(const RootedProductSpec& spec, TheoremTag tag,
                            const VerifyOptions& options) {
  switch (tag) {
    case TheoremTag::Cor5:
      return cor5_fdim(spec, options.caps);
    case TheoremTag::Prop7:
    case TheoremTag::Prop9:
      if (!spec.is_uniform()) {
        throw Error(ErrorCode::IllegalParameter,
                    std::string(to_string(tag)) + " needs copies of one rooted graph");
      }
      break;
    default:
      return apply_theorem(rooted_product(spec), tag, options);
  }
  const auto& h = spec.family.front();
  if (tag == TheoremTag::Prop7) return prop7_fdim(spec.base, h.graph, h.root, options.caps);
  const auto leaves = is_path_graph(h.graph);
  if (!leaves || (h.root != leaves->first && h.root != leaves->second)) {
    TheoremResult r;
    r.theorem = "prop9";
    r.preconditions.push_back({"H is a path rooted at a leaf", false, ""});
    return r;
  }
  return prop9_bounds(spec.base, h.graph.order());
}

VerifyReport verify(const Decomposition& dec, TheoremTag tag, const VerifyOptions& options) {
  return run(dec.composite(), tag, options, [&] { return apply_theorem(dec, tag, options); });
}

VerifyReport verify(const RootedProductSpec& spec, TheoremTag tag, const VerifyOptions& options) {
  const auto dec = rooted_product(spec);
  return run(dec.composite(), tag, options, [&] { return apply_theorem(spec, tag, options); });
}

BatchSummary verify_batch(TheoremTag tag, std::uint64_t seed, int count,
                          const VerifyOptions& options, int max_order) {
  SamplerOptions sampling;
  sampling.max_order = max_order;
  switch (tag) {
    case TheoremTag::Prop1:
      break;
    case TheoremTag::Blocks:
      sampling.cliques_only = true;
      [[fallthrough]];
    case TheoremTag::Thm2:
    case TheoremTag::Cor3:
      sampling.require_theorem2 = true;
      break;
    default:
      throw Error(ErrorCode::IllegalParameter,
                  "batch mode samples decompositions; " + std::string(to_string(tag)) +
                      " needs a rooted-product input");
  }

  BatchSummary summary;
  summary.seed = seed;
  summary.reports.resize(count);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      const auto dec = sample_decomposition(instance_seed(seed, i), sampling);
      summary.reports[i] = verify(dec, tag, options);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& r : summary.reports) {
    switch (r.verdict) {
      case Verdict::Agree: ++summary.agree; break;
      case Verdict::Mismatch: ++summary.mismatch; break;
      case Verdict::PreconditionFailed: ++summary.precondition_failed; break;
    }
  }
  return summary;
}

}  // namespace ftmd
