#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftmd/compose.hpp"
#include "ftmd/decomposition.hpp"

namespace ftmd {

enum class TheoremTag { Prop1, Thm2, Cor3, Blocks, Cor5, Prop7, Prop9 };

std::string_view to_string(TheoremTag tag);
/// Throws IllegalParameter on unknown names.
TheoremTag parse_theorem_tag(std::string_view name);

enum class Verdict {
  Agree,               // formula (or bound) consistent with the oracle
  Mismatch,            // a finding: formula contradicts the oracle or the witness fails
  PreconditionFailed,  // theorem not applicable; oracle still reported
};

std::string_view to_string(Verdict v);

struct VerifyOptions {
  OracleCaps caps;
  /// Largest composite the brute-force fdim is run on.
  int oracle_cap = 16;
  bool relaxed_cor3 = false;
};

struct VerifyReport {
  TheoremResult theorem;
  int composite_order = 0;
  int oracle = 0;
  VertexSet oracle_witness;
  Verdict verdict = Verdict::Agree;
  double theorem_ms = 0;
  double oracle_ms = 0;
};

/// Evaluates one theorem without running the oracle. Decomposition input
/// accepts prop1, thm2, cor3 and blocks; rooted-product input accepts all
/// tags (decomposition theorems run on rooted_product(spec)). Throws
/// IllegalParameter for unsupported combinations.
TheoremResult apply_theorem(const Decomposition& dec, TheoremTag tag,
                            const VerifyOptions& options = {});
TheoremResult apply_theorem(const RootedProductSpec& spec, TheoremTag tag,
                            const VerifyOptions& options = {});

/// Theorem value against brute-force fdim of the composite. prop1 passes
/// when oracle >= bound, prop9 when the oracle lies in the bounds and the
/// witness is fault-tolerant resolving, all others on exact equality (and a
/// valid witness when one is produced). Throws OrderCapExceeded when the
/// composite exceeds options.oracle_cap and IllegalParameter for theorems
/// that need a rooted-product input.
VerifyReport verify(const Decomposition& dec, TheoremTag tag, const VerifyOptions& options = {});

/// Rooted-product input; decomposition theorems run on rooted_product(spec).
/// prop7 and prop9 need a uniform family (prop9: a path rooted at a leaf).
VerifyReport verify(const RootedProductSpec& spec, TheoremTag tag,
                    const VerifyOptions& options = {});

struct BatchSummary {
  std::uint64_t seed = 0;
  std::vector<VerifyReport> reports;  // in instance order
  int agree = 0;
  int mismatch = 0;
  int precondition_failed = 0;
};

/// Runs `count` sampled decompositions (instance i seeded with
/// instance_seed(seed, i)) through verify in parallel. thm2, cor3 and
/// blocks draw only theorem-2-admissible samples.
BatchSummary verify_batch(TheoremTag tag, std::uint64_t seed, int count,
                          const VerifyOptions& options = {}, int max_order = 16);

}  // namespace ftmd
