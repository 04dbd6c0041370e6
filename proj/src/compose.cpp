#include "ftmd/compose.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ftmd/attach.hpp"
#include "ftmd/error.hpp"
#include "ftmd/families.hpp"

namespace ftmd {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string piece_name(int i) { return "piece " + std::to_string(i); }

bool is_complete(const Graph& g) {
  return g.size() == static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2;
}

PreconditionCheck k_at_least_three(const Decomposition& dec) {
  return {"k >= 3", dec.piece_count() >= 3, "k = " + std::to_string(dec.piece_count())};
}

PreconditionCheck end_anchors_disjoint(const Decomposition& dec) {
  std::map<Vertex, int> owner;
  std::vector<std::string> clashes;
  for (int i = 0; i < dec.piece_count(); ++i) {
    if (dec.role(i) != PieceRole::End) continue;
    const Vertex a = dec.to_global(i, dec.attachment_set(i)).front();
    if (auto [it, fresh] = owner.emplace(a, i); !fresh) {
      clashes.push_back(piece_name(it->second) + " and " + piece_name(i) + " share vertex " +
                        std::to_string(a));
    }
  }
  return {"end At disjoint", clashes.empty(), join(clashes)};
}

void finish(TheoremResult& r, int total) {
  if (r.preconditions_hold()) r.value = total;
}

void attach_witness(TheoremResult& r, const Graph& composite, VertexSet witness) {
  std::sort(witness.begin(), witness.end());
  witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
  r.witness_ft_resolving = is_ft_resolving(composite.distances(), witness);
  r.witness = std::move(witness);
}

}  // namespace

bool TheoremResult::preconditions_hold() const {
  return std::all_of(preconditions.begin(), preconditions.end(),
                     [](const PreconditionCheck& c) { return c.passed || c.waived; });
}

std::vector<std::string> TheoremResult::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : preconditions) {
    if (!c.passed && !c.waived) out.push_back(c.name);
  }
  return out;
}

int TheoremResult::value_or_throw() const {
  if (!value) {
    throw Error(ErrorCode::PreconditionFailed, theorem + ": " + join(failed_checks()));
  }
  return *value;
}

RootedProductSpec RootedProductSpec::uniform(Graph base, Graph h, Vertex root) {
  std::vector<RootedGraph> family(base.order(), RootedGraph{h, root});
  return RootedProductSpec{std::move(base), std::move(family)};
}

bool RootedProductSpec::is_uniform() const {
  return std::all_of(family.begin(), family.end(), [&](const RootedGraph& r) {
    return r.graph == family.front().graph && r.root == family.front().root;
  });
}

int prop1_lower_bound(const Decomposition& dec, const OracleCaps& caps) {
  return prop1(dec, caps).value_or_throw();
}

TheoremResult prop1(const Decomposition& dec, const OracleCaps& caps) {
  TheoremResult r;
  r.theorem = "prop1";
  int total = 0;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const auto& at = dec.attachment_set(i);
    // a lone piece has no anchors; its attaching dimension is its fdim
    const int c = at.empty() ? fdim(dec.piece(i)).value : fdim_star(dec.piece(i), at, caps).value;
    r.components.push_back(c);
    total += c;
  }
  r.value = total;
  r.notes.push_back("lower bound: fdim(G) >= " + std::to_string(total));
  return r;
}

std::vector<PreconditionCheck> theorem2_preconditions(const Decomposition& dec) {
  std::vector<PreconditionCheck> checks{k_at_least_three(dec)};
  std::vector<std::string> c1_failures, c2_failures;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const auto& at = dec.attachment_set(i);
    if (dec.role(i) == PieceRole::Internal) {
      const auto diag = check_c1(dec.piece(i), at);
      if (!diag.holds) {
        c1_failures.push_back(piece_name(i) + " (anchor " + std::to_string(diag.violation->first) +
                              ", vertex " + std::to_string(diag.violation->second) + ")");
      }
    } else if (dec.role(i) == PieceRole::End) {
      if (!check_c2(dec.piece(i), at)) c2_failures.push_back(piece_name(i));
    }
  }
  checks.push_back({"internal pieces satisfy C1", c1_failures.empty(), join(c1_failures)});
  checks.push_back({"end pieces satisfy C2", c2_failures.empty(), join(c2_failures)});
  checks.push_back(end_anchors_disjoint(dec));
  return checks;
}

TheoremResult theorem2_fdim(const Decomposition& dec, const OracleCaps& caps) {
  TheoremResult r;
  r.theorem = "thm2";
  r.preconditions = theorem2_preconditions(dec);
  if (!r.preconditions_hold()) return r;

  int total = 0;
  VertexSet witness;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const auto star = fdim_star(dec.piece(i), dec.attachment_set(i), caps);
    r.components.push_back(star.value);
    total += star.value;
    const auto global = dec.to_global(i, star.witness);
    witness.insert(witness.end(), global.begin(), global.end());
  }
  attach_witness(r, dec.composite(), std::move(witness));
  finish(r, total);
  return r;
}

TheoremResult corollary3_fdim(const Decomposition& dec, bool relaxed, const OracleCaps& caps) {
  TheoremResult r;
  r.theorem = relaxed ? "cor3-relaxed" : "cor3";
  r.preconditions = theorem2_preconditions(dec);

  std::vector<std::string> unequal, full;
  std::vector<int> fdims;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const auto& piece = dec.piece(i);
    const int lower = fdim(piece).value;
    fdims.push_back(lower);
    if (lower != fdim_plus(piece, caps).value) unequal.push_back(piece_name(i));
    if (static_cast<int>(dec.attachment_set(i).size()) == piece.order()) {
      full.push_back(piece_name(i));
    }
  }
  PreconditionCheck tight{"fdim = fdim+ per piece", unequal.empty(), join(unequal)};
  if (relaxed && !unequal.empty()) {
    tight.waived = true;
    r.notes.push_back("relaxed: fdim+ > fdim on " + join(unequal) + "; contribution still fdim - theta");
  }
  r.preconditions.push_back(tight);
  PreconditionCheck not_full{"At != V per piece", full.empty(), join(full)};
  if (relaxed && !full.empty()) {
    not_full.waived = true;
    r.notes.push_back("relaxed: At = V pieces contribute fdim - theta with theta = fdim");
  }
  r.preconditions.push_back(not_full);
  if (!r.preconditions_hold()) return r;

  int total = 0;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const int c = fdims[i] - theta(dec.piece(i), dec.attachment_set(i), caps);
    r.components.push_back(c);
    total += c;
  }
  finish(r, total);
  return r;
}

TheoremResult block_graph_fdim(const Decomposition& dec) {
  TheoremResult r;
  r.theorem = "blocks";
  r.preconditions.push_back(k_at_least_three(dec));
  std::vector<std::string> not_clique, too_small;
  for (int i = 0; i < dec.piece_count(); ++i) {
    if (!is_complete(dec.piece(i))) not_clique.push_back(piece_name(i));
    if (dec.piece(i).order() < 3) too_small.push_back(piece_name(i));
  }
  r.preconditions.push_back({"pieces complete", not_clique.empty(), join(not_clique)});
  r.preconditions.push_back({"r_i >= 3", too_small.empty(), join(too_small)});
  r.preconditions.push_back(end_anchors_disjoint(dec));
  if (!r.preconditions_hold()) return r;

  int total = 0;
  for (int i = 0; i < dec.piece_count(); ++i) {
    const int order = dec.piece(i).order();
    const int anchors = static_cast<int>(dec.attachment_set(i).size());
    const int c = anchors < order - 1 ? order - anchors : 0;
    r.components.push_back(c);
    total += c;
  }
  finish(r, total);
  return r;
}

Decomposition rooted_product(const RootedProductSpec& spec) {
  const int n = spec.base.order();
  if (static_cast<int>(spec.family.size()) != n) {
    throw Error(ErrorCode::IllegalParameter, "family size " + std::to_string(spec.family.size()) +
                                                 " != base order " + std::to_string(n));
  }
  std::vector<PieceSpec> pieces;
  PieceSpec base{spec.base, {}};
  for (Vertex u = 0; u < n; ++u) base.anchors[u] = "r" + std::to_string(u);
  pieces.push_back(std::move(base));
  for (Vertex u = 0; u < n; ++u) {
    const auto& rooted = spec.family[u];
    if (rooted.root < 0 || rooted.root >= rooted.graph.order()) {
      throw Error(ErrorCode::IllegalParameter, "root outside H_" + std::to_string(u));
    }
    pieces.push_back({rooted.graph, {{rooted.root, "r" + std::to_string(u)}}});
  }
  return Decomposition::point_attach(std::move(pieces));
}

TheoremResult cor5_fdim(const RootedProductSpec& spec, const OracleCaps& caps) {
  TheoremResult r;
  r.theorem = "cor5";
  const int n = spec.base.order();
  r.preconditions.push_back({"n >= 2", n >= 2, "n = " + std::to_string(n)});
  std::vector<std::string> c2_failures;
  for (int i = 0; i < static_cast<int>(spec.family.size()); ++i) {
    const auto& h = spec.family[i];
    if (!check_c2(h.graph, {h.root})) c2_failures.push_back("H_" + std::to_string(i));
  }
  r.preconditions.push_back({"each H_i satisfies C2", c2_failures.empty(), join(c2_failures)});
  if (!r.preconditions_hold()) return r;

  int total = 0;
  std::vector<std::string> in_basis;
  for (int i = 0; i < static_cast<int>(spec.family.size()); ++i) {
    const auto& h = spec.family[i];
    const bool member = in_some_ft_basis(h.graph, h.root, caps);
    if (member) in_basis.push_back("H_" + std::to_string(i));
    const int c = fdim(h.graph).value - (member ? 1 : 0);
    r.components.push_back(c);
    total += c;
  }
  r.notes.push_back("roots lying in a fault-tolerant basis: " +
                    (in_basis.empty() ? std::string("none") : join(in_basis)));
  finish(r, total);
  return r;
}

TheoremResult prop7_fdim(const Graph& g, const Graph& h, Vertex root, const OracleCaps& caps) {
  TheoremResult r;
  r.theorem = "prop7";
  if (root < 0 || root >= h.order()) throw Error(ErrorCode::IllegalParameter, "root outside H");
  r.preconditions.push_back({"H is not a path", !is_path_graph(h).has_value(), ""});
  if (!r.preconditions_hold()) return r;

  const int n = g.order();
  const int fh = fdim(h).value;
  const bool member = in_some_ft_basis(h, root, caps);
  const int per_copy = member ? fh - 1 : fh;
  r.notes.push_back(member ? "case (ii): root lies in a fault-tolerant basis of H"
                           : "case (i): root lies in no fault-tolerant basis of H");
  r.components.assign(n, per_copy);
  finish(r, n * per_copy);
  return r;
}

Cor8Outcome cor8_check(const Graph& g, const Graph& h, Vertex root, const OracleCaps& caps) {
  if (in_some_ft_basis(h, root, caps)) {
    throw Error(ErrorCode::PreconditionFailed, "v lies in some FT basis");
  }
  const auto dec = rooted_product(RootedProductSpec::uniform(g, h, root));
  require_order_within(dec.composite().order(), caps.search, "cor8_check composite");

  Cor8Outcome out;
  out.order = g.order();
  out.composite_fdim = fdim(dec.composite()).value;
  out.equals_2n = out.composite_fdim == 2 * out.order;
  const auto leaves = is_path_graph(h);
  out.path_with_inner_root = leaves && root != leaves->first && root != leaves->second;
  out.consistent = out.equals_2n == out.path_with_inner_root;
  return out;
}

TheoremResult prop9_bounds(const Graph& g, int path_order) {
  TheoremResult r;
  r.theorem = "prop9";
  r.preconditions.push_back(
      {"path non-trivial", path_order >= 2, "m = " + std::to_string(path_order)});
  r.preconditions.push_back({"n >= 2", g.order() >= 2, "n = " + std::to_string(g.order())});
  if (!r.preconditions_hold()) return r;

  const auto dec = rooted_product(RootedProductSpec::uniform(g, families::path(path_order), 0));
  VertexSet witness;
  for (int copy = 1; copy < dec.piece_count(); ++copy) {
    witness.push_back(dec.global_id(copy, path_order - 1));
  }
  attach_witness(r, dec.composite(), std::move(witness));
  r.bounds = std::pair{fdim(g).value, g.order()};
  return r;
}

}  // namespace ftmd
