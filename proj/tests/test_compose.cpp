#include <gtest/gtest.h>

#include "ftmd/attach.hpp"
#include "ftmd/compose.hpp"
#include "ftmd/error.hpp"
#include "ftmd/families.hpp"
#include "ftmd/sampler.hpp"
#include "ftmd/verify.hpp"
#include "oracle.hpp"

using namespace ftmd;
namespace oracle = ftmd::testing::oracle;

namespace {

Decomposition k4_k3_k4() {
  const Graph k4 = families::complete(4);
  const Graph k3 = families::complete(3);
  return Decomposition::point_attach(
      {{k4, {{0, "a"}}}, {k3, {{0, "a"}, {1, "b"}}}, {k4, {{0, "b"}}}});
}

Decomposition k4_star_of_k4() {
  const Graph k4 = families::complete(4);
  return Decomposition::point_attach({{k4, {{0, "a"}, {1, "b"}, {2, "c"}}},
                                      {k4, {{0, "a"}}},
                                      {k4, {{0, "b"}}},
                                      {k4, {{0, "c"}}}});
}

const PreconditionCheck* find_check(const TheoremResult& r, const std::string& name) {
  for (const auto& c : r.preconditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(Prop1, KnownValues) {
  const Graph k3 = families::complete(3);
  const auto bowtie = Decomposition::point_attach({{k3, {{2, "x"}}}, {k3, {{0, "x"}}}});
  EXPECT_EQ(prop1_lower_bound(bowtie), 4);
  EXPECT_GE(oracle::fdim(bowtie.composite()).value, 4);
  EXPECT_EQ(prop1_lower_bound(families::figure2()), 11);
  // A piece C_6 anchored at one vertex contributes 2.
  EXPECT_EQ(fdim_star(families::cycle(6), {0}).value, 2);
  const auto lone = Decomposition::point_attach({{families::cycle(6), {}}});
  EXPECT_EQ(prop1_lower_bound(lone), fdim(families::cycle(6)).value);
}

TEST(Prop1, BoundHoldsOnSampledDecompositions) {
  SamplerOptions options;
  options.max_order = 12;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto dec = sample_decomposition(instance_seed(11, seed), options);
    ASSERT_GE(oracle::fdim(dec.composite()).value, prop1_lower_bound(dec)) << seed;
  }
}

TEST(Theorem2, Figure2) {
  const auto r = theorem2_fdim(families::figure2());
  ASSERT_TRUE(r.value.has_value());
  EXPECT_EQ(*r.value, 11);
  EXPECT_EQ(r.components, (std::vector<int>{3, 0, 2, 2, 4}));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 11U);
  EXPECT_TRUE(*r.witness_ft_resolving);
  EXPECT_TRUE(oracle::is_ft(families::figure2().composite(), *r.witness));
}

TEST(Theorem2, CliqueChain) {
  const auto dec = k4_k3_k4();
  const auto r = theorem2_fdim(dec);
  EXPECT_EQ(r.value_or_throw(), 6);
  EXPECT_EQ(r.components, (std::vector<int>{3, 0, 3}));
  EXPECT_EQ(oracle::fdim(dec.composite()).value, 6);
}

TEST(Theorem2, NamedPreconditionFailures) {
  const Graph k3 = families::complete(3);
  const auto shared = Decomposition::point_attach(
      {{k3, {{0, "a"}}}, {k3, {{0, "a"}}}, {k3, {{0, "a"}}}});
  const auto r = theorem2_fdim(shared);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.failed_checks(), std::vector<std::string>{"end At disjoint"});
  try {
    r.value_or_throw();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
    EXPECT_NE(std::string(e.what()).find("end At disjoint"), std::string::npos);
  }
  const auto two = Decomposition::point_attach({{k3, {{2, "x"}}}, {k3, {{0, "x"}}}});
  EXPECT_EQ(theorem2_fdim(two).failed_checks().front(), "k >= 3");
  const Graph p3 = families::path(3);
  const auto leafy = Decomposition::point_attach(
      {{p3, {{0, "a"}}}, {k3, {{0, "a"}, {1, "b"}}}, {k3, {{0, "b"}}}});
  EXPECT_EQ(theorem2_fdim(leafy).failed_checks(), std::vector<std::string>{"end pieces satisfy C2"});
  const Graph p5 = families::path(5);
  const auto weak = Decomposition::point_attach(
      {{k3, {{0, "a"}}}, {p5, {{1, "a"}, {2, "b"}}}, {k3, {{0, "b"}}}});
  EXPECT_EQ(theorem2_fdim(weak).failed_checks(),
            std::vector<std::string>{"internal pieces satisfy C1"});
}

TEST(Theorem2, MatchesOracleOnSamples) {
  SamplerOptions options;
  options.require_theorem2 = true;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto dec = sample_decomposition(instance_seed(5, i), options);
    const auto r = theorem2_fdim(dec);
    ASSERT_EQ(r.value_or_throw(), oracle::fdim(dec.composite()).value) << i;
    ASSERT_TRUE(*r.witness_ft_resolving);
  }
}

TEST(Theorem2, WitnessValidBeyondOracleCap) {
  SamplerOptions options;
  options.require_theorem2 = true;
  options.min_pieces = 8;
  options.max_pieces = 12;
  options.max_order = 70;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto dec = sample_decomposition(instance_seed(9, i), options);
    const auto r = theorem2_fdim(dec);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(*r.witness_ft_resolving);
    EXPECT_TRUE(oracle::is_ft(dec.composite(), *r.witness));
    EXPECT_EQ(static_cast<int>(r.witness->size()), r.value_or_throw());
  }
}

TEST(Corollary3, Figure2StrictAndRelaxed) {
  const auto strict = corollary3_fdim(families::figure2());
  EXPECT_FALSE(strict.value.has_value());
  EXPECT_EQ(strict.failed_checks(),
            (std::vector<std::string>{"fdim = fdim+ per piece", "At != V per piece"}));
  EXPECT_EQ(find_check(strict, "fdim = fdim+ per piece")->detail, "piece 3");
  EXPECT_EQ(find_check(strict, "At != V per piece")->detail, "piece 1");

  const auto relaxed = corollary3_fdim(families::figure2(), true);
  ASSERT_TRUE(relaxed.value.has_value());
  EXPECT_EQ(*relaxed.value, 11);
  EXPECT_EQ(relaxed.components, (std::vector<int>{3, 0, 2, 2, 4}));
  EXPECT_TRUE(find_check(relaxed, "At != V per piece")->waived);
  EXPECT_TRUE(find_check(relaxed, "fdim = fdim+ per piece")->waived);
}

TEST(Corollary3, AtNotVCheck) {
  const auto r = corollary3_fdim(k4_k3_k4());
  EXPECT_TRUE(r.failed_checks().empty());
  EXPECT_EQ(r.value_or_throw(), 6);
  const Graph k3 = families::complete(3);
  const auto full = Decomposition::point_attach(
      {{k3, {{0, "a"}}}, {k3, {{0, "a"}, {1, "b"}, {2, "c"}}}, {k3, {{0, "b"}}}, {k3, {{0, "c"}}}});
  EXPECT_EQ(corollary3_fdim(full).failed_checks(), std::vector<std::string>{"At != V per piece"});
  EXPECT_EQ(corollary3_fdim(full, true).value_or_throw(), oracle::fdim(full.composite()).value);
}

TEST(Corollary3, CycleEndPieceContribution) {
  const Graph k4 = families::complete(4);
  const Graph k3 = families::complete(3);
  const auto dec = Decomposition::point_attach(
      {{k4, {{0, "a"}}}, {k3, {{0, "a"}, {1, "b"}}}, {families::cycle(6), {{0, "b"}}}});
  EXPECT_EQ(theta(families::cycle(6), {0}), 1);
  const auto r = corollary3_fdim(dec, true);
  EXPECT_EQ(r.components.back(), 2);
}

TEST(Corollary3, AgreesWithTheorem2UnlessThetaOvershoots) {
  SamplerOptions options;
  options.require_theorem2 = true;
  options.max_order = 14;
  int applied = 0, overshoot = 0;
  for (std::uint64_t i = 0; i < 80; ++i) {
    const auto dec = sample_decomposition(instance_seed(21, i), options);
    const auto c = corollary3_fdim(dec);
    if (!c.value) continue;
    ++applied;
    const auto t = theorem2_fdim(dec);
    if (c.components == t.components) {
      ASSERT_EQ(*c.value, *t.value) << i;
    } else {
      ++overshoot;
      for (std::size_t p = 0; p < c.components.size(); ++p) {
        ASSERT_GE(c.components[p], t.components[p]) << i;
      }
      ASSERT_EQ(*t.value, oracle::fdim(dec.composite()).value) << i;
    }
  }
  EXPECT_GT(applied, 0);
  EXPECT_GT(overshoot, 0);
}

TEST(BlockGraphs, KnownValues) {
  EXPECT_EQ(block_graph_fdim(k4_k3_k4()).value_or_throw(), 6);
  EXPECT_EQ(oracle::fdim(k4_k3_k4().composite()).value, 6);
  const auto star = k4_star_of_k4();
  EXPECT_EQ(block_graph_fdim(star).value_or_throw(), 9);
  EXPECT_EQ(oracle::fdim(star.composite()).value, 9);
  const Graph k2 = families::complete(2);
  const Graph k3 = families::complete(3);
  const auto small = Decomposition::point_attach(
      {{k3, {{0, "a"}}}, {k2, {{0, "a"}, {1, "b"}}}, {k3, {{0, "b"}}}});
  EXPECT_EQ(block_graph_fdim(small).failed_checks(), std::vector<std::string>{"r_i >= 3"});
  const auto mixed = Decomposition::point_attach(
      {{k3, {{0, "a"}}}, {families::cycle(4), {{0, "a"}, {1, "b"}}}, {k3, {{0, "b"}}}});
  EXPECT_EQ(block_graph_fdim(mixed).failed_checks(), std::vector<std::string>{"pieces complete"});
}

TEST(BlockGraphs, MatchesOracleOnCliqueSamples) {
  SamplerOptions options;
  options.require_theorem2 = true;
  options.cliques_only = true;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const auto dec = sample_decomposition(instance_seed(3, i), options);
    ASSERT_EQ(block_graph_fdim(dec).value_or_throw(), oracle::fdim(dec.composite()).value);
  }
}

TEST(RootedProduct, KnownValues) {
  const auto p4 = rooted_product(
      RootedProductSpec::uniform(families::path(2), families::path(2), 0));
  EXPECT_EQ(p4.composite().order(), 4);
  EXPECT_TRUE(is_path_graph(p4.composite()).has_value());
  const auto c5s = rooted_product(
      RootedProductSpec::uniform(families::path(3), families::cycle(5), 0));
  EXPECT_EQ(c5s.composite().order(), 15);
  const auto stars = rooted_product(
      RootedProductSpec::uniform(families::cycle(4), families::star(3), 0));
  EXPECT_EQ(stars.composite().order(), 16);
  EXPECT_EQ(stars.piece_count(), 5);
  EXPECT_EQ(stars.attachment_set(0), (VertexSet{0, 1, 2, 3}));
}

TEST(RootedProduct, EdgeSetMatchesProductDefinition) {
  const Graph g = families::path(3);
  const Graph h = families::paw();
  const Vertex root = 3;
  const auto dec = rooted_product(RootedProductSpec::uniform(g, h, root));
  // (u_i, b) ~ (u_i, y) for by in E(H); (u_i, v) ~ (u_j, v) for u_i u_j in E(G)
  std::size_t expected = g.size() + g.order() * h.size();
  EXPECT_EQ(dec.composite().size(), expected);
  for (int i = 0; i < g.order(); ++i) {
    const int piece = i + 1;
    EXPECT_EQ(dec.global_id(piece, root), dec.global_id(0, i));
    for (auto [b, y] : h.edges()) {
      EXPECT_TRUE(dec.composite().adjacent(dec.global_id(piece, b), dec.global_id(piece, y)));
    }
  }
  for (auto [u, w] : g.edges()) {
    EXPECT_TRUE(dec.composite().adjacent(dec.global_id(u + 1, root), dec.global_id(w + 1, root)));
  }
}

TEST(Corollary5, KnownValues) {
  EXPECT_EQ(cor5_fdim(RootedProductSpec::uniform(families::path(2), families::star(3), 0))
                .value_or_throw(),
            6);
  EXPECT_EQ(cor5_fdim(RootedProductSpec::uniform(families::path(3), families::cycle(5), 0))
                .value_or_throw(),
            6);
  EXPECT_EQ(cor5_fdim(RootedProductSpec::uniform(families::path(2), families::complete(4), 0))
                .value_or_throw(),
            6);
  const auto leaf = cor5_fdim(RootedProductSpec::uniform(families::path(2), families::path(4), 0));
  EXPECT_EQ(leaf.failed_checks(), std::vector<std::string>{"each H_i satisfies C2"});
}

TEST(Corollary5, AgreesWithTheorem2ExceptWhereAttachingDimDropsByTwo) {
  const std::vector<std::pair<Graph, Vertex>> rooted{
      {families::star(3), 0}, {families::star(3), 1}, {families::cycle(5), 0},
      {families::complete(4), 0}, {families::paw(), 3}, {families::paw(), 2},
      {families::paw(), 0}, {families::path(4), 1}, {families::cycle(4), 0},
      {families::bowtie(), 2}};
  int mismatches = 0;
  for (const Graph& g : {families::path(2), families::path(3), families::complete(3)}) {
    for (const auto& [h, root] : rooted) {
      const auto spec = RootedProductSpec::uniform(g, h, root);
      const auto c5 = cor5_fdim(spec);
      const auto t2 = theorem2_fdim(rooted_product(spec));
      ASSERT_TRUE(c5.value && t2.value);
      const int drop = fdim(h).value - fdim_star(h, {root}).value;
      if (drop <= 1) {
        EXPECT_EQ(*c5.value, *t2.value);
      } else {
        ++mismatches;
        EXPECT_GT(*c5.value, *t2.value);
      }
    }
  }
  // Only the C_4 family drops by two in this list.
  EXPECT_EQ(mismatches, 3);
}

TEST(Corollary5, CycleC4FamilyFinding) {
  const auto spec = RootedProductSpec::uniform(families::path(3), families::cycle(4), 0);
  EXPECT_EQ(cor5_fdim(spec).value_or_throw(), 9);
  EXPECT_EQ(oracle::fdim(rooted_product(spec).composite()).value, 6);
  EXPECT_EQ(theorem2_fdim(rooted_product(spec)).value_or_throw(), 6);
}

TEST(Prop7, KnownValues) {
  const auto star = prop7_fdim(families::path(2), families::star(3), 0);
  EXPECT_EQ(star.value_or_throw(), 6);
  EXPECT_EQ(star.notes.front(), "case (i): root lies in no fault-tolerant basis of H");
  const auto k4 = prop7_fdim(families::path(3), families::complete(4), 2);
  EXPECT_EQ(k4.value_or_throw(), 9);
  EXPECT_EQ(k4.notes.front(), "case (ii): root lies in a fault-tolerant basis of H");
  EXPECT_EQ(prop7_fdim(families::path(2), families::path(5), 2).failed_checks(),
            std::vector<std::string>{"H is not a path"});
}

TEST(Cor8, KnownValues) {
  const auto a = cor8_check(families::path(3), families::path(4), 1);
  EXPECT_EQ(a.composite_fdim, 6);
  EXPECT_TRUE(a.equals_2n && a.path_with_inner_root && a.consistent);
  const auto b = cor8_check(families::path(2), families::star(3), 0);
  EXPECT_EQ(b.composite_fdim, 6);
  EXPECT_FALSE(b.equals_2n);
  EXPECT_TRUE(b.consistent);
  const auto c = cor8_check(families::path(2), families::path(4), 2);
  EXPECT_EQ(c.composite_fdim, 4);
  EXPECT_TRUE(c.consistent);
  try {
    cor8_check(families::path(2), families::cycle(5), 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(Prop9, KnownValues) {
  const auto c4 = prop9_bounds(families::cycle(4), 3);
  EXPECT_EQ(c4.bounds, (std::pair{4, 4}));
  EXPECT_TRUE(*c4.witness_ft_resolving);
  const int c4_oracle = oracle::fdim(
      rooted_product(RootedProductSpec::uniform(families::cycle(4), families::path(3), 0))
          .composite()).value;
  EXPECT_EQ(c4_oracle, 4);
  EXPECT_EQ(prop9_bounds(families::path(3), 2).bounds, (std::pair{2, 3}));
  EXPECT_EQ(prop9_bounds(families::complete(4), 2).bounds, (std::pair{4, 4}));
  EXPECT_EQ(oracle::fdim(rooted_product(RootedProductSpec::uniform(families::complete(4),
                                                                   families::path(2), 0))
                             .composite())
                .value,
            4);
  EXPECT_EQ(prop9_bounds(families::path(3), 1).failed_checks(),
            std::vector<std::string>{"path non-trivial"});
}

TEST(Verify, Figure2AllTheorems) {
  VerifyOptions options;
  options.oracle_cap = 20;
  options.relaxed_cor3 = true;
  for (auto tag : {TheoremTag::Prop1, TheoremTag::Thm2, TheoremTag::Cor3}) {
    const auto r = verify(families::figure2(), tag, options);
    EXPECT_EQ(r.verdict, Verdict::Agree) << to_string(tag);
    EXPECT_EQ(r.oracle, 11);
    EXPECT_EQ(r.composite_order, 20);
  }
  options.relaxed_cor3 = false;
  EXPECT_EQ(verify(families::figure2(), TheoremTag::Cor3, options).verdict,
            Verdict::PreconditionFailed);
}

TEST(Verify, CapAndInputKindErrors) {
  try {
    verify(families::figure2(), TheoremTag::Thm2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
  try {
    verify(k4_k3_k4(), TheoremTag::Cor5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalParameter);
  }
  EXPECT_EQ(parse_theorem_tag("blocks"), TheoremTag::Blocks);
  EXPECT_THROW(parse_theorem_tag("thm9"), Error);
}

TEST(Verify, RootedProductTags) {
  const auto c5 = RootedProductSpec::uniform(families::path(3), families::cycle(5), 0);
  EXPECT_EQ(verify(c5, TheoremTag::Cor5).verdict, Verdict::Agree);
  EXPECT_EQ(verify(c5, TheoremTag::Prop7).verdict, Verdict::Agree);
  EXPECT_EQ(verify(c5, TheoremTag::Thm2).verdict, Verdict::Agree);
  const auto c4 = RootedProductSpec::uniform(families::path(3), families::cycle(4), 0);
  EXPECT_EQ(verify(c4, TheoremTag::Cor5).verdict, Verdict::Mismatch);
  const auto path = RootedProductSpec::uniform(families::cycle(4), families::path(3), 0);
  EXPECT_EQ(verify(path, TheoremTag::Prop9).verdict, Verdict::Agree);
  const auto inner = RootedProductSpec::uniform(families::cycle(4), families::path(3), 1);
  EXPECT_EQ(verify(inner, TheoremTag::Prop9).verdict, Verdict::PreconditionFailed);
}

TEST(Verify, BatchesAreDeterministic) {
  const auto a = verify_batch(TheoremTag::Thm2, 7, 12);
  const auto b = verify_batch(TheoremTag::Thm2, 7, 12);
  ASSERT_EQ(a.reports.size(), 12U);
  EXPECT_EQ(a.agree, 12);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.reports[i].theorem, b.reports[i].theorem);
    EXPECT_EQ(a.reports[i].oracle_witness, b.reports[i].oracle_witness);
  }
  EXPECT_THROW(verify_batch(TheoremTag::Cor5, 0, 1), Error);
}

TEST(Corollary3, ThetaOvershootsOnFourCycleEnd) {
  const Graph c4 = families::cycle(4);
  const auto dec = Decomposition::point_attach(
      {{c4, {{0, "a"}}}, {families::star(3), {{1, "a"}, {3, "b"}}}, {c4, {{1, "b"}}}});
  EXPECT_EQ(fdim_plus(c4).value, 4);
  EXPECT_EQ(theta(c4, {0}), 1);
  EXPECT_EQ(fdim_star(c4, {0}).value, 2);
  const auto c = corollary3_fdim(dec);
  EXPECT_TRUE(c.failed_checks().empty());
  EXPECT_EQ(c.value_or_throw(), 6);
  EXPECT_EQ(theorem2_fdim(dec).value_or_throw(), 4);
  EXPECT_EQ(oracle::fdim(dec.composite()).value, 4);
}
