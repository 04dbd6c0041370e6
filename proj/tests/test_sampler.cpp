#include <gtest/gtest.h>

#include "ftmd/compose.hpp"
#include "ftmd/error.hpp"
#include "ftmd/sampler.hpp"

using namespace ftmd;

TEST(Sampler, PoolContents) {
  const auto& pool = decomposition_pool();
  EXPECT_EQ(pool.size(), 14U);
  for (const auto& p : pool) EXPECT_GE(p.graph.order(), 3) << p.name;
}

TEST(Sampler, DeterministicInSeed) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFULL}) {
    const auto a = sample_decomposition(seed);
    const auto b = sample_decomposition(seed);
    EXPECT_EQ(a.composite(), b.composite());
    ASSERT_EQ(a.piece_count(), b.piece_count());
    for (int i = 0; i < a.piece_count(); ++i) EXPECT_EQ(a.anchors(i), b.anchors(i));
  }
  EXPECT_EQ(instance_seed(3, 4), instance_seed(3, 4));
  EXPECT_NE(instance_seed(3, 4), instance_seed(3, 5));
  EXPECT_NE(instance_seed(3, 4), instance_seed(4, 4));
}

TEST(Sampler, RespectsOptions) {
  SamplerOptions options;
  options.min_pieces = 3;
  options.max_pieces = 4;
  options.max_order = 13;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto dec = sample_decomposition(seed, options);
    EXPECT_GE(dec.piece_count(), 3);
    EXPECT_LE(dec.piece_count(), 4);
    EXPECT_LE(dec.composite().order(), 13);
  }
}

TEST(Sampler, TheoremFilterAndCliques) {
  SamplerOptions options;
  options.require_theorem2 = true;
  options.cliques_only = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto dec = sample_decomposition(seed, options);
    for (const auto& c : theorem2_preconditions(dec)) EXPECT_TRUE(c.passed) << c.name;
    for (int i = 0; i < dec.piece_count(); ++i) {
      const auto& g = dec.piece(i);
      EXPECT_EQ(g.size(), static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    }
  }
}

TEST(Sampler, ImpossibleRequestsFail) {
  SamplerOptions options;
  options.max_order = 5;
  options.max_attempts = 50;
  try {
    sample_decomposition(0, options);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedConfiguration);
  }
}
