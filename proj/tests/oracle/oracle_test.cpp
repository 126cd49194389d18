#include <gtest/gtest.h>

#include "algdyn/algdyn.hpp"
#include "../support/families.hpp"

using namespace algdyn;
using namespace algdyn::oracle;
namespace fx = algdyn::fixtures;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

action::MatrixAction single(const IntMatrix& m) { return action::make_toral({m}); }

}  // namespace

TEST(OrbitBfs, Examples) {
  const OrbitResult id = orbit_bfs(single(IntMatrix::identity(2)), iv({1, 0}));
  EXPECT_TRUE(id.finite());
  EXPECT_EQ(id.size, 1u);

  OrbitOptions keep;
  keep.keep_members = true;
  const OrbitResult rot = orbit_bfs(single(fx::rot()), iv({1, 0}), keep);
  ASSERT_TRUE(rot.finite());
  EXPECT_EQ(rot.size, 4u);
  EXPECT_EQ(rot.members.size(), 4u);

  const OrbitResult fib = orbit_bfs(single(fx::fib()), iv({1, 0}));
  EXPECT_FALSE(fib.finite());
  EXPECT_NE(fib.reason, CapReason::None);

  EXPECT_THROW(orbit_bfs(single(fx::fib()), iv({0, 0})), ZeroCharacter);
  EXPECT_THROW(orbit_bfs(single(fx::fib()), iv({1, 0, 0})), DimensionError);
}

TEST(OrbitBfs, VisitedCapOnLinearGrowth) {
  // Shear orbits grow linearly, so the magnitude limit never triggers first.
  OrbitOptions small;
  small.cap = 50;
  const OrbitResult r = orbit_bfs(single(fx::shear()), iv({1, 0}), small);
  EXPECT_FALSE(r.finite());
  EXPECT_EQ(r.reason, CapReason::VisitedCount);
}

TEST(CrossValidate, Examples) {
  const auto f = cross_validate(single(fx::fib()), 3);
  EXPECT_EQ(f.checked, 48u);
  EXPECT_EQ(f.finite_orbits, 0u);
  EXPECT_TRUE(f.ok());

  const auto id = cross_validate(single(IntMatrix::identity(2)), 1);
  EXPECT_EQ(id.checked, 8u);
  EXPECT_EQ(id.finite_orbits, 8u);
  EXPECT_EQ(id.inside_subspace, 8u);
  EXPECT_TRUE(id.ok());

  OrbitOptions opts;
  opts.cap = 2000;
  const auto sh = cross_validate(single(fx::shear()), 2, opts);
  EXPECT_EQ(sh.checked, 24u);
  EXPECT_EQ(sh.inside_subspace, 4u);
  EXPECT_EQ(sh.finite_orbits, 4u);
  EXPECT_EQ(sh.exceeded_cap, 20u);
  EXPECT_TRUE(sh.ok());
}

TEST(CrossValidate, MixedBlocksSingleAndMultiThreaded) {
  // diag(F, rot): the rot plane has finite orbits of size 4.
  const auto a = single(fx::block_diag({fx::fib(), fx::rot()}));
  const auto one = cross_validate(a, 1, {}, 1);
  const auto many = cross_validate(a, 1, {}, 4);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.inside_subspace, 8u);
  EXPECT_EQ(one.finite_orbits, 8u);
  EXPECT_EQ(one.largest_finite_orbit, 4u);
  EXPECT_EQ(many.finite_orbits, one.finite_orbits);
  EXPECT_EQ(many.exceeded_cap, one.exceeded_cap);
}

TEST(CrossValidate, RejectsSolenoid) {
  const auto s = action::make_solenoid({RatMatrix{{2, 0}, {0, Rational(1, 2)}}});
  EXPECT_THROW(cross_validate(s, 1), DomainError);
}

TEST(DemoE2, ExponentIdentityAndChain) {
  const auto d = demo_e2({4});
  EXPECT_EQ(d.factors.size(), 80u);
  EXPECT_TRUE(d.identity_holds);
  EXPECT_TRUE(d.chain_strict);
  ASSERT_EQ(d.chain.size(), 4u);
  // Independent count of {(i, j) in [-4, 4]^2 : i + j >= n}.
  for (const auto& link : d.chain) {
    std::size_t c = 0;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) c += i + j >= link.level;
    EXPECT_EQ(link.factors_in_box, c);
  }
  EXPECT_EQ(d.chain[0].factors_in_box, 36u);
  EXPECT_EQ(d.chain[3].factors_in_box, 15u);
  for (const auto& f : d.factors) {
    EXPECT_EQ(f.self_exponent, 0);
    EXPECT_EQ(factor_exponent(f.i, f.j, f.i, f.j), f.j * f.i - f.i * f.j);
    EXPECT_NE(f.ergodic_exponent, 0);
  }
  EXPECT_EQ(factor_exponent(1, 0, 1, 0), 0);
  EXPECT_EQ(factor_exponent(2, 3, 2, 3), 0);
  EXPECT_THROW(demo_e2({0}), DomainError);
}
