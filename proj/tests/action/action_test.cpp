#include <gtest/gtest.h>

#include "algdyn/algdyn.hpp"
#include "../support/families.hpp"

using namespace algdyn;
using namespace algdyn::action;
namespace fx = algdyn::fixtures;

namespace {

RawMatrixAction raw_toral(std::vector<IntMatrix> gens) {
  RawMatrixAction raw{MatrixKind::Toral, gens.front().rows(), {}};
  for (const auto& g : gens) raw.generators.push_back(to_rational(g));
  return raw;
}

std::vector<std::string> labels(const ValidationResult& v) {
  std::vector<std::string> out;
  for (const auto& i : v.issues) out.push_back(i.label());
  return out;
}

}  // namespace

TEST(Validate, AcceptsCommutingUnimodular) {
  const auto v = validate(raw_toral({fx::fib(), fx::int_power(fx::fib(), 3)}));
  ASSERT_TRUE(v.ok());
  const auto& a = std::get<MatrixAction>(*v.action);
  EXPECT_EQ(a.dimension(), 2u);
  EXPECT_EQ(a.generator_count(), 2u);
}

TEST(Validate, ReportsEveryIssue) {
  EXPECT_EQ(labels(validate(raw_toral({fx::shear(), fx::fib()}))), (std::vector<std::string>{"NonCommuting{1,2}"}));
  EXPECT_EQ(labels(validate(raw_toral({fx::imat({{2, 0}, {0, 1}})}))), (std::vector<std::string>{"NotUnimodular{1}"}));
  EXPECT_EQ(labels(validate(raw_toral({fx::imat({{1, 2}, {2, 4}})}))), (std::vector<std::string>{"NotInvertible{1}"}));
  // Non-integral toral generator, and a wrong shape.
  RawMatrixAction frac{MatrixKind::Toral, 2, {RatMatrix{{Rational(1, 2), 0}, {0, 2}}}};
  EXPECT_EQ(labels(validate(frac)), (std::vector<std::string>{"NotIntegral{1}"}));
  RawMatrixAction shape{MatrixKind::Toral, 3, {RatMatrix::identity(2)}};
  EXPECT_EQ(labels(validate(shape)), (std::vector<std::string>{"BadDimension{1}"}));
  // Several at once.
  EXPECT_EQ(labels(validate(raw_toral({fx::imat({{2, 0}, {0, 1}}), fx::shear(), fx::fib()}))),
            (std::vector<std::string>{"NotUnimodular{1}", "NonCommuting{1,2}", "NonCommuting{1,3}", "NonCommuting{2,3}"}));
}

TEST(Validate, SolenoidAllowsRationalInvertible) {
  RawMatrixAction raw{MatrixKind::Solenoid, 2, {RatMatrix{{Rational(3, 2), 0}, {0, 2}}, RatMatrix{{2, 0}, {0, Rational(1, 3)}}}};
  EXPECT_TRUE(validate(raw).ok());
  raw.generators.push_back(RatMatrix{{0, 0}, {0, 1}});
  EXPECT_EQ(labels(validate(raw)), (std::vector<std::string>{"NotInvertible{3}"}));
}

TEST(Validate, Laurent) {
  RawLaurentAction ok{2, 2, {{Exponent{{0, 0}}, 1}, {Exponent{{1, 0}}, 1}, {Exponent{{0, 1}}, 1}}};
  EXPECT_TRUE(validate(ok).ok());
  RawLaurentAction bad_p{4, 1, {{Exponent{{1, 0}}, 1}, {Exponent{{0, 0}}, 1}}};
  EXPECT_EQ(labels(validate(bad_p)), (std::vector<std::string>{"BadModulus"}));
  RawLaurentAction unit{3, 2, {{Exponent{{2, -1}}, 2}}};
  EXPECT_EQ(labels(validate(unit)), (std::vector<std::string>{"UnitPresentation"}));
  RawLaurentAction vanishing{3, 1, {{Exponent{{1, 0}}, 3}}};
  EXPECT_EQ(labels(validate(vanishing)), (std::vector<std::string>{"UnitPresentation"}));
  RawLaurentAction vars{3, 1, {{Exponent{{0, 1}}, 1}, {Exponent{{0, 0}}, 1}}};
  EXPECT_EQ(labels(validate(vars)), (std::vector<std::string>{"BadVariables"}));
  // Presentation is stored unit-normalized: 2u^-3 + 4u^-2 ~ 3 + u over F_5.
  RawLaurentAction shifted{5, 1, {{Exponent{{-3, 0}}, 2}, {Exponent{{-2, 0}}, 4}}};
  const auto v = validate(shifted);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(std::get<LaurentCyclicAction>(*v.action).presentation(),
            LaurentPoly::from_terms(5, 1, {{Exponent{{0, 0}}, 3}, {Exponent{{1, 0}}, 1}}));
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual_matrix(fx::fib()), fx::imat({{-1, 1}, {1, 0}}));
  EXPECT_EQ(dual_matrix(fx::rot()), fx::rot());
  EXPECT_EQ(dual_matrix(fx::shear()), fx::imat({{1, 0}, {-1, 1}}));
  EXPECT_THROW(dual_matrix(fx::imat({{2, 0}, {0, 1}})), InvariantViolation);
}

TEST(Dual, DualOfElementMatchesElementOfDuals) {
  // (AB)^* = A^* B^* for commuting A, B, and (A^n)^* = (A^*)^n.
  fx::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto fam = fx::random_commuting_family(rng, 4, 3);
    const auto a = make_toral(fam.generators);
    std::vector<std::int64_t> ex(a.generator_count());
    for (auto& x : ex) x = fx::uniform(rng, -2, 2);
    EXPECT_EQ(a.dual_element(ex), dual_matrix(a.element(ex))) << fam.shape;
  }
}

TEST(Element, BlockPair) {
  const IntMatrix i2 = IntMatrix::identity(2);
  const auto a = make_toral({fx::block_diag({fx::fib(), i2}), fx::block_diag({i2, fx::fib()})});
  EXPECT_EQ(a.element({1, 1}), to_rational(fx::block_diag({fx::fib(), fx::fib()})));
  EXPECT_EQ(a.element({0, 0}), RatMatrix::identity(4));
  EXPECT_EQ(a.element({-1, 2}) * a.element({1, -2}), RatMatrix::identity(4));
  EXPECT_THROW(a.element({1}), DimensionError);
}
