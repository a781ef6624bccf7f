#include <gtest/gtest.h>

#include <functional>

#include "cycalc/constructions.hpp"
#include "cycalc/error.hpp"
#include "cycalc/serre_engine.hpp"

using namespace cycalc;

namespace {

constexpr ConstructionKind kAllKinds[] = {ConstructionKind::Divisor, ConstructionKind::DoubleCover,
                                          ConstructionKind::RootStack};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(SubstitutionTable, DivisorExample) {
  const auto t = substitution_table(ConstructionKind::Divisor, 3, builtin("pn", {{"n", 5}}));
  EXPECT_EQ(t.at(Generator::Rho), NormalForm::make(2));
  EXPECT_EQ(t.at(Generator::Sigma), NormalForm::make(6));
  EXPECT_EQ(t.dim_x, 4);
}

TEST(SubstitutionTable, CoverExample) {
  const auto t = substitution_table(ConstructionKind::DoubleCover, 2, builtin("pn", {{"n", 5}}));
  EXPECT_EQ(t.at(Generator::Rho), NormalForm::make(1, 0, 1, 0));
  EXPECT_EQ(t.at(Generator::Sigma), NormalForm::make(6, 0, 1, 0));
  EXPECT_EQ(t.dim_x, 5);
}

TEST(SubstitutionTable, RootExample) {
  const auto t = substitution_table(ConstructionKind::RootStack, 1, builtin("g2gr"));
  EXPECT_EQ(t.at(Generator::Rho), NormalForm::make(1, 0, 0, 1));
  EXPECT_EQ(t.at(Generator::Sigma), NormalForm::make(6));
}

TEST(SubstitutionTable, Errors) {
  const auto p5 = builtin("pn", {{"n", 5}});
  EXPECT_EQ(kind_of([&] { substitution_table(ConstructionKind::Divisor, 0, p5); }), ErrorKind::DegreeOutOfRange);
  EXPECT_EQ(kind_of([&] { substitution_table(ConstructionKind::Divisor, 7, p5); }), ErrorKind::DegreeOutOfRange);
  auto twisted = p5;
  twisted.omega_is_l_minus_m = false;
  EXPECT_EQ(kind_of([&] { substitution_table(ConstructionKind::DoubleCover, 2, twisted); }),
            ErrorKind::HypothesisViolation);
  auto unstable = p5;
  unstable.chi_stable = false;
  EXPECT_EQ(kind_of([&] { substitution_table(ConstructionKind::RootStack, 2, unstable); }),
            ErrorKind::HypothesisViolation);
  EXPECT_NO_THROW(substitution_table(ConstructionKind::Divisor, 2, unstable));
}

TEST(ParseConstruction, Names) {
  EXPECT_EQ(parse_construction("divisor"), ConstructionKind::Divisor);
  EXPECT_EQ(parse_construction("cover"), ConstructionKind::DoubleCover);
  EXPECT_EQ(parse_construction("root"), ConstructionKind::RootStack);
  EXPECT_EQ(kind_of([] { parse_construction("cover", 3); }), ErrorKind::UnsupportedConstruction);
  EXPECT_EQ(kind_of([] { parse_construction("blowup"); }), ErrorKind::InvalidParams);
  for (auto k : kAllKinds) EXPECT_EQ(parse_construction(cli_name(k)), k);
}

// Over every base of the full sweep scope and every d.
TEST(SubstitutionTable, InvariantsOverCatalog) {
  auto bounds = SweepBounds::full();
  bounds.max_n = 14;
  bounds.max_weight_sum = 14;
  std::size_t tables = 0;
  for (const auto& base : enumerate_bases(bounds)) {
    for (auto kind : kAllKinds) {
      for (Int d = 1; d <= base.length_m; ++d) {
        const auto t = substitution_table(kind, d, base);
        ++tables;
        ASSERT_TRUE(is_consistent(t)) << base.id << " d=" << d;
        // rho = T L^d and sigma = S T L^m, recomputed here.
        const auto& T = t.at(Generator::SphericalTwistX);
        const auto& S = t.at(Generator::SerreX);
        EXPECT_EQ(t.at(Generator::Rho), compose(T, NormalForm::make(0, d)));
        EXPECT_EQ(t.at(Generator::Sigma), compose(compose(S, T), NormalForm::make(0, base.length_m)));
        // Serre functor of X: twist by omega_X = L^{d-m}, shift by dim X.
        EXPECT_EQ(S.shift, t.dim_x);
        EXPECT_EQ(S.ltwist, d - base.length_m);
        const auto& sigma = t.at(Generator::Sigma);
        EXPECT_EQ(sigma.ltwist, 0);
        EXPECT_EQ(sigma.chi, 0);
        EXPECT_EQ(sigma.tau, kind == ConstructionKind::DoubleCover ? 1 : 0);
        EXPECT_EQ(sigma.shift, base.dim_m + 1);
        EXPECT_EQ(t.at(Generator::Rho).ltwist, 0);
        const Int expected_dim = kind == ConstructionKind::Divisor ? base.dim_m - 1 : base.dim_m;
        EXPECT_EQ(t.dim_x, expected_dim);
      }
    }
  }
  EXPECT_GT(tables, 1000u);
}
