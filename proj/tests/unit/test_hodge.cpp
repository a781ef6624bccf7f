#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "cycalc/error.hpp"
#include "cycalc/hodge.hpp"
#include "oracles.hpp"

using namespace cycalc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InternalInconsistency;
}

// Every (weights, D) with w | D, w < D, at most five weights and
// sum(D - 2w) <= 60.
std::vector<std::pair<std::vector<Int>, Int>> weight_systems() {
  std::vector<std::pair<std::vector<Int>, Int>> out;
  for (Int D = 2; D <= 31; ++D) {
    std::vector<Int> divisors;
    for (Int w = 1; w < D; ++w)
      if (D % w == 0) divisors.push_back(w);
    std::vector<Int> cur;
    std::function<void(std::size_t, Int)> go = [&](std::size_t from, Int budget) {
      if (!cur.empty()) out.emplace_back(cur, D);
      if (cur.size() == 5) return;
      for (std::size_t i = from; i < divisors.size(); ++i) {
        const Int cost = D - 2 * divisors[i];
        if (cost > budget) continue;
        cur.push_back(divisors[i]);
        go(i, budget - cost);
        cur.pop_back();
      }
    };
    go(0, 60);
  }
  return out;
}

// dim of k[x_0..x_n]/(x_i^{d-1}) in degree a.
Int truncated_count(Int n, Int d, Int a) {
  if (a < 0) return 0;
  return oracle::product_coefficient(std::vector<int>(n + 1, 1), std::vector<int>(n + 1, static_cast<int>(d - 1)),
                                     static_cast<int>(a));
}

}  // namespace

TEST(Jacobian, Examples) {
  const std::vector<Int> six(6, 1);
  const auto s = jacobian_poincare(six, 3);
  ASSERT_EQ(s.top_degree(), 6);
  for (Int a = 0; a <= 6; ++a) EXPECT_EQ(s.at(a), oracle::binomial(6, static_cast<int>(a)));
  EXPECT_EQ(brute_force_jacobian_dim(six, 3, 3), 20);

  const std::vector<Int> w = {1, 1, 1, 3};
  const auto t = jacobian_poincare(w, 6);
  EXPECT_EQ(t.at(6), 19);
  EXPECT_EQ(t.at(6), oracle::product_coefficient({1, 1, 1}, {5, 5, 5}, 6));
  EXPECT_EQ(brute_force_jacobian_dim(w, 6, 0), 1);
  EXPECT_EQ(brute_force_jacobian_dim(w, 6, -4), 0);
  EXPECT_EQ(t.at(-1), 0);
  EXPECT_EQ(t.at(1000), 0);

  const std::vector<Int> two = {1, 1};
  EXPECT_EQ(kind_of([&] { jacobian_poincare(two, 1); }), ErrorKind::InvalidWeights);
  const auto one = jacobian_poincare(two, 2);
  EXPECT_EQ(one.coefficients, (std::vector<Int>{1}));
  const std::vector<Int> bad = {1, 2};
  EXPECT_EQ(kind_of([&] { jacobian_poincare(bad, 5); }), ErrorKind::InvalidWeights);
  EXPECT_EQ(kind_of([&] { brute_force_jacobian_dim(bad, 5, 1); }), ErrorKind::InvalidWeights);
}

TEST(Jacobian, SeriesMatchesBruteForce) {
  const auto systems = weight_systems();
  ASSERT_GT(systems.size(), 1000u);
  for (const auto& [w, D] : systems) {
    const auto s = jacobian_poincare(w, D);
    Int top = 0;
    for (Int wi : w) top += D - 2 * wi;
    EXPECT_EQ(s.top_degree(), top);
    for (Int a = -1; a <= top + 1; ++a) ASSERT_EQ(s.at(a), brute_force_jacobian_dim(w, D, a)) << "D=" << D << " a=" << a;
    // Gorenstein symmetry
    for (Int a = 0; a <= top; ++a) EXPECT_EQ(s.at(a), s.at(top - a));
  }
}

TEST(HodgeHypersurface, CubicFourfold) {
  const auto h = hodge_hypersurface(5, 3);
  EXPECT_EQ(h.dim_x(), 4);
  EXPECT_EQ(h.at(2, 2), 21);
  EXPECT_EQ(h.at(3, 1), 1);
  EXPECT_EQ(h.at(1, 3), 1);
  EXPECT_EQ(h.at(4, 0), 0);
  for (Int p = 0; p <= 4; ++p)
    if (p != 2) EXPECT_EQ(h.at(p, p), 1);
  EXPECT_EQ(h.middle_row(), (std::vector<Int>{0, 1, 21, 1, 0}));
  EXPECT_EQ(h.total(), 27);
}

TEST(HodgeHypersurface, Degenerate) {
  for (Int n = 2; n <= 8; ++n) {
    const auto h = hodge_hypersurface(n, 1);
    for (Int p = 0; p < n; ++p)
      for (Int q = 0; q < n; ++q) EXPECT_EQ(h.at(p, q), p == q ? 1 : 0);
  }
  const auto quadric = hodge_hypersurface(4, 2);
  EXPECT_EQ(quadric.total(), 4);
  EXPECT_EQ(kind_of([] { hodge_hypersurface(1, 3); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { hodge_hypersurface(3, 0); }), ErrorKind::InvalidParams);
}

TEST(HodgeHypersurface, MiddleRowMatchesMonomialCount) {
  for (Int n = 2; n <= 7; ++n) {
    for (Int d = 1; d <= 6; ++d) {
      const auto h = hodge_hypersurface(n, d);
      const Int dim = n - 1;
      for (Int q = 0; q <= dim; ++q) {
        Int want = truncated_count(n, d, (q + 1) * d - (n + 1));
        if (2 * q == dim) want += 1;
        EXPECT_EQ(h.at(dim - q, q), want) << "n=" << n << " d=" << d << " q=" << q;
      }
    }
  }
}

TEST(HodgeDoubleCover, Examples) {
  const auto k3 = hodge_double_cover(2, 3);
  EXPECT_EQ(k3.at(2, 0), 1);
  EXPECT_EQ(k3.at(0, 2), 1);
  EXPECT_EQ(k3.at(1, 1), 20);
  EXPECT_EQ(k3.at(1, 0), 0);
  EXPECT_EQ(k3.total(), 24);

  const auto x = hodge_double_cover(5, 2);
  EXPECT_EQ(x.at(4, 1), 1);
  EXPECT_EQ(x.at(1, 4), 1);
  EXPECT_EQ(kind_of([] { hodge_double_cover(1, 2); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { hodge_double_cover(3, 0); }), ErrorKind::InvalidParams);
}

TEST(HodgeDiamond, RejectsAsymmetric) {
  EXPECT_NO_THROW(HodgeDiamond(1, {1, 2, 2, 1}));
  EXPECT_THROW(HodgeDiamond(1, {1, 2, 3, 1}), Error);
  EXPECT_THROW(HodgeDiamond(1, {2, 0, 0, 2}), Error);
  EXPECT_THROW(HodgeDiamond(2, {1, 0, 0}), Error);
}

TEST(HodgeDiamond, SymmetricAndHkrPreservesTotal) {
  for (Int n = 2; n <= 9; ++n) {
    for (Int d = 1; d <= 6; ++d) {
      for (const auto& h : {hodge_hypersurface(n, d), hodge_double_cover(n, d)}) {
        const Int dim = h.dim_x();
        for (Int p = 0; p <= dim; ++p)
          for (Int q = 0; q <= dim; ++q) {
            EXPECT_EQ(h.at(p, q), h.at(q, p));
            EXPECT_EQ(h.at(p, q), h.at(dim - p, dim - q));
          }
        const auto hh = hkr(h);
        EXPECT_EQ(hh.total(), h.total());
        for (const auto& [k, v] : hh.dims) EXPECT_EQ(v, hh.at(-k));
      }
    }
  }
}

TEST(Hkr, Examples) {
  EXPECT_EQ(hkr(hodge_hypersurface(5, 3)).dims, (std::map<Int, Int>{{-2, 1}, {0, 25}, {2, 1}}));
  EXPECT_EQ(hkr(hodge_hypersurface(5, 1)).dims, (std::map<Int, Int>{{0, 5}}));
  EXPECT_EQ(hkr(hodge_double_cover(2, 3)).dims, (std::map<Int, Int>{{-2, 1}, {0, 22}, {2, 1}}));
}

TEST(HHComponent, Examples) {
  const auto p5 = builtin("pn", {{"n", 5}});
  const auto cubic = hh_component(hkr(hodge_hypersurface(5, 3)), p5, 3);
  EXPECT_EQ(cubic.dims, (std::map<Int, Int>{{-2, 1}, {0, 22}, {2, 1}}));

  const auto cover_x = hkr(hodge_double_cover(5, 2));
  const auto cover_a = hh_component(cover_x, p5, 2);
  EXPECT_EQ(cover_a.at(0), cover_x.at(0) - 4);
  for (const auto& [k, v] : cover_x.dims)
    if (k != 0) EXPECT_EQ(cover_a.at(k), v);

  EXPECT_EQ(hh_component(cover_x, p5, 6), cover_x);
  const HHProfile tiny{{{0, 2}}};
  EXPECT_EQ(kind_of([&] { hh_component(tiny, p5, 1); }), ErrorKind::NegativeDimension);
}

TEST(CyHHCheck, Examples) {
  const auto cubic4 = hh_pipeline(builtin("pn", {{"n", 5}}), ConstructionKind::Divisor, 3);
  ASSERT_TRUE(cubic4.check);
  EXPECT_TRUE(cubic4.check->nonvanishing);
  EXPECT_EQ(cubic4.check->value, 1);
  EXPECT_EQ(cubic4.check->cy_dimension, 2);
  EXPECT_EQ(cubic4.check->value_is_one, true);
  EXPECT_EQ(cubic4.hh_a.dims, (std::map<Int, Int>{{-2, 1}, {0, 22}, {2, 1}}));

  const auto cubic7 = hh_pipeline(builtin("pn", {{"n", 8}}), ConstructionKind::Divisor, 3);
  ASSERT_TRUE(cubic7.check);
  EXPECT_TRUE(cubic7.check->nonvanishing);
  EXPECT_EQ(cubic7.check->value, 1);
  EXPECT_EQ(cubic7.hh_a.at(-3), 1);

  const auto surface = analyze(builtin("pn", {{"n", 3}}), ConstructionKind::Divisor, 3);
  EXPECT_EQ(kind_of([&] { cy_hh_check(surface, {}); }), ErrorKind::NotIntegerCY);
  EXPECT_FALSE(hh_pipeline(builtin("pn", {{"n", 3}}), ConstructionKind::Divisor, 3).check);
}

TEST(HodgeForCase, Scope) {
  EXPECT_EQ(kind_of([] { hodge_for_case(builtin("gr", {{"k", 2}, {"n", 5}}), ConstructionKind::DoubleCover, 1); }),
            ErrorKind::HodgeUnsupported);
  EXPECT_EQ(kind_of([] { hodge_for_case(builtin("pn", {{"n", 5}}), ConstructionKind::RootStack, 2); }),
            ErrorKind::HodgeUnsupported);
  EXPECT_EQ(kind_of([] { hodge_for_case(builtin_weighted({1, 1, 1, 3}), ConstructionKind::Divisor, 6); }),
            ErrorKind::HodgeUnsupported);
  EXPECT_EQ(kind_of([] { hodge_for_case(builtin("pn", {{"n", 5}}), ConstructionKind::Divisor, 9); }),
            ErrorKind::DegreeOutOfRange);
  EXPECT_EQ(hodge_for_case(builtin_weighted({1, 1, 1, 1, 1, 1}), ConstructionKind::Divisor, 3),
            hodge_hypersurface(5, 3));
}

TEST(CyHHCheck, HoldsForProjectiveCases) {
  int checked = 0;
  for (Int n = 2; n <= 12; ++n) {
    const auto base = builtin("pn", {{"n", n}});
    for (auto kind : {ConstructionKind::Divisor, ConstructionKind::DoubleCover}) {
      for (Int d = 1; d <= n + 1; ++d) {
        const auto r = analyze(base, kind, d);
        if (!r.is_integer_cy) continue;
        const auto report = hh_pipeline(base, kind, d);
        ASSERT_TRUE(report.check);
        ++checked;
        const bool hyperplane = kind == ConstructionKind::Divisor && d == 1;
        EXPECT_EQ(report.check->component_vanishes, hyperplane) << "n=" << n << " d=" << d;
        if (!hyperplane) EXPECT_TRUE(report.check->nonvanishing) << "n=" << n << " d=" << d;
        EXPECT_EQ(report.hh_a.at(-report.check->cy_dimension), report.hh_a.at(report.check->cy_dimension));
      }
    }
  }
  EXPECT_GT(checked, 20);
}
