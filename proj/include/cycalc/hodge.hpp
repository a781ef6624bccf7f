#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cycalc/serre_engine.hpp"

namespace cycalc {

/// Graded dimensions of a Jacobian ring; index = degree, trailing zeros trimmed.
struct PoincareSeries {
  std::vector<Int> coefficients;

  /// Zero outside the stored range.
  Int at(Int degree) const noexcept;
  Int top_degree() const noexcept { return static_cast<Int>(coefficients.size()) - 1; }
  bool operator==(const PoincareSeries&) const noexcept = default;
};

/// prod_i (1 - t^{D - w_i}) / (1 - t^{w_i}): the Jacobian ring of the Fermat
/// hypersurface of degree D in P(w). Requires w_i | D and D > w_i.
PoincareSeries jacobian_poincare(std::span<const Int> weights, Int degree);

/// Counts monomials prod x_i^{e_i} of weighted degree a with
/// e_i <= D / w_i - 2 by enumeration. Independent of jacobian_poincare.
Int brute_force_jacobian_dim(std::span<const Int> weights, Int degree, Int a);

class HodgeDiamond {
 public:
  /// Validates h^{p,q} = h^{q,p} = h^{n-p,n-q} and h^{0,0} = 1.
  HodgeDiamond(Int dim_x, std::vector<Int> values);

  Int dim_x() const noexcept { return dim_; }
  Int at(Int p, Int q) const;
  Int total() const;
  /// h^{n,0}, h^{n-1,1}, ..., h^{0,n}.
  std::vector<Int> middle_row() const;

  bool operator==(const HodgeDiamond&) const noexcept = default;

 private:
  Int dim_;
  std::vector<Int> h_;  // row-major (p, q)
};

/// Quasi-smooth degree-D hypersurface in P(w0..wn), Fermat member. Off the
/// middle row only the hyperplane powers h^{p,p} = 1 survive; the middle row
/// is primitive cohomology from the Jacobian ring plus the hyperplane class.
HodgeDiamond hodge_weighted_hypersurface(std::span<const Int> weights, Int degree);

/// Smooth degree-d hypersurface in P^n (n >= 2). d = 1 gives P^{n-1}.
HodgeDiamond hodge_hypersurface(Int n, Int d);

/// Double cover of P^n branched in a smooth degree-2d divisor, realized as a
/// degree-2d hypersurface in P(1^{n+1}, d).
HodgeDiamond hodge_double_cover(Int n, Int d);

/// Hochschild homology dimensions by degree. Only nonzero degrees stored.
struct HHProfile {
  std::map<Int, Int> dims;

  Int at(Int k) const noexcept;
  Int total() const noexcept;
  bool operator==(const HHProfile&) const noexcept = default;
};

/// HH_k = sum over q - p = k of h^{p,q}.
HHProfile hkr(const HodgeDiamond& diamond);

/// Removes the (m - d) exceptional blocks of rank rank_b, which contribute
/// only in degree 0.
HHProfile hh_component(const HHProfile& hh_x, const LefschetzBase& base, Int d);

struct CheckReport {
  Int cy_dimension = 0;
  Int value = 0;                    // HH_{-n}(A) = HH^0(A)
  bool nonvanishing = false;        // value > 0
  bool component_vanishes = false;  // HH_*(A) = 0 entirely
  // Only for divisors in P^n: is HH^0(A) one-dimensional?
  std::optional<bool> value_is_one;
};

/// Requires an integer-CY case; throws NotIntegerCY otherwise.
CheckReport cy_hh_check(const CaseResult& result, const HHProfile& hh_a);

/// Diamond of X for a case whose base supports Hodge computations (pn, or wpn
/// with unit weights). Root stacks and other bases throw HodgeUnsupported.
HodgeDiamond hodge_for_case(const LefschetzBase& base, ConstructionKind kind, Int d);

struct HHReport {
  CaseResult result;
  HodgeDiamond diamond;
  HHProfile hh_x;
  HHProfile hh_a;
  std::optional<CheckReport> check;  // integer-CY cases only
};

HHReport hh_pipeline(const LefschetzBase& base, ConstructionKind kind, Int d);

}  // namespace cycalc
