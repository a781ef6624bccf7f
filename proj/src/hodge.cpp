#include "cycalc/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cycalc/error.hpp"

namespace cycalc {

namespace {

using Poly = std::vector<Int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked::add(out[i + j], checked::mul(a[i], b[j]));
  }
  return out;
}

// Exact division by a divisor whose leading coefficient is +-1.
Poly divide_exact(Poly num, const Poly& den) {
  const auto lead = den.back();
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error(ErrorKind::InternalInconsistency, "polynomial division degree");
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const Int coef = num[i] * lead;  // lead is +-1
    quot[i - dd] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      num[i - dd + j] = checked::sub(num[i - dd + j], checked::mul(coef, den[j]));
  }
  trim(num);
  if (!num.empty()) throw Error(ErrorKind::InternalInconsistency, "polynomial division left a remainder");
  return quot;
}

void check_weights(std::span<const Int> weights, Int degree) {
  if (weights.empty()) throw Error(ErrorKind::InvalidWeights, "no weights");
  for (Int w : weights) {
    if (w < 1) throw Error(ErrorKind::InvalidWeights, "weights must be positive");
    if (degree <= w)
      throw Error(ErrorKind::InvalidWeights,
                  "degree " + std::to_string(degree) + " must exceed every weight (" + std::to_string(w) + ")");
    if (degree % w != 0)
      throw Error(ErrorKind::InvalidWeights,
                  "weight " + std::to_string(w) + " does not divide degree " + std::to_string(degree));
  }
}

Int count_monomials(std::span<const Int> weights, std::span<const Int> caps, std::size_t i, Int remaining) {
  if (i == weights.size()) return remaining == 0 ? 1 : 0;
  Int total = 0;
  for (Int e = 0; e <= caps[i] && e * weights[i] <= remaining; ++e)
    total = checked::add(total, count_monomials(weights, caps, i + 1, remaining - e * weights[i]));
  return total;
}

}  // namespace

Int PoincareSeries::at(Int degree) const noexcept {
  if (degree < 0 || degree >= static_cast<Int>(coefficients.size())) return 0;
  return coefficients[static_cast<std::size_t>(degree)];
}

PoincareSeries jacobian_poincare(std::span<const Int> weights, Int degree) {
  check_weights(weights, degree);
  Poly acc = {1};
  for (Int w : weights) {
    Poly num(static_cast<std::size_t>(degree - w) + 1, 0);
    num.front() = 1;
    num.back() = -1;
    Poly den(static_cast<std::size_t>(w) + 1, 0);
    den.front() = 1;
    den.back() = -1;
    acc = multiply(acc, divide_exact(std::move(num), den));
  }
  trim(acc);
  return {acc};
}

Int brute_force_jacobian_dim(std::span<const Int> weights, Int degree, Int a) {
  check_weights(weights, degree);
  if (a < 0) return 0;
  // d/dx_i of the Fermat polynomial is x_i^{D/w_i - 1}.
  std::vector<Int> caps;
  for (Int w : weights) caps.push_back(degree / w - 2);
  return count_monomials(weights, caps, 0, a);
}

HodgeDiamond::HodgeDiamond(Int dim_x, std::vector<Int> values) : dim_(dim_x), h_(std::move(values)) {
  const auto side = static_cast<std::size_t>(dim_ + 1);
  if (dim_ < 0 || h_.size() != side * side) throw Error(ErrorKind::InternalInconsistency, "diamond shape");
  for (Int p = 0; p <= dim_; ++p) {
    for (Int q = 0; q <= dim_; ++q) {
      const Int v = at(p, q);
      if (v < 0 || v != at(q, p) || v != at(dim_ - p, dim_ - q))
        throw Error(ErrorKind::InternalInconsistency,
                    "Hodge symmetry fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  if (at(0, 0) != 1) throw Error(ErrorKind::InternalInconsistency, "h^{0,0} != 1");
}

Int HodgeDiamond::at(Int p, Int q) const {
  if (p < 0 || q < 0 || p > dim_ || q > dim_) return 0;
  return h_[static_cast<std::size_t>(p * (dim_ + 1) + q)];
}

Int HodgeDiamond::total() const {
  Int t = 0;
  for (Int v : h_) t = checked::add(t, v);
  return t;
}

std::vector<Int> HodgeDiamond::middle_row() const {
  std::vector<Int> row;
  for (Int q = 0; q <= dim_; ++q) row.push_back(at(dim_ - q, q));
  return row;
}

namespace {

// Lefschetz part plus a middle row given by `primitive(q)`.
template <typename Primitive>
HodgeDiamond assemble(Int dim, Primitive primitive) {
  const auto side = static_cast<std::size_t>(dim + 1);
  std::vector<Int> h(side * side, 0);
  for (Int p = 0; p <= dim; ++p) {
    for (Int q = 0; q <= dim; ++q) {
      Int v = p == q ? 1 : 0;
      if (p + q == dim) v = checked::add(v, primitive(q));
      h[static_cast<std::size_t>(p * (dim + 1) + q)] = v;
    }
  }
  return {dim, std::move(h)};
}

}  // namespace

HodgeDiamond hodge_weighted_hypersurface(std::span<const Int> weights, Int degree) {
  if (weights.size() < 3) throw Error(ErrorKind::InvalidWeights, "need at least three weights (dim X >= 1)");
  const auto series = jacobian_poincare(weights, degree);
  Int weight_sum = 0;
  for (Int w : weights) weight_sum = checked::add(weight_sum, w);
  const Int dim = static_cast<Int>(weights.size()) - 2;
  // H^{dim-q, q}_prim = R_{(q+1)D - sum w}
  return assemble(dim, [&](Int q) {
    return series.at(checked::sub(checked::mul(checked::add(q, 1), degree), weight_sum));
  });
}

HodgeDiamond hodge_hypersurface(Int n, Int d) {
  if (n < 2 || d < 1) throw Error(ErrorKind::InvalidParams, "hypersurface needs n >= 2 and d >= 1");
  if (d == 1) return assemble(n - 1, [](Int) { return Int{0}; });
  const std::vector<Int> weights(static_cast<std::size_t>(n + 1), 1);
  return hodge_weighted_hypersurface(weights, d);
}

HodgeDiamond hodge_double_cover(Int n, Int d) {
  if (n < 2 || d < 1) throw Error(ErrorKind::InvalidParams, "double cover needs n >= 2 and d >= 1");
  std::vector<Int> weights(static_cast<std::size_t>(n + 1), 1);
  weights.push_back(d);
  return hodge_weighted_hypersurface(weights, checked::mul(2, d));
}

Int HHProfile::at(Int k) const noexcept {
  const auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

Int HHProfile::total() const noexcept {
  Int t = 0;
  for (const auto& [k, v] : dims) t += v;
  return t;
}

HHProfile hkr(const HodgeDiamond& diamond) {
  HHProfile out;
  const Int n = diamond.dim_x();
  for (Int p = 0; p <= n; ++p) {
    for (Int q = 0; q <= n; ++q) {
      const Int v = diamond.at(p, q);
      if (v != 0) out.dims[q - p] = checked::add(out.dims[q - p], v);
    }
  }
  return out;
}

HHProfile hh_component(const HHProfile& hh_x, const LefschetzBase& base, Int d) {
  if (d < 1 || d > base.length_m)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(d) + " outside 1.." +
                                                 std::to_string(base.length_m));
  const Int blocks = checked::mul(base.length_m - d, base.rank_b);
  const Int left = checked::sub(hh_x.at(0), blocks);
  if (left < 0)
    throw Error(ErrorKind::NegativeDimension, "HH_0 = " + std::to_string(hh_x.at(0)) + " cannot hold " +
                                                  std::to_string(blocks) + " exceptional objects");
  HHProfile out = hh_x;
  if (left == 0)
    out.dims.erase(0);
  else
    out.dims[0] = left;
  return out;
}

namespace {

bool is_projective_space(const LefschetzBase& base) {
  if (base.id == "pn") return true;
  if (base.id != "wpn") return false;
  return std::all_of(base.parameters.begin(), base.parameters.end(), [](const auto& p) { return p.second == 1; });
}

}  // namespace

CheckReport cy_hh_check(const CaseResult& result, const HHProfile& hh_a) {
  if (result.error || !result.is_integer_cy || !result.cy_dimension)
    throw Error(ErrorKind::NotIntegerCY, result.base.display_name + " d=" + std::to_string(result.d) +
                                             " is not an integer Calabi-Yau case");
  CheckReport rep;
  rep.cy_dimension = result.cy_dimension->numerator();
  rep.value = hh_a.at(-rep.cy_dimension);
  rep.nonvanishing = rep.value > 0;
  rep.component_vanishes = hh_a.total() == 0;
  if (result.kind == ConstructionKind::Divisor && is_projective_space(result.base)) rep.value_is_one = rep.value == 1;
  return rep;
}

HodgeDiamond hodge_for_case(const LefschetzBase& base, ConstructionKind kind, Int d) {
  if (!base.hodge_supported || !is_projective_space(base))
    throw Error(ErrorKind::HodgeUnsupported,
                base.display_name + ": Hodge numbers are only computed over projective spaces");
  if (kind == ConstructionKind::RootStack)
    throw Error(ErrorKind::HodgeUnsupported, "root stacks carry twisted sectors that are not modeled");
  if (d < 1 || d > base.length_m)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(d) + " outside 1.." +
                                                 std::to_string(base.length_m));
  return kind == ConstructionKind::Divisor ? hodge_hypersurface(base.dim_m, d) : hodge_double_cover(base.dim_m, d);
}

HHReport hh_pipeline(const LefschetzBase& base, ConstructionKind kind, Int d) {
  auto diamond = hodge_for_case(base, kind, d);
  auto result = analyze(base, kind, d);
  auto hh_x = hkr(diamond);
  auto hh_a = hh_component(hh_x, base, d);
  std::optional<CheckReport> check;
  if (result.is_integer_cy) check = cy_hh_check(result, hh_a);
  return {std::move(result), std::move(diamond), std::move(hh_x), std::move(hh_a), check};
}

}  // namespace cycalc
