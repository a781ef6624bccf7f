#include "cycalc/constructions.hpp"

#include <string>

#include "cycalc/error.hpp"

namespace cycalc {

std::string_view to_string(ConstructionKind kind) noexcept {
  switch (kind) {
    case ConstructionKind::Divisor: return "Divisor";
    case ConstructionKind::DoubleCover: return "DoubleCover";
    case ConstructionKind::RootStack: return "RootStack";
  }
  return "?";
}

std::string_view cli_name(ConstructionKind kind) noexcept {
  switch (kind) {
    case ConstructionKind::Divisor: return "divisor";
    case ConstructionKind::DoubleCover: return "cover";
    case ConstructionKind::RootStack: return "root";
  }
  return "?";
}

ConstructionKind parse_construction(std::string_view name, Int cover_degree) {
  if (name == "divisor") return ConstructionKind::Divisor;
  if (name == "cover" || name == "root") {
    if (cover_degree != 2)
      throw Error(ErrorKind::UnsupportedConstruction,
                  "cyclic covers of degree " + std::to_string(cover_degree) +
                      " are not supported: their pushforward is not a spherical functor");
    return name == "cover" ? ConstructionKind::DoubleCover : ConstructionKind::RootStack;
  }
  throw Error(ErrorKind::InvalidParams, "unknown construction '" + std::string(name) + "'");
}

SubstitutionTable substitution_table(ConstructionKind kind, Int d, const LefschetzBase& base) {
  const Int m = base.length_m;
  const Int n = base.dim_m;
  if (d < 1 || d > m)
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(d) + " outside 1.." + std::to_string(m) + " for " + base.display_name);
  if (!base.omega_is_l_minus_m)
    throw Error(ErrorKind::HypothesisViolation, base.display_name + ": omega_M is not L_M^{-m}");
  if (kind == ConstructionKind::RootStack && !base.chi_stable)
    throw Error(ErrorKind::HypothesisViolation, base.display_name + ": decomposition is not chi-stable");

  const Int d_minus_m = checked::sub(d, m);
  SubstitutionTable t{kind, d, m, n, 0, {}};
  const Int n_plus_1 = checked::add(n, 1);
  auto& e = t.entries;
  switch (kind) {
    case ConstructionKind::Divisor:
      // T_X = L^{-d}[2], omega_X = L^{d-m}, dim X = N - 1; rho = [2], sigma = [N+1].
      t.dim_x = checked::sub(n, 1);
      e[Generator::SphericalTwistX] = NormalForm::make(2, -d);
      e[Generator::SerreX] = NormalForm::make(t.dim_x, d_minus_m);
      e[Generator::Rho] = NormalForm::make(2);
      e[Generator::Sigma] = NormalForm::make(n_plus_1);
      break;
    case ConstructionKind::DoubleCover:
      // T_X = tau L^{-d}[1], omega_X = L^{d-m}; rho = tau[1], sigma = tau[N+1].
      t.dim_x = n;
      e[Generator::SphericalTwistX] = NormalForm::make(1, -d, 1, 0);
      e[Generator::SerreX] = NormalForm::make(n, d_minus_m);
      e[Generator::Rho] = NormalForm::make(1, 0, 1, 0);
      e[Generator::Sigma] = NormalForm::make(n_plus_1, 0, 1, 0);
      break;
    case ConstructionKind::RootStack:
      // T_X = chi L^{-d}[1], omega_X = omega_{X/M} f^*omega_M = chi L^{d-m};
      // rho = chi[1], sigma = [N+1].
      t.dim_x = n;
      e[Generator::SphericalTwistX] = NormalForm::make(1, -d, 0, 1);
      e[Generator::SerreX] = NormalForm::make(n, d_minus_m, 0, 1);
      e[Generator::Rho] = NormalForm::make(1, 0, 0, 1);
      e[Generator::Sigma] = NormalForm::make(n_plus_1);
      break;
  }
  if (!is_consistent(t))
    throw Error(ErrorKind::InternalInconsistency,
                std::string(to_string(kind)) + " table violates rho = T L^d or sigma = S T L^m");
  return t;
}

bool is_consistent(const SubstitutionTable& table) {
  const auto& e = table.entries;
  if (!e.count(Generator::SphericalTwistX) || !e.count(Generator::SerreX) || !e.count(Generator::Rho) ||
      !e.count(Generator::Sigma))
    return false;
  const auto lt = [](Int k) { return NormalForm::make(0, k); };
  return e.at(Generator::Rho) == compose(e.at(Generator::SphericalTwistX), lt(table.d)) &&
         e.at(Generator::Sigma) ==
             compose(compose(e.at(Generator::SerreX), e.at(Generator::SphericalTwistX)), lt(table.m));
}

}  // namespace cycalc
