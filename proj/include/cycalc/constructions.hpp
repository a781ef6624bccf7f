#pragma once

#include <string_view>

#include "cycalc/autoeq.hpp"
#include "cycalc/catalog.hpp"

namespace cycalc {

/// The three spherical pushforwards f_*: D(X) -> D(M).
///  Divisor:     X a divisor in |L_M^d|
///  DoubleCover: X -> M a double cover branched in |L_M^{2d}|
///  RootStack:   the mu_2 quotient of such a cover
enum class ConstructionKind { Divisor, DoubleCover, RootStack };

std::string_view to_string(ConstructionKind kind) noexcept;
/// CLI spelling: "divisor", "cover", "root".
std::string_view cli_name(ConstructionKind kind) noexcept;
/// Parses the CLI spelling. A cyclic cover of degree other than 2 is rejected
/// with UnsupportedConstruction: its pushforward is not spherical.
ConstructionKind parse_construction(std::string_view name, Int cover_degree = 2);

struct SubstitutionTable {
  ConstructionKind kind;
  Int d;
  Int m;
  Int dim_m;
  Int dim_x;
  GeneratorTable entries;  // SphericalTwistX, SerreX, Rho, Sigma

  const NormalForm& at(Generator g) const { return entries.at(g); }
};

/// Twist, Serre functor, rho and sigma of X expressed in [1], L_X, tau, chi.
/// Requires 1 <= d <= m and omega_M = L_M^{-m}; root stacks also need the
/// decomposition to be chi-stable.
SubstitutionTable substitution_table(ConstructionKind kind, Int d, const LefschetzBase& base);

/// rho = T_X L^d and sigma = S_X T_X L^m hold for the stored entries.
bool is_consistent(const SubstitutionTable& table);

}  // namespace cycalc
