#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cycalc/checked.hpp"

namespace cycalc {

/// Symbols of the autoequivalence word algebra. Shift, LineTwist, Involution
/// and Character are base generators; the rest only acquire a meaning through
/// a construction's substitution table.
enum class Generator {
  Shift,
  LineTwist,
  SphericalTwistX,
  SerreX,
  Involution,
  Character,
  Rho,
  Sigma,
};

std::string_view to_string(Generator g) noexcept;
bool is_base_generator(Generator g) noexcept;
/// Involution and Character square to the identity.
bool is_order_two(Generator g) noexcept;

/// An element of Z x Z x Z/2 x Z/2: shift [k], line twist L^l, covering
/// involution tau, and the mu_2 character chi. All four pairwise commute.
struct NormalForm {
  Int shift = 0;
  Int ltwist = 0;
  int tau = 0;
  int chi = 0;

  static NormalForm identity() noexcept { return {}; }
  static NormalForm make(Int shift, Int ltwist = 0, Int tau = 0, Int chi = 0) noexcept {
    return {shift, ltwist, static_cast<int>(checked::mod2(tau)), static_cast<int>(checked::mod2(chi))};
  }

  bool is_identity() const noexcept { return *this == NormalForm{}; }
  bool is_pure_shift() const noexcept { return ltwist == 0 && tau == 0 && chi == 0; }

  bool operator==(const NormalForm&) const noexcept = default;
};

NormalForm compose(const NormalForm& a, const NormalForm& b);
NormalForm power(const NormalForm& a, Int k);
NormalForm inverse(const NormalForm& a);

/// Rendering used in reports, e.g. "τ^1 χ^0 [6]"; L^k appears only when k != 0.
std::string describe(const NormalForm& nf);
std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

struct Factor {
  Generator generator;
  Int exponent;
  bool operator==(const Factor&) const noexcept = default;
};

/// A formal product of generator powers, left to right. Empty means identity.
using Word = std::vector<Factor>;

/// Values for the non-base generators. Supplied by a construction.
using GeneratorTable = std::map<Generator, NormalForm>;

/// Substitutes every non-base generator from `table` and multiplies out.
/// Throws UnresolvedGenerator when a non-base generator has no entry.
NormalForm resolve(const Word& word, const GeneratorTable& table);

}  // namespace cycalc
