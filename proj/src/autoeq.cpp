#include "cycalc/autoeq.hpp"

#include <sstream>

#include "cycalc/error.hpp"

namespace cycalc {

std::string_view to_string(Generator g) noexcept {
  switch (g) {
    case Generator::Shift: return "Shift";
    case Generator::LineTwist: return "LineTwist";
    case Generator::SphericalTwistX: return "SphericalTwistX";
    case Generator::SerreX: return "SerreX";
    case Generator::Involution: return "Involution";
    case Generator::Character: return "Character";
    case Generator::Rho: return "Rho";
    case Generator::Sigma: return "Sigma";
  }
  return "?";
}

bool is_base_generator(Generator g) noexcept {
  return g == Generator::Shift || g == Generator::LineTwist || g == Generator::Involution ||
         g == Generator::Character;
}

bool is_order_two(Generator g) noexcept {
  return g == Generator::Involution || g == Generator::Character;
}

NormalForm compose(const NormalForm& a, const NormalForm& b) {
  return {checked::add(a.shift, b.shift), checked::add(a.ltwist, b.ltwist), a.tau ^ b.tau, a.chi ^ b.chi};
}

NormalForm power(const NormalForm& a, Int k) {
  const int odd = static_cast<int>(checked::mod2(k));
  return {checked::mul(a.shift, k), checked::mul(a.ltwist, k), a.tau & odd, a.chi & odd};
}

NormalForm inverse(const NormalForm& a) { return power(a, -1); }

std::string describe(const NormalForm& nf) {
  std::ostringstream os;
  os << "τ^" << nf.tau << " χ^" << nf.chi;
  if (nf.ltwist != 0) os << " L^" << nf.ltwist;
  os << " [" << nf.shift << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) { return os << describe(nf); }

namespace {

NormalForm base_value(Generator g) {
  switch (g) {
    case Generator::Shift: return NormalForm::make(1);
    case Generator::LineTwist: return NormalForm::make(0, 1);
    case Generator::Involution: return NormalForm::make(0, 0, 1);
    case Generator::Character: return NormalForm::make(0, 0, 0, 1);
    default: break;
  }
  throw Error(ErrorKind::InternalInconsistency, "not a base generator");
}

}  // namespace

NormalForm resolve(const Word& word, const GeneratorTable& table) {
  NormalForm result;
  for (const auto& [generator, exponent] : word) {
    NormalForm value;
    if (is_base_generator(generator)) {
      value = base_value(generator);
    } else {
      const auto it = table.find(generator);
      if (it == table.end())
        throw Error(ErrorKind::UnresolvedGenerator,
                    "no substitution for " + std::string(to_string(generator)));
      value = it->second;
    }
    result = compose(result, power(value, exponent));
  }
  return result;
}

}  // namespace cycalc
