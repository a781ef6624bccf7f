#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycalc/autoeq.hpp"
#include "cycalc/catalog.hpp"
#include "cycalc/constructions.hpp"
#include "cycalc/rational.hpp"

namespace cycalc {

/// S^q = [p]. A witness, not a claim that q is minimal.
struct FractionalCYWitness {
  Int p = 0;
  Int q = 1;
  bool operator==(const FractionalCYWitness&) const noexcept = default;
};

inline constexpr const char* kWitnessProvenance = "derived from theorem power d/c";

struct CaseResult {
  LefschetzBase base;
  ConstructionKind kind = ConstructionKind::Divisor;
  Int d = 1;
  Int c = 1;   // gcd(d, m)
  Int q0 = 1;  // d / c, the Serre power the theorem controls
  NormalForm serre_power_nf;
  std::optional<FractionalCYWitness> witness;
  std::optional<Rational> cy_dimension;
  bool is_integer_cy = false;
  bool component_is_whole = false;
  Int dim_x = 0;
  // The family-level statement "d | m (and m/d odd for covers, even for root
  // stacks)"; analyze() checks it agrees with is_integer_cy.
  bool integrality_condition = false;
  // Set instead of the fields above when the case could not be analyzed.
  std::optional<std::string> error;

  /// e.g. "S^1 = τ^0 χ^0 [2]"
  std::string serre_text() const;
};

/// S_{A_X}^{d/c} = rho^{-m/c} sigma^{d/c}, resolved through the construction's
/// substitution table.
NormalForm serre_power(const LefschetzBase& base, ConstructionKind kind, Int d);

/// The same power read off the per-construction closed formulas, without the
/// word algebra.
NormalForm closed_form(const LefschetzBase& base, ConstructionKind kind, Int d);

/// nf is S^{q0}. Parities are cleared by squaring, which doubles q.
FractionalCYWitness extract_witness(const NormalForm& nf, Int q0);

CaseResult analyze(const LefschetzBase& base, ConstructionKind kind, Int d);

struct SweepBounds {
  Int max_n = 30;  // pn, gr, ogr2, igr2
  Int max_s = 5;
  Int max_weight_sum = 30;
  // Families to instantiate. Default leaves out wpn: the weighted lists are
  // long and mostly reduce to known cases.
  std::vector<std::string> families = default_families();
  std::vector<ConstructionKind> kinds = {ConstructionKind::Divisor, ConstructionKind::DoubleCover};
  // Instances flagged as linear sections of another entry (IGr(2,5) in Gr(2,5)).
  bool include_variants = false;
  // User catalog entries, swept with d in 1..m.
  std::vector<LefschetzBase> extra_bases;

  static std::vector<std::string> default_families();
  /// Every builtin family, construction and variant.
  static SweepBounds full();
};

struct CaseFilter {
  enum class Mode { None, IntegerCY, CYDimension };
  Mode mode = Mode::None;
  Rational cy_dim;
  // Keep d = m cases (A_X = D(X)) in filtered output.
  bool include_whole = false;

  static CaseFilter none() { return {}; }
  static CaseFilter integer_cy() { return {Mode::IntegerCY, {}, false}; }
  static CaseFilter dimension(Rational value) { return {Mode::CYDimension, value, false}; }

  bool accepts(const CaseResult& r) const;
};

/// Every base instance the bounds describe, in sort order.
std::vector<LefschetzBase> enumerate_bases(const SweepBounds& bounds);

/// Analyzes every (base, kind, d) with 1 <= d <= m. Per-case failures are
/// recorded in CaseResult::error. Output order is the sort key
/// (base id, parameters, kind, d) regardless of scheduling.
std::vector<CaseResult> sweep(const CaseFilter& filter, const SweepBounds& bounds);

/// Total order used by sweep().
bool case_less(const CaseResult& a, const CaseResult& b);

struct VerifyOptions {
  // Negates the closed-form shift. Exists so the mismatch path can be tested.
  bool inject_fault = false;
};

struct VerifyReport {
  Int cases = 0;
  Int mismatches = 0;
  std::vector<std::string> mismatch_samples;  // first few, for the report
  Int integer_cy_cases = 0;
  Int dimension_bound_violations = 0;  // n_cy > dim X on a proper component
  Int negative_cy_cases = 0;           // observed, not an error
};

/// serre_power against closed_form over every case in bounds, plus the
/// dimension bound and nonnegativity observations.
VerifyReport verify(const SweepBounds& bounds, const VerifyOptions& options = {});

}  // namespace cycalc
