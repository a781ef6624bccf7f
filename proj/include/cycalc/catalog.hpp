#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycalc/checked.hpp"

namespace cycalc {

/// Ordered (name, value) pairs. Order is significant: it is the sort key
/// used by sweeps and the key order written to JSON.
using Parameters = std::vector<std::pair<std::string, Int>>;

/// A variety or stack M with a rectangular Lefschetz decomposition
/// D(M) = <B, B(1), ..., B(m-1)> with respect to L_M.
struct LefschetzBase {
  std::string id;
  std::string display_name;
  Int dim_m = 0;
  Int length_m = 1;
  Int rank_b = 1;
  std::string line_bundle_note;
  bool omega_is_l_minus_m = true;
  Parameters parameters;
  // B (x) chi = B; required by root-stack constructions.
  bool chi_stable = true;

  // Derived from the family, not serialized.
  bool hodge_supported = false;
  // "implied" when the entry is used by a case list but not stated as a
  // catalog item.
  std::string provenance;
  // Non-empty when this instance is a linear section of another catalog
  // entry and its cases are variants of that entry's cases.
  std::string section_of;

  /// Serialized fields only.
  bool same_record(const LefschetzBase& o) const;
};

/// Builtin family ids in catalog order.
const std::vector<std::string>& builtin_ids();

/// Human-readable dim / m / rank formulas for a builtin family.
struct FamilyFormulas {
  std::string dim;
  std::string length;
  std::string rank;
  std::string parameters;
};
FamilyFormulas family_formulas(std::string_view id);

/// Instantiates a builtin family. Fixed entries take no parameters; wpn takes
/// w0..wn (stored sorted ascending).
LefschetzBase builtin(std::string_view id, const Parameters& params = {});
LefschetzBase builtin_weighted(std::vector<Int> weights);

/// The instance each family is shown with by `catalog`.
Parameters representative_parameters(std::string_view id);
std::vector<LefschetzBase> builtin_representatives();

/// Number of Young diagrams with at most k-1 rows whose p-th row is strictly
/// shorter than (n-k)(k-p)/k. Requires 1 <= k < n and gcd(k, n) = 1.
Int fonarev_rank(Int k, Int n);

/// Throws ValidationError naming the offending field.
void validate(const LefschetzBase& base);

/// JSON array of base records. Unknown keys are rejected; duplicate ids too.
std::vector<LefschetzBase> parse_catalog(std::string_view json_text);
std::vector<LefschetzBase> load_catalog_file(const std::filesystem::path& path);
std::string export_catalog(const std::vector<LefschetzBase>& bases);

/// Builtins plus optional user-supplied entries keyed by id.
class Catalog {
 public:
  Catalog() = default;

  /// Rejects ids that collide with builtins or with each other.
  static Catalog with_user_entries(std::vector<LefschetzBase> entries);
  /// Reads CYCALC_CATALOG when set.
  static Catalog from_environment();

  LefschetzBase lookup(std::string_view id, const Parameters& params = {}) const;
  const std::vector<LefschetzBase>& user_entries() const noexcept { return user_; }

 private:
  std::vector<LefschetzBase> user_;
};

}  // namespace cycalc
