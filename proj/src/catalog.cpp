#include "cycalc/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cycalc/error.hpp"

namespace cycalc {

using ordered_json = nlohmann::ordered_json;

bool LefschetzBase::same_record(const LefschetzBase& o) const {
  return id == o.id && display_name == o.display_name && dim_m == o.dim_m && length_m == o.length_m &&
         rank_b == o.rank_b && line_bundle_note == o.line_bundle_note &&
         omega_is_l_minus_m == o.omega_is_l_minus_m && parameters == o.parameters && chi_stable == o.chi_stable;
}

const std::vector<std::string>& builtin_ids() {
  static const std::vector<std::string> ids = {"pn",     "wpn",   "quadric4s2", "gr",      "ogr2", "sgr36",
                                               "ogr510", "g2gr",  "igr2",       "gr26_L2", "p3xp3"};
  return ids;
}

FamilyFormulas family_formulas(std::string_view id) {
  if (id == "pn") return {"n", "n+1", "1", "n>=1"};
  if (id == "wpn") return {"n", "w0+...+wn", "1", "w0..wn>=1"};
  if (id == "quadric4s2") return {"4s+2", "2", "2s+2", "s>=1"};
  if (id == "gr") return {"k(n-k)", "n", "C(n,k)/n", "1<=k<n, gcd(k,n)=1"};
  if (id == "ogr2") return {"4n-5", "2n-2", "n", "n>=2"};
  if (id == "sgr36") return {"6", "4", "2", "-"};
  if (id == "ogr510") return {"10", "8", "2", "-"};
  if (id == "g2gr") return {"5", "3", "2", "-"};
  if (id == "igr2") return {"4n-3", "2n", "n", "n>=2"};
  if (id == "gr26_L2") return {"8", "3", "5", "-"};
  if (id == "p3xp3") return {"6", "4", "4", "-"};
  throw Error(ErrorKind::UnknownBase, "no builtin base '" + std::string(id) + "'");
}

Int fonarev_rank(Int k, Int n) {
  if (k < 1 || n <= k) throw Error(ErrorKind::InvalidParams, "fonarev_rank needs 1 <= k < n");
  if (checked::gcd(k, n) != 1) throw Error(ErrorKind::InvalidParams, "fonarev_rank needs gcd(k, n) = 1");
  if (k == 1) return 1;

  // Row p (1-based) admits 0 <= alpha_p <= bound(p); rows weakly decrease.
  auto bound = [&](Int p) { return (checked::mul(n - k, k - p) - 1) / k; };

  // ways[v]: fillings of rows p..k-1 with alpha_p = v.
  std::vector<Int> ways(static_cast<std::size_t>(bound(k - 1)) + 1, 1);
  for (Int p = k - 2; p >= 1; --p) {
    std::vector<Int> prefix(ways.size() + 1, 0);
    for (std::size_t u = 0; u < ways.size(); ++u) prefix[u + 1] = checked::add(prefix[u], ways[u]);
    std::vector<Int> next(static_cast<std::size_t>(bound(p)) + 1);
    for (std::size_t v = 0; v < next.size(); ++v) next[v] = prefix[std::min(v + 1, prefix.size() - 1)];
    ways = std::move(next);
  }
  Int total = 0;
  for (Int w : ways) total = checked::add(total, w);
  return total;
}

namespace {

Int take(const Parameters& params, std::string_view name, std::string_view id) {
  for (const auto& [key, value] : params)
    if (key == name) return value;
  throw Error(ErrorKind::InvalidParams, std::string(id) + " requires parameter '" + std::string(name) + "'");
}

void expect_names(const Parameters& params, std::initializer_list<std::string_view> names, std::string_view id) {
  for (const auto& [key, value] : params) {
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw Error(ErrorKind::InvalidParams, std::string(id) + " does not take parameter '" + key + "'");
  }
  for (auto name : names) take(params, name, id);
}

std::string join(const std::vector<Int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

LefschetzBase fixed(std::string id, std::string name, Int dim, Int length, Int rank, std::string note) {
  LefschetzBase b;
  b.id = std::move(id);
  b.display_name = std::move(name);
  b.dim_m = dim;
  b.length_m = length;
  b.rank_b = rank;
  b.line_bundle_note = std::move(note);
  return b;
}

}  // namespace

LefschetzBase builtin_weighted(std::vector<Int> weights) {
  if (weights.size() < 2) throw Error(ErrorKind::InvalidParams, "wpn needs at least two weights");
  for (Int w : weights)
    if (w < 1) throw Error(ErrorKind::InvalidParams, "wpn weights must be positive");
  std::sort(weights.begin(), weights.end());
  Int sum = 0;
  for (Int w : weights) sum = checked::add(sum, w);
  const Int n = static_cast<Int>(weights.size()) - 1;
  auto b = fixed("wpn", "P(" + join(weights) + ")", n, sum, 1, "O(1)");
  for (std::size_t i = 0; i < weights.size(); ++i) b.parameters.emplace_back("w" + std::to_string(i), weights[i]);
  b.hodge_supported = true;
  return b;
}

LefschetzBase builtin(std::string_view id, const Parameters& params) {
  const std::string sid(id);
  if (id == "pn") {
    expect_names(params, {"n"}, id);
    const Int n = take(params, "n", id);
    if (n < 1) throw Error(ErrorKind::InvalidParams, "pn needs n >= 1");
    auto b = fixed(sid, "P^" + std::to_string(n), n, checked::add(n, 1), 1, "O(1)");
    b.parameters = {{"n", n}};
    b.hodge_supported = true;
    return b;
  }
  if (id == "wpn") {
    std::vector<Int> weights;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i].first != "w" + std::to_string(i))
        throw Error(ErrorKind::InvalidParams, "wpn parameters must be w0, w1, ... in order");
      weights.push_back(params[i].second);
    }
    if (weights.empty()) throw Error(ErrorKind::InvalidParams, "wpn needs weights");
    return builtin_weighted(std::move(weights));
  }
  if (id == "quadric4s2") {
    expect_names(params, {"s"}, id);
    const Int s = take(params, "s", id);
    if (s < 1) throw Error(ErrorKind::InvalidParams, "quadric4s2 needs s >= 1");
    const Int dim = checked::add(checked::mul(4, s), 2);
    auto b = fixed(sid, "Q^" + std::to_string(dim), dim, 2, checked::add(checked::mul(2, s), 2),
                   "O(" + std::to_string(2 * s + 1) + "); B = <O, ..., O(2s), S(2s)> with S a spinor bundle");
    b.parameters = {{"s", s}};
    return b;
  }
  if (id == "gr") {
    expect_names(params, {"k", "n"}, id);
    const Int k = take(params, "k", id);
    const Int n = take(params, "n", id);
    if (k < 1 || n <= k) throw Error(ErrorKind::InvalidParams, "gr needs 1 <= k < n");
    if (checked::gcd(k, n) != 1) throw Error(ErrorKind::InvalidParams, "gr needs gcd(k, n) = 1");
    auto b = fixed(sid, "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")", checked::mul(k, n - k), n,
                   fonarev_rank(k, n), "O(1); B generated by Schur functors of U^*");
    b.parameters = {{"k", k}, {"n", n}};
    return b;
  }
  if (id == "ogr2") {
    expect_names(params, {"n"}, id);
    const Int n = take(params, "n", id);
    if (n < 2) throw Error(ErrorKind::InvalidParams, "ogr2 needs n >= 2");
    // dim OGr(2, 2n+1) = 2(2n+1-2) - 3
    auto b = fixed(sid, "OGr(2," + std::to_string(2 * n + 1) + ")", checked::sub(checked::mul(4, n), 5),
                   checked::sub(checked::mul(2, n), 2), n, "O(1); B = <O, U^*, ..., S^{n-2}U^*, S>");
    b.parameters = {{"n", n}};
    return b;
  }
  if (id == "igr2") {
    expect_names(params, {"n"}, id);
    const Int n = take(params, "n", id);
    if (n < 2) throw Error(ErrorKind::InvalidParams, "igr2 needs n >= 2");
    // Hyperplane section of Gr(2, 2n+1): 2(2n-1) - 1.
    auto b = fixed(sid, "IGr(2," + std::to_string(2 * n + 1) + ")", checked::sub(checked::mul(4, n), 3),
                   checked::mul(2, n), n, "O(1); B = <O, U^*, ..., S^{n-1}U^*>");
    b.parameters = {{"n", n}};
    if (n == 2) b.section_of = "gr(2,5)";
    return b;
  }
  if (!params.empty() &&
      (id == "sgr36" || id == "ogr510" || id == "g2gr" || id == "gr26_L2" || id == "p3xp3"))
    throw Error(ErrorKind::InvalidParams, sid + " takes no parameters");
  if (id == "sgr36") return fixed(sid, "SGr(3,6)", 6, 4, 2, "O(1); B = <O, U^*>");
  if (id == "ogr510") return fixed(sid, "OGr+(5,10)", 10, 8, 2, "O(1); B = <O, U^*>");
  if (id == "g2gr") return fixed(sid, "G2Gr", 5, 3, 2, "O(1); B = <O, U^*>");
  if (id == "gr26_L2")
    return fixed(sid, "Gr(2,6)", 8, 3, 5, "O(2); B = <O, U^*, S^2U^*, O(1), U^*(1)>");
  if (id == "p3xp3") {
    auto b = fixed(sid, "P^3 x P^3", 6, 4, 4, "O(1,1); B = <O, O(1,0), O(0,1), O(1,1)>-type block of rank 4");
    b.provenance = "implied";
    return b;
  }
  throw Error(ErrorKind::UnknownBase, "no builtin base '" + sid + "'");
}

Parameters representative_parameters(std::string_view id) {
  if (id == "pn") return {{"n", 5}};
  if (id == "wpn") return {{"w0", 1}, {"w1", 1}, {"w2", 1}, {"w3", 1}, {"w4", 1}, {"w5", 3}};
  if (id == "quadric4s2") return {{"s", 1}};
  if (id == "gr") return {{"k", 3}, {"n", 10}};
  if (id == "ogr2") return {{"n", 3}};
  if (id == "igr2") return {{"n", 3}};
  family_formulas(id);  // rejects unknown ids
  return {};
}

std::vector<LefschetzBase> builtin_representatives() {
  std::vector<LefschetzBase> out;
  for (const auto& id : builtin_ids()) {
    auto b = builtin(id, representative_parameters(id));
    if (!b.omega_is_l_minus_m)
      throw Error(ErrorKind::InternalInconsistency, "builtin " + id + " violates omega = L^{-m}");
    out.push_back(std::move(b));
  }
  return out;
}

void validate(const LefschetzBase& base) {
  auto fail = [](const std::string& field, const std::string& why) {
    throw Error(ErrorKind::ValidationError, "field '" + field + "': " + why);
  };
  if (base.id.empty()) fail("id", "must be non-empty");
  if (base.dim_m < 0) fail("dim_m", "must be >= 0");
  if (base.length_m < 1) fail("length_m", "must be >= 1");
  if (base.rank_b < 1) fail("rank_b", "must be >= 1");
  std::set<std::string> names;
  for (const auto& [name, value] : base.parameters)
    if (!names.insert(name).second) fail("parameters", "duplicate name '" + name + "'");
}

namespace {

ordered_json to_record(const LefschetzBase& b) {
  ordered_json params = ordered_json::object();
  for (const auto& [name, value] : b.parameters) params[name] = value;
  return ordered_json{{"id", b.id},
                      {"display_name", b.display_name},
                      {"dim_m", b.dim_m},
                      {"length_m", b.length_m},
                      {"rank_b", b.rank_b},
                      {"line_bundle_note", b.line_bundle_note},
                      {"omega_is_l_minus_m", b.omega_is_l_minus_m},
                      {"parameters", params},
                      {"chi_stable", b.chi_stable}};
}

Int integer_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::ValidationError, std::string("field '") + key + "': expected integer");
  return v.get<Int>();
}

std::string string_field(const ordered_json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_string()) throw Error(ErrorKind::ValidationError, std::string("field '") + key + "': expected string");
  return v.get<std::string>();
}

LefschetzBase from_record(const ordered_json& obj) {
  static const std::set<std::string> required = {"id",     "display_name",     "dim_m",
                                                 "length_m", "rank_b",         "line_bundle_note",
                                                 "omega_is_l_minus_m", "parameters"};
  if (!obj.is_object()) throw Error(ErrorKind::ValidationError, "catalog entries must be objects");
  for (const auto& [key, value] : obj.items()) {
    if (!required.count(key) && key != "chi_stable")
      throw Error(ErrorKind::ValidationError, "field '" + key + "': unknown key");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) throw Error(ErrorKind::ValidationError, "field '" + key + "': missing");

  LefschetzBase b;
  b.id = string_field(obj, "id");
  b.display_name = string_field(obj, "display_name");
  b.dim_m = integer_field(obj, "dim_m");
  b.length_m = integer_field(obj, "length_m");
  b.rank_b = integer_field(obj, "rank_b");
  b.line_bundle_note = string_field(obj, "line_bundle_note");
  if (!obj.at("omega_is_l_minus_m").is_boolean())
    throw Error(ErrorKind::ValidationError, "field 'omega_is_l_minus_m': expected boolean");
  b.omega_is_l_minus_m = obj.at("omega_is_l_minus_m").get<bool>();
  if (obj.contains("chi_stable")) {
    if (!obj.at("chi_stable").is_boolean())
      throw Error(ErrorKind::ValidationError, "field 'chi_stable': expected boolean");
    b.chi_stable = obj.at("chi_stable").get<bool>();
  }
  const auto& params = obj.at("parameters");
  if (!params.is_object()) throw Error(ErrorKind::ValidationError, "field 'parameters': expected object");
  for (const auto& [name, value] : params.items()) {
    if (!value.is_number_integer())
      throw Error(ErrorKind::ValidationError, "field 'parameters." + name + "': expected integer");
    b.parameters.emplace_back(name, value.get<Int>());
  }
  b.hodge_supported = false;
  validate(b);
  return b;
}

}  // namespace

std::vector<LefschetzBase> parse_catalog(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, "catalog file must hold a JSON array");
  std::vector<LefschetzBase> out;
  std::set<std::string> seen;
  for (const auto& entry : doc) {
    auto b = from_record(entry);
    if (!seen.insert(b.id).second) throw Error(ErrorKind::ValidationError, "field 'id': duplicate '" + b.id + "'");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<LefschetzBase> load_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open catalog file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::string export_catalog(const std::vector<LefschetzBase>& bases) {
  ordered_json doc = ordered_json::array();
  for (const auto& b : bases) doc.push_back(to_record(b));
  return doc.dump(2) + "\n";
}

Catalog Catalog::with_user_entries(std::vector<LefschetzBase> entries) {
  const auto& ids = builtin_ids();
  std::set<std::string> seen;
  for (const auto& e : entries) {
    validate(e);
    if (std::find(ids.begin(), ids.end(), e.id) != ids.end())
      throw Error(ErrorKind::ValidationError, "field 'id': '" + e.id + "' collides with a builtin base");
    if (!seen.insert(e.id).second) throw Error(ErrorKind::ValidationError, "field 'id': duplicate '" + e.id + "'");
  }
  Catalog c;
  c.user_ = std::move(entries);
  return c;
}

Catalog Catalog::from_environment() {
  const char* path = std::getenv("CYCALC_CATALOG");
  if (path == nullptr || *path == '\0') return {};
  return with_user_entries(load_catalog_file(path));
}

LefschetzBase Catalog::lookup(std::string_view id, const Parameters& params) const {
  for (const auto& e : user_) {
    if (e.id == id) {
      if (!params.empty()) throw Error(ErrorKind::InvalidParams, "user base '" + e.id + "' takes no parameters");
      return e;
    }
  }
  return builtin(id, params);
}

}  // namespace cycalc
