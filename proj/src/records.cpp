#include "cycalc/records.hpp"

#include <sstream>

#include "cycalc/error.hpp"

namespace cycalc {

namespace {

ConstructionKind kind_from_name(const std::string& name) {
  for (auto k : {ConstructionKind::Divisor, ConstructionKind::DoubleCover, ConstructionKind::RootStack})
    if (cli_name(k) == name) return k;
  throw Error(ErrorKind::ParseError, "unknown construction '" + name + "' in record");
}

}  // namespace

Json case_to_json(const CaseResult& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.base.parameters) params[name] = value;
  Json j;
  j["base_id"] = r.base.id;
  j["display_name"] = r.base.display_name;
  j["parameters"] = params;
  j["dim_m"] = r.base.dim_m;
  j["length_m"] = r.base.length_m;
  j["rank_b"] = r.base.rank_b;
  j["construction"] = cli_name(r.kind);
  j["degree"] = r.d;
  j["c"] = r.c;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["q0"] = r.q0;
  j["serre_power"] = Json{{"shift", r.serre_power_nf.shift},
                          {"ltwist", r.serre_power_nf.ltwist},
                          {"tau", r.serre_power_nf.tau},
                          {"chi", r.serre_power_nf.chi}};
  j["serre_text"] = r.serre_text();
  if (r.witness)
    j["witness"] = Json{{"p", r.witness->p}, {"q", r.witness->q}, {"provenance", kWitnessProvenance}};
  else
    j["witness"] = nullptr;
  j["cy_dimension"] = r.cy_dimension ? Json(r.cy_dimension->str()) : Json(nullptr);
  j["is_integer_cy"] = r.is_integer_cy;
  j["component_is_whole"] = r.component_is_whole;
  j["dim_x"] = r.dim_x;
  j["integrality_condition"] = r.integrality_condition;
  j["error"] = nullptr;
  return j;
}

CaseResult case_from_json(const Json& j) {
  CaseResult r;
  try {
    r.base.id = j.at("base_id").get<std::string>();
    r.base.display_name = j.at("display_name").get<std::string>();
    for (const auto& [name, value] : j.at("parameters").items()) r.base.parameters.emplace_back(name, value.get<Int>());
    r.base.dim_m = j.at("dim_m").get<Int>();
    r.base.length_m = j.at("length_m").get<Int>();
    r.base.rank_b = j.at("rank_b").get<Int>();
    r.kind = kind_from_name(j.at("construction").get<std::string>());
    r.d = j.at("degree").get<Int>();
    r.c = j.at("c").get<Int>();
    if (!j.at("error").is_null()) {
      r.error = j.at("error").get<std::string>();
      return r;
    }
    r.q0 = j.at("q0").get<Int>();
    const auto& nf = j.at("serre_power");
    r.serre_power_nf = NormalForm::make(nf.at("shift").get<Int>(), nf.at("ltwist").get<Int>(),
                                        nf.at("tau").get<Int>(), nf.at("chi").get<Int>());
    if (!j.at("witness").is_null())
      r.witness = FractionalCYWitness{j.at("witness").at("p").get<Int>(), j.at("witness").at("q").get<Int>()};
    if (!j.at("cy_dimension").is_null()) r.cy_dimension = Rational::parse(j.at("cy_dimension").get<std::string>());
    r.is_integer_cy = j.at("is_integer_cy").get<bool>();
    r.component_is_whole = j.at("component_is_whole").get<bool>();
    r.dim_x = j.at("dim_x").get<Int>();
    r.integrality_condition = j.at("integrality_condition").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("case record: ") + e.what());
  }
  return r;
}

std::vector<std::string> case_csv_header() {
  return {"base_id",  "display_name", "parameters",  "dim_m",        "length_m",       "rank_b",
          "construction", "degree",   "c",           "q0",           "shift",          "ltwist",
          "tau",      "chi",          "serre_text",  "witness_p",    "witness_q",      "cy_dimension",
          "is_integer_cy", "component_is_whole", "dim_x", "integrality_condition", "error"};
}

std::vector<std::string> case_csv_row(const CaseResult& r) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::vector<std::string> row = {r.base.id,
                                  r.base.display_name,
                                  render_parameters(r.base.parameters),
                                  std::to_string(r.base.dim_m),
                                  std::to_string(r.base.length_m),
                                  std::to_string(r.base.rank_b),
                                  std::string(cli_name(r.kind)),
                                  std::to_string(r.d),
                                  std::to_string(r.c)};
  if (r.error) {
    row.resize(case_csv_header().size());
    row.back() = *r.error;
    return row;
  }
  row.push_back(std::to_string(r.q0));
  row.push_back(std::to_string(r.serre_power_nf.shift));
  row.push_back(std::to_string(r.serre_power_nf.ltwist));
  row.push_back(std::to_string(r.serre_power_nf.tau));
  row.push_back(std::to_string(r.serre_power_nf.chi));
  row.push_back(r.serre_text());
  row.push_back(r.witness ? std::to_string(r.witness->p) : "");
  row.push_back(r.witness ? std::to_string(r.witness->q) : "");
  row.push_back(r.cy_dimension ? r.cy_dimension->str() : "");
  row.push_back(b(r.is_integer_cy));
  row.push_back(b(r.component_is_whole));
  row.push_back(std::to_string(r.dim_x));
  row.push_back(b(r.integrality_condition));
  row.emplace_back();
  return row;
}

Json profile_to_json(const HHProfile& profile) {
  Json j = Json::object();
  for (const auto& [k, v] : profile.dims) j[std::to_string(k)] = v;
  return j;
}

Json diamond_to_json(const HodgeDiamond& diamond) {
  Json rows = Json::array();
  const Int n = diamond.dim_x();
  for (Int p = 0; p <= n; ++p) {
    Json row = Json::array();
    for (Int q = 0; q <= n; ++q) row.push_back(diamond.at(p, q));
    rows.push_back(row);
  }
  return Json{{"dim_x", n}, {"h", rows}, {"middle_row", diamond.middle_row()}};
}

Json hh_to_json(const HHReport& report) {
  Json j = case_to_json(report.result);
  j["hodge"] = diamond_to_json(report.diamond);
  j["hh_x"] = profile_to_json(report.hh_x);
  j["hh_a"] = profile_to_json(report.hh_a);
  if (report.check) {
    const auto& c = *report.check;
    Json check{{"cy_dimension", c.cy_dimension},
               {"hh_minus_n", c.value},
               {"nonvanishing", c.nonvanishing},
               {"component_vanishes", c.component_vanishes}};
    check["value_is_one"] = c.value_is_one ? Json(*c.value_is_one) : Json(nullptr);
    j["check"] = check;
  } else {
    j["check"] = nullptr;
  }
  return j;
}

std::string render_document(const std::vector<Json>& records) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json list = Json::array();
  for (const auto& r : records) {
    Json tagged;
    tagged["schema_version"] = kSchemaVersion;
    for (const auto& [key, value] : r.items()) tagged[key] = value;
    list.push_back(std::move(tagged));
  }
  doc["records"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_escape(fields[i]);
    os << "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string render_parameters(const Parameters& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ';';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string render_profile(const HHProfile& profile) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : profile.dims) {
    os << (first ? "" : ", ") << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace cycalc
