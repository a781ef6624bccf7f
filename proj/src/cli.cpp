#include "cycalc/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cycalc/catalog.hpp"
#include "cycalc/error.hpp"
#include "cycalc/hodge.hpp"
#include "cycalc/records.hpp"
#include "cycalc/serre_engine.hpp"

namespace cycalc {

namespace {

// Code points, so τ and χ count as one column.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], display_width(r[i]));
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    std::string text;
    for (std::size_t i = 0; i < r.size(); ++i) {
      text += r[i];
      if (i + 1 < r.size()) text += std::string(widths[i] - display_width(r[i]) + 2, ' ');
    }
    os << text << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return os.str();
}

struct BaseFlags {
  std::string base;
  std::optional<Int> n, k, s;
  std::vector<Int> weights;
  std::string construction = "divisor";
  Int cover_degree = 2;
  Int degree = 0;

  void attach(CLI::App* cmd, bool require_construction) {
    cmd->add_option("--base", base, "Base id (see `catalog`)");
    cmd->add_option("--n", n, "Family parameter n");
    cmd->add_option("--k", k, "Family parameter k (gr)");
    cmd->add_option("--s", s, "Family parameter s (quadric4s2)");
    cmd->add_option("--weights", weights, "Comma-separated weights (wpn)")->delimiter(',');
    auto* c = cmd->add_option("--construction", construction, "divisor | cover | root")
                  ->check(CLI::IsMember({"divisor", "cover", "root"}));
    if (require_construction) c->required();
    cmd->add_option("--cover-degree", cover_degree, "Degree of the cyclic cover (only 2 is spherical)");
    cmd->add_option("--degree", degree, "Degree d, 1 <= d <= m")->required();
  }

  Parameters parameters() const {
    Parameters p;
    if (!weights.empty()) {
      for (std::size_t i = 0; i < weights.size(); ++i) p.emplace_back("w" + std::to_string(i), weights[i]);
    }
    if (k) p.emplace_back("k", *k);
    if (n) p.emplace_back("n", *n);
    if (s) p.emplace_back("s", *s);
    return p;
  }

  LefschetzBase resolve_base(const Catalog& catalog) const {
    if (base.empty()) throw Error(ErrorKind::InvalidParams, "--base is required");
    return catalog.lookup(base, parameters());
  }

  ConstructionKind kind() const { return parse_construction(construction, cover_degree); }
};

struct BoundsFlags {
  Int max_n = 30;
  Int max_s = 5;
  Int max_weight_sum = 30;
  std::vector<std::string> families;
  std::vector<std::string> constructions;
  bool include_variants = false;
  bool all = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "Upper bound on n for pn, gr, ogr2, igr2")->capture_default_str();
    cmd->add_option("--max-s", max_s, "Upper bound on s for quadric4s2")->capture_default_str();
    cmd->add_option("--max-weight-sum", max_weight_sum, "Upper bound on w0+...+wn for wpn")->capture_default_str();
    cmd->add_option("--families", families, "Comma-separated family ids, 'all' or 'none'")->delimiter(',');
    cmd->add_option("--constructions", constructions, "Comma-separated: divisor,cover,root or 'all'")->delimiter(',');
    cmd->add_flag("--include-variants", include_variants, "Also sweep linear-section variants (IGr(2,5))");
    cmd->add_flag("--all", all, "Every family, construction and variant");
  }

  SweepBounds build(const Catalog& catalog, SweepBounds bounds) const {
    if (all) bounds = SweepBounds::full();
    bounds.max_n = max_n;
    bounds.max_s = max_s;
    bounds.max_weight_sum = max_weight_sum;
    if (include_variants) bounds.include_variants = true;
    for (const auto& e : catalog.user_entries()) {
      bounds.extra_bases.push_back(e);
      bounds.families.push_back(e.id);
    }
    if (!families.empty()) {
      bounds.families.clear();
      for (const auto& f : families) {
        if (f == "none") continue;
        if (f == "all") {
          bounds.families = builtin_ids();
          for (const auto& e : catalog.user_entries()) bounds.families.push_back(e.id);
          continue;
        }
        const auto& ids = builtin_ids();
        const bool known = std::find(ids.begin(), ids.end(), f) != ids.end() ||
                           std::any_of(catalog.user_entries().begin(), catalog.user_entries().end(),
                                       [&](const auto& e) { return e.id == f; });
        if (!known) throw Error(ErrorKind::UnknownBase, "no base family '" + f + "'");
        bounds.families.push_back(f);
      }
    }
    if (!constructions.empty()) {
      bounds.kinds.clear();
      for (const auto& c : constructions) {
        if (c == "all") {
          bounds.kinds = {ConstructionKind::Divisor, ConstructionKind::DoubleCover, ConstructionKind::RootStack};
          break;
        }
        bounds.kinds.push_back(parse_construction(c));
      }
      std::sort(bounds.kinds.begin(), bounds.kinds.end());
      bounds.kinds.erase(std::unique(bounds.kinds.begin(), bounds.kinds.end()), bounds.kinds.end());
    }
    return bounds;
  }
};

std::vector<std::string> case_table_row(const CaseResult& r) {
  if (r.error)
    return {r.base.display_name, std::string(cli_name(r.kind)), std::to_string(r.d), "-", *r.error, "", "", "", ""};
  return {r.base.display_name,
          std::string(cli_name(r.kind)),
          std::to_string(r.d),
          std::to_string(r.c),
          r.serre_text(),
          r.witness ? "(" + std::to_string(r.witness->p) + "," + std::to_string(r.witness->q) + ")" : "-",
          r.cy_dimension ? r.cy_dimension->str() : "-",
          r.is_integer_cy ? "yes" : "no",
          r.component_is_whole ? "yes" : "no"};
}

const std::vector<std::string> kCaseTableHeader = {"base", "construction", "d", "c", "serre power",
                                                   "witness (p,q)", "cy_dim", "integer", "whole"};

void print_cases(const std::vector<CaseResult>& cases, const std::string& format, std::ostream& out) {
  if (format == "json") {
    std::vector<Json> records;
    for (const auto& r : cases) records.push_back(case_to_json(r));
    out << render_document(records);
  } else if (format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : cases) rows.push_back(case_csv_row(r));
    out << render_csv(case_csv_header(), rows);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : cases) rows.push_back(case_table_row(r));
    out << render_table(kCaseTableHeader, rows);
    out << cases.size() << " case(s)\n";
  }
}

void print_case_detail(const CaseResult& r, std::ostream& out) {
  out << "base:               " << r.base.display_name << " (" << r.base.id;
  if (!r.base.parameters.empty()) out << " " << render_parameters(r.base.parameters);
  out << ")\n";
  out << "dim M / m / rk B:   " << r.base.dim_m << " / " << r.base.length_m << " / " << r.base.rank_b << "\n";
  out << "construction:       " << cli_name(r.kind) << ", d = " << r.d << ", c = " << r.c << "\n";
  out << "dim X:              " << r.dim_x << "\n";
  out << "Serre power:        " << r.serre_text() << "\n";
  if (r.witness)
    out << "witness:            S^" << r.witness->q << " = [" << r.witness->p << "]  (" << kWitnessProvenance
        << ")\n";
  out << "cy_dimension:       " << (r.cy_dimension ? r.cy_dimension->str() : "-")
      << (r.is_integer_cy ? "  (integer)" : r.witness && r.witness->q > 1 && r.witness->p % r.witness->q == 0 ? "  (q > 1, not integer CY)" : "  (fractional)") << "\n";
  out << "component_is_whole: " << (r.component_is_whole ? "yes" : "no") << "\n";
}

std::string join_ints(const std::vector<Int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

void print_diamond(const HodgeDiamond& diamond, std::ostream& out) {
  const Int n = diamond.dim_x();
  // Row k lists h^{p,q} with p + q = k, from p = k down.
  for (Int k = 0; k <= 2 * n; ++k) {
    std::vector<Int> row;
    for (Int q = std::max<Int>(0, k - n); q <= std::min(k, n); ++q) row.push_back(diamond.at(k - q, q));
    out << "  " << std::string(static_cast<std::size_t>(std::abs(n - k)) * 2, ' ');
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "   " : "") << row[i];
    out << "\n";
  }
}

int cmd_catalog(const std::string& format, const Catalog& catalog, std::ostream& out) {
  auto bases = builtin_representatives();
  for (const auto& e : catalog.user_entries()) bases.push_back(e);
  if (format == "json") {
    const auto arr = Json::parse(export_catalog(bases));
    out << render_document(std::vector<Json>(arr.begin(), arr.end()));
    return kExitOk;
  }
  const std::vector<std::string> header = {"id",           "display_name", "parameters", "dim_m",       "length_m",
                                           "rank_b",       "dim_formula",  "m_formula",  "rank_formula", "line_bundle",
                                           "provenance"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& b : bases) {
    FamilyFormulas f;
    const auto& ids = builtin_ids();
    if (std::find(ids.begin(), ids.end(), b.id) != ids.end()) f = family_formulas(b.id);
    rows.push_back({b.id, b.display_name, render_parameters(b.parameters), std::to_string(b.dim_m),
                    std::to_string(b.length_m), std::to_string(b.rank_b), f.dim, f.length, f.rank, b.line_bundle_note,
                    b.provenance.empty() ? (f.dim.empty() ? "user" : "catalog") : b.provenance});
  }
  out << (format == "csv" ? render_csv(header, rows) : render_table(header, rows));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Calabi-Yau components of Lefschetz-type constructions"};
  app.name("cycalc");
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  auto* catalog_cmd = app.add_subcommand("catalog", "List the builtin Lefschetz bases");
  add_format(catalog_cmd);

  BaseFlags case_flags;
  auto* case_cmd = app.add_subcommand("case", "Analyze one (base, construction, degree)");
  case_flags.attach(case_cmd, true);
  add_format(case_cmd);

  BoundsFlags sweep_bounds;
  std::string cy_dim;
  bool integer_only = false;
  bool include_whole = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Enumerate cases, optionally filtered by CY dimension");
  sweep_bounds.attach(sweep_cmd);
  sweep_cmd->add_option("--cy-dim", cy_dim, "Integer n (n-CY) or p/q (fractional dimension)");
  sweep_cmd->add_flag("--integer-cy", integer_only, "Only integer Calabi-Yau cases");
  sweep_cmd->add_flag("--include-whole", include_whole, "Keep d = m cases when filtering");
  add_format(sweep_cmd);

  BoundsFlags verify_bounds;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the theorem route against the closed formulas");
  verify_bounds.attach(verify_cmd);
  verify_cmd->add_flag("--inject-fault", inject_fault)->group("");
  add_format(verify_cmd);

  BaseFlags hodge_flags;
  auto* hodge_cmd = app.add_subcommand("hodge", "Hodge diamond of X, or of a weighted hypersurface via --weights");
  hodge_flags.attach(hodge_cmd, false);
  add_format(hodge_cmd);

  BaseFlags hh_flags;
  auto* hh_cmd = app.add_subcommand("hh", "Hochschild homology of X and A_X with the CY check");
  hh_flags.attach(hh_cmd, true);
  add_format(hh_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Catalog catalog = Catalog::from_environment();

    if (*catalog_cmd) return cmd_catalog(format, catalog, out);

    if (*case_cmd) {
      const auto base = case_flags.resolve_base(catalog);
      const auto result = analyze(base, case_flags.kind(), case_flags.degree);
      if (format == "table")
        print_case_detail(result, out);
      else
        print_cases({result}, format, out);
      return kExitOk;
    }

    if (*sweep_cmd) {
      CaseFilter filter;
      if (!cy_dim.empty())
        filter = CaseFilter::dimension(Rational::parse(cy_dim));
      else if (integer_only)
        filter = CaseFilter::integer_cy();
      filter.include_whole = include_whole;
      print_cases(sweep(filter, sweep_bounds.build(catalog, SweepBounds{})), format, out);
      return kExitOk;
    }

    if (*verify_cmd) {
      SweepBounds bounds = SweepBounds::full();
      const auto rep = verify(verify_bounds.build(catalog, bounds), VerifyOptions{inject_fault});
      if (format == "table") {
        out << rep.mismatches << " mismatches / " << rep.cases << " cases\n";
        out << "integer-CY cases: " << rep.integer_cy_cases << "\n";
        out << "dimension bound violations (n_cy > dim X): " << rep.dimension_bound_violations << "\n";
        out << "integer-CY cases with negative dimension (observed): " << rep.negative_cy_cases << "\n";
        for (const auto& s : rep.mismatch_samples) out << "  mismatch: " << s << "\n";
      } else {
        Json j{{"cases", rep.cases},
               {"mismatches", rep.mismatches},
               {"integer_cy_cases", rep.integer_cy_cases},
               {"dimension_bound_violations", rep.dimension_bound_violations},
               {"negative_cy_cases", rep.negative_cy_cases},
               {"mismatch_samples", rep.mismatch_samples}};
        if (format == "json") {
          out << render_document({j});
        } else {
          out << render_csv({"cases", "mismatches", "integer_cy_cases", "dimension_bound_violations",
                             "negative_cy_cases"},
                            {{std::to_string(rep.cases), std::to_string(rep.mismatches),
                              std::to_string(rep.integer_cy_cases), std::to_string(rep.dimension_bound_violations),
                              std::to_string(rep.negative_cy_cases)}});
        }
      }
      return rep.mismatches == 0 && rep.dimension_bound_violations == 0 ? kExitOk : kExitInconsistent;
    }

    if (*hodge_cmd) {
      std::optional<HodgeDiamond> diamond;
      if (hodge_flags.base.empty()) {
        if (hodge_flags.weights.empty()) throw Error(ErrorKind::InvalidParams, "hodge needs --base or --weights");
        diamond = hodge_weighted_hypersurface(hodge_flags.weights, hodge_flags.degree);
      } else {
        diamond = hodge_for_case(hodge_flags.resolve_base(catalog), hodge_flags.kind(), hodge_flags.degree);
      }
      if (format == "json") {
        out << render_document({diamond_to_json(*diamond)});
      } else if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (Int p = 0; p <= diamond->dim_x(); ++p)
          for (Int q = 0; q <= diamond->dim_x(); ++q)
            rows.push_back({std::to_string(p), std::to_string(q), std::to_string(diamond->at(p, q))});
        out << render_csv({"p", "q", "h"}, rows);
      } else {
        out << "dim X = " << diamond->dim_x() << "\n";
        print_diamond(*diamond, out);
        out << "middle row h^{n,0}..h^{0,n}: " << join_ints(diamond->middle_row()) << "\n";
      }
      return kExitOk;
    }

    if (*hh_cmd) {
      const auto report = hh_pipeline(hh_flags.resolve_base(catalog), hh_flags.kind(), hh_flags.degree);
      if (format == "json") {
        out << render_document({hh_to_json(report)});
      } else if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : report.hh_x.dims) rows.push_back({"X", std::to_string(k), std::to_string(v)});
        for (const auto& [k, v] : report.hh_a.dims) rows.push_back({"A", std::to_string(k), std::to_string(v)});
        out << render_csv({"category", "degree", "dim"}, rows);
      } else {
        print_case_detail(report.result, out);
        out << "middle row:         " << join_ints(report.diamond.middle_row()) << "\n";
        out << "HH(D(X)):           " << render_profile(report.hh_x) << "\n";
        out << "HH(A_X):            " << render_profile(report.hh_a) << "\n";
        if (report.check) {
          const auto& c = *report.check;
          std::string label = "HH_{-" + std::to_string(c.cy_dimension) + "}(A_X):";
          label.resize(std::max<std::size_t>(label.size() + 1, 20), ' ');
          out << label << c.value << "  -> "
              << (c.nonvanishing ? "pass" : (c.component_vanishes ? "A_X has no homology (zero component)" : "FAIL"))
              << "\n";
          if (c.value_is_one) out << "one-dimensional:    " << (*c.value_is_one ? "yes" : "no") << "\n";
        } else {
          out << "check:              not an integer Calabi-Yau case\n";
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kExitInconsistent : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace cycalc
