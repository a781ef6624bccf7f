#include "cycalc/serre_engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "cycalc/error.hpp"

namespace cycalc {

std::string CaseResult::serre_text() const {
  return "S^" + std::to_string(q0) + " = " + describe(serre_power_nf);
}

NormalForm serre_power(const LefschetzBase& base, ConstructionKind kind, Int d) {
  const auto table = substitution_table(kind, d, base);
  const Int m = base.length_m;
  const Int c = checked::gcd(d, m);
  const Word word = {{Generator::Rho, checked::neg(m / c)}, {Generator::Sigma, d / c}};
  return resolve(word, table.entries);
}

NormalForm closed_form(const LefschetzBase& base, ConstructionKind kind, Int d) {
  // Same preconditions and errors as the theorem route.
  substitution_table(kind, d, base);
  const Int m = base.length_m;
  const Int c = checked::gcd(d, m);
  const Int lead = checked::mul(checked::add(base.dim_m, 1), d / c);
  switch (kind) {
    case ConstructionKind::Divisor:
      return NormalForm::make(checked::sub(lead, checked::mul(2, m / c)));
    case ConstructionKind::DoubleCover:
      return NormalForm::make(checked::sub(lead, m / c), 0, (m - d) / c, 0);
    case ConstructionKind::RootStack:
      return NormalForm::make(checked::sub(lead, m / c), 0, 0, m / c);
  }
  throw Error(ErrorKind::InternalInconsistency, "unknown construction");
}

FractionalCYWitness extract_witness(const NormalForm& nf, Int q0) {
  if (q0 < 1) throw Error(ErrorKind::InvalidParams, "witness power must be positive");
  if (nf.ltwist != 0)
    throw Error(ErrorKind::NotPureShiftable,
                "Serre power carries L^" + std::to_string(nf.ltwist) + "; omega_M = L^{-m} must have failed");
  if (nf.tau == 0 && nf.chi == 0) return {nf.shift, q0};
  return {checked::mul(2, nf.shift), checked::mul(2, q0)};
}

namespace {

bool integrality_statement(ConstructionKind kind, Int d, Int m) {
  if (m % d != 0) return false;
  const Int ratio = m / d;
  switch (kind) {
    case ConstructionKind::Divisor: return true;
    case ConstructionKind::DoubleCover: return ratio % 2 == 1;
    case ConstructionKind::RootStack: return ratio % 2 == 0;
  }
  return false;
}

}  // namespace

CaseResult analyze(const LefschetzBase& base, ConstructionKind kind, Int d) {
  CaseResult r;
  r.base = base;
  r.kind = kind;
  r.d = d;
  r.serre_power_nf = serre_power(base, kind, d);
  const Int m = base.length_m;
  r.c = checked::gcd(d, m);
  r.q0 = d / r.c;
  r.dim_x = kind == ConstructionKind::Divisor ? base.dim_m - 1 : base.dim_m;
  r.component_is_whole = d == m;
  r.witness = extract_witness(r.serre_power_nf, r.q0);
  r.cy_dimension = Rational(r.witness->p, r.witness->q);
  r.is_integer_cy = r.witness->q == 1;
  r.integrality_condition = integrality_statement(kind, d, m);
  if (r.integrality_condition != r.is_integer_cy)
    throw Error(ErrorKind::InternalInconsistency,
                base.display_name + " " + std::string(to_string(kind)) + " d=" + std::to_string(d) +
                    ": integrality statement disagrees with witness");
  return r;
}

std::vector<std::string> SweepBounds::default_families() {
  std::vector<std::string> out;
  for (const auto& id : builtin_ids())
    if (id != "wpn") out.push_back(id);
  return out;
}

SweepBounds SweepBounds::full() {
  SweepBounds b;
  b.families = builtin_ids();
  b.kinds = {ConstructionKind::Divisor, ConstructionKind::DoubleCover, ConstructionKind::RootStack};
  b.include_variants = true;
  return b;
}

bool CaseFilter::accepts(const CaseResult& r) const {
  if (mode == Mode::None) return true;
  if (r.error || !r.witness) return false;
  if (r.component_is_whole && !include_whole) return false;
  if (mode == Mode::IntegerCY) return r.is_integer_cy;
  if (cy_dim.is_integer()) return r.is_integer_cy && *r.cy_dimension == cy_dim;
  return *r.cy_dimension == cy_dim;
}

namespace {

// Nondecreasing weight sequences with at least two entries and sum <= limit.
void weight_systems(Int limit, std::vector<Int>& prefix, Int sum, std::vector<std::vector<Int>>& out) {
  if (prefix.size() >= 2) out.push_back(prefix);
  const Int start = prefix.empty() ? 1 : prefix.back();
  for (Int w = start; sum + w <= limit; ++w) {
    prefix.push_back(w);
    weight_systems(limit, prefix, sum + w, out);
    prefix.pop_back();
  }
}

bool wanted(const SweepBounds& bounds, std::string_view id) {
  return std::find(bounds.families.begin(), bounds.families.end(), id) != bounds.families.end();
}

bool params_less(const Parameters& a, const Parameters& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const auto& x, const auto& y) { return x.second < y.second; });
}

bool base_less(const LefschetzBase& a, const LefschetzBase& b) {
  if (a.id != b.id) return a.id < b.id;
  return params_less(a.parameters, b.parameters);
}

}  // namespace

std::vector<LefschetzBase> enumerate_bases(const SweepBounds& bounds) {
  std::vector<LefschetzBase> out;
  auto add = [&](LefschetzBase b) {
    if (!b.section_of.empty() && !bounds.include_variants) return;
    out.push_back(std::move(b));
  };
  if (wanted(bounds, "pn"))
    for (Int n = 1; n <= bounds.max_n; ++n) add(builtin("pn", {{"n", n}}));
  if (wanted(bounds, "wpn")) {
    std::vector<std::vector<Int>> systems;
    std::vector<Int> prefix;
    weight_systems(bounds.max_weight_sum, prefix, 0, systems);
    for (auto& w : systems) add(builtin_weighted(std::move(w)));
  }
  if (wanted(bounds, "quadric4s2"))
    for (Int s = 1; s <= bounds.max_s; ++s) add(builtin("quadric4s2", {{"s", s}}));
  if (wanted(bounds, "gr")) {
    // k = 1 is pn; k > n/2 is the dual Grassmannian.
    for (Int n = 4; n <= bounds.max_n; ++n)
      for (Int k = 2; 2 * k <= n; ++k)
        if (checked::gcd(k, n) == 1) add(builtin("gr", {{"k", k}, {"n", n}}));
  }
  if (wanted(bounds, "ogr2"))
    for (Int n = 2; n <= bounds.max_n; ++n) add(builtin("ogr2", {{"n", n}}));
  if (wanted(bounds, "igr2"))
    for (Int n = 2; n <= bounds.max_n; ++n) add(builtin("igr2", {{"n", n}}));
  for (const char* id : {"sgr36", "ogr510", "g2gr", "gr26_L2", "p3xp3"})
    if (wanted(bounds, id)) add(builtin(id));
  for (const auto& extra : bounds.extra_bases)
    if (wanted(bounds, extra.id)) add(extra);
  std::stable_sort(out.begin(), out.end(), base_less);
  return out;
}

bool case_less(const CaseResult& a, const CaseResult& b) {
  if (base_less(a.base, b.base)) return true;
  if (base_less(b.base, a.base)) return false;
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.d < b.d;
}

namespace {

// Runs fn(i) for i in [0, count) on a few worker threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

std::vector<CaseResult> analyze_all(const LefschetzBase& base, const std::vector<ConstructionKind>& kinds,
                                    const CaseFilter& filter) {
  std::vector<CaseResult> out;
  for (auto kind : kinds) {
    for (Int d = 1; d <= base.length_m; ++d) {
      CaseResult r;
      try {
        r = analyze(base, kind, d);
      } catch (const Error& e) {
        r = CaseResult{};
        r.base = base;
        r.kind = kind;
        r.d = d;
        r.c = checked::gcd(d, base.length_m);
        r.error = e.what();
      }
      if (filter.accepts(r)) out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::vector<CaseResult> sweep(const CaseFilter& filter, const SweepBounds& bounds) {
  const auto bases = enumerate_bases(bounds);
  std::vector<std::vector<CaseResult>> per_base(bases.size());
  parallel_for(bases.size(), [&](std::size_t i) { per_base[i] = analyze_all(bases[i], bounds.kinds, filter); });
  std::vector<CaseResult> out;
  for (auto& chunk : per_base)
    for (auto& r : chunk) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), case_less);
  return out;
}

VerifyReport verify(const SweepBounds& bounds, const VerifyOptions& options) {
  const auto bases = enumerate_bases(bounds);
  std::vector<VerifyReport> partial(bases.size());
  parallel_for(bases.size(), [&](std::size_t i) {
    const auto& base = bases[i];
    auto& rep = partial[i];
    for (auto kind : bounds.kinds) {
      for (Int d = 1; d <= base.length_m; ++d) {
        ++rep.cases;
        std::string failure;
        try {
          const auto r = analyze(base, kind, d);
          auto expected = closed_form(base, kind, d);
          if (options.inject_fault) expected.shift = checked::neg(expected.shift);
          if (r.serre_power_nf != expected) {
            failure = "theorem " + describe(r.serre_power_nf) + " vs corollary " + describe(expected);
          }
          if (r.is_integer_cy) {
            ++rep.integer_cy_cases;
            if (!r.component_is_whole && *r.cy_dimension > Rational(r.dim_x)) ++rep.dimension_bound_violations;
            if (*r.cy_dimension < Rational(0)) ++rep.negative_cy_cases;
          }
        } catch (const Error& e) {
          failure = e.what();
        }
        if (!failure.empty()) {
          ++rep.mismatches;
          if (rep.mismatch_samples.size() < 5) {
            std::ostringstream os;
            os << base.display_name << " " << to_string(kind) << " d=" << d << ": " << failure;
            rep.mismatch_samples.push_back(os.str());
          }
        }
      }
    }
  });
  VerifyReport total;
  for (const auto& p : partial) {
    total.cases += p.cases;
    total.mismatches += p.mismatches;
    total.integer_cy_cases += p.integer_cy_cases;
    total.dimension_bound_violations += p.dimension_bound_violations;
    total.negative_cy_cases += p.negative_cy_cases;
    for (const auto& s : p.mismatch_samples)
      if (total.mismatch_samples.size() < 10) total.mismatch_samples.push_back(s);
  }
  return total;
}

}  // namespace cycalc
