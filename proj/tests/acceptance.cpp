// Acceptance suite: one criterion per --criterion flag, each printing a
// [PASS]/[FAIL] line. Run with no arguments to execute all criteria.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffappell/appell.hpp"
#include "ffappell/floatback.hpp"
#include "ffappell/hyperff.hpp"
#include "ffappell/report.hpp"
#include "ffappell/verify.hpp"

namespace {

using namespace ffa;

struct Rng {
  uint64_t s;
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

struct Tables {
  std::unique_ptr<FieldContext> ctx;
  std::unique_ptr<SumTables> sums;
  std::unique_ptr<SuiteCache> cache;
};

Tables& tables_for(uint32_t q) {
  static std::map<uint32_t, Tables> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  Tables t;
  if (q == 9) {
    t.ctx = std::make_unique<FieldContext>(3, 2);
  } else {
    t.ctx = std::make_unique<FieldContext>(q, 1);
  }
  t.sums = std::make_unique<SumTables>(*t.ctx);
  t.cache = std::make_unique<SuiteCache>(*t.sums);
  return cache.emplace(q, std::move(t)).first->second;
}

bool run_and_report(SuiteId id, uint32_t q, RunMode mode, uint64_t samples, uint64_t seed,
                    std::string& detail, double* elapsed = nullptr) {
  Tables& t = tables_for(q);
  RunOptions opts;
  opts.mode = mode;
  opts.sample_count = samples;
  opts.seed = seed;
  VerificationReport rep = run_suite(*t.sums, id, opts, *t.cache);
  if (elapsed != nullptr) *elapsed += rep.elapsed_s;
  char buf[160];
  std::snprintf(buf, sizeof buf, "  %-16s q=%-3u %-10s tuples=%-8llu violations=%llu (%.2fs)\n",
                suite_name(id).c_str(), q, mode == RunMode::exhaustive ? "exhaustive" : "sample",
                static_cast<unsigned long long>(rep.tuples_tested),
                static_cast<unsigned long long>(rep.violation_count), rep.elapsed_s);
  detail += buf;
  return rep.violation_count == 0 && (mode == RunMode::sample || rep.tuples_tested > 0 ||
                                      suite_space_size(*t.sums, id) == 0);
}

// A1: the lemma suites, exhaustive and violation-free at q in {3,...,13},
// within the 10-minute budget.
bool criterion_lemma_suites(std::string& detail) {
  const std::vector<SuiteId> suites = {
      SuiteId::lemma_g1,   SuiteId::lemma_gj1, SuiteId::lemma_g3, SuiteId::lemma_g7,
      SuiteId::binom_b3,   SuiteId::binom_thm1, SuiteId::binom_thm2, SuiteId::orthogonality,
      SuiteId::rel1,       SuiteId::rel2,      SuiteId::rel3,     SuiteId::rel4,
      SuiteId::rel5,       SuiteId::greene_route_eq, SuiteId::prop25};
  bool ok = true;
  double total = 0;
  for (uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u})
    for (SuiteId id : suites) ok &= run_and_report(id, q, RunMode::exhaustive, 0, 0, detail, &total);
  char buf[80];
  std::snprintf(buf, sizeof buf, "  total suite time %.1fs (budget 600s)\n", total);
  detail += buf;
  ok &= total < 600.0;
  return ok;
}

// A2: the four-character Gauss-sum product identity.
bool criterion_lemma_g2(std::string& detail) {
  bool ok = true;
  for (uint32_t q : {3u, 5u, 7u})
    ok &= run_and_report(SuiteId::lemma_g2, q, RunMode::exhaustive, 0, 0, detail);
  for (uint32_t q : {9u, 11u})
    ok &= run_and_report(SuiteId::lemma_g2, q, RunMode::sample, 1000, 1, detail);
  return ok;
}

// A3: the F4* double-sum identity (thm1).
bool criterion_theorem1(std::string& detail) {
  bool ok = true;
  for (uint32_t q : {3u, 5u, 7u}) {
    Tables& t = tables_for(q);
    uint64_t space = suite_space_size(*t.sums, SuiteId::thm1);
    uint64_t expect = static_cast<uint64_t>(q - 1) * (q - 1) * (q - 1) * (q - 1) * (q - 1) * (q - 1);
    if (space != expect) {
      detail += "  unexpected thm1 space at q=" + std::to_string(q) + "\n";
      ok = false;
    }
    ok &= run_and_report(SuiteId::thm1, q, RunMode::exhaustive, 0, 0, detail);
  }
  ok &= tables_for(3).sums && suite_space_size(*tables_for(3).sums, SuiteId::thm1) == 64;
  ok &= suite_space_size(*tables_for(5).sums, SuiteId::thm1) == 4096;
  for (uint32_t q : {9u, 11u, 13u})
    ok &= run_and_report(SuiteId::thm1, q, RunMode::sample, 1000, 2, detail);
  return ok;
}

// A4: the F4* product formula (thm2a with corrections, thm2b bare).
bool criterion_theorem2(std::string& detail) {
  bool ok = true;
  Tables& t5 = tables_for(5);
  if (suite_space_size(*t5.sums, SuiteId::thm2a) != 288) {
    detail += "  thm2a admissible space at q=5 is not 288\n";
    ok = false;
  }
  // xy = 1 tuples must be present to exercise the delta correction
  {
    const FieldContext& f = *t5.ctx;
    int count = 0;
    for (uint32_t cx = 0; cx < f.q(); ++cx)
      for (uint32_t cy = 0; cy < f.q(); ++cy) {
        FieldElement x = f.from_code(cx), y = f.from_code(cy);
        if (x == f.one() || y == f.one()) continue;
        if (f.mul(x, y) == f.one()) ++count;
      }
    char buf[64];
    std::snprintf(buf, sizeof buf, "  xy=1 argument pairs at q=5: %d\n", count);
    detail += buf;
    ok &= count > 0;
  }
  for (uint32_t q : {5u, 7u}) {
    ok &= run_and_report(SuiteId::thm2a, q, RunMode::exhaustive, 0, 0, detail);
    ok &= run_and_report(SuiteId::thm2b, q, RunMode::exhaustive, 0, 0, detail);
  }
  return ok;
}

// A5: the F4* -> F1* reduction; at least one parameter reading must verify.
bool criterion_theorem3(std::string& detail) {
  bool statement_ok = true, proof_ok = true;
  for (uint32_t q : {5u, 7u}) {
    std::string local;
    bool s = run_and_report(SuiteId::thm3, q, RunMode::exhaustive, 0, 0, local);
    bool v = run_and_report(SuiteId::thm3_variant, q, RunMode::exhaustive, 0, 0, local);
    detail += local;
    statement_ok &= s;
    proof_ok &= v;
  }
  detail += std::string("  reading with lower parameter Cbar (thm3): ") +
            (statement_ok ? "verified" : "refuted") + "\n";
  detail += std::string("  reading with lower parameter C (thm3_variant): ") +
            (proof_ok ? "verified" : "refuted") + "\n";
  return statement_ok || proof_ok;
}

// A6: oracle equivalences.
bool criterion_oracles(std::string& detail) {
  bool ok = true;
  for (uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    Tables& t = tables_for(q);
    GaussTable naive = build_gauss_table(*t.ctx, GaussStrategy::naive);
    GaussTable dft = build_gauss_table(*t.ctx, GaussStrategy::dft);
    bool same = naive.values.size() == dft.values.size();
    for (size_t k = 0; same && k < naive.values.size(); ++k)
      same = naive.values[k].equals(dft.values[k]);
    if (!same) {
      detail += "  gauss naive != dft at q=" + std::to_string(q) + "\n";
      ok = false;
    }
    // closed-form inverses are exact inverses
    for (long k = 0; k < t.sums->n(); ++k)
      if (!(t.sums->gauss(k) * t.sums->gauss_inv(k)).is_one()) {
        detail += "  gauss inverse failed at q=" + std::to_string(q) + "\n";
        ok = false;
        break;
      }
    bool binom_ok = true;
    for (long a = 0; binom_ok && a < t.sums->n(); ++a)
      for (long b = 0; binom_ok && b < t.sums->n(); ++b)
        binom_ok = (t.sums->binom(a, b) * t.sums->binom_inv(a, b)).is_one();
    if (!binom_ok) {
      detail += "  binom inverse failed at q=" + std::to_string(q) + "\n";
      ok = false;
    }
  }
  detail += "  gauss naive=dft, gauss*gauss_inv=1, binom*binom_inv=1 at q<=13\n";
  for (uint32_t q : {3u, 5u, 7u, 9u})
    ok &= run_and_report(SuiteId::greene_route_eq, q, RunMode::exhaustive, 0, 0, detail);
  for (uint32_t q : {3u, 5u, 7u})
    ok &= run_and_report(SuiteId::lemma_g3, q, RunMode::exhaustive, 0, 0, detail);
  return ok;
}

// A7: exact and float backends agree within 1e-8*q.
bool criterion_float(std::string& detail) {
  bool ok = true;
  for (uint32_t q : {5u, 7u, 9u}) {
    Tables& t = tables_for(q);
    const FieldContext& f = *t.ctx;
    FloatBackend fb(f);
    const double tol = 1e-8 * q;
    const long n = t.sums->n();
    Rng rng{1000 + q};
    double worst = 0;
    auto track = [&](const CycloNumber& exact, std::complex<double> approx) {
      double err = std::abs(exact.to_complex() - approx);
      worst = std::max(worst, err);
      if (err >= tol) ok = false;
    };
    auto elem = [&](uint32_t code) { return f.from_code(code); };
    for (int trial = 0; trial < 1000; ++trial) {
      long a = rng.below(n), b = rng.below(n), c = rng.below(n);
      FieldElement x = elem(static_cast<uint32_t>(rng.below(f.q())));
      track(t.sums->gauss(a), fb.gauss(a));
      track(t.sums->jacobi(a, b), fb.jacobi(a, b));
      track(t.sums->binom(a, b), fb.binom(a, b));
      track(greene_2f1_fieldsum(f, character(f, a), character(f, b), character(f, c), x),
            fb.greene_2f1(a, b, c, x));
      HypergeomSpec mc{{character(f, a), character(f, b)}, {character(f, c)}, x};
      std::vector<long> upper{a, b}, lower{c};
      track(mccarthy_star(*t.sums, mc), fb.mccarthy(upper, lower, x));
    }
    for (int trial = 0; trial < 1000; ++trial) {
      AppellKind kind = static_cast<AppellKind>(rng.below(7));
      AppellSpec spec;
      spec.kind = kind;
      for (size_t i = 0; i < appell_char_count(kind); ++i)
        spec.chars.push_back(character(f, rng.below(n)));
      spec.x = elem(static_cast<uint32_t>(rng.below(f.q())));
      spec.y = elem(static_cast<uint32_t>(rng.below(f.q())));
      CycloNumber exact =
          appell_is_star(kind) ? appell_star(*t.sums, spec) : appell_fieldsum(f, spec);
      track(exact, fb.appell(spec));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "  q=%u: worst |exact - float| = %.3g (tol %.3g)\n", q, worst,
                  tol);
    detail += buf;
  }
  return ok;
}

// A8: byte-identical reports for identical invocations.
bool criterion_determinism(std::string& detail) {
  bool ok = true;
  Tables& t = tables_for(5);
  RunOptions opts;
  opts.seed = 7;
  std::string run1 = reports_to_json(run_all(*t.sums, opts));
  std::string run2 = reports_to_json(run_all(*t.sums, opts));
  if (run1 != run2) {
    detail += "  run_all reports differ between identical runs\n";
    ok = false;
  }
  detail += "  verify --suite all --p 5 --r 1 --seed 7 twice: " +
            std::string(run1 == run2 ? "byte-identical" : "DIFFER") + "\n";

  RunOptions sampled;
  sampled.mode = RunMode::sample;
  sampled.sample_count = 300;
  sampled.seed = 7;
  Tables& t9 = tables_for(9);
  std::string s1 = report_to_json(run_suite(*t9.sums, SuiteId::thm1, sampled));
  std::string s2 = report_to_json(run_suite(*t9.sums, SuiteId::thm1, sampled));
  sampled.jobs = 1;
  std::string s3 = report_to_json(run_suite(*t9.sums, SuiteId::thm1, sampled));
  if (s1 != s2 || s1 != s3) {
    detail += "  sampled thm1 reports differ (seed or thread dependence)\n";
    ok = false;
  } else {
    detail += "  sampled thm1 at q=9, seed 7: byte-identical across reruns and thread counts\n";
  }
  return ok;
}

struct Criterion {
  const char* id;
  const char* description;
  std::function<bool(std::string&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"A1_lemma_suites",
       "lemma/binomial/orthogonality/special-case/bridge suites exhaustive, q in {3..13}",
       criterion_lemma_suites},
      {"A2_lemma_g2", "four-character Gauss product identity, exhaustive q<=7, sampled q in {9,11}",
       criterion_lemma_g2},
      {"A3_theorem1", "F4* double-sum identity, exhaustive q in {3,5,7}, sampled q in {9,11,13}",
       criterion_theorem1},
      {"A4_theorem2", "F4* product formula with corrections, exhaustive q in {5,7}",
       criterion_theorem2},
      {"A5_theorem3", "F4* -> F1* reduction, at least one parameter reading exhaustive q in {5,7}",
       criterion_theorem3},
      {"A6_oracle_equivalences", "independent-route equivalences (tables, Greene, closed forms)",
       criterion_oracles},
      {"A7_float_consistency", "exact vs float backend within 1e-8*q on random evaluations",
       criterion_float},
      {"A8_determinism", "byte-identical reports for identical invocations", criterion_determinism},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") only = argv[i + 1];

  bool all_ok = true;
  bool matched = false;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && only != c.id) continue;
    matched = true;
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("  exception: ") + e.what() + "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.description, secs);
    std::fputs(detail.c_str(), stdout);
    all_ok &= ok;
  }
  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return all_ok ? 0 : 1;
}
