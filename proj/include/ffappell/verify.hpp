#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffappell/hyperff.hpp"
#include "ffappell/sums.hpp"

namespace ffa {

/// One verification suite per identity. thm3 and thm3_variant test the two
/// candidate parameter readings (lower parameter Cbar vs C) of the F4* -> F1*
/// reduction; the reports record which one holds.
enum class SuiteId {
  lemma_g1,
  lemma_gj1,
  lemma_g2,
  lemma_g3,
  lemma_g7,
  binom_b3,
  binom_thm1,
  binom_thm2,
  orthogonality,
  prop25,
  rel1,
  rel2,
  rel3,
  rel4,
  rel5,
  greene_route_eq,
  thm1,
  thm2a,
  thm2b,
  thm3,
  thm3_variant,
};

std::string suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(const std::string& name);
const std::vector<SuiteId>& all_suite_ids();

enum class RunMode { exhaustive, sample };

struct Violation {
  uint64_t index = 0;  // position in the canonical enumeration (or sample list)
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs, rhs, diff;  // canonical cyclotomic forms
};

struct VerificationReport {
  SuiteId suite = SuiteId::lemma_g1;
  uint32_t p = 0;
  int r = 0;
  uint32_t q = 0;
  RunMode mode = RunMode::exhaustive;
  uint64_t seed = 0;
  uint64_t sample_count = 0;  // 0 for exhaustive runs
  uint64_t tuples_tested = 0;
  uint64_t violation_count = 0;  // total, even beyond the stored cap
  std::vector<Violation> violations;
  double elapsed_s = 0;

  std::string status() const;  // "ok" | "fail" | "vacuous"
  bool passed() const { return violation_count == 0; }
};

struct RunOptions {
  RunMode mode = RunMode::exhaustive;
  uint64_t sample_count = 1000;
  uint64_t seed = 0;
  int jobs = 0;                  // 0 = hardware concurrency
  size_t max_violations = 25;    // stored per report; the count is always exact
  uint64_t budget = 1'000'000;   // exhaustive/sample switchover for run_all
};

/// Row tables shared across suites on one field, built on first use. Several
/// suites consume the same 2F1*/Greene sweeps; rebuilding them per suite would
/// dominate a full verification run.
class SuiteCache {
 public:
  explicit SuiteCache(const SumTables& tables) : t_(&tables) {}
  const TwoF1StarTable& two_f1();
  const GreeneTable& greene();
  const F21AtOneTable& f21_at_one();

 private:
  const SumTables* t_;
  std::unique_ptr<TwoF1StarTable> two_f1_;
  std::unique_ptr<GreeneTable> greene_;
  std::unique_ptr<F21AtOneTable> f21_at_one_;
};

/// Number of tuples satisfying the suite's hypothesis predicate.
uint64_t suite_space_size(const SumTables& tables, SuiteId id);

/// Run one suite. Exhaustive mode walks the admissible tuples in canonical
/// order; sample mode draws tuples by seeded rejection from the full product
/// space. Reports are identical for a given (suite, q, mode, seed) regardless
/// of the worker count.
VerificationReport run_suite(const SumTables& tables, SuiteId id, const RunOptions& opts,
                             SuiteCache& cache);
VerificationReport run_suite(const SumTables& tables, SuiteId id, const RunOptions& opts = {});

/// Every suite in canonical order; exhaustive when the admissible space is
/// under opts.budget, sampled otherwise.
std::vector<VerificationReport> run_all(const SumTables& tables, const RunOptions& opts = {});

/// Exit-status rule for a set of reports: all non-vacuous suites must pass,
/// except that the thm3/thm3_variant pair passes as a unit when at least one
/// reading holds (the pair exists to decide between the two readings).
bool reports_pass(const std::vector<VerificationReport>& reports);

}  // namespace ffa
