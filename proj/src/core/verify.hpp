#pragma once

// Property suites behind `gmm verify`. Every case reports a scaled defect and
// its tolerance; relations that are known to fail (counterexamples) are kept
// apart and pass when the defect is exhibited above a threshold.

#include <cstdint>
#include <string>
#include <vector>

namespace gmm {

struct VerifyOptions {
  int n = 3;
  int dim = 4;
  std::uint64_t seed = 42;
  /// Tolerance for algebraic identities; finite-difference and integration
  /// checks carry their own documented tolerances.
  double tol = 1e-10;
  std::string suite = "all";
  /// 0 means hardware concurrency, capped by GMM_THREADS when set.
  unsigned threads = 0;
};

struct CaseResult {
  std::string suite;
  int n = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string check;
  /// Name of the relation the case exercises.
  std::string paper_ref;
  double max_defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct Counterexample {
  std::string suite;
  int n = 0;
  int dim = 0;
  std::uint64_t seed = 0;
  std::string check;
  std::string paper_ref;
  double defect = 0.0;
  /// The relation counts as violated when defect > threshold.
  double threshold = 0.0;
  bool exhibited = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CaseResult> cases;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
  std::string generated_at;

  bool all_pass() const;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

/// Throws invalid-argument for n outside [2, 6], dim outside [2, 8],
/// dim^n above 300000 or an unknown suite.
void validate_options(const VerifyOptions& options);

VerifyReport run_verification(const VerifyOptions& options);

/// Worker count: options.threads or hardware concurrency, capped by GMM_THREADS.
unsigned worker_count(unsigned requested);

}  // namespace gmm
