#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace shomfly {

enum class CheckStatus { Pass, Fail, VerifiedExactly, ProbePassed, InconclusiveEscalated };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;

  bool ok() const { return status != CheckStatus::Fail; }
};

struct SuiteOptions {
  int d = 2;
  int n = 4;
  uint64_t seed = 20180913;
  int trials = 0;  // 0: per-suite default
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> cases;

  bool ok() const {
    for (const CheckResult& c : cases)
      if (!c.ok()) return false;
    return true;
  }
};

// Named property suites behind `verify <suite>`:
//   skein        exact skein relation at random words
//   desing       exact desingularization relation, resolution form
//   markov       invariance under random Markov walks
//   lemmas       the fixed identity list (exact where sound, probes otherwise)
//   independence diagonal of the trace matrix at z = 0 and its determinant
//   traces       trace axioms and agreement of the three trace routes
//   universality equality of the universal invariant vs the basis vector
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts);

std::vector<std::string> suite_names();

}  // namespace shomfly
