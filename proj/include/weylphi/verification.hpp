#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylphi/fq.hpp"

namespace weylphi {

// One checked instance. status is "pass", "fail", "inconclusive" or "report"
// (the last for non-blocking observations).
struct CaseRecord {
  std::string suite;
  std::string name;
  std::string status;
  std::string witness;
  std::string counterexample;
};

struct SuiteResult {
  std::vector<CaseRecord> cases;
  int count(const std::string& status) const;
  bool ok() const { return count("fail") == 0; }
  void append(SuiteResult other);
};

// Case generators; every one is deterministic for fixed arguments.
SuiteResult suite_excellent(int max_n);
SuiteResult suite_jordan(int max_n);
// psi invariants up to psi_n, phi injectivity and centralizer dimensions up to
// inj_n, X = 2Y up to xy_n.
SuiteResult suite_identities(int psi_n = 14, int inj_n = 12, int xy_n = 14);
SuiteResult suite_tables(bool enumerate = true);
// Minimal classes (q odd), Coxeter and regular cells, bad characteristic
// (q = 2, isometry groups).
SuiteResult suite_fq(FqKind k, int q);
SuiteResult suite_fq_coxeter(FqKind k, int q);
SuiteResult suite_fq_regular(FqKind k, int q);
SuiteResult suite_fq_minimal(FqKind k, int q);
SuiteResult suite_fq_bad_char(FqKind k, int q);
SuiteResult suite_isotropy(FqKind k, int q);
SuiteResult suite_c_small(FqKind k);
SuiteResult suite_canonical(int max_n);
SuiteResult suite_canonical_fq(FqKind k, int q);
// Class label of u_w against Phi(C); mismatches are recorded as "report".
SuiteResult suite_conjecture(int max_n);

extern const std::vector<std::string> kSuiteNames;

// Dispatch by name. max_n overrides the rank bound of the classical suites
// and switches "canonical" from the F_q sweep to the u_w instances.
SuiteResult run_suite(const std::string& suite, std::optional<int> max_n, FqKind k, int q);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool blocking = true;
  double budget_seconds = 0;
  double seconds = 0;
  SuiteResult result;
  std::string error;  // an exception escaped the suite
  bool within_budget() const { return seconds <= budget_seconds; }
  bool passed() const { return error.empty() && result.ok() && within_budget(); }
  std::string summary() const;
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace weylphi
