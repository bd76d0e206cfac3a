// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 when a
// blocking criterion fails.
#include <iostream>

#include "CLI11.hpp"
#include "weylphi/verification.hpp"

int main(int argc, char** argv) {
  CLI::App app{"weylphi acceptance suite"};
  std::vector<int> ids;
  bool verbose = false;
  app.add_option("criteria", ids, "criteria to run (default 1-10)")->check(CLI::Range(1, 10));
  app.add_flag("-v,--verbose", verbose, "list every case that did not pass");
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);

  bool ok = true;
  for (int id : ids) {
    auto r = weylphi::run_criterion(id);
    const bool passed = r.passed() && r.result.count("report") == 0;
    std::cout << (passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << r.title << " (" << r.summary() << ")"
              << (r.blocking ? "" : " [non-blocking]") << std::endl;
    if (r.blocking && !r.passed()) ok = false;
    if (verbose || (r.blocking && !r.passed()))
      for (const auto& c : r.result.cases)
        if (c.status != "pass")
          std::cout << "      " << c.status << ": " << c.name << ": " << c.counterexample
                    << (c.witness.empty() ? "" : " [" + c.witness + "]") << "\n";
  }
  return ok ? 0 : 1;
}
