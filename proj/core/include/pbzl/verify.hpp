#ifndef PBZL_VERIFY_HPP
#define PBZL_VERIFY_HPP

#include <string>
#include <vector>

#include "pbzl/algebra.hpp"

namespace pbzl {

struct SuiteOptions {
  int max_size = 6;         // enumeration bound for the algebra universe
  bool catalog_only = false;
};

struct TheoremResult {
  std::string name;
  int checked = 0;   // algebras the property applied to
  int failures = 0;
  std::string first_counterexample;
};

struct SuiteReport {
  std::vector<TheoremResult> results;
  int algebras = 0;

  bool all_passed() const {
    for (const auto& r : results)
      if (r.failures > 0) return false;
    return true;
  }
};

/// Runs every quantified structure property over the catalog, standard
/// products, and all enumerated Brouwer-Zadeh algebras up to max_size,
/// one pass/fail row per theorem. Failures are data, not errors.
SuiteReport run_verification_suite(const SuiteOptions& options);

}  // namespace pbzl

#endif
