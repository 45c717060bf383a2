#pragma once

#include <string>
#include <vector>

#include "elco/report_json.hpp"

namespace elco::fullcheck {

enum class Profile { quick, full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  report::Json report;
};

struct Result {
  Profile profile = Profile::quick;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs the verification suite. The quick profile covers the H(3,3) and
/// H(6,3) permutation instances plus the binary Reed-Muller instance; full
/// adds the (4,1) and (5,1) permutation triples, the q in {3,5,7}
/// Reed-Muller censuses and the C(S_5) depth check. The determinism
/// criterion re-runs everything under one and several worker threads and
/// byte-compares the reports.
Result run(Profile profile);

/// Combined JSON for criteria 1-9 (determinism excluded); used both for
/// reporting and for the determinism byte-comparison.
report::Json core_json(const std::vector<CriterionResult>& criteria);

report::Json to_json(const Result& r);

}  // namespace elco::fullcheck
