#pragma once

// Cross-validation suite behind `phentropy check`.
//
// Every check reduces to one deviation compared against one threshold.
// Numeric checks pass when deviation <= threshold. Ordering checks report
// the largest step against the expected direction and pass when it is
// strictly below the threshold (0 by default).

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phentropy/moldata.hpp"

namespace phentropy {

struct CheckOptions {
  std::optional<double> tolerance;       // replaces every threshold
  std::map<std::string, double> per_check;  // replaces one threshold by check name
  std::vector<std::string> only;          // run only these checks (all if empty)
};

struct CheckOutcome {
  std::string name;
  std::string description;
  double deviation = 0.0;
  double threshold = 0.0;
  bool strict = false;
  bool passed = false;
  double seconds = 0.0;
  std::string error;  // set when the check threw
};

/// Names of all checks in execution order.
std::vector<std::string> check_names();

/// Throws ValidationError for unknown names in `per_check` or `only`.
std::vector<CheckOutcome> run_checks(const CheckOptions& opts, const MoleculeTable& molecules);

void write_check_report(std::ostream& os, const std::vector<CheckOutcome>& outcomes);

/// One JSON object per line: check, deviation, threshold, passed, timestamp.
void append_check_ledger(const std::string& path, const std::vector<CheckOutcome>& outcomes);

}  // namespace phentropy
