#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motzkin {

struct ValidationRecord {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::string level;  // quick | full
  bool passed = false;
  std::vector<ValidationRecord> records;
};

// Cross-module oracle suites: path counts vs brute-force enumeration,
// combinatorial Schmidt spectra vs partial-trace diagonalization, the
// two Hamiltonian constructions against each other, quadrature vs the
// excursion closed forms, and frustration-freeness.  "quick" targets
// about a minute of work, "full" widens every size range.
ValidationReport run_validation(const std::string& level);

// JSON: {"level", "passed", "records": [one record per invariant]}.
void write_validation_report(std::ostream& out,
                             const ValidationReport& report);

}  // namespace motzkin
