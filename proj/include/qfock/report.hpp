#pragma once

#include <string>
#include <vector>

namespace qfock {

// Outcome of a batch of exact operator-identity checks.
struct CheckReport {
  std::string name;
  long checked = 0;                   // number of identities evaluated
  std::vector<std::string> failures;  // one line per failed identity

  bool ok() const { return failures.empty(); }
};

}  // namespace qfock
