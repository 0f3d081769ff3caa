#pragma once

#include <string>
#include <vector>

namespace bpk {

// A failed condition. `code` is stable and machine readable; `detail` names
// the offending ids so the check can be replayed.
struct Violation {
  std::string code;
  std::string detail;
};

// Outcome of a validator. Validators never throw on a bad certificate; they
// list what is wrong.
struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string detail) {
    violations.push_back({std::move(code), std::move(detail)});
  }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  bool has(const std::string& code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
};

}  // namespace bpk
