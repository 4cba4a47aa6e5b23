#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace invcat {

// Malformed input text (bad grammar, undeclared ids). CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + std::move(msg)
                                     : std::move(msg)),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Well-formed input that violates a precondition ("not <=", "not top-heavy",
// parameter out of range). CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A contradiction that a valid structure cannot exhibit (duplicate restricted
// inverses, round-trip mismatch). Indicates a bug or a corrupted structure
// that slipped past validation. CLI exit code 3.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One violated law with its witnesses, e.g. {"R.1", "f=[1>2]: f*rbar(f) = []"}.
struct Violation {
  std::string law;
  std::string detail;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.law == b.law && a.detail == b.detail;
  }
  friend bool operator<(const Violation& a, const Violation& b) {
    return a.law != b.law ? a.law < b.law : a.detail < b.detail;
  }
};

// Violations are data, not errors: an empty report certifies the checked laws.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t size() const noexcept { return violations.size(); }

  void add(std::string law, std::string detail) {
    violations.push_back({std::move(law), std::move(detail)});
  }
  void merge(ValidationReport other) {
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
  }
  // Canonical order makes reports reproducible regardless of thread schedule.
  void sort_canonical() {
    std::sort(violations.begin(), violations.end());
    violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  }
  bool mentions(const std::string& law) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.law == law; });
  }
  std::string to_string() const {
    std::string out;
    for (const Violation& v : violations) {
      out += v.law;
      out += ": ";
      out += v.detail;
      out += '\n';
    }
    return out;
  }
};

// Selects the OpenMP kernels or the serial reference implementation.
enum class Exec { serial, parallel };

}  // namespace invcat
