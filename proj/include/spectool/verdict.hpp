#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spectool {

enum class VerdictStatus { kHolds, kVacuous, kViolated, kInconclusive };

std::string_view to_string(VerdictStatus s);

/// Outcome of checking one statement on one graph.
struct Verdict {
  VerdictStatus status = VerdictStatus::kVacuous;
  std::string reason;
  /// Named numeric evidence (lambda_1, m, bound values, ...), in insertion order.
  std::vector<std::pair<std::string, double>> quantities;
  /// Free-form witness: a triangle, a cycle, the missing lengths, ...
  std::string witness;
  /// Violations of asymptotic statements below their safe order are findings, not failures.
  bool advisory = false;

  static Verdict make(VerdictStatus status, std::string reason) {
    Verdict v;
    v.status = status;
    v.reason = std::move(reason);
    return v;
  }
  static Verdict holds(std::string reason = {}) { return make(VerdictStatus::kHolds, std::move(reason)); }
  static Verdict vacuous(std::string reason) { return make(VerdictStatus::kVacuous, std::move(reason)); }
  static Verdict violated(std::string reason) { return make(VerdictStatus::kViolated, std::move(reason)); }
  static Verdict inconclusive(std::string reason) {
    return make(VerdictStatus::kInconclusive, std::move(reason));
  }

  Verdict& with(std::string name, double value) {
    quantities.emplace_back(std::move(name), value);
    return *this;
  }
};

}  // namespace spectool
