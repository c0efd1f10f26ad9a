// Outcomes of verification checks: each check compares dimension tables (or
// 0/1 tables recording exact matrix identities) and carries free-form notes.
#pragma once

#include <string>
#include <vector>

#include "hh/hochschild.hpp"

namespace hh {

enum class Status { Pass, Fail, Skipped, HypothesisViolated, Inconclusive };

const char* status_name(Status s);
Status parse_status(const std::string& s);

struct Comparison {
  std::string what;
  DimTable lhs, rhs;
  bool holds() const { return lhs.dims == rhs.dims; }
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string id_) : id(std::move(id_)) {}

  std::string id;
  Status status = Status::Pass;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;

  void compare(std::string what, DimTable lhs, DimTable rhs);
  // Records an exact identity per degree as a table of 0/1 flags against all ones.
  void identity(std::string what, const std::vector<bool>& holds);
  void note(std::string text) { notes.push_back(std::move(text)); }
  // Pass iff every comparison holds; keeps Skipped / HypothesisViolated / Inconclusive.
  CheckResult& finish();
  bool all_hold() const;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::string algebra, field;
  std::size_t n_max = 0;
  std::vector<CheckResult> checks;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace hh
