#include "hh/report.hpp"

#include <stdexcept>

namespace hh {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::HypothesisViolated: return "hypothesis-violated";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (auto st : {Status::Pass, Status::Fail, Status::Skipped, Status::HypothesisViolated, Status::Inconclusive})
    if (s == status_name(st)) return st;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void CheckResult::compare(std::string what, DimTable lhs, DimTable rhs) {
  comparisons.push_back({std::move(what), std::move(lhs), std::move(rhs)});
}

void CheckResult::identity(std::string what, const std::vector<bool>& holds) {
  DimTable got{"holds", {}}, want{"expected", {}};
  for (bool h : holds) {
    got.dims.push_back(h ? 1 : 0);
    want.dims.push_back(1);
  }
  compare(std::move(what), std::move(got), std::move(want));
}

bool CheckResult::all_hold() const {
  for (auto& c : comparisons)
    if (!c.holds()) return false;
  return true;
}

CheckResult& CheckResult::finish() {
  if (status == Status::Pass || status == Status::Fail) status = all_hold() ? Status::Pass : Status::Fail;
  return *this;
}

}  // namespace hh
