#pragma once

#include <string>

#include "braidcalc/linalg.hpp"

namespace braidcalc {

enum class Status { pass, fail, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConditionReport {
  std::string id;
  Status status = Status::pass;
  std::string detail;
  Tensor witness;  // set on failure when a tensor witnesses it

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

inline ConditionReport make_report(std::string id, bool ok, std::string detail = {}, Tensor witness = {}) {
  return {std::move(id), ok ? Status::pass : Status::fail, std::move(detail), std::move(witness)};
}

}  // namespace braidcalc
