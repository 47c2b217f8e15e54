#include "braidcalc/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace braidcalc {

using ojson = nlohmann::ordered_json;

void SuiteReport::finalize() {
  std::sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(checks.begin(), checks.end(),
                                [](const CheckResult& a, const CheckResult& b) { return a.id == b.id; });
  if (dup != checks.end()) throw Error("duplicate check id '" + dup->id + "'");
}

SuiteSummary SuiteReport::summary() const {
  SuiteSummary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

bool SuiteReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.asserted && c.status == Status::fail; });
}

std::string SuiteReport::to_json() const {
  ojson j;
  j["suite"] = suite;
  j["version"] = kVersion;
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["paper_ref"] = c.paper_ref;
    if (!c.witness.empty()) e["witness"] = c.witness;
    e["runtime_ms"] = c.runtime_ms;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  SuiteSummary s = summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}};
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::string out = "suite " + suite + "\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  for (const auto& c : checks) {
    std::string status = to_string(c.status);
    out += "  " + c.id + std::string(width - c.id.size() + 2, ' ') + status;
    if (!c.asserted) out += " (reported)";
    if (c.runtime_ms > 0) out += "  " + std::to_string(c.runtime_ms) + " ms";
    if (!c.witness.empty()) out += "\n      " + c.witness;
    out += "\n";
  }
  SuiteSummary s = summary();
  out += "summary: " + std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " +
         std::to_string(s.inconclusive) + " inconclusive\n";
  return out;
}

SuiteReport parse_report_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(std::string("report: ") + e.what());
  }
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.id = e.at("id").get<std::string>();
    std::string st = e.at("status").get<std::string>();
    if (st == "pass") c.status = Status::pass;
    else if (st == "fail") c.status = Status::fail;
    else if (st == "inconclusive") c.status = Status::inconclusive;
    else throw Error("report: unknown status '" + st + "'");
    c.paper_ref = e.at("paper_ref").get<std::string>();
    if (e.contains("witness")) c.witness = e.at("witness").get<std::string>();
    c.runtime_ms = e.at("runtime_ms").get<long>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace braidcalc
