#ifndef FINCAT_REPORT_HPP_
#define FINCAT_REPORT_HPP_

#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fincat::report {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class Status { kPass, kFail, kNotApplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kNotApplicable: return "NOT APPLICABLE";
  }
  return "?";
}

struct Verdict {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct Report {
  std::string command;
  std::vector<Verdict> verdicts;
  double seconds = 0.0;

  bool any_failure() const {
    for (const Verdict& v : verdicts) {
      if (v.status == Status::kFail) return true;
    }
    return false;
  }

  void add(std::string name, bool passed, std::string detail = "",
           std::vector<std::string> witnesses = {}) {
    verdicts.push_back(Verdict{std::move(name),
                               passed ? Status::kPass : Status::kFail,
                               std::move(detail), std::move(witnesses)});
  }

  void add_not_applicable(std::string name, std::string detail,
                          std::vector<std::string> witnesses = {}) {
    verdicts.push_back(Verdict{std::move(name), Status::kNotApplicable,
                               std::move(detail), std::move(witnesses)});
  }

  nlohmann::json to_json() const {
    nlohmann::json verdict_list = nlohmann::json::array();
    for (const Verdict& v : verdicts) {
      verdict_list.push_back({{"name", v.name},
                              {"status", status_name(v.status)},
                              {"detail", v.detail},
                              {"witnesses", v.witnesses}});
    }
    return {{"command", command},
            {"engine_version", kEngineVersion},
            {"timing_seconds", seconds},
            {"verdicts", verdict_list}};
  }

  void print_table(std::ostream& os) const {
    for (const Verdict& v : verdicts) {
      os << status_name(v.status) << "  " << v.name;
      if (!v.detail.empty()) os << "  -- " << v.detail;
      for (const std::string& w : v.witnesses) os << "  [witness " << w << "]";
      os << "\n";
    }
  }
};

}  // namespace fincat::report

#endif  // FINCAT_REPORT_HPP_
