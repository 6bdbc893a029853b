#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohoparam/json_io.hpp"

namespace cohoparam {

struct Check {
  std::string identity;
  Json lhs;
  Json rhs;
  Json witnesses = Json::array();
  bool ok = true;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::size_t failed() const;
};

struct SuiteOptions {
  std::optional<int> max_n;
  std::optional<int> max_rank;
};

/// Suites: paper-tables, packet-sums, innerforms, weyl-identities. "all"
/// runs each in that order.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opts = {});

Json to_json(const Check& c);
Json to_json(const std::vector<SuiteReport>& reports);

}  // namespace cohoparam
