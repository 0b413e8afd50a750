#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace linkhom {

struct CheckItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;
  std::vector<std::string> notes;  ///< informational lines, never asserted
  bool pass() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  bool slow = false;          ///< include the slow tier (p = 4 stability)
  std::optional<int> p, q;    ///< torus parameters for theorem24
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite; InvalidInput for an unknown name. "all" is not a suite
/// here; use run_verify.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});
/// A single suite, or every suite for "all".
std::vector<SuiteReport> run_verify(const std::string& name, const VerifyOptions& opts = {});

}  // namespace linkhom
