#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdg/catalog.hpp"

// The verification harness: each suite runs one group of exhaustive
// checks over the catalog and reports per-item pass/fail with the claim
// it verifies. All checks are deterministic; no randomness anywhere.

namespace zdg {

enum class Suite {
  LEN4,
  LEN5,
  PROP_PHI,
  LEMMA_ORTHO,
  LEMMA_SOCLE,
  ORACLE_EQUIV,
  HILBERT,
  TRIVEXT_GROWTH,
};

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& name);
std::vector<Suite> all_suites();

struct CheckItem {
  std::string id;        // ring/space identifier
  std::string citation;  // claim being checked
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  Suite suite;
  std::vector<CheckItem> items;

  bool passed() const;
};

SuiteResult run_suite(Suite s);
std::vector<SuiteResult> run_all_suites();

/// zdglab-report-v1 envelope; deterministic for fixed inputs (timings are
/// deliberately excluded).
nlohmann::json report_to_json(const std::vector<SuiteResult>& results);

}  // namespace zdg
