#pragma once

// The acceptance criteria as callable checks, shared by the acceptance
// binary and `liegiambelli check`.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace liegiambelli::acceptance {

struct CriterionResult {
  int id = 0;
  std::string suite;  // short name accepted by `check --suite`
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  std::vector<std::string> notes;     // informational lines
  std::vector<std::string> failures;  // one line per mismatch, with the diff
};

// Random property suites use this seed and case count.
inline constexpr std::uint64_t kSeed = 0x5eed'2024'0b1e'6a11ULL;
inline constexpr int kPropertyCases = 1000;

CriterionResult worked_examples();       // 1
CriterionResult class_tables();          // 2
CriterionResult integrality();           // 3
CriterionResult hall_witt();             // 4
CriterionResult pbw_identities();        // 5
CriterionResult diagram_duality();       // 6
CriterionResult depth_counts();          // 7
CriterionResult dimension_counts();      // 8
CriterionResult defect_enumeration();    // 9
CriterionResult property_suites();       // 10

struct Suite {
  int id;
  std::string_view name;
  std::function<CriterionResult()> run;
};

const std::vector<Suite>& suites();

// Runs one suite by name, or every suite for "all". Throws
// std::invalid_argument for unknown names.
std::vector<CriterionResult> run(std::string_view name);

// "[PASS] 1 examples: ...", followed by indented failure lines.
std::string format(const CriterionResult& r, bool verbose = false);

}  // namespace liegiambelli::acceptance
