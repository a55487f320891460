#pragma once

// Defect vectors of growth vectors, the admissible/bounding classification
// of strata, closed-form template enumerations with a brute-force oracle,
// and the dimension counts behind the non-surjectivity arguments.

#include "liegiambelli/degeneracy.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace liegiambelli {

// delta_1 = 0, delta_i = corank_i - corank_{i-1} for 1 < i < k, delta_k = 0.
struct DefectVector {
  std::vector<int> entries;

  int length() const noexcept { return static_cast<int>(entries.size()); }
  friend auto operator<=>(const DefectVector&, const DefectVector&) = default;
};

DefectVector defect(const GrowthVector& r);

// r_i = cumulative_dim(n,i) - (delta_1 + ... + delta_i) for i < k, r_k = m.
GrowthVector reconstruct(int n, int m, const DefectVector& d);

// Truncates r at the first entry equal to m (no-op if m is never reached).
GrowthVector canonical(const GrowthVector& r);

// p with cumulative_dim(n,p) <= m < cumulative_dim(n,p+1).
int saturation_length(int n, int m);

// --- Dimension counts -------------------------------------------------------

struct JetMatrixDims {
  Integer dim_jets;    // (m-n) n binom(m+k-1, k-1)
  Integer dim_matrices;  // (m-n) sum_{i=2}^k d(n,i)
  bool surjective_possible = false;
};

JetMatrixDims jet_matrix_dims(int n, int m, int k);

// Smallest k0 >= 2 with surjective_possible false for every k in
// [k0, scan_limit]; nullopt if the flag is still true at scan_limit.
std::optional<int> jet_matrix_threshold(int n, int m, int scan_limit);

bool onto_obstruction(int n, int k);

struct BracketGrowthRow {
  int k = 0;
  Integer lhs;
  Integer rhs;
  bool holds = false;
};

// n >= 3: d(n,k+1) > cumulative_dim(n,k); n = 2: d(2,k+1) + d(2,k+2) >
// cumulative_dim(2,k). Rows for k = k_min..k_max.
std::vector<BracketGrowthRow> bracket_growth_check(int n, int k_max, int k_min = 1);

// --- Enumeration --------------------------------------------------------------

struct DefectInstance {
  char family = 'a';             // template row a..e
  std::vector<int> parameters;   // (l, chi), (l, chi), (chi, nu), (l1, l2) or (l)
  DefectVector nominal;          // the template vector
  bool valid = false;            // nominal entries give a growth vector
  std::string rejection;         // why not, when invalid
  std::optional<GrowthVector> growth;  // canonical growth vector
  DefectVector canonical_defect;
  bool length_changed = false;   // canonical length differs from the template
  int cd = 0;
  bool verified = false;         // agrees with the oracle classification
};

using DefectSet = std::set<DefectVector>;

// Potentially admissible templates for n >= 3 (UnsupportedParameter below).
// Includes rejected instances; valid ones carry their canonical growth
// vector, cd and oracle verdict.
std::vector<DefectInstance> enumerate_admissible_defects(int n, int m);

// Potentially bounding templates for n >= 3.
std::vector<DefectInstance> enumerate_bounding_defects(int n, int m);

// Canonical defects of the valid instances.
DefectSet canonical_defects(const std::vector<DefectInstance>& instances);

// All valid growth vectors of length k with r_k = m and r_{k-1} < m.
// Throws TooLarge beyond max_vectors.
std::vector<GrowthVector> growth_vectors(int n, int m, int k, std::size_t max_vectors = 10'000'000);

// Defects of those growth vectors of length k with cd <= m.
DefectSet oracle_admissible_defects(int n, int m, int k, std::size_t max_vectors = 10'000'000);

// Union over every length at which a potentially admissible vector can
// occur (saturation_length through saturation_length + 3).
DefectSet oracle_admissible_defects(int n, int m, std::size_t max_vectors = 10'000'000);

// Vectors of length <= saturation_length + 3 with cd > m all of whose strict
// shallowings (componentwise larger, padded with m) have cd <= m.
DefectSet oracle_bounding_defects(int n, int m, std::size_t max_vectors = 10'000'000);

enum class StratumLabel { potentially_admissible, potentially_bounding, neither };

std::string_view label_name(StratumLabel label) noexcept;

struct StratumClassification {
  StratumLabel label = StratumLabel::neither;
  int cd = 0;
  int m = 0;
};

StratumClassification classify(const GrowthVector& r, std::size_t max_vectors = 10'000'000);

struct SetComparison {
  std::vector<DefectVector> only_enumerated;
  std::vector<DefectVector> only_oracle;
  bool equal() const noexcept { return only_enumerated.empty() && only_oracle.empty(); }
};

SetComparison compare_sets(const DefectSet& enumerated, const DefectSet& oracle);

std::string to_string(const DefectVector& d);

}  // namespace liegiambelli
