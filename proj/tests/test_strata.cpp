#include "liegiambelli/strata.hpp"
#include "liegiambelli/free_lie.hpp"

#include <doctest.h>

#include <functional>

using namespace liegiambelli;

namespace {

using Ranks = std::vector<int>;

// Every sequence in [1, m]^k that validate_growth accepts, ending in m and
// with r_{k-1} < m.
std::set<Ranks> brute_force_vectors(int n, int m, int k) {
  std::set<Ranks> out;
  Ranks r(k, 1);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == k) {
      if (r.back() != m || (k > 1 && r[k - 2] == m)) return;
      try {
        validate_growth(r, n, m);
        out.insert(r);
      } catch (const Error&) {
      }
      return;
    }
    for (int v = 1; v <= m; ++v) {
      r[pos] = v;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

DefectVector D(std::vector<int> e) { return DefectVector{std::move(e)}; }

}  // namespace

TEST_CASE("defect vectors") {
  CHECK(defect(validate_growth({2, 2, 3, 4}, 2, 4)) == D({0, 1, 1, 0}));
  CHECK(defect(validate_growth({2, 2, 4}, 2, 4)) == D({0, 1, 0}));
  CHECK(defect(maximal_growth(3, 14)) == D({0, 0, 0}));
  for (int k = 2; k <= 5; ++k)
    for (const auto& g : growth_vectors(3, 10, k)) {
      CHECK(reconstruct(3, 10, defect(g)) == g);
    }
}

TEST_CASE("growth vector enumeration") {
  for (auto [n, m] : {std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 6}}) {
    for (int k = 2; k <= 4; ++k) {
      std::set<Ranks> got;
      for (const auto& g : growth_vectors(n, m, k)) got.insert(Ranks(g.ranks().begin(), g.ranks().end()));
      CHECK(got == brute_force_vectors(n, m, k));
    }
  }
  CHECK_THROWS_AS(growth_vectors(3, 40, 8, 100), Error);
}

TEST_CASE("saturation length") {
  CHECK(saturation_length(2, 4) == 2);
  CHECK(saturation_length(3, 6) == 2);
  CHECK(saturation_length(3, 13) == 2);
  CHECK(saturation_length(3, 14) == 3);
  CHECK(saturation_length(4, 10) == 2);
}

TEST_CASE("jet and matrix dimensions") {
  for (int k = 2; k <= 6; ++k) {
    const auto d = jet_matrix_dims(3, 3, k);
    CHECK(d.dim_jets == 0);
    CHECK(d.dim_matrices == 0);
  }
  const auto d = jet_matrix_dims(2, 4, 2);
  CHECK(d.dim_matrices == 2);
  CHECK(d.dim_jets == 2 * 2 * binomial(5, 1));
  // Direct evaluation of both formulas.
  for (int n = 2; n <= 4; ++n)
    for (int m = n; m <= 8; ++m)
      for (int k = 2; k <= 12; ++k) {
        const auto x = jet_matrix_dims(n, m, k);
        Integer mats = 0;
        for (int i = 2; i <= k; ++i) mats += witt_dim_exact(n, i);
        CHECK(x.dim_matrices == (m - n) * mats);
        CHECK(x.dim_jets == (m - n) * n * binomial(m + k - 1, k - 1));
        CHECK(x.surjective_possible == (x.dim_jets >= x.dim_matrices));
      }
  for (auto [n, m] : {std::pair{2, 4}, std::pair{3, 6}, std::pair{3, 14}}) {
    const auto t = jet_matrix_threshold(n, m, 60);
    REQUIRE(t.has_value());
    for (int k = *t; k <= 60; ++k) CHECK(!jet_matrix_dims(n, m, k).surjective_possible);
  }
}

TEST_CASE("onto obstruction") {
  CHECK(onto_obstruction(3, 4));
  CHECK(!onto_obstruction(2, 4));
  CHECK(onto_obstruction(2, 5));
}

TEST_CASE("bracket growth inequality") {
  const auto n2 = bracket_growth_check(2, 1);
  REQUIRE(n2.size() == 1);
  CHECK(n2[0].lhs == 3);
  CHECK(n2[0].rhs == 2);
  CHECK(n2[0].holds);
  const auto n4 = bracket_growth_check(4, 3, 3);
  CHECK(n4[0].lhs == 60);
  CHECK(n4[0].rhs == 30);
  const auto n3 = bracket_growth_check(3, 2);
  CHECK(n3[0].lhs == n3[0].rhs);
  CHECK(!n3[0].holds);
  CHECK(n3[1].holds);
  for (int n = 2; n <= 6; ++n)
    for (const auto& row : bracket_growth_check(n, 10, 2)) CHECK(row.holds);
}

TEST_CASE("admissible templates match the oracle") {
  for (auto [n, m] : {std::pair{3, 6}, std::pair{3, 10}, std::pair{3, 14}, std::pair{4, 10}}) {
    const auto inst = enumerate_admissible_defects(n, m);
    const auto set = canonical_defects(inst);
    CHECK(compare_sets(set, oracle_admissible_defects(n, m)).equal());
    CHECK(set.contains(defect(maximal_growth(n, m))));
    for (const auto& i : inst)
      if (i.valid) {
        CHECK(i.cd <= m);
        CHECK(i.verified);
        CHECK(defect(*i.growth) == i.canonical_defect);
      }
  }
}

TEST_CASE("bounding templates") {
  for (auto [n, m] : {std::pair{3, 6}, std::pair{4, 10}}) {
    const auto set = canonical_defects(enumerate_bounding_defects(n, m));
    CHECK(compare_sets(set, oracle_bounding_defects(n, m)).equal());
  }
  for (auto [n, m] : {std::pair{3, 6}, std::pair{3, 10}, std::pair{3, 14}, std::pair{4, 10}}) {
    for (const auto& i : enumerate_bounding_defects(n, m))
      if (i.valid) CHECK(i.cd > m);
    for (const auto& d : oracle_bounding_defects(n, m)) {
      const auto g = reconstruct(n, m, d);
      CHECK(young_diagrams(g).cd > m);
    }
  }
  // Known differences between the template list and the minimal
  // non-admissible strata.
  const auto c10 = compare_sets(canonical_defects(enumerate_bounding_defects(3, 10)), oracle_bounding_defects(3, 10));
  CHECK(c10.only_enumerated.empty());
  CHECK(c10.only_oracle == std::vector<DefectVector>{D({0, 0, 5, 18, 0})});
  const auto c14 = compare_sets(canonical_defects(enumerate_bounding_defects(3, 14)), oracle_bounding_defects(3, 14));
  CHECK(c14.only_enumerated == std::vector<DefectVector>{D({0, 1, 0, 18, 0})});
  CHECK(c14.only_oracle.empty());
}

TEST_CASE("oracle sets as m grows") {
  // A defect can drop out when m grows: (0,2,0) has cd = 2(m-4) for n = 3.
  int dropped = 0;
  for (int m = 6; m < 12; ++m) {
    const auto lower = oracle_admissible_defects(3, m, 3);
    const auto upper = oracle_admissible_defects(3, m + 1, 3);
    for (const auto& d : lower)
      if (!upper.contains(d)) {
        ++dropped;
        CHECK(young_diagrams(reconstruct(3, m + 1, d)).cd > m + 1);
      }
  }
  CHECK(dropped == 1);
  for (int m = 6; m <= 12; ++m) CHECK(young_diagrams(reconstruct(3, m, D({0, 2, 0}))).cd == 2 * (m - 4));
  const auto k3 = oracle_admissible_defects(2, 4, 3);
  CHECK(k3 == DefectSet{D({0, 1, 0}), D({0, 0, 0})});
  CHECK(oracle_admissible_defects(2, 4, 4).contains(D({0, 1, 1, 0})));
}

TEST_CASE("classification") {
  CHECK(classify(validate_growth({3, 6}, 3, 6)).label == StratumLabel::potentially_admissible);
  CHECK(classify(validate_growth({3, 3, 6}, 3, 6)).label == StratumLabel::potentially_bounding);
  CHECK(label_name(StratumLabel::neither) == "neither");
  CHECK_THROWS_AS(enumerate_admissible_defects(2, 4), Error);
}
