#include "liegiambelli/free_lie.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <string>

using namespace testing;

namespace {

// Lyndon words of length k over n letters, counted by brute force.
std::int64_t lyndon_count(int n, int k) {
  std::int64_t count = 0;
  std::vector<int> w(k, 0);
  while (true) {
    bool lyndon = true;
    for (int s = 1; s < k && lyndon; ++s) {
      // w must be strictly smaller than its rotation starting at s.
      for (int i = 0; i < k; ++i) {
        const int a = w[i], b = w[(i + s) % k];
        if (a != b) {
          lyndon = a < b;
          break;
        }
        if (i == k - 1) lyndon = false;
      }
    }
    count += lyndon;
    int pos = k - 1;
    while (pos >= 0 && w[pos] == n - 1) w[pos--] = 0;
    if (pos < 0) break;
    ++w[pos];
  }
  return count;
}

// Letter content of a Hall word.
void letters(const HallBasis& h, int rank, std::vector<int>& out) {
  const HallWord& w = h[rank];
  if (w.is_leaf()) {
    out.push_back(w.letter);
    return;
  }
  letters(h, w.left, out);
  letters(h, w.right, out);
}

}  // namespace

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), Error);
}

TEST_CASE("Witt dimensions") {
  const std::vector<std::int64_t> two = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int k = 1; k <= 8; ++k) CHECK(witt_dim(2, k) == two[k - 1]);
  for (int n = 1; n <= 6; ++n) CHECK(witt_dim(n, 1) == n);
  CHECK(witt_dim(3, 2) == 3);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 8; ++k) CHECK(witt_dim(n, k) == lyndon_count(n, k));
  CHECK(cumulative_dim(2, 5) == 14);
  CHECK(cumulative_dim(2, 0) == 0);
  CHECK(witt_dim_exact(10, 30) > Integer("1000000000000000000000000000"));
  CHECK_THROWS_AS(witt_dim(2, 80), Error);
}

TEST_CASE("Hall basis for two generators") {
  const HallBasis h(2, 5);
  const auto h1 = h.of_length(1);
  REQUIRE(h1.size() == 2);
  CHECK(h.render(h1[0].rank) == "u");
  CHECK(h.render(h1[1].rank) == "v");
  const auto h2 = h.of_length(2);
  REQUIRE(h2.size() == 1);
  CHECK(h.render(h2[0].rank) == "(u,v)");
  std::vector<std::size_t> sizes;
  for (int k = 1; k <= 5; ++k) sizes.push_back(h.of_length(k).size());
  CHECK(sizes == std::vector<std::size_t>{2, 1, 2, 3, 6});
  for (const auto& w : h.words()) CHECK(h.satisfies_hall_conditions(w.rank));
}

TEST_CASE("Hall basis sizes match the Witt formula") {
  for (int n = 1; n <= 4; ++n) {
    const HallBasis h(n, n <= 2 ? 10 : n == 3 ? 8 : 7);
    for (int k = 1; k <= h.max_length(); ++k)
      CHECK(static_cast<std::int64_t>(h.of_length(k).size()) == witt_dim(n, k));
  }
  CHECK_THROWS_AS(HallBasis(3, 12, 1000), Error);
}

TEST_CASE("depth") {
  const HallBasis h(2, 5);
  std::map<std::string, int> depth;
  for (const auto& w : h.words()) depth[h.render(w.rank)] = h.depth(w.rank);
  CHECK(depth.at("u") == 1);
  CHECK(depth.at("(u,v)") == 2);
  for (const auto& w : h.words()) {
    CHECK(h.depth(w.rank) >= 2 - (w.length == 1));
    CHECK(h.depth(w.rank) <= w.length);
    CHECK(h.raw_depth(w.rank) == h.depth(w.rank) - 1);
  }
  CHECK(depth.at("(v,(v,(v,(u,v))))") == 5);
  CHECK(depth.at("((u,v),(u,(u,v)))") == 4);
}

TEST_CASE("words of maximal depth") {
  CHECK(count_max_depth(5, 2) == 10);
  CHECK(count_max_depth(3, 4) == 15);
  CHECK(count_max_depth(2, 3) == 2);
  for (int n = 2; n <= 4; ++n) {
    const HallBasis h(n, 7);
    for (int k = 2; k <= 7; ++k) {
      std::int64_t direct = 0;
      for (const auto& w : h.of_length(k)) direct += h.depth(w.rank) == k;
      CHECK(count_max_depth(n, k) == direct);
    }
  }
}

TEST_CASE("lie character") {
  const auto e = class_to_char(FormalBundle::generic(3, Field::Q, 4, Family::c, 3));
  CHECK(lie_char(e, 1) == e);
  for (int k = 1; k <= 6; ++k) CHECK(lie_char(e, k).rank() == witt_dim(3, k));
  CHECK(lie_bundle(FormalBundle::generic(2, Field::Q, 4, Family::c, 2), 2).total_class() ==
        poly(Field::Q, 4, {{1, {}}, {1, {F(gen_c(1))}}}));
}

TEST_CASE("lie classes against Hall word weights") {
  // With numeric Chern roots x_1..x_n, L^k(E) splits into lines indexed by
  // Hall words of length k, each with root the sum of its letters' roots.
  const std::vector<Rational> x = {1, 3, -2};
  const int n = 3, order = 4;
  const HallBasis h(n, 5);
  for (int k = 1; k <= 5; ++k) {
    std::vector<Rational> roots;
    for (const auto& w : h.of_length(k)) {
      std::vector<int> ls;
      letters(h, w.rank, ls);
      Rational s = 0;
      for (int l : ls) s += x[l - 1];
      roots.push_back(s);
    }
    CHECK(at_roots(lie_total_class(n, k, order, n), x) == split_class(roots, order));
  }
}

TEST_CASE("lie class coefficients") {
  const Monomial c1(gen_c(1)), c11(gen_c(1), 2), c2(gen_c(2));
  CHECK(lie_total_class(5, 2, 3).coefficient(c1) == 4);
  CHECK(lie_total_class(2, 4, 3).coefficient(c1) == 6);
  const auto l33 = lie_total_class(3, 3, 2);
  CHECK(l33.coefficient(c11) == 26);
  CHECK(l33.coefficient(c2) == 6);
  CHECK(lie_total_class(2, 2, 4, 2) == poly(Field::Q, 4, {{1, {}}, {1, {F(gen_c(1))}}}));
}

TEST_CASE("Stiefel-Whitney reductions") {
  CHECK(lie_sw_class(2, 2, 4, 2) == poly(Field::F2, 4, {{1, {}}, {1, {F(gen_w(1))}}}));
  CHECK(lie_sw_class(2, 1, 4, 2) == poly(Field::F2, 4, {{1, {}}, {1, {F(gen_w(1))}}, {1, {F(gen_w(2))}}}));
  CHECK(lie_sw_class(2, 3, 4, 2).coefficient(Monomial(gen_w(1))) == 1);
  CHECK(component(lie_sw_class(3, 3, 4, 3), 1).is_zero());
}
