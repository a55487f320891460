#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace testing;

namespace {

GradedSeries one_plus(Field f, int order, std::initializer_list<Generator> gens) {
  GradedSeries s = GradedSeries::one(f, order);
  for (auto g : gens) s.add_term(Monomial(g), 1);
  return s;
}

// Leibniz expansion over all permutations.
GradedSeries leibniz(const SeriesMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  GradedSeries total(m.field(), m.order());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    GradedSeries prod = GradedSeries::one(m.field(), m.order());
    for (std::size_t i = 0; i < perm.size(); ++i) prod = prod * m.at(i, perm[i]);
    total += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(one_plus(Field::Q, 3, {gen_c(1)}) + one_plus(Field::Q, 3, {gen_c(2)}) ==
        poly(Field::Q, 3, {{2, {}}, {1, {F(gen_c(1))}}, {1, {F(gen_c(2))}}}));
  CHECK((one_plus(Field::F2, 3, {gen_v(1)}) + one_plus(Field::F2, 3, {gen_v(1)})).is_zero());
  const auto a = one_plus(Field::Q, 3, {gen_c(1), gen_c(3)});
  CHECK(a + GradedSeries(Field::Q, 3) == a);
  CHECK_THROWS_AS(a + GradedSeries(Field::F2, 3), Error);
}

TEST_CASE("multiplication") {
  const auto a = one_plus(Field::Q, 2, {gen_c(1)});
  CHECK(a * a == poly(Field::Q, 2, {{1, {}}, {2, {F(gen_c(1))}}, {1, {F(gen_c(1), 2)}}}));
  const auto l2 = one_plus(Field::F2, 4, {gen_v(1), gen_v(2)}) * one_plus(Field::F2, 4, {gen_v(1)});
  CHECK(l2 == poly(Field::F2, 4,
                   {{1, {}}, {1, {F(gen_v(1), 2)}}, {1, {F(gen_v(2))}}, {1, {F(gen_v(2)), F(gen_v(1))}}}));
  CHECK(l2 * GradedSeries::one(Field::F2, 4) == l2);
}

TEST_CASE("truncation uses the smaller order") {
  const auto a = one_plus(Field::Q, 5, {gen_c(1)});
  const auto b = one_plus(Field::Q, 2, {gen_c(1)});
  const auto p = a * b;
  CHECK(p.order() == 2);
  CHECK(p.max_weight() == 2);
  CHECK(power(one_plus(Field::Q, 3, {gen_c(1)}), 5).coefficient(Monomial(gen_c(1), 3)) == 10);
}

TEST_CASE("monomial order inside a weight") {
  const Monomial t2(gen_t(2)), v2(gen_v(2)), v11(gen_v(1), 2);
  CHECK(t2 < v2);
  CHECK(v2 < v11);
  CHECK(Monomial(gen_c(3)) > v11);
}

TEST_CASE("inverse") {
  const auto a = one_plus(Field::F2, 2, {gen_v(1), gen_v(2)}) * one_plus(Field::F2, 2, {gen_v(1)});
  CHECK(invert(a) == poly(Field::F2, 2, {{1, {}}, {1, {F(gen_v(1), 2)}}, {1, {F(gen_v(2))}}}));
  CHECK(invert(GradedSeries::one(Field::Q, 3)) == GradedSeries::one(Field::Q, 3));
  CHECK(invert(GradedSeries::constant(Field::Q, 3, 2)) == GradedSeries::constant(Field::Q, 3, Rational(1, 2)));
  CHECK_THROWS_AS(invert(GradedSeries::generator(Field::Q, 3, gen_c(1))), Error);

  const auto b = poly(Field::Q, 6, {{3, {}}, {Rational(-1, 2), {F(gen_c(1))}}, {5, {F(gen_c(2)), F(gen_c(1))}}});
  CHECK(b * invert(b) == GradedSeries::one(Field::Q, 6));
}

TEST_CASE("components") {
  const auto a = one_plus(Field::Q, 4, {gen_c(1), gen_c(2)});
  CHECK(component(a, 1) == GradedSeries::generator(Field::Q, 4, gen_c(1)));
  CHECK(component(a, -1).is_zero());
  CHECK(component_checked(a, 7).beyond_order);

  const auto tangent = one_plus(Field::F2, 4, {gen_t(1), gen_t(2), gen_t(3), gen_t(4)});
  const auto l2 = one_plus(Field::F2, 4, {gen_v(1), gen_v(2)}) * one_plus(Field::F2, 4, {gen_v(1)});
  CHECK(component(tangent * invert(l2), 2) ==
        poly(Field::F2, 4, {{1, {F(gen_t(2))}}, {1, {F(gen_v(2))}}, {1, {F(gen_v(1), 2)}}}));
}

TEST_CASE("rescale, exp and log") {
  const auto a = one_plus(Field::Q, 4, {gen_c(1), gen_c(2)});
  CHECK(rescale(a, 1) == a);
  CHECK(rescale(a, 2) == poly(Field::Q, 4, {{1, {}}, {2, {F(gen_c(1))}}, {4, {F(gen_c(2))}}}));
  CHECK(rescale(rescale(a, 2), Rational(1, 2)) == a);

  CHECK(exp(GradedSeries(Field::Q, 4)) == GradedSeries::one(Field::Q, 4));
  const auto c1 = GradedSeries::generator(Field::Q, 3, gen_c(1));
  CHECK(exp(c1) == poly(Field::Q, 3,
                        {{1, {}}, {1, {F(gen_c(1))}}, {Rational(1, 2), {F(gen_c(1), 2)}},
                         {Rational(1, 6), {F(gen_c(1), 3)}}}));
  CHECK(log(exp(c1)) == c1);
  const auto x = poly(Field::Q, 5, {{2, {F(gen_c(1))}}, {Rational(-3, 4), {F(gen_c(2))}}, {1, {F(gen_c(3))}}});
  CHECK(log(exp(x)) == x);
  CHECK(exp(log(a)) == a);
}

TEST_CASE("substitution and retagging") {
  const auto a = one_plus(Field::Q, 3, {gen_c(1)});
  CHECK(substitute(a, {{gen_c(1), GradedSeries::generator(Field::Q, 3, gen_v(1))}}) ==
        one_plus(Field::Q, 3, {gen_v(1)}));
  CHECK(substitute(GradedSeries::generator(Field::Q, 3, gen_c(2)), {{gen_c(2), GradedSeries(Field::Q, 3)}}).is_zero());
  CHECK(retag(a, {{Family::c, Family::w}}) == one_plus(Field::Q, 3, {gen_w(1)}));
}

TEST_CASE("mod 2 reduction") {
  const auto a = poly(Field::Q, 3, {{2, {F(gen_c(1))}}, {3, {F(gen_c(2))}}});
  CHECK(reduce_mod2(a) == poly(Field::F2, 3, {{1, {F(gen_c(2))}}}));
  CHECK(reduce_mod2(poly(Field::Q, 3, {{8, {F(gen_c(1))}}})).is_zero());
  CHECK_THROWS_AS(reduce_mod2(poly(Field::Q, 3, {{Rational(1, 2), {F(gen_c(1))}}})), Error);
  CHECK(reduce_mod2(poly(Field::Q, 3, {{-1, {F(gen_c(1))}}}), {{Family::c, Family::v}}) ==
        GradedSeries::generator(Field::F2, 3, gen_v(1)));
}

TEST_CASE("determinant") {
  SeriesMatrix one(Field::Q, 3, 1, 1);
  one.at(0, 0) = one_plus(Field::Q, 3, {gen_c(2)});
  CHECK(determinant(one) == one.at(0, 0));

  SeriesMatrix m(Field::F2, 4, 2, 2);
  m.at(0, 0) = GradedSeries::generator(Field::F2, 4, gen_w(1));
  m.at(0, 1) = GradedSeries::generator(Field::F2, 4, gen_w(2));
  m.at(1, 0) = GradedSeries::one(Field::F2, 4);
  m.at(1, 1) = GradedSeries::generator(Field::F2, 4, gen_w(1));
  CHECK(determinant(m) == poly(Field::F2, 4, {{1, {F(gen_w(1), 2)}}, {1, {F(gen_w(2))}}}));

  SeriesMatrix id(Field::Q, 3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) id.at(i, j) = GradedSeries::constant(Field::Q, 3, i == j ? 1 : 0);
  CHECK(determinant(id) == GradedSeries::one(Field::Q, 3));
  CHECK(determinant(SeriesMatrix(Field::Q, 3, 0, 0)) == GradedSeries::one(Field::Q, 3));

  // Random 5x5 matrices against the Leibniz formula.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-3, 3), which(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    SeriesMatrix r(Field::Q, 4, 5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        GradedSeries e = GradedSeries::constant(Field::Q, 4, coeff(rng));
        e.add_term(Monomial(gen_c(which(rng))), coeff(rng));
        r.at(i, j) = e;
      }
    CHECK(determinant(r) == leibniz(r));
  }
}
