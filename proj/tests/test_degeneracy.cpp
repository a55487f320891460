#include "liegiambelli/degeneracy.hpp"
#include "liegiambelli/chern.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InternalError;
}

GrowthVector G(std::vector<int> r, int m) { return validate_growth(std::move(r), 2, m); }
GrowthVector G3(std::vector<int> r, int m) { return validate_growth(std::move(r), 3, m); }

GradedSeries w_poly(int order, std::initializer_list<Term> terms) { return poly(Field::F2, order, terms); }

}  // namespace

TEST_CASE("growth vector validation") {
  CHECK_NOTHROW(G({2, 2, 4}, 4));
  CHECK(code_of([] { G({2, 5}, 6); }) == ErrorCode::InvalidGrowthVector);
  CHECK(code_of([] { G({2, 3, 2}, 4); }) == ErrorCode::InvalidGrowthVector);
  CHECK(code_of([] { validate_growth({3, 3}, 2, 4); }) == ErrorCode::InvalidGrowthVector);
  CHECK(code_of([] { G({2, 3, 6}, 4); }) == ErrorCode::InvalidGrowthVector);
  CHECK(G({2, 3, 4}, 4).is_maximal());
  CHECK(!G({2, 2, 4}, 4).is_maximal());
  CHECK(maximal_growth(2, 4) == G({2, 3, 4}, 4));
  CHECK(maximal_growth(3, 14) == G3({3, 6, 14}, 14));
  CHECK(G({2, 2, 3, 4}, 4).corank(3) == 2);
}

TEST_CASE("reduced index sets") {
  CHECK(reduce(G({2, 2, 4}, 4)).indices == std::vector<int>{2});
  CHECK(reduce(G({2, 2, 3, 4}, 4)).indices == std::vector<int>{2, 3});
  CHECK(reduce(G({2, 3, 3}, 4)).indices == std::vector<int>{3});
  CHECK(reduce(maximal_growth(3, 10)).empty());
}

TEST_CASE("Young diagrams") {
  const auto d = YoungDiagram::from_parts({3, 1, 1});
  CHECK(d.area() == 5);
  CHECK(as_vector(d.conjugate().parts()) == std::vector<int>{3, 1, 1});
  CHECK(as_vector(YoungDiagram::from_parts({4, 2}).conjugate().parts()) == std::vector<int>{2, 2, 1, 1});
  const std::vector<std::pair<int, int>> runs = {{3, 2}, {1, 1}};
  CHECK(as_vector(YoungDiagram::from_runs(runs).parts()) == std::vector<int>{3, 3, 1});
  CHECK(YoungDiagram::from_runs(runs).runs() == runs);
  CHECK(d.part(7) == 0);
  CHECK_THROWS_AS(YoungDiagram::from_parts({1, 2}), Error);
}

TEST_CASE("diagrams and codimension of the worked examples") {
  struct Row {
    std::vector<int> r;
    int m;
    std::vector<int> lambda, mu;
    int cd;
    std::vector<int> rho_prime;
  };
  for (const Row& row : {Row{{2, 2, 4}, 4, {1, 1}, {2}, 2, {1}},
                         Row{{2, 3, 3}, 4, {2}, {1, 1}, 2, {1, 1}},
                         Row{{2, 2, 3, 4}, 4, {2, 1}, {2, 1}, 3, {1, 2}}}) {
    const auto r = G(row.r, row.m);
    const auto d = young_diagrams(r);
    CHECK(as_vector(d.lambda.parts()) == row.lambda);
    CHECK(as_vector(d.mu.parts()) == row.mu);
    CHECK(d.cd == row.cd);
    CHECK(d.mu == d.lambda.conjugate());
    const auto maps = rho_maps(r);
    CHECK(maps.rho_prime == row.rho_prime);
    CHECK(maps.s_mu == static_cast<int>(row.mu.size()));
  }
}

TEST_CASE("locus classes of the worked examples") {
  const auto t = [](int i) { return F(gen_t(i)); };
  const auto v = [](int i, int e = 1) { return F(gen_v(i), e); };
  const auto ex1 = w_poly(4, {{1, {t(2)}}, {1, {v(2)}}, {1, {v(1, 2)}}});
  const auto ex2 = w_poly(4, {{1, {F(gen_t(1), 2)}}, {1, {v(1, 2)}}, {1, {t(2)}}, {1, {t(1), v(1)}}});
  const auto ex3 = w_poly(4, {{1, {t(2), t(1)}}, {1, {t(2), v(1)}}, {1, {v(1, 3)}}, {1, {t(3)}}});
  for (auto form : {DeterminantForm::lambda, DeterminantForm::mu}) {
    CHECK(giambelli_class(G({2, 2, 4}, 4), form) == ex1);
    CHECK(giambelli_class(G({2, 3, 3}, 4), form) == ex2);
    CHECK(giambelli_class(G({2, 2, 3, 4}, 4), form) == ex3);
  }
  CHECK(giambelli_class(G({2, 3, 4}, 4)) == GradedSeries::one(Field::F2, 4));
  // Above the truncation order the class vanishes.
  CHECK(giambelli_class(G({2, 2, 3, 4}, 4), DeterminantForm::lambda, 2).is_zero());
}

TEST_CASE("engine agrees with the one-shot evaluator") {
  const LocusEngine engine(2, 5, 6, 5);
  for (const auto& r : {std::vector<int>{2, 2, 3, 5}, std::vector<int>{2, 3, 3, 5}, std::vector<int>{2, 2, 2, 5},
                        std::vector<int>{2, 3, 4, 5}}) {
    const auto g = G(r, 5);
    CHECK(engine.locus_class(g, DeterminantForm::lambda) == giambelli_class(g));
    CHECK(engine.locus_class(g, DeterminantForm::mu) == giambelli_class(g));
  }
}

TEST_CASE("flagged determinant conventions") {
  const std::vector<GradedSeries> classes = {
      w_poly(4, {{1, {}}, {1, {F(gen_w(1))}}, {1, {F(gen_w(2))}}})};
  const std::vector<int> rows = {1, 1};
  // Shape (1,1): det [[w1, w2], [1, w1]].
  CHECK(flagged_determinant(YoungDiagram::from_parts({1, 1}), rows, classes, Field::F2, 4) ==
        w_poly(4, {{1, {F(gen_w(1), 2)}}, {1, {F(gen_w(2))}}}));
  CHECK(flagged_determinant(YoungDiagram(), {}, classes, Field::F2, 4) == GradedSeries::one(Field::F2, 4));
}

TEST_CASE("integral evaluator against the Porteous formula") {
  const int order = 6;
  const auto a = FormalBundle::generic(3, Field::Q, order, Family::v, 3);
  const auto b = FormalBundle::generic(4, Field::Q, order, Family::t, 4);
  const auto quotient = b.total_class() * invert(a.total_class());
  const std::vector<FormalBundle> sources = {a};

  // Rank at most 2 from rank 3 to rank 4: the single class c_2(B - A).
  {
    const std::vector<int> src = {3}, kappa = {2};
    const auto res = giambelli_class_integral(src, 4, kappa, sources, b);
    CHECK(res.cd == 2);
    CHECK(res.forms_agree);
    CHECK(res.lambda_form == component(quotient, 2));
    CHECK(res.mu_form == component(quotient, 2));
  }
  // Rank at most 1: the 2x2 determinant det [[c3, c4], [c2, c3]].
  {
    const std::vector<int> src = {3}, kappa = {1};
    const auto res = giambelli_class_integral(src, 4, kappa, sources, b);
    const auto c = [&](int i) { return component(quotient, i); };
    CHECK(res.cd == 6);
    CHECK(res.lambda_form == c(3) * c(3) - c(4) * c(2));
    CHECK(res.mu_form == res.lambda_form);
  }
  // No rank drop imposed.
  {
    const std::vector<int> src = {3}, kappa = {3};
    CHECK(giambelli_class_integral(src, 4, kappa, sources, b).lambda_form == GradedSeries::one(Field::Q, order));
  }
  // Increasing coranks are required.
  {
    const auto a2 = FormalBundle::generic(4, Field::Q, order, Family::v, 4);
    const std::vector<FormalBundle> two = {a, a2};
    const std::vector<int> src = {3, 4}, kappa = {1, 2};
    CHECK(code_of([&] { giambelli_class_integral(src, 4, kappa, two, b); }) == ErrorCode::PreconditionError);
  }
}

TEST_CASE("string forms") {
  CHECK(to_string(G({2, 2, 4}, 4)) == "(2,2,4)");
  CHECK(to_string(YoungDiagram::from_parts({2, 1})) == "(2,1)");
  CHECK(to_string(YoungDiagram()) == "()");
}
