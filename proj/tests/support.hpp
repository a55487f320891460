#pragma once

#include "liegiambelli/graded_ring.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace testing {

using namespace liegiambelli;

using Term = std::pair<Rational, std::vector<Factor>>;

inline GradedSeries poly(Field f, int order, std::initializer_list<Term> terms) {
  GradedSeries s(f, order);
  for (const auto& [coeff, factors] : terms) s.add_term(Monomial(factors), coeff);
  return s;
}

inline Factor F(Generator g, int e = 1) { return {g, e}; }

// Sends c_i to e_i(x) * t_1^i, i.e. evaluates a class at a bundle with
// numeric Chern roots x, keeping the grading in powers of t_1.
inline GradedSeries at_roots(const GradedSeries& a, const std::vector<Rational>& x) {
  std::vector<Rational> e(x.size() + 1, 0);
  e[0] = 1;
  for (const auto& xi : x)
    for (std::size_t j = x.size(); j >= 1; --j) e[j] += e[j - 1] * xi;
  Substitution images;
  for (int i = 1; i <= a.order(); ++i) {
    const Rational ei = i < static_cast<int>(e.size()) ? e[i] : Rational(0);
    images.emplace(gen_c(i), GradedSeries::monomial(a.field(), a.order(), Monomial(gen_t(1), i), ei));
  }
  return substitute(a, images);
}

// prod (1 + s t_1) over the given roots.
inline GradedSeries split_class(const std::vector<Rational>& roots, int order) {
  GradedSeries out = GradedSeries::one(Field::Q, order);
  for (const auto& s : roots) {
    GradedSeries f = GradedSeries::one(Field::Q, order);
    f.add_term(Monomial(gen_t(1)), s);
    out = out * f;
  }
  return out;
}

// sum_j s^j t_1^j / j! over the given roots.
inline GradedSeries split_char(const std::vector<Rational>& roots, int order) {
  GradedSeries out(Field::Q, order);
  for (const auto& s : roots) {
    Rational p = 1;
    for (int j = 0; j <= order; ++j) {
      out.add_term(j == 0 ? Monomial{} : Monomial(gen_t(1), j), p / Rational(factorial(j)));
      p *= s;
    }
  }
  return out;
}

}  // namespace testing
