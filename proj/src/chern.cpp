#include "liegiambelli/chern.hpp"

#include <string>

namespace liegiambelli {

FormalBundle::FormalBundle(std::int64_t rank, GradedSeries total_class)
    : rank_(rank), class_(std::move(total_class)) {
  if (class_.constant_term() != 1)
    throw Error(ErrorCode::BadConstantTerm,
                "total class must have constant term 1, got " + to_string(class_.constant_term()));
}

FormalBundle FormalBundle::trivial(std::int64_t rank, Field field, int order) {
  return FormalBundle(rank, GradedSeries::one(field, order));
}

FormalBundle FormalBundle::generic(std::int64_t rank, Field field, int order, Family family,
                                   int count) {
  return FormalBundle(rank, GradedSeries::total_class(field, order, family, count));
}

ChernCharacter::ChernCharacter(GradedSeries series) : series_(std::move(series)) {
  if (series_.field() != Field::Q)
    throw Error(ErrorCode::UnsupportedField, "Chern characters live over Q");
  if (!is_integral(series_.constant_term()))
    throw Error(ErrorCode::BadRank, "weight-0 part " + to_string(series_.constant_term()) +
                                        " is not an integer rank");
}

std::int64_t ChernCharacter::rank() const { return to_int64(series_.constant_term().get_num()); }

ChernCharacter class_to_char(const FormalBundle& bundle) {
  const GradedSeries& total = bundle.total_class();
  if (total.field() != Field::Q)
    throw Error(ErrorCode::UnsupportedField, "class_to_char requires Q coefficients");
  const int order = total.order();
  const auto c = components(total);
  std::vector<GradedSeries> p(static_cast<std::size_t>(order) + 1, GradedSeries(Field::Q, order));
  GradedSeries ch = GradedSeries::constant(Field::Q, order, bundle.rank());
  for (int k = 1; k <= order; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    GradedSeries pk = scale(c[uk], (k % 2 == 1) ? k : -k);
    for (int i = 1; i < k; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (c[ui].is_zero() || p[uk - ui].is_zero()) continue;
      GradedSeries term = mul(c[ui], p[uk - ui]);
      if (i % 2 == 1)
        pk += term;
      else
        pk -= term;
    }
    ch += scale(pk, Rational(Integer(1), factorial(static_cast<unsigned>(k))));
    p[uk] = std::move(pk);
  }
  return ChernCharacter(std::move(ch));
}

FormalBundle char_to_class(const ChernCharacter& ch) {
  const int order = ch.order();
  const auto parts = components(ch.series());
  std::vector<GradedSeries> p(parts.size(), GradedSeries(Field::Q, order));
  for (int k = 1; k <= order; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    p[uk] = scale(parts[uk], Rational(factorial(static_cast<unsigned>(k))));
  }
  std::vector<GradedSeries> e{GradedSeries::one(Field::Q, order)};
  for (int k = 1; k <= order; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    GradedSeries acc(Field::Q, order);
    for (int i = 1; i <= k; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (e[uk - ui].is_zero() || p[ui].is_zero()) continue;
      GradedSeries term = mul(e[uk - ui], p[ui]);
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e.push_back(scale(acc, Rational(1, k)));
  }
  GradedSeries total(Field::Q, order);
  for (const auto& part : e) total += part;
  return FormalBundle(ch.rank(), std::move(total));
}

FormalBundle whitney(const FormalBundle& a, const FormalBundle& b) {
  return FormalBundle(a.rank() + b.rank(), mul(a.total_class(), b.total_class()));
}

FormalBundle difference(const FormalBundle& b, const FormalBundle& a) {
  return FormalBundle(b.rank() - a.rank(), mul(b.total_class(), invert(a.total_class())));
}

GradedSeries dual_class(const GradedSeries& total_class) {
  if (total_class.field() == Field::F2) return total_class;
  GradedSeries r(total_class.field(), total_class.order());
  for (const auto& [m, c] : total_class.terms()) r.add_term(m, m.weight() % 2 == 0 ? c : Rational(-c));
  return r;
}

FormalBundle dual(const FormalBundle& a) { return FormalBundle(a.rank(), dual_class(a.total_class())); }

std::vector<GradedSeries> symmetric_series(const ChernCharacter& ch, int t_order) {
  if (t_order < 0) throw Error(ErrorCode::DomainError, "t_order must be >= 0");
  const int order = ch.order();
  std::vector<GradedSeries> rescaled{GradedSeries(Field::Q, order)};
  for (int k = 1; k <= t_order; ++k) rescaled.push_back(rescale(ch.series(), k));
  // S_j = (1/j) sum_{i=1}^j (ch)_i S_{j-i}, from t d/dt applied to the exponential.
  std::vector<GradedSeries> s{GradedSeries::one(Field::Q, order)};
  for (int j = 1; j <= t_order; ++j) {
    GradedSeries acc(Field::Q, order);
    for (int i = 1; i <= j; ++i)
      acc += mul(rescaled[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j - i)]);
    s.push_back(scale(acc, Rational(1, j)));
  }
  return s;
}

}  // namespace liegiambelli
