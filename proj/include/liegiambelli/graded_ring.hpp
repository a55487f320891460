#pragma once

// Truncated graded-commutative polynomial arithmetic over Q or F2.
//
// Every generator carries a positive weight equal to its index. A
// GradedSeries stores only monomials of total weight <= order; all
// operations re-truncate to the smaller order of their operands. All
// generators used by this library have even cohomological degree (Chern
// classes) or live in characteristic two, so the product is commutative
// with no signs.

#include "liegiambelli/errors.hpp"
#include "liegiambelli/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace liegiambelli {

enum class Field : std::uint8_t { Q, F2 };

std::string_view field_name(Field f) noexcept;

// Declaration order is also the display order: classes of M, classes of
// the distribution V, Chern classes, generic Stiefel-Whitney classes.
enum class Family : std::uint8_t { t, v, c, w };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct Generator {
  Family family = Family::c;
  int index = 1;

  int weight() const noexcept { return index; }

  friend bool operator==(const Generator&, const Generator&) = default;
  // Storage order inside a monomial: family first, then larger index first.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) noexcept {
    if (auto c = a.family <=> b.family; c != 0) return c;
    return b.index <=> a.index;
  }
};

inline Generator gen_c(int i) { return {Family::c, i}; }
inline Generator gen_w(int i) { return {Family::w, i}; }
inline Generator gen_v(int i) { return {Family::v, i}; }
inline Generator gen_t(int i) { return {Family::t, i}; }

struct Factor {
  Generator generator;
  int exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// A product of generator powers. Monomials compare by total weight first,
// so iterating a term map visits weights in increasing order; within a
// weight, higher-index generators come first (t_2 < v_2 < v_1^2).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Generator g, int exponent = 1);
  explicit Monomial(std::vector<Factor> factors);

  int weight() const noexcept { return weight_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::span<const Factor> factors() const noexcept { return factors_; }
  int exponent_of(Generator g) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.weight_ == b.weight_ && a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::vector<Factor> factors_;
  int weight_ = 0;
};

class GradedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  // The zero series.
  GradedSeries(Field field, int order);

  static GradedSeries constant(Field field, int order, const Rational& value);
  static GradedSeries one(Field field, int order) { return constant(field, order, 1); }
  static GradedSeries monomial(Field field, int order, const Monomial& m,
                               const Rational& coeff = 1);
  static GradedSeries generator(Field field, int order, Generator g,
                                const Rational& coeff = 1) {
    return monomial(field, order, Monomial(g), coeff);
  }
  // 1 + g_1 + ... + g_count in the given family.
  static GradedSeries total_class(Field field, int order, Family family, int count);

  Field field() const noexcept { return field_; }
  int order() const noexcept { return order_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  // Smallest and largest weight carrying a nonzero term; nullopt for zero.
  std::optional<int> min_weight() const;
  std::optional<int> max_weight() const;
  bool is_homogeneous(int weight) const;

  // Adds coeff*m, dropping it if m is above the truncation order.
  void add_term(const Monomial& m, const Rational& coeff);

  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  GradedSeries& operator*=(const Rational& scalar);

  friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  int order_;
  TermMap terms_;
};

GradedSeries add(const GradedSeries& a, const GradedSeries& b);
GradedSeries subtract(const GradedSeries& a, const GradedSeries& b);
GradedSeries negate(const GradedSeries& a);
GradedSeries mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries scale(const GradedSeries& a, const Rational& s);
GradedSeries power(const GradedSeries& a, unsigned exponent);

inline GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) { return add(a, b); }
inline GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return subtract(a, b); }
inline GradedSeries operator-(const GradedSeries& a) { return negate(a); }
inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return mul(a, b); }
inline GradedSeries operator*(const Rational& s, const GradedSeries& a) { return scale(a, s); }

// Same terms, lower truncation order.
GradedSeries truncate(const GradedSeries& a, int order);

// Multiplicative inverse up to truncation. Throws NotInvertible when the
// constant term is zero.
GradedSeries invert(const GradedSeries& a);

// Weight-j homogeneous part. Negative j yields zero; so does j above the
// order, in which case beyond_order is set.
struct ComponentResult {
  GradedSeries part;
  bool beyond_order = false;
};
ComponentResult component_checked(const GradedSeries& a, int j);
inline GradedSeries component(const GradedSeries& a, int j) { return component_checked(a, j).part; }

// All homogeneous parts 0..order.
std::vector<GradedSeries> components(const GradedSeries& a);

// Weight-i component multiplied by d^i. Q only.
GradedSeries rescale(const GradedSeries& a, const Rational& d);

// Formal exponential (constant term 0) and logarithm (constant term 1). Q only.
GradedSeries exp(const GradedSeries& a);
GradedSeries log(const GradedSeries& a);

// Homomorphic substitution. Each image must share the field of a and be
// homogeneous of the replaced generator's weight, or be a constant.
// Generators without an image are kept.
using Substitution = std::map<Generator, GradedSeries>;
GradedSeries substitute(const GradedSeries& a, const Substitution& images);

// Maps generator families, e.g. c -> w; keeps field and coefficients.
GradedSeries retag(const GradedSeries& a, const std::map<Family, Family>& families);

// Reduce integral coefficients mod 2 and retag families per the map.
// Throws NonIntegralCoefficient on a proper fraction.
GradedSeries reduce_mod2(const GradedSeries& a, const std::map<Family, Family>& families = {});

// Square matrix of series sharing field and order.
class SeriesMatrix {
 public:
  SeriesMatrix(Field field, int order, std::size_t rows, std::size_t cols);

  Field field() const noexcept { return field_; }
  int order() const noexcept { return order_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  GradedSeries& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const GradedSeries& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  Field field_;
  int order_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GradedSeries> entries_;
};

// Laplace expansion along rows, memoized over column subsets, so the cost
// is O(s * 2^s) series products instead of s!. The empty matrix has
// determinant 1.
GradedSeries determinant(const SeriesMatrix& m);

}  // namespace liegiambelli
