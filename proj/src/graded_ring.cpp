#include "liegiambelli/graded_ring.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace liegiambelli {

std::string_view field_name(Field f) noexcept { return f == Field::Q ? "Q" : "F2"; }

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::t: return "t";
    case Family::v: return "v";
    case Family::c: return "c";
    case Family::w: return "w";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "t") return Family::t;
  if (name == "v") return Family::v;
  if (name == "c") return Family::c;
  if (name == "w") return Family::w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Generator g, int exponent) {
  if (g.index < 1) throw Error(ErrorCode::DomainError, "generator index must be >= 1");
  if (exponent < 0) throw Error(ErrorCode::DomainError, "negative exponent");
  if (exponent > 0) {
    factors_.push_back({g, exponent});
    weight_ = g.weight() * exponent;
  }
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.generator < b.generator; });
  for (const Factor& f : factors) {
    if (f.generator.index < 1) throw Error(ErrorCode::DomainError, "generator index must be >= 1");
    if (f.exponent < 0) throw Error(ErrorCode::DomainError, "negative exponent");
    if (f.exponent == 0) continue;
    if (!factors_.empty() && factors_.back().generator == f.generator)
      factors_.back().exponent += f.exponent;
    else
      factors_.push_back(f);
    weight_ += f.generator.weight() * f.exponent;
  }
}

int Monomial::exponent_of(Generator g) const noexcept {
  for (const Factor& f : factors_)
    if (f.generator == g) return f.exponent;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->generator == j->generator) {
      r.factors_.push_back({i->generator, i->exponent + j->exponent});
      ++i;
      ++j;
    } else if (i->generator < j->generator) {
      r.factors_.push_back(*i++);
    } else {
      r.factors_.push_back(*j++);
    }
  }
  r.factors_.insert(r.factors_.end(), i, a.factors_.end());
  r.factors_.insert(r.factors_.end(), j, b.factors_.end());
  r.weight_ = a.weight_ + b.weight_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  // Compare the expanded generator sequences lexicographically.
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Factor& x = a.factors_[i];
    const Factor& y = b.factors_[i];
    if (auto c = x.generator <=> y.generator; c != 0) return c;
    if (x.exponent != y.exponent) return y.exponent <=> x.exponent;
  }
  return a.factors_.size() <=> b.factors_.size();
}

// ---------------------------------------------------------------------------
// GradedSeries

namespace {

void require_same_field(const GradedSeries& a, const GradedSeries& b) {
  if (a.field() != b.field())
    throw Error(ErrorCode::FieldMismatch, std::string("cannot combine series over ") +
                                              std::string(field_name(a.field())) + " and " +
                                              std::string(field_name(b.field())));
}

void require_q(const GradedSeries& a, std::string_view op) {
  if (a.field() != Field::Q)
    throw Error(ErrorCode::UnsupportedField, std::string(op) + " requires coefficients in Q");
}

}  // namespace

GradedSeries::GradedSeries(Field field, int order) : field_(field), order_(order) {
  if (order < 0) throw Error(ErrorCode::DomainError, "truncation order must be >= 0");
}

GradedSeries GradedSeries::constant(Field field, int order, const Rational& value) {
  GradedSeries s(field, order);
  s.add_term(Monomial{}, value);
  return s;
}

GradedSeries GradedSeries::monomial(Field field, int order, const Monomial& m,
                                    const Rational& coeff) {
  GradedSeries s(field, order);
  s.add_term(m, coeff);
  return s;
}

GradedSeries GradedSeries::total_class(Field field, int order, Family family, int count) {
  GradedSeries s = one(field, order);
  for (int i = 1; i <= count; ++i) s.add_term(Monomial({family, i}), 1);
  return s;
}

Rational GradedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedSeries::min_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::optional<int> GradedSeries::max_weight() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weight();
}

bool GradedSeries::is_homogeneous(int weight) const {
  return terms_.empty() || (*min_weight() == weight && *max_weight() == weight);
}

void GradedSeries::add_term(const Monomial& m, const Rational& value) {
  if (m.weight() > order_ || value == 0) return;
  Rational coeff = value;
  coeff.canonicalize();
  if (field_ == Field::F2) {
    if (!is_integral(coeff))
      throw Error(ErrorCode::NonIntegralCoefficient,
                  "coefficient " + to_string(coeff) + " has no reduction mod 2");
    if (mpz_odd_p(coeff.get_num_mpz_t()) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, 1);
    if (!inserted) terms_.erase(it);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  require_same_field(*this, other);
  if (other.order_ < order_) *this = truncate(*this, other.order_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) {
  require_same_field(*this, other);
  if (other.order_ < order_) *this = truncate(*this, other.order_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  if (field_ == Field::F2) {
    GradedSeries r(field_, order_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * scalar);
    *this = std::move(r);
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

GradedSeries add(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries r = a;
  r += b;
  return r;
}

GradedSeries subtract(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries r = a;
  r -= b;
  return r;
}

GradedSeries negate(const GradedSeries& a) { return scale(a, -1); }

GradedSeries scale(const GradedSeries& a, const Rational& s) {
  GradedSeries r = a;
  r *= s;
  return r;
}

GradedSeries mul(const GradedSeries& a, const GradedSeries& b) {
  require_same_field(a, b);
  const int order = std::min(a.order(), b.order());
  GradedSeries r(a.field(), order);
  const bool f2 = a.field() == Field::F2;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.weight() > order) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.weight() + mb.weight() > order) break;
      r.add_term(ma * mb, f2 ? Rational(1) : Rational(ca * cb));
    }
  }
  return r;
}

GradedSeries power(const GradedSeries& a, unsigned exponent) {
  GradedSeries result = GradedSeries::one(a.field(), a.order());
  GradedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

GradedSeries truncate(const GradedSeries& a, int order) {
  GradedSeries r(a.field(), std::min(order, a.order()));
  for (const auto& [m, c] : a.terms()) {
    if (m.weight() > r.order()) break;
    r.add_term(m, c);
  }
  return r;
}

ComponentResult component_checked(const GradedSeries& a, int j) {
  ComponentResult out{GradedSeries(a.field(), a.order()), j > a.order()};
  if (j < 0 || j > a.order()) return out;
  for (const auto& [m, c] : a.terms()) {
    if (m.weight() < j) continue;
    if (m.weight() > j) break;
    out.part.add_term(m, c);
  }
  return out;
}

std::vector<GradedSeries> components(const GradedSeries& a) {
  std::vector<GradedSeries> parts(static_cast<std::size_t>(a.order()) + 1,
                                  GradedSeries(a.field(), a.order()));
  for (const auto& [m, c] : a.terms()) parts[static_cast<std::size_t>(m.weight())].add_term(m, c);
  return parts;
}

GradedSeries invert(const GradedSeries& a) {
  const Rational a0 = a.constant_term();
  if (a0 == 0) throw Error(ErrorCode::NotInvertible, "constant term is zero");
  const auto parts = components(a);
  const Rational inv0 = a.field() == Field::F2 ? Rational(1) : Rational(1 / a0);
  std::vector<GradedSeries> out;
  out.reserve(parts.size());
  out.push_back(GradedSeries::constant(a.field(), a.order(), inv0));
  for (std::size_t j = 1; j < parts.size(); ++j) {
    GradedSeries acc(a.field(), a.order());
    for (std::size_t i = 1; i <= j; ++i) {
      if (parts[i].is_zero() || out[j - i].is_zero()) continue;
      acc += mul(parts[i], out[j - i]);
    }
    out.push_back(scale(acc, -inv0));
  }
  GradedSeries r(a.field(), a.order());
  for (const auto& p : out) r += p;
  return r;
}

GradedSeries rescale(const GradedSeries& a, const Rational& d) {
  require_q(a, "rescale");
  GradedSeries r(a.field(), a.order());
  Rational factor = 1;
  int current = 0;
  for (const auto& [m, c] : a.terms()) {
    while (current < m.weight()) {
      factor *= d;
      ++current;
    }
    r.add_term(m, c * factor);
  }
  return r;
}

// Both recurrences come from the Euler derivation D(x) = weight(x) * x,
// which satisfies D(exp a) = D(a) exp(a).
GradedSeries exp(const GradedSeries& a) {
  require_q(a, "exp");
  if (a.constant_term() != 0) throw Error(ErrorCode::BadConstantTerm, "exp needs constant term 0");
  const auto parts = components(a);
  std::vector<GradedSeries> out{GradedSeries::one(a.field(), a.order())};
  for (std::size_t j = 1; j < parts.size(); ++j) {
    GradedSeries acc(a.field(), a.order());
    for (std::size_t i = 1; i <= j; ++i) {
      if (parts[i].is_zero() || out[j - i].is_zero()) continue;
      acc += scale(mul(parts[i], out[j - i]), static_cast<long>(i));
    }
    out.push_back(scale(acc, Rational(1, static_cast<long>(j))));
  }
  GradedSeries r(a.field(), a.order());
  for (const auto& p : out) r += p;
  return r;
}

GradedSeries log(const GradedSeries& a) {
  require_q(a, "log");
  if (a.constant_term() != 1) throw Error(ErrorCode::BadConstantTerm, "log needs constant term 1");
  const auto parts = components(a);
  std::vector<GradedSeries> out{GradedSeries(a.field(), a.order())};
  for (std::size_t j = 1; j < parts.size(); ++j) {
    GradedSeries acc(a.field(), a.order());
    for (std::size_t i = 1; i < j; ++i) {
      if (out[i].is_zero() || parts[j - i].is_zero()) continue;
      acc += scale(mul(out[i], parts[j - i]), static_cast<long>(i));
    }
    out.push_back(parts[j] - scale(acc, Rational(1, static_cast<long>(j))));
  }
  GradedSeries r(a.field(), a.order());
  for (const auto& p : out) r += p;
  return r;
}

GradedSeries substitute(const GradedSeries& a, const Substitution& images) {
  int order = a.order();
  for (const auto& [g, image] : images) {
    require_same_field(a, image);
    const bool constant = image.is_zero() || image.is_homogeneous(0);
    if (!constant && !image.is_homogeneous(g.weight()))
      throw Error(ErrorCode::WeightMismatch,
                  "image of " + std::string(family_name(g.family)) + "_" + std::to_string(g.index) +
                      " is not homogeneous of weight " + std::to_string(g.weight()));
    order = std::min(order, image.order());
  }
  std::map<std::pair<Generator, int>, GradedSeries> powers;
  auto power_of = [&](Generator g, int e) -> const GradedSeries& {
    auto key = std::make_pair(g, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      auto img = images.find(g);
      GradedSeries p = img == images.end()
                           ? GradedSeries::monomial(a.field(), order, Monomial(g, e))
                           : power(truncate(img->second, order), static_cast<unsigned>(e));
      it = powers.emplace(key, std::move(p)).first;
    }
    return it->second;
  };
  GradedSeries r(a.field(), order);
  for (const auto& [m, c] : a.terms()) {
    GradedSeries term = GradedSeries::constant(a.field(), order, c);
    for (const Factor& f : m.factors()) {
      term = mul(term, power_of(f.generator, f.exponent));
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

GradedSeries retag(const GradedSeries& a, const std::map<Family, Family>& families) {
  GradedSeries r(a.field(), a.order());
  for (const auto& [m, c] : a.terms()) {
    std::vector<Factor> factors(m.factors().begin(), m.factors().end());
    for (Factor& f : factors) {
      auto it = families.find(f.generator.family);
      if (it != families.end()) f.generator.family = it->second;
    }
    r.add_term(Monomial(std::move(factors)), c);
  }
  return r;
}

GradedSeries reduce_mod2(const GradedSeries& a, const std::map<Family, Family>& families) {
  if (a.field() == Field::F2) return retag(a, families);
  GradedSeries r(Field::F2, a.order());
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);  // throws on a proper fraction
  return retag(r, families);
}

// ---------------------------------------------------------------------------
// Determinants

SeriesMatrix::SeriesMatrix(Field field, int order, std::size_t rows, std::size_t cols)
    : field_(field), order_(order), rows_(rows), cols_(cols),
      entries_(rows * cols, GradedSeries(field, order)) {}

GradedSeries determinant(const SeriesMatrix& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::ShapeError, "determinant of a " + std::to_string(m.rows()) + "x" +
                                           std::to_string(m.cols()) + " matrix");
  const std::size_t s = m.rows();
  constexpr std::size_t kMaxSize = 20;
  if (s > kMaxSize)
    throw Error(ErrorCode::TooLarge, "determinant size " + std::to_string(s) + " exceeds " +
                                         std::to_string(kMaxSize));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (m.at(i, j).field() != m.field()) throw Error(ErrorCode::FieldMismatch, "matrix entry field");
  if (s == 0) return GradedSeries::one(m.field(), m.order());

  // minors[mask] = determinant of rows 0..popcount(mask)-1 restricted to the
  // columns in mask, expanded along its last row.
  const std::size_t full = (std::size_t{1} << s) - 1;
  std::vector<GradedSeries> minors(full + 1, GradedSeries(m.field(), m.order()));
  minors[0] = GradedSeries::one(m.field(), m.order());
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    GradedSeries acc(m.field(), m.order());
    int position = 0;
    for (std::size_t j = 0; j < s; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const GradedSeries& entry = m.at(row, j);
      const GradedSeries& minor = minors[mask & ~(std::size_t{1} << j)];
      if (!entry.is_zero() && !minor.is_zero()) {
        GradedSeries prod = mul(entry, minor);
        if ((row + static_cast<std::size_t>(position)) % 2 == 0)
          acc += prod;
        else
          acc -= prod;
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

}  // namespace liegiambelli
