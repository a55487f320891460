#include "liegiambelli/free_lie.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace liegiambelli {

int moebius(std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "moebius(" + std::to_string(d) + ")");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

Integer witt_dim_exact(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1)
    throw Error(ErrorCode::DomainError,
                "witt_dim needs n, k >= 1, got (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  Integer sum = 0;
  for (std::int64_t d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k / d));
    sum += mu * term;
  }
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(k)))
    throw Error(ErrorCode::InternalError, "Witt sum not divisible by k");
  return sum / k;
}

std::int64_t witt_dim(std::int64_t n, std::int64_t k) { return to_int64(witt_dim_exact(n, k)); }

Integer cumulative_dim_exact(std::int64_t n, std::int64_t k) {
  Integer sum = 0;
  for (std::int64_t i = 1; i <= k; ++i) sum += witt_dim_exact(n, i);
  return sum;
}

std::int64_t cumulative_dim(std::int64_t n, std::int64_t k) {
  return to_int64(cumulative_dim_exact(n, k));
}

WittTable witt_table(int n, int max_length) {
  WittTable table{n, {}, {}};
  std::int64_t running = 0;
  for (int k = 1; k <= max_length; ++k) {
    table.dims.push_back(witt_dim(n, k));
    running += table.dims.back();
    table.cumulative.push_back(running);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Hall basis

HallBasis::HallBasis(int n, int max_length, std::size_t max_words) : n_(n), max_length_(max_length) {
  if (n < 1 || max_length < 1) throw Error(ErrorCode::DomainError, "hall_basis needs n, K >= 1");
  Integer expected = 0;
  for (int k = 1; k <= max_length; ++k) expected += witt_dim_exact(n, k);
  if (expected > Integer(static_cast<unsigned long>(max_words)))
    throw Error(ErrorCode::TooLarge, "Hall basis has " + expected.get_str() + " words, cap is " +
                                         std::to_string(max_words));
  words_.reserve(expected.get_ui());
  length_start_.push_back(0);
  for (int letter = 1; letter <= n; ++letter)
    words_.push_back({letter, -1, -1, 1, static_cast<int>(words_.size())});
  depth_.assign(words_.size(), 1);
  length_start_.push_back(words_.size());

  for (int k = 2; k <= max_length; ++k) {
    std::vector<std::pair<int, int>> pairs;
    if (k == 2) {
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    } else {
      // a(bc) with bc a bracket of length < k, b <= a < bc.
      for (int len_w = 2; len_w < k; ++len_w) {
        const int len_a = k - len_w;
        for (const HallWord& w : of_length(len_w)) {
          for (const HallWord& a : of_length(len_a)) {
            if (w.left <= a.rank && a.rank < w.rank) pairs.emplace_back(a.rank, w.rank);
          }
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) {
      const int rank = static_cast<int>(words_.size());
      words_.push_back({0, a, b, k, rank});
      depth_.push_back(1 + std::max(depth_[static_cast<std::size_t>(a)], depth_[static_cast<std::size_t>(b)]));
    }
    length_start_.push_back(words_.size());
  }
}

std::span<const HallWord> HallBasis::of_length(int k) const {
  if (k < 1 || k > max_length_) return {};
  const auto begin = length_start_[static_cast<std::size_t>(k - 1)];
  const auto end = length_start_[static_cast<std::size_t>(k)];
  return std::span<const HallWord>(words_).subspan(begin, end - begin);
}

std::string HallBasis::letter_name(int letter, int n) {
  if (n > 26) return "e" + std::to_string(letter);
  static constexpr char kLetters[] = "uvwxyzabcdefghijklmnopqrst";
  return std::string(1, kLetters[letter - 1]);
}

std::string HallBasis::render(int rank) const {
  const HallWord& w = (*this)[rank];
  if (w.is_leaf()) return letter_name(w.letter, n_);
  return "(" + render(w.left) + "," + render(w.right) + ")";
}

int HallBasis::depth(int rank) const { return depth_.at(static_cast<std::size_t>(rank)); }

bool HallBasis::satisfies_hall_conditions(int rank) const {
  const HallWord& w = (*this)[rank];
  if (w.is_leaf()) return w.letter >= 1 && w.letter <= n_ && w.length == 1;
  const HallWord& a = (*this)[w.left];
  const HallWord& bc = (*this)[w.right];
  if (a.length + bc.length != w.length) return false;
  if (w.length == 2) return a.is_leaf() && bc.is_leaf() && a.rank < bc.rank;
  if (bc.is_leaf()) return false;
  const HallWord& b = (*this)[bc.left];
  const HallWord& c = (*this)[bc.right];
  return b.rank <= a.rank && a.rank < bc.rank && b.rank < c.rank;
}

Integer count_max_depth_exact(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 2) throw Error(ErrorCode::DomainError, "count_max_depth needs n >= 1, k >= 2");
  Integer sum = 0;
  for (std::int64_t j = 0; j < n; ++j) sum += binomial(j + k - 2, j) * j;
  return sum;
}

std::int64_t count_max_depth(std::int64_t n, std::int64_t k) {
  return to_int64(count_max_depth_exact(n, k));
}

// ---------------------------------------------------------------------------
// Characteristic classes of L^k(E)

ChernCharacter lie_char(const ChernCharacter& ch_e, int k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "lie_char needs k >= 1");
  const GradedSeries& ch = ch_e.series();
  GradedSeries sum(Field::Q, ch.order());
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    const int mu = moebius(d);
    if (mu == 0) continue;
    sum += scale(rescale(power(ch, static_cast<unsigned>(k / d)), d), mu);
  }
  return ChernCharacter(scale(sum, Rational(1, k)));
}

FormalBundle lie_bundle(const FormalBundle& e, int k) {
  if (k == 1) return e;
  return char_to_class(lie_char(class_to_char(e), k));
}

GradedSeries lie_total_class(int n, int k, int order, std::optional<int> generators) {
  if (n < 1 || k < 1) throw Error(ErrorCode::DomainError, "lie_total_class needs n, k >= 1");
  const int g = generators.value_or(order);
  if (g < 0) throw Error(ErrorCode::DomainError, "negative generator count");
  const FormalBundle e = FormalBundle::generic(n, Field::Q, order, Family::c, std::min(g, order));
  const FormalBundle lie = lie_bundle(e, k);
  for (const auto& [m, c] : lie.total_class().terms()) {
    if (!is_integral(c))
      throw Error(ErrorCode::InternalError,
                  "non-integral coefficient " + to_string(c) + " in c(L^" + std::to_string(k) + "_" +
                      std::to_string(n) + ")");
  }
  return lie.total_class();
}

GradedSeries lie_sw_class(int n, int k, int order, std::optional<int> generators) {
  return reduce_mod2(lie_total_class(n, k, order, generators), {{Family::c, Family::w}});
}

}  // namespace liegiambelli
