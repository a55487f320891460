#pragma once

// Combinatorics of the free Lie algebra on n generators: Witt dimensions,
// the Hall basis with its depth filtration, and the characteristic classes
// of the associated bundles L^k(E).

#include "liegiambelli/chern.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liegiambelli {

// Moebius function; throws DomainError for d < 1.
int moebius(std::int64_t d);

// d(n,k) = (1/k) sum_{d | k} mu(d) n^{k/d}, the dimension of L^k_n.
Integer witt_dim_exact(std::int64_t n, std::int64_t k);
std::int64_t witt_dim(std::int64_t n, std::int64_t k);

// The cumulative dimension d(n,1) + ... + d(n,k); zero for k = 0.
Integer cumulative_dim_exact(std::int64_t n, std::int64_t k);
std::int64_t cumulative_dim(std::int64_t n, std::int64_t k);

struct WittTable {
  int n = 0;
  std::vector<std::int64_t> dims;        // dims[k-1] = d(n,k)
  std::vector<std::int64_t> cumulative;  // cumulative[k-1] = sum_{i<=k} d(n,i)
};
WittTable witt_table(int n, int max_length);

// One element of a Hall family. Leaves carry a generator letter 1..n;
// brackets refer to their left and right factors by rank. The rank is the
// position in the Hall order, which refines length and, within a length,
// orders brackets lexicographically by (rank(left), rank(right)).
struct HallWord {
  int letter = 0;  // 0 for brackets
  int left = -1;
  int right = -1;
  int length = 1;
  int rank = 0;

  bool is_leaf() const noexcept { return letter != 0; }
};

class HallBasis {
 public:
  // Generates H^1..H^max_length over n generators. Throws TooLarge when the
  // total word count would exceed max_words.
  HallBasis(int n, int max_length, std::size_t max_words = 10'000'000);

  int generators() const noexcept { return n_; }
  int max_length() const noexcept { return max_length_; }
  std::span<const HallWord> words() const noexcept { return words_; }
  std::span<const HallWord> of_length(int k) const;
  const HallWord& operator[](int rank) const { return words_.at(static_cast<std::size_t>(rank)); }

  // Parenthesized rendering with a comma between the two factors of every
  // bracket, e.g. "(v,(u,(u,v)))". Leaves use the letters u, v, w, x, y, z,
  // a, b, ... in generator order, or "e<i>" beyond 26 generators.
  std::string render(int rank) const;

  // Maximal number of bracket pairs enclosing a leaf, plus one; a single
  // generator has depth 1 and a right comb of length k has depth k.
  int depth(int rank) const;
  // The same count without the offset.
  int raw_depth(int rank) const { return depth(rank) - 1; }

  // Re-checks the defining conditions for one word against the basis.
  bool satisfies_hall_conditions(int rank) const;

  // Leaf letter for a generator index 1..n.
  static std::string letter_name(int letter, int n);

 private:
  int n_;
  int max_length_;
  std::vector<HallWord> words_;
  std::vector<std::size_t> length_start_;  // words of length k occupy [start[k-1], start[k])
  std::vector<int> depth_;
};

// Closed form sum_{j=0}^{n-1} binom(j+k-2, j) j for the number of Hall words
// of length k and depth k.
Integer count_max_depth_exact(std::int64_t n, std::int64_t k);
std::int64_t count_max_depth(std::int64_t n, std::int64_t k);

// ch(L^k(E)) = (1/k) sum_{d | k} mu(d) (ch(E)^{k/d})_d.
ChernCharacter lie_char(const ChernCharacter& ch_e, int k);

// L^k(E) as a formal bundle over Q.
FormalBundle lie_bundle(const FormalBundle& e, int k);

// Total Chern class of L^k_n for the rank-n bundle with class
// 1 + c_1 + ... + c_g, g = generators (default: order, i.e. the classes
// above the rank stay formal). Coefficients are asserted to be integers.
GradedSeries lie_total_class(int n, int k, int order, std::optional<int> generators = std::nullopt);

// Mod-2 reduction of lie_total_class with c_i renamed w_i.
GradedSeries lie_sw_class(int n, int k, int order, std::optional<int> generators = std::nullopt);

}  // namespace liegiambelli
