#pragma once

// Characteristic-class calculus on formal bundles.

#include "liegiambelli/graded_ring.hpp"

#include <cstdint>
#include <vector>

namespace liegiambelli {

// A rank (negative for virtual differences) and a total class with
// constant term exactly 1.
class FormalBundle {
 public:
  FormalBundle(std::int64_t rank, GradedSeries total_class);

  // Rank-r bundle with trivial total class.
  static FormalBundle trivial(std::int64_t rank, Field field, int order);
  // Rank-r bundle with class 1 + g_1 + ... + g_count in the given family.
  static FormalBundle generic(std::int64_t rank, Field field, int order, Family family,
                              int count);

  std::int64_t rank() const noexcept { return rank_; }
  const GradedSeries& total_class() const noexcept { return class_; }
  Field field() const noexcept { return class_.field(); }
  int order() const noexcept { return class_.order(); }

  friend bool operator==(const FormalBundle&, const FormalBundle&) = default;

 private:
  std::int64_t rank_;
  GradedSeries class_;
};

// A Chern character; its weight-0 part is the integer rank.
class ChernCharacter {
 public:
  explicit ChernCharacter(GradedSeries series);

  const GradedSeries& series() const noexcept { return series_; }
  std::int64_t rank() const;
  int order() const noexcept { return series_.order(); }

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

 private:
  GradedSeries series_;
};

// ch = rank + sum_k p_k / k!, with the power sums p_k from the Newton
// identities p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^{k-1} k c_k.
ChernCharacter class_to_char(const FormalBundle& bundle);

// Inverse of class_to_char: p_k = k! ch_k, then
// c_k = (1/k) sum_{i=1}^k (-1)^{i-1} c_{k-i} p_i.
FormalBundle char_to_class(const ChernCharacter& ch);

FormalBundle whitney(const FormalBundle& a, const FormalBundle& b);

// The virtual bundle b - a.
FormalBundle difference(const FormalBundle& b, const FormalBundle& a);

// Weight-i component times (-1)^i; the identity over F2.
FormalBundle dual(const FormalBundle& a);
GradedSeries dual_class(const GradedSeries& total_class);

// Coefficients s_0..s_{t_order} of s(V)(t) = sum_i ch(S^i V) t^i, computed as
// exp(sum_k (ch)_k t^k / k) where (ch)_k rescales weight i by k^i.
std::vector<GradedSeries> symmetric_series(const ChernCharacter& ch, int t_order);

}  // namespace liegiambelli
