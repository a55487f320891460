#pragma once

// Growth vectors of distributions, their reduced index sets and Young
// diagrams, and the determinantal classes of the degeneracy loci.

#include "liegiambelli/chern.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liegiambelli {

// A checked growth vector r_1 <= ... <= r_k of a rank-n distribution on an
// m-manifold. Entries are addressed 1-based through at().
class GrowthVector {
 public:
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int length() const noexcept { return static_cast<int>(ranks_.size()); }
  std::span<const int> ranks() const noexcept { return ranks_; }
  int at(int i) const { return ranks_.at(static_cast<std::size_t>(i - 1)); }
  // The number of missing dimensions at stage i: cumulative_dim(n,i) - r_i.
  int corank(int i) const;
  // Saturated at every stage until reaching m.
  bool is_maximal() const noexcept { return maximal_; }

  friend bool operator==(const GrowthVector&, const GrowthVector&) = default;

 private:
  friend GrowthVector validate_growth(std::vector<int> ranks, int n, int m);
  GrowthVector(int n, int m, std::vector<int> ranks, bool maximal)
      : n_(n), m_(m), ranks_(std::move(ranks)), maximal_(maximal) {}

  int n_;
  int m_;
  std::vector<int> ranks_;
  bool maximal_;
};

// Throws InvalidGrowthVector naming the first violated constraint:
// r_1 = n, r_i <= r_{i+1}, r_i <= min(cumulative_dim(n,i), m) and
// r_{i+1} <= r_i + d(n,i+1).
GrowthVector validate_growth(std::vector<int> ranks, int n, int m);

// The maximal growth vector (cumulative dims until m is reached).
GrowthVector maximal_growth(int n, int m);

// Stages carrying a non-redundant rank condition; 1-based indices into the
// growth vector. Ranks and coranks strictly increase along the set.
struct ReducedIndexSet {
  std::vector<int> indices;

  bool empty() const noexcept { return indices.empty(); }
  friend bool operator==(const ReducedIndexSet&, const ReducedIndexSet&) = default;
};

ReducedIndexSet reduce(const GrowthVector& r);

class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Parts must be weakly decreasing; zero parts are dropped.
  static YoungDiagram from_parts(std::vector<int> parts);
  // Runs (p_1^{m_1}, ..., p_l^{m_l}); zero multiplicities are skipped.
  static YoungDiagram from_runs(std::span<const std::pair<int, int>> runs);

  std::span<const int> parts() const noexcept { return parts_; }
  std::vector<std::pair<int, int>> runs() const;
  // 1-based part, zero beyond the last row.
  int part(int i) const noexcept;
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int area() const noexcept;
  YoungDiagram conjugate() const;
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> parts_;
};

// Rank conditions rk(A_s -> B) <= kappa_s on a flag A_1 c ... c A_l of
// ranks a_s mapping to B of rank b. The diagram lambda has parts a_s -
// kappa_s with multiplicities b - kappa_l, kappa_l - kappa_{l-1}, ...; mu is
// its conjugate.
struct FlagConditions {
  std::vector<int> source_ranks;  // a_1 <= ... <= a_l
  std::vector<int> rank_bounds;   // kappa_1 < ... < kappa_l
  int target_rank = 0;            // b

  int size() const noexcept { return static_cast<int>(source_ranks.size()); }
  YoungDiagram lambda() const;
  YoungDiagram mu() const;
  // rho(i) = max{s : i <= b - kappa_s} for i = 1..b - kappa_1.
  std::vector<int> rho() const;
  // rho'(i) = min{s : i <= a_s - kappa_s} for i = 1..a_l - kappa_l.
  std::vector<int> rho_prime() const;
};

FlagConditions flag_conditions(const GrowthVector& r, const ReducedIndexSet& reduced);

struct LocusDiagrams {
  YoungDiagram lambda;
  YoungDiagram mu;
  int cd = 0;
};

// Throws InternalError if mu is not the conjugate of lambda.
LocusDiagrams young_diagrams(const GrowthVector& r);

struct RowMaps {
  std::vector<int> rho;        // rho[i-1] for i = 1..s_lambda
  std::vector<int> rho_prime;  // rho_prime[i-1] for i = 1..s_mu
  int s_lambda = 0;
  int s_mu = 0;
};

RowMaps rho_maps(const GrowthVector& r);

enum class DeterminantForm { lambda, mu };

// The determinant det(cls_{shape_i - i + j}(D_{rows(i)})) with D_s the
// s-th class in `classes` (1-based row map) and the conventions cls_0 = 1,
// cls_{<0} = 0.
GradedSeries flagged_determinant(const YoungDiagram& shape, std::span<const int> row_map,
                                 std::span<const GradedSeries> classes, Field field, int order);

// Mod-2 classes of degeneracy loci for rank-n distributions on an
// m-manifold. The Stiefel-Whitney classes of L_j(V) = L^1(V) + ... + L^j(V)
// are computed once at construction for j <= max_length. Generators:
// v_i = w_i(V) for i <= n, t_i = w_i(M) for i <= m.
class LocusEngine {
 public:
  LocusEngine(int n, int m, int max_length, int order);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int order() const noexcept { return order_; }

  // w(L^i(V)) and w(L_j(V)), 1-based.
  const GradedSeries& lie_class(int i) const;
  const GradedSeries& flag_class(int j) const;
  const GradedSeries& tangent_class() const noexcept { return tangent_; }

  // The class dual to the locus, homogeneous of weight cd(r); zero when
  // cd(r) exceeds the truncation order and 1 for an empty reduced set.
  GradedSeries locus_class(const GrowthVector& r, DeterminantForm form) const;

 private:
  int n_;
  int m_;
  int max_length_;
  int order_;
  std::vector<GradedSeries> lie_;
  std::vector<GradedSeries> flag_;
  std::vector<GradedSeries> flag_inverse_;
  GradedSeries tangent_;
  GradedSeries tangent_inverse_;
};

// Truncation order defaults to m.
GradedSeries giambelli_class(const GrowthVector& r, DeterminantForm form = DeterminantForm::lambda,
                             std::optional<int> order = std::nullopt);

// The complex flagged evaluator: both determinant forms with honest duals,
// over Q.
struct IntegralGiambelli {
  GradedSeries lambda_form;
  GradedSeries mu_form;
  YoungDiagram lambda;
  YoungDiagram mu;
  int cd = 0;
  bool forms_agree = false;
};

// Requires 0 < a_1 - kappa_1 < ... < a_l - kappa_l and kappa_1 < ... <
// kappa_l < b. When every condition is vacuous (kappa_s >= a_s for all s)
// the class is 1.
IntegralGiambelli giambelli_class_integral(std::span<const int> source_ranks, int target_rank,
                                           std::span<const int> rank_bounds,
                                           std::span<const FormalBundle> sources,
                                           const FormalBundle& target);

std::string to_string(const GrowthVector& r);
std::string to_string(const YoungDiagram& d);

}  // namespace liegiambelli
