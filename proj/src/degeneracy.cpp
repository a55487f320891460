#include "liegiambelli/degeneracy.hpp"

#include "liegiambelli/free_lie.hpp"

#include <algorithm>
#include <string>

namespace liegiambelli {

namespace {

[[noreturn]] void invalid(const std::string& constraint, const std::vector<int>& ranks) {
  std::string shown = "(";
  for (std::size_t i = 0; i < ranks.size(); ++i) shown += (i ? "," : "") + std::to_string(ranks[i]);
  throw Error(ErrorCode::InvalidGrowthVector, "constraint " + constraint + " fails for " + shown + ")");
}

std::string at_index(const char* text, std::size_t i) {
  return std::string(text) + " at i=" + std::to_string(i + 1);
}

}  // namespace

int GrowthVector::corank(int i) const {
  return static_cast<int>(cumulative_dim(n_, i) - at(i));
}

GrowthVector validate_growth(std::vector<int> ranks, int n, int m) {
  if (n < 1) invalid("n >= 1", ranks);
  if (m < n) invalid("m >= n", ranks);
  if (ranks.empty()) invalid("k >= 1", ranks);
  if (ranks.front() != n) invalid("r_1 = n", ranks);
  bool maximal = true;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const int k = static_cast<int>(i + 1);
    const Integer cum = cumulative_dim_exact(n, k);
    if (i > 0) {
      if (ranks[i] < ranks[i - 1]) invalid(at_index("r_{i-1} <= r_i", i), ranks);
      if (Integer(ranks[i]) > Integer(ranks[i - 1]) + witt_dim_exact(n, k))
        invalid(at_index("r_i <= r_{i-1} + d(n,i)", i), ranks);
    }
    if (Integer(ranks[i]) > cum) invalid(at_index("r_i <= cumulative_dim(n,i)", i), ranks);
    if (ranks[i] > m) invalid(at_index("r_i <= m", i), ranks);
    if (Integer(ranks[i]) != (cum < m ? cum : Integer(m))) maximal = false;
  }
  if (ranks.back() != m) maximal = false;
  return GrowthVector(n, m, std::move(ranks), maximal);
}

GrowthVector maximal_growth(int n, int m) {
  if (n < 1 || m < n) throw Error(ErrorCode::DomainError, "maximal_growth needs 1 <= n <= m");
  std::vector<int> ranks;
  for (int i = 1;; ++i) {
    const Integer cum = cumulative_dim_exact(n, i);
    ranks.push_back(cum < m ? static_cast<int>(cum.get_si()) : m);
    if (ranks.back() == m) break;
  }
  return validate_growth(std::move(ranks), n, m);
}

// A condition at stage i reads dim ker(V^i -> TM/V) >= corank_i on the
// flag of Lie brackets. It is implied by a later stage with the same rank,
// and by an earlier stage with at least the same corank; what remains has
// strictly increasing ranks and coranks.
ReducedIndexSet reduce(const GrowthVector& r) {
  std::vector<int> candidates;
  for (int i = 1; i <= r.length(); ++i)
    if (r.corank(i) > 0 && r.at(i) < r.m()) candidates.push_back(i);

  ReducedIndexSet out;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const int i = candidates[a];
    bool implied = false;
    for (std::size_t b = a + 1; b < candidates.size() && !implied; ++b)
      implied = r.at(candidates[b]) == r.at(i);
    for (std::size_t b = 0; b < a && !implied; ++b) implied = r.corank(candidates[b]) >= r.corank(i);
    if (!implied) out.indices.push_back(i);
  }
  for (std::size_t s = 1; s < out.indices.size(); ++s) {
    const int i = out.indices[s - 1], j = out.indices[s];
    if (r.at(i) >= r.at(j) || r.corank(i) >= r.corank(j))
      throw Error(ErrorCode::InternalError, "reduced index set is not strictly increasing");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Young diagrams

YoungDiagram YoungDiagram::from_parts(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorCode::DomainError, "negative part in Young diagram");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::DomainError, "Young diagram parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  YoungDiagram d;
  d.parts_ = std::move(parts);
  return d;
}

YoungDiagram YoungDiagram::from_runs(std::span<const std::pair<int, int>> runs) {
  std::vector<int> parts;
  for (auto [part, mult] : runs) {
    if (mult < 0) throw Error(ErrorCode::DomainError, "negative multiplicity in Young diagram");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
  }
  return from_parts(std::move(parts));
}

std::vector<std::pair<int, int>> YoungDiagram::runs() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

int YoungDiagram::part(int i) const noexcept {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int YoungDiagram::area() const noexcept {
  int sum = 0;
  for (int p : parts_) sum += p;
  return sum;
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> parts;
  for (int j = 1; j <= columns(); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    parts.push_back(count);
  }
  return from_parts(std::move(parts));
}

// ---------------------------------------------------------------------------
// Flag conditions

YoungDiagram FlagConditions::lambda() const {
  const int l = size();
  std::vector<std::pair<int, int>> runs;
  for (int s = l; s >= 1; --s) {
    const auto k = static_cast<std::size_t>(s - 1);
    const int upper = s == l ? target_rank : rank_bounds[k + 1];
    runs.emplace_back(source_ranks[k] - rank_bounds[k], upper - rank_bounds[k]);
  }
  return YoungDiagram::from_runs(runs);
}

YoungDiagram FlagConditions::mu() const {
  std::vector<std::pair<int, int>> runs;
  int previous = 0;
  for (int s = 1; s <= size(); ++s) {
    const auto k = static_cast<std::size_t>(s - 1);
    const int corank = source_ranks[k] - rank_bounds[k];
    runs.emplace_back(target_rank - rank_bounds[k], corank - previous);
    previous = corank;
  }
  return YoungDiagram::from_runs(runs);
}

std::vector<int> FlagConditions::rho() const {
  std::vector<int> out;
  if (size() == 0) return out;
  for (int i = 1; i <= target_rank - rank_bounds.front(); ++i) {
    int best = 0;
    for (int s = 1; s <= size(); ++s)
      if (i <= target_rank - rank_bounds[static_cast<std::size_t>(s - 1)]) best = s;
    out.push_back(best);
  }
  return out;
}

std::vector<int> FlagConditions::rho_prime() const {
  std::vector<int> out;
  if (size() == 0) return out;
  for (int i = 1; i <= source_ranks.back() - rank_bounds.back(); ++i) {
    int best = 0;
    for (int s = size(); s >= 1; --s) {
      const auto k = static_cast<std::size_t>(s - 1);
      if (i <= source_ranks[k] - rank_bounds[k]) best = s;
    }
    out.push_back(best);
  }
  return out;
}

FlagConditions flag_conditions(const GrowthVector& r, const ReducedIndexSet& reduced) {
  FlagConditions fc;
  fc.target_rank = r.m();
  for (int i : reduced.indices) {
    fc.source_ranks.push_back(static_cast<int>(cumulative_dim(r.n(), i)));
    fc.rank_bounds.push_back(r.at(i));
  }
  return fc;
}

LocusDiagrams young_diagrams(const GrowthVector& r) {
  const FlagConditions fc = flag_conditions(r, reduce(r));
  LocusDiagrams out{fc.lambda(), fc.mu(), 0};
  if (out.mu != out.lambda.conjugate() || out.lambda.area() != out.mu.area())
    throw Error(ErrorCode::InternalError, "mu(r) is not the conjugate of lambda(r) for " + to_string(r));
  out.cd = out.lambda.area();
  return out;
}

RowMaps rho_maps(const GrowthVector& r) {
  const FlagConditions fc = flag_conditions(r, reduce(r));
  RowMaps out{fc.rho(), fc.rho_prime(), 0, 0};
  out.s_lambda = static_cast<int>(out.rho.size());
  out.s_mu = static_cast<int>(out.rho_prime.size());
  return out;
}

// ---------------------------------------------------------------------------
// Determinantal classes

GradedSeries flagged_determinant(const YoungDiagram& shape, std::span<const int> row_map,
                                 std::span<const GradedSeries> classes, Field field, int order) {
  const std::size_t s = row_map.size();
  SeriesMatrix matrix(field, order, s, s);
  for (std::size_t i = 0; i < s; ++i) {
    const int row = row_map[i];
    if (row < 1 || static_cast<std::size_t>(row) > classes.size())
      throw Error(ErrorCode::InternalError, "row map points outside the flag");
    const GradedSeries& cls = classes[static_cast<std::size_t>(row - 1)];
    for (std::size_t j = 0; j < s; ++j) {
      const int index = shape.part(static_cast<int>(i + 1)) - static_cast<int>(i) + static_cast<int>(j);
      matrix.at(i, j) = truncate(component(cls, index), order);
    }
  }
  return determinant(matrix);
}

namespace {

GradedSeries lift(const GradedSeries& a, int order) {
  GradedSeries out(a.field(), order);
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  return out;
}

}  // namespace

LocusEngine::LocusEngine(int n, int m, int max_length, int order)
    : n_(n),
      m_(m),
      max_length_(max_length),
      order_(order),
      tangent_(GradedSeries::total_class(Field::F2, order, Family::t, std::min(m, order))),
      tangent_inverse_(invert(tangent_)) {
  if (n < 1 || m < n || max_length < 1 || order < 0)
    throw Error(ErrorCode::DomainError, "LocusEngine needs 1 <= n <= m, max_length >= 1, order >= 0");
  // Classes c_j with j > n vanish for a rank-n bundle, so only c_1..c_n
  // enter; this is the generic class with v_j = 0 for j > n.
  GradedSeries running = GradedSeries::one(Field::F2, order);
  for (int i = 1; i <= max_length; ++i) {
    lie_.push_back(reduce_mod2(lie_total_class(n, i, order, std::min(n, order)), {{Family::c, Family::v}}));
    running = running * lie_.back();
    flag_.push_back(running);
    flag_inverse_.push_back(invert(running));
  }
}

const GradedSeries& LocusEngine::lie_class(int i) const {
  if (i < 1 || i > max_length_) throw Error(ErrorCode::DomainError, "lie_class index out of range");
  return lie_[static_cast<std::size_t>(i - 1)];
}

const GradedSeries& LocusEngine::flag_class(int j) const {
  if (j < 1 || j > max_length_) throw Error(ErrorCode::DomainError, "flag_class index out of range");
  return flag_[static_cast<std::size_t>(j - 1)];
}

GradedSeries LocusEngine::locus_class(const GrowthVector& r, DeterminantForm form) const {
  if (r.n() != n_ || r.m() != m_)
    throw Error(ErrorCode::DomainError, "growth vector does not match the engine's (n, m)");
  const ReducedIndexSet reduced = reduce(r);
  if (reduced.empty()) return GradedSeries::one(Field::F2, order_);
  if (reduced.indices.back() > max_length_)
    throw Error(ErrorCode::DomainError, "growth vector is longer than the engine's max_length");

  const FlagConditions fc = flag_conditions(r, reduced);
  const YoungDiagram shape = form == DeterminantForm::lambda ? fc.lambda() : fc.mu();
  const int cd = shape.area();
  if (cd > order_) return GradedSeries(Field::F2, order_);

  // The class is homogeneous of weight cd, so cd is a sufficient truncation.
  std::vector<GradedSeries> classes;
  for (int i : reduced.indices) {
    const auto k = static_cast<std::size_t>(i - 1);
    if (form == DeterminantForm::lambda)
      classes.push_back(truncate(flag_[k], cd) * truncate(tangent_inverse_, cd));
    else
      classes.push_back(truncate(tangent_, cd) * truncate(flag_inverse_[k], cd));
  }
  const std::vector<int> rows = form == DeterminantForm::lambda ? fc.rho() : fc.rho_prime();
  return lift(flagged_determinant(shape, rows, classes, Field::F2, cd), order_);
}

GradedSeries giambelli_class(const GrowthVector& r, DeterminantForm form, std::optional<int> order) {
  const LocusEngine engine(r.n(), r.m(), r.length(), order.value_or(r.m()));
  return engine.locus_class(r, form);
}

IntegralGiambelli giambelli_class_integral(std::span<const int> source_ranks, int target_rank,
                                           std::span<const int> rank_bounds,
                                           std::span<const FormalBundle> sources,
                                           const FormalBundle& target) {
  const std::size_t l = source_ranks.size();
  if (rank_bounds.size() != l || sources.size() != l)
    throw Error(ErrorCode::ShapeError, "flag ranks, rank bounds and source bundles differ in length");
  const Field field = target.field();
  int order = target.order();
  for (std::size_t s = 0; s < l; ++s) {
    if (sources[s].field() != field) throw Error(ErrorCode::FieldMismatch, "bundles over different fields");
    if (sources[s].rank() != source_ranks[s])
      throw Error(ErrorCode::BadRank, "source bundle rank differs from the flag rank");
    order = std::min(order, sources[s].order());
  }
  if (target.rank() != target_rank) throw Error(ErrorCode::BadRank, "target bundle rank differs from b");

  IntegralGiambelli out{GradedSeries::one(field, order), GradedSeries::one(field, order), {}, {}, 0, true};
  bool vacuous = true;
  for (std::size_t s = 0; s < l; ++s) vacuous = vacuous && rank_bounds[s] >= source_ranks[s];
  if (vacuous) return out;

  for (std::size_t s = 0; s < l; ++s) {
    const int corank = source_ranks[s] - rank_bounds[s];
    if (rank_bounds[s] < 0) throw Error(ErrorCode::PreconditionError, "rank bound below zero");
    if (corank <= 0 || (s > 0 && corank <= source_ranks[s - 1] - rank_bounds[s - 1]))
      throw Error(ErrorCode::PreconditionError, "a_s - kappa_s must be positive and strictly increasing");
    if (s > 0 && rank_bounds[s] <= rank_bounds[s - 1])
      throw Error(ErrorCode::PreconditionError, "kappa_s must be strictly increasing");
  }
  if (rank_bounds[l - 1] >= target_rank)
    throw Error(ErrorCode::PreconditionError, "kappa_l must be below b");

  FlagConditions fc{{source_ranks.begin(), source_ranks.end()},
                    {rank_bounds.begin(), rank_bounds.end()},
                    target_rank};
  out.lambda = fc.lambda();
  out.mu = fc.mu();
  out.cd = out.lambda.area();
  if (out.mu != out.lambda.conjugate()) throw Error(ErrorCode::InternalError, "mu is not conjugate to lambda");
  if (out.cd > order) {
    out.lambda_form = out.mu_form = GradedSeries(field, order);
    return out;
  }
  const int cd = out.cd;
  const GradedSeries b = truncate(target.total_class(), cd);
  const GradedSeries b_dual_inv = invert(dual_class(b));
  const GradedSeries b_inv = invert(b);
  std::vector<GradedSeries> lam, mu;
  for (const FormalBundle& a : sources) {
    const GradedSeries ac = truncate(a.total_class(), cd);
    lam.push_back(dual_class(ac) * b_dual_inv);
    mu.push_back(b * invert(ac));
  }
  out.lambda_form = lift(flagged_determinant(out.lambda, fc.rho(), lam, field, cd), order);
  out.mu_form = lift(flagged_determinant(out.mu, fc.rho_prime(), mu, field, cd), order);
  out.forms_agree = out.lambda_form == out.mu_form;
  return out;
}

std::string to_string(const GrowthVector& r) {
  std::string s = "(";
  for (int i = 1; i <= r.length(); ++i) s += (i > 1 ? "," : "") + std::to_string(r.at(i));
  return s + ")";
}

std::string to_string(const YoungDiagram& d) {
  std::string s = "(";
  for (int i = 1; i <= d.rows(); ++i) s += (i > 1 ? "," : "") + std::to_string(d.part(i));
  return s + ")";
}

}  // namespace liegiambelli
