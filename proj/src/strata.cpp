#include "liegiambelli/strata.hpp"

#include "liegiambelli/free_lie.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace liegiambelli {

DefectVector defect(const GrowthVector& r) {
  DefectVector d;
  const int k = r.length();
  d.entries.assign(static_cast<std::size_t>(k), 0);
  for (int i = 2; i < k; ++i) d.entries[static_cast<std::size_t>(i - 1)] = r.corank(i) - r.corank(i - 1);
  return d;
}

GrowthVector reconstruct(int n, int m, const DefectVector& d) {
  std::vector<int> ranks;
  int corank = 0;
  for (int i = 1; i <= d.length(); ++i) {
    corank += d.entries[static_cast<std::size_t>(i - 1)];
    ranks.push_back(i == d.length() ? m : static_cast<int>(cumulative_dim(n, i)) - corank);
  }
  return validate_growth(std::move(ranks), n, m);
}

GrowthVector canonical(const GrowthVector& r) {
  std::vector<int> ranks;
  for (int x : r.ranks()) {
    ranks.push_back(x);
    if (x == r.m()) break;
  }
  return validate_growth(std::move(ranks), r.n(), r.m());
}

int saturation_length(int n, int m) {
  if (n < 2 || m < n) throw Error(ErrorCode::DomainError, "saturation_length needs 2 <= n <= m");
  int p = 1;
  while (cumulative_dim(n, p + 1) <= m) ++p;
  return p;
}

// ---------------------------------------------------------------------------
// Dimension counts

JetMatrixDims jet_matrix_dims(int n, int m, int k) {
  if (n < 1 || m < n || k < 2) throw Error(ErrorCode::DomainError, "jet_matrix_dims needs m >= n >= 1, k >= 2");
  JetMatrixDims out;
  out.dim_jets = Integer(m - n) * n * binomial(static_cast<unsigned long>(m + k - 1),
                                               static_cast<unsigned long>(k - 1));
  Integer sum = 0;
  for (int i = 2; i <= k; ++i) sum += witt_dim_exact(n, i);
  out.dim_matrices = Integer(m - n) * sum;
  out.surjective_possible = out.dim_jets >= out.dim_matrices;
  return out;
}

std::optional<int> jet_matrix_threshold(int n, int m, int scan_limit) {
  int last_true = 1;
  for (int k = 2; k <= scan_limit; ++k)
    if (jet_matrix_dims(n, m, k).surjective_possible) last_true = k;
  if (last_true == scan_limit) return std::nullopt;
  return last_true + 1;
}

bool onto_obstruction(int n, int k) { return (n >= 3 && k >= 4) || (n == 2 && k >= 5); }

std::vector<BracketGrowthRow> bracket_growth_check(int n, int k_max, int k_min) {
  if (n < 2 || k_min < 1) throw Error(ErrorCode::DomainError, "bracket_growth_check needs n >= 2, k >= 1");
  std::vector<BracketGrowthRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    BracketGrowthRow row{k, witt_dim_exact(n, k + 1), cumulative_dim_exact(n, k), false};
    if (n == 2) row.lhs += witt_dim_exact(n, k + 2);
    row.holds = row.lhs > row.rhs;
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Oracle

std::vector<GrowthVector> growth_vectors(int n, int m, int k, std::size_t max_vectors) {
  if (n < 1 || m < n || k < 1) throw Error(ErrorCode::DomainError, "growth_vectors needs 1 <= n <= m, k >= 1");
  const WittTable table = witt_table(n, k);
  std::vector<GrowthVector> out;
  std::vector<int> ranks{n};
  std::function<void()> extend = [&] {
    const int i = static_cast<int>(ranks.size()) + 1;  // next stage
    const int prev = ranks.back();
    if (i > k) {
      if (prev != m) return;
      if (out.size() >= max_vectors)
        throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_vectors) + " growth vectors");
      out.push_back(validate_growth(ranks, n, m));
      return;
    }
    if (prev == m) return;
    const auto idx = static_cast<std::size_t>(i - 1);
    const std::int64_t hi = std::min<std::int64_t>({prev + table.dims[idx], table.cumulative[idx], m});
    for (int x = prev; x <= hi; ++x) {
      if (i < k && x == m) continue;
      ranks.push_back(x);
      extend();
      ranks.pop_back();
    }
  };
  if (k == 1) {
    if (n == m) out.push_back(validate_growth({n}, n, m));
    return out;
  }
  extend();
  return out;
}

DefectSet oracle_admissible_defects(int n, int m, int k, std::size_t max_vectors) {
  DefectSet out;
  for (const GrowthVector& r : growth_vectors(n, m, k, max_vectors))
    if (young_diagrams(r).cd <= m) out.insert(defect(r));
  return out;
}

DefectSet oracle_admissible_defects(int n, int m, std::size_t max_vectors) {
  const int p = saturation_length(n, m);
  DefectSet out;
  for (int k = p; k <= p + 3; ++k) out.merge(oracle_admissible_defects(n, m, k, max_vectors));
  return out;
}

namespace {

struct Universe {
  std::vector<GrowthVector> vectors;
  std::vector<int> cd;
};

Universe universe(int n, int m, int max_length, std::size_t max_vectors) {
  Universe u;
  for (int k = 1; k <= max_length; ++k) {
    for (GrowthVector& r : growth_vectors(n, m, k, max_vectors)) {
      u.cd.push_back(young_diagrams(r).cd);
      u.vectors.push_back(std::move(r));
      if (u.vectors.size() > max_vectors)
        throw Error(ErrorCode::TooLarge, "more than " + std::to_string(max_vectors) + " growth vectors");
    }
  }
  return u;
}

// a <= b entrywise, with the shorter vector padded by m.
bool dominated(const GrowthVector& a, const GrowthVector& b) {
  const int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    const int x = i <= a.length() ? a.at(i) : a.m();
    const int y = i <= b.length() ? b.at(i) : b.m();
    if (x > y) return false;
  }
  return true;
}

bool is_bounding(const GrowthVector& r, int cd, const Universe& u) {
  if (cd <= r.m()) return false;
  for (std::size_t j = 0; j < u.vectors.size(); ++j) {
    if (u.cd[j] <= r.m() || u.vectors[j] == r) continue;
    if (dominated(r, u.vectors[j])) return false;
  }
  return true;
}

}  // namespace

DefectSet oracle_bounding_defects(int n, int m, std::size_t max_vectors) {
  const Universe u = universe(n, m, saturation_length(n, m) + 3, max_vectors);
  DefectSet out;
  for (std::size_t i = 0; i < u.vectors.size(); ++i)
    if (is_bounding(u.vectors[i], u.cd[i], u)) out.insert(defect(u.vectors[i]));
  return out;
}

std::string_view label_name(StratumLabel label) noexcept {
  switch (label) {
    case StratumLabel::potentially_admissible: return "potentially_admissible";
    case StratumLabel::potentially_bounding: return "potentially_bounding";
    case StratumLabel::neither: return "neither";
  }
  return "?";
}

StratumClassification classify(const GrowthVector& r, std::size_t max_vectors) {
  const GrowthVector c = canonical(r);
  StratumClassification out{StratumLabel::neither, young_diagrams(c).cd, c.m()};
  if (out.cd <= c.m()) {
    out.label = StratumLabel::potentially_admissible;
    return out;
  }
  const int max_length = std::max(c.length(), saturation_length(c.n(), c.m()) + 3);
  const Universe u = universe(c.n(), c.m(), max_length, max_vectors);
  if (is_bounding(c, out.cd, u)) out.label = StratumLabel::potentially_bounding;
  return out;
}

// ---------------------------------------------------------------------------
// Templates

namespace {

struct Context {
  int n;
  int m;
  int p;
  std::vector<std::int64_t> dims;  // dims[i] = cumulative_dim(n, i), dims[0] = 0

  std::int64_t cum(int i) const { return dims.at(static_cast<std::size_t>(i)); }
};

Context context(int n, int m) {
  if (n < 3) throw Error(ErrorCode::UnsupportedParameter, "template enumeration needs n >= 3; use the oracle");
  Context ctx{n, m, saturation_length(n, m), {0}};
  for (int i = 1; i <= ctx.p + 2; ++i) ctx.dims.push_back(cumulative_dim(n, i));
  return ctx;
}

DefectInstance make_instance(const Context& ctx, char family, std::vector<int> parameters,
                             std::vector<int> nominal) {
  DefectInstance inst;
  inst.family = family;
  inst.parameters = std::move(parameters);
  inst.nominal.entries = nominal;
  std::vector<int> ranks;
  int corank = 0;
  const int k = static_cast<int>(nominal.size());
  for (int i = 1; i <= k; ++i) {
    corank += nominal[static_cast<std::size_t>(i - 1)];
    const std::int64_t r = i == k ? ctx.m : ctx.cum(i) - corank;
    if (r > ctx.m) {
      inst.rejection = "r_" + std::to_string(i) + " = " + std::to_string(r) + " exceeds m";
      return inst;
    }
    ranks.push_back(static_cast<int>(r));
    if (r == ctx.m) break;
  }
  // Entries after the stage where r reaches m have no meaning.
  for (std::size_t i = ranks.size(); i < nominal.size(); ++i) {
    if (nominal[i] != 0) {
      inst.rejection = "entry at position " + std::to_string(i + 1) + " lies past the stage where r reaches m";
      return inst;
    }
  }
  try {
    inst.growth = validate_growth(ranks, ctx.n, ctx.m);
  } catch (const Error& e) {
    inst.rejection = e.what();
    return inst;
  }
  inst.valid = true;
  inst.canonical_defect = defect(*inst.growth);
  inst.length_changed = inst.growth->length() != k;
  inst.cd = young_diagrams(*inst.growth).cd;
  return inst;
}

std::vector<int> zeros(int length) { return std::vector<int>(static_cast<std::size_t>(length), 0); }

void set(std::vector<int>& v, int position, int value) { v.at(static_cast<std::size_t>(position - 1)) += value; }

// Template inequalities, split into the codimension bound (which may be
// violated by bounding strata) and the requirement that the growth vector
// stays below m.
struct Inequalities {
  const Context& ctx;

  std::int64_t gap(int i) const { return ctx.m - ctx.cum(i); }

  bool a_bound(int l, std::int64_t chi) const { return (gap(ctx.p) + 1 + chi) * chi <= ctx.cum(l) - 1; }
  bool a_range(std::int64_t chi) const { return chi >= 0; }
  bool b_bound(int l, std::int64_t chi) const { return (gap(ctx.p + 1) + 1 + chi) * chi <= ctx.cum(l) - 1; }
  bool b_range(std::int64_t chi) const { return chi >= 0 && chi + 1 + gap(ctx.p + 1) >= 0; }
  bool c_bound(std::int64_t chi, std::int64_t nu) const {
    return (gap(ctx.p) + chi) * chi + (gap(ctx.p + 1) + chi + nu) * nu <= ctx.m;
  }
  bool c_range(std::int64_t chi, std::int64_t nu) const {
    return chi >= 0 && nu >= 0 && gap(ctx.p + 1) + chi + nu >= 0 && (ctx.p >= 2 || chi == 0);
  }
};

std::vector<int> a_vector(const Context& ctx, int l, int chi) {
  std::vector<int> v = zeros(ctx.p + 1);
  set(v, l, 1);
  set(v, ctx.p, chi);
  return v;
}

std::vector<int> b_vector(const Context& ctx, int l, int chi) {
  std::vector<int> v = zeros(ctx.p + 2);
  set(v, l, 1);
  set(v, ctx.p + 1, chi);
  return v;
}

std::vector<int> c_vector(const Context& ctx, int chi, int nu) {
  std::vector<int> v = zeros(ctx.p + 2);
  if (chi) set(v, ctx.p, chi);
  set(v, ctx.p + 1, nu);
  return v;
}

DefectInstance zero_instance(const Context& ctx) {
  DefectInstance inst = make_instance(ctx, 'c', {0, 0}, zeros(ctx.p + 1));
  inst.nominal.entries = zeros(ctx.p + 2);
  inst.length_changed = inst.growth && inst.growth->length() != ctx.p + 2;
  return inst;
}

}  // namespace

std::vector<DefectInstance> enumerate_admissible_defects(int n, int m) {
  const Context ctx = context(n, m);
  const Inequalities ineq{ctx};
  const int p = ctx.p;
  const int limit = static_cast<int>(ctx.cum(p + 1));
  std::vector<DefectInstance> out;
  for (int l = 2; l < p; ++l)
    for (int chi = 0; chi <= limit; ++chi)
      if (ineq.a_range(chi) && ineq.a_bound(l, chi)) out.push_back(make_instance(ctx, 'a', {l, chi}, a_vector(ctx, l, chi)));
  for (int l = 2; l < p; ++l)
    for (int chi = 0; chi <= limit; ++chi)
      if (ineq.b_range(chi) && ineq.b_bound(l, chi)) out.push_back(make_instance(ctx, 'b', {l, chi}, b_vector(ctx, l, chi)));
  out.push_back(zero_instance(ctx));
  for (int chi = 0; chi <= limit; ++chi)
    for (int nu = 0; nu <= limit; ++nu)
      if ((chi || nu) && ineq.c_range(chi, nu) && ineq.c_bound(chi, nu))
        out.push_back(make_instance(ctx, 'c', {chi, nu}, c_vector(ctx, chi, nu)));

  const DefectSet oracle = oracle_admissible_defects(n, m);
  for (DefectInstance& inst : out)
    inst.verified = inst.valid && inst.cd <= m && oracle.contains(inst.canonical_defect);
  return out;
}

std::vector<DefectInstance> enumerate_bounding_defects(int n, int m) {
  const Context ctx = context(n, m);
  const Inequalities ineq{ctx};
  const int p = ctx.p;
  const int limit = static_cast<int>(ctx.cum(p + 1));
  std::vector<DefectInstance> out;

  // Smallest violators: the bound fails here but holds for every smaller
  // parameter choice whose template is a growth vector.
  const auto table_index = [&](int x, int y) { return static_cast<std::size_t>(x) * (limit + 1) + y; };
  for (char family : {'a', 'b'}) {
    for (int l = 2; l < p; ++l) {
      std::vector<DefectInstance> row;
      for (int chi = 0; chi <= limit; ++chi)
        row.push_back(family == 'a' ? make_instance(ctx, 'a', {l, chi}, a_vector(ctx, l, chi))
                                    : make_instance(ctx, 'b', {l, chi}, b_vector(ctx, l, chi)));
      const auto in_range = [&](int chi) {
        return row[static_cast<std::size_t>(chi)].valid && (family == 'a' ? ineq.a_range(chi) : ineq.b_range(chi));
      };
      const auto bound = [&](int chi) { return family == 'a' ? ineq.a_bound(l, chi) : ineq.b_bound(l, chi); };
      for (int chi = 0; chi <= limit; ++chi) {
        if (!in_range(chi) || bound(chi)) continue;
        bool minimal = true;
        for (int c = 0; c < chi && minimal; ++c) minimal = !in_range(c) || bound(c);
        if (minimal) out.push_back(row[static_cast<std::size_t>(chi)]);
      }
    }
  }
  std::vector<DefectInstance> grid;
  for (int chi = 0; chi <= limit; ++chi)
    for (int nu = 0; nu <= limit; ++nu)
      grid.push_back(chi || nu ? make_instance(ctx, 'c', {chi, nu}, c_vector(ctx, chi, nu)) : zero_instance(ctx));
  const auto c_in_range = [&](int chi, int nu) { return ineq.c_range(chi, nu) && grid[table_index(chi, nu)].valid; };
  for (int chi = 0; chi <= limit; ++chi) {
    for (int nu = 0; nu <= limit; ++nu) {
      if (!c_in_range(chi, nu) || ineq.c_bound(chi, nu)) continue;
      // Smaller in the closure order: coranks chi and chi + nu at p, p+1.
      bool minimal = true;
      for (int c = 0; c <= chi && minimal; ++c)
        for (int v = 0; c + v <= chi + nu && v <= limit && minimal; ++v)
          if ((c != chi || v != nu) && (c || v) && c_in_range(c, v)) minimal = ineq.c_bound(c, v);
      if (minimal) out.push_back(grid[table_index(chi, nu)]);
    }
  }
  for (int l1 = 2; l1 < p; ++l1) {
    for (int l2 = l1 + 1; l2 < p; ++l2) {
      std::vector<int> v = zeros(p + 1);
      set(v, l1, 1);
      set(v, l2, 1);
      out.push_back(make_instance(ctx, 'd', {l1, l2}, v));
    }
  }
  for (int l = 2; l < p; ++l) {
    std::vector<int> v = zeros(p + 1);
    set(v, l, 2);
    out.push_back(make_instance(ctx, 'e', {l}, v));
  }

  const DefectSet oracle = oracle_bounding_defects(n, m);
  for (DefectInstance& inst : out)
    inst.verified = inst.valid && inst.cd > m && oracle.contains(inst.canonical_defect);
  return out;
}

DefectSet canonical_defects(const std::vector<DefectInstance>& instances) {
  DefectSet out;
  for (const DefectInstance& inst : instances)
    if (inst.valid) out.insert(inst.canonical_defect);
  return out;
}

SetComparison compare_sets(const DefectSet& enumerated, const DefectSet& oracle) {
  SetComparison out;
  std::set_difference(enumerated.begin(), enumerated.end(), oracle.begin(), oracle.end(),
                      std::back_inserter(out.only_enumerated));
  std::set_difference(oracle.begin(), oracle.end(), enumerated.begin(), enumerated.end(),
                      std::back_inserter(out.only_oracle));
  return out;
}

std::string to_string(const DefectVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.entries.size(); ++i) s += (i ? "," : "") + std::to_string(d.entries[i]);
  return s + ")";
}

}  // namespace liegiambelli
