#include "bicover/analysis.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bicover {

std::vector<FieldElem> HomSubstitution::column(int j) const {
  std::vector<FieldElem> y;
  y.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    y.push_back(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return y;
}

namespace {

void check_substitution_shape(const HomSubstitution& s) {
  if (s.r < 0 || s.n <= s.r) throw Error(Errc::BadArgument, "need 0 <= r < n");
  if (s.rows.size() != static_cast<std::size_t>(s.r)) {
    throw Error(Errc::BadArgument, "substitution row count mismatch");
  }
  for (const auto& row : s.rows) {
    if (row.size() != static_cast<std::size_t>(s.n - s.r)) {
      throw Error(Errc::BadArgument, "substitution row length mismatch");
    }
  }
}

}  // namespace

bool substitution_vanishes(const HomSubstitution& s) {
  check_substitution_shape(s);
  const FieldPtr& F = s.field;
  const int m = s.free_vars();
  const FieldElem zero = F->zero();
  const FieldElem one = F->one();

  // Coefficient vectors of the n substituted forms over X_1..X_m.
  auto form_coeff = [&](int a, int i) -> const FieldElem& {
    if (a < m) {
      return a == i ? one : zero;
    }
    return s.rows[static_cast<std::size_t>(a - m)][static_cast<std::size_t>(i)];
  };

  // Accumulate sum_{a<b} f_a f_b into the degree-2 coefficient table.
  std::vector<std::vector<FieldElem>> quad(
      static_cast<std::size_t>(m), std::vector<FieldElem>(static_cast<std::size_t>(m), zero));
  std::vector<FieldElem> prefix(static_cast<std::size_t>(m), zero);
  for (int a = 0; a < s.n; ++a) {
    for (int i = 0; i < m; ++i) {
      if (prefix[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        const FieldElem& fj = form_coeff(a, j);
        if (fj.is_zero()) continue;
        const int lo = std::min(i, j), hi = std::max(i, j);
        auto& cell = quad[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)];
        cell = cell + prefix[static_cast<std::size_t>(i)] * fj;
      }
    }
    for (int i = 0; i < m; ++i) {
      prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i)] + form_coeff(a, i);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      if (!quad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) return false;
    }
  }
  return true;
}

EquationReport column_equations(const HomSubstitution& s) {
  check_substitution_shape(s);
  const FieldPtr& F = s.field;
  const int m = s.free_vars();
  EquationReport rep;

  std::vector<FieldElem> colsum;  // 1^T y_j
  colsum.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    FieldElem sum = F->zero();
    for (int k = 0; k < s.r; ++k) {
      sum = sum + s.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
    colsum.push_back(sum);
  }
  auto dot = [&](int i, int j) {
    FieldElem acc = F->zero();
    for (int k = 0; k < s.r; ++k) {
      acc = acc + s.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                      s.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    }
    return acc;
  };

  const bool char2 = F->characteristic() == 2;
  const FieldElem two = F->from_integer(2);
  for (int j = 0; j < m; ++j) {
    // 1^T y_j + y_j^T U y_j with U strictly upper triangular of ones:
    // the quadratic part is sum_{k<k'} y_{kj} y_{k'j}.
    FieldElem up = F->zero();
    FieldElem seen = F->zero();
    for (int k = 0; k < s.r; ++k) {
      const FieldElem& v = s.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      up = up + seen * v;
      seen = seen + v;
    }
    rep.diag_ok.push_back((colsum[static_cast<std::size_t>(j)] + up).is_zero());
    if (!char2) {
      const FieldElem jmi = colsum[static_cast<std::size_t>(j)] * colsum[static_cast<std::size_t>(j)] - dot(j, j);
      rep.diag_alt_ok.push_back((two * colsum[static_cast<std::size_t>(j)] + jmi).is_zero());
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const FieldElem jmi = colsum[static_cast<std::size_t>(i)] * colsum[static_cast<std::size_t>(j)] - dot(i, j);
      const FieldElem lhs = F->one() + colsum[static_cast<std::size_t>(i)] +
                            colsum[static_cast<std::size_t>(j)] + jmi;
      rep.pairs.push_back({i, j});
      rep.cross_ok.push_back(lhs.is_zero());
    }
  }
  rep.ok = std::all_of(rep.diag_ok.begin(), rep.diag_ok.end(), [](bool b) { return b; }) &&
           std::all_of(rep.cross_ok.begin(), rep.cross_ok.end(), [](bool b) { return b; });
  return rep;
}

namespace {

// Incremental reduced row echelon form of [A | b] over a field.
class RowReducer {
 public:
  RowReducer(FieldPtr field, int cols, int rhs_cols)
      : F_(std::move(field)), cols_(cols), rhs_(rhs_cols) {}

  enum class AddResult { NewPivot, Redundant, Inconsistent };

  AddResult try_add(std::vector<FieldElem> row) {
    reduce(row);
    int p = -1;
    for (int c = 0; c < cols_ - rhs_; ++c) {
      if (!row[static_cast<std::size_t>(c)].is_zero()) {
        p = c;
        break;
      }
    }
    if (p < 0) {
      for (int c = cols_ - rhs_; c < cols_; ++c) {
        if (!row[static_cast<std::size_t>(c)].is_zero()) return AddResult::Inconsistent;
      }
      return AddResult::Redundant;
    }
    const FieldElem inv = F_->inv(row[static_cast<std::size_t>(p)]);
    for (auto& x : row) x = x * inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      eliminate(rows_[i], row, p);
    }
    const auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = static_cast<std::size_t>(at - pivots_.begin());
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
    return AddResult::NewPivot;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<std::vector<FieldElem>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<FieldElem>& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      eliminate(row, rows_[i], pivots_[i]);
    }
  }

  static void eliminate(std::vector<FieldElem>& target, const std::vector<FieldElem>& source,
                        int pivot) {
    const FieldElem& f = target[static_cast<std::size_t>(pivot)];
    if (f.is_zero()) return;
    const FieldElem factor = f;
    for (std::size_t c = 0; c < target.size(); ++c) {
      if (source[c].is_zero()) continue;
      target[c] = target[c] - factor * source[c];
    }
  }

  FieldPtr F_;
  int cols_;
  int rhs_;
  std::vector<std::vector<FieldElem>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

HomSubstitution extract_vanishing_substitution(const Circuit& c) {
  const int n = c.n;
  const int r = gate_count(c);
  if (r >= n) {
    throw Error(Errc::RTooLarge, "gate count " + std::to_string(r) + " is not below n = " +
                                     std::to_string(n));
  }
  if (!computes_s2(c).ok) {
    throw Error(Errc::PreconditionViolated, "circuit does not compute S_n^2");
  }
  const FieldPtr& F = c.field;

  // Maximal consistent system of form = 0 equations, at most one per gate:
  // gates in order, forms within a gate in order, first consistent one wins.
  RowReducer sys(F, n + 1, 1);
  for (const auto& gate : c.gates) {
    for (const auto& form : gate) {
      std::vector<FieldElem> row;
      row.reserve(static_cast<std::size_t>(n) + 1);
      for (int i = 0; i < n; ++i) row.push_back(form.coeff(i));
      row.push_back(-form.constant());
      if (sys.try_add(std::move(row)) != RowReducer::AddResult::Inconsistent) break;
    }
  }

  // Bound variables: the pivot columns, padded with the smallest non-pivot
  // columns up to r. The padded ones are fixed to zero, which restricts the
  // solution space to an affine subspace of dimension exactly n - r.
  std::vector<bool> bound(static_cast<std::size_t>(n), false);
  for (int p : sys.pivots()) bound[static_cast<std::size_t>(p)] = true;
  int have = sys.rank();
  for (int i = 0; i < n && have < r; ++i) {
    if (!bound[static_cast<std::size_t>(i)]) {
      bound[static_cast<std::size_t>(i)] = true;
      ++have;
    }
  }
  std::vector<int> free_cols, bound_cols;
  for (int i = 0; i < n; ++i) {
    (bound[static_cast<std::size_t>(i)] ? bound_cols : free_cols).push_back(i);
  }

  HomSubstitution s;
  s.field = F;
  s.n = n;
  s.r = r;
  const int m = n - r;
  std::map<int, std::size_t> pivot_row;
  for (std::size_t i = 0; i < sys.pivots().size(); ++i) {
    pivot_row[sys.pivots()[i]] = i;
  }
  for (int bc : bound_cols) {
    std::vector<FieldElem> row(static_cast<std::size_t>(m), F->zero());
    auto it = pivot_row.find(bc);
    if (it != pivot_row.end()) {
      const auto& rref_row = sys.rows()[it->second];
      // X_bc = const - sum over non-pivot columns; the homogeneous part over
      // the free columns is all that survives (padded bound columns are 0).
      for (int f = 0; f < m; ++f) {
        row[static_cast<std::size_t>(f)] = -rref_row[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(f)])];
      }
    }
    s.rows.push_back(std::move(row));
  }
  if (!substitution_vanishes(s)) {
    throw Error(Errc::InternalInconsistency, "extracted substitution does not vanish");
  }
  return s;
}

Gf2Diagnostics gf2_diagnostics(const HomSubstitution& s) {
  check_substitution_shape(s);
  if (s.field->kind() != FieldKind::Prime || s.field->p() != 2) {
    throw Error(Errc::PreconditionViolated, "diagnostics need a GF(2) substitution");
  }
  if (!substitution_vanishes(s)) {
    throw Error(Errc::PreconditionViolated, "substitution does not vanish over GF(2)");
  }
  const int m = s.free_vars();
  if (s.r > 62) throw Error(Errc::BadArgument, "too many rows for bitmask diagnostics");

  Gf2Diagnostics d;
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(m), 0);
  std::vector<int> weight(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < s.r; ++i) {
      if (!s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero()) {
        cols[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
    weight[static_cast<std::size_t>(j)] = __builtin_popcountll(cols[static_cast<std::size_t>(j)]);
    d.weights_mod4.push_back(weight[static_cast<std::size_t>(j)] % 4);
    d.weight_ok.push_back(weight[static_cast<std::size_t>(j)] % 4 == 0 ||
                          weight[static_cast<std::size_t>(j)] % 4 == 3);
    (weight[static_cast<std::size_t>(j)] % 2 == 1 ? d.odd_count : d.even_count) += 1;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int par = __builtin_popcountll(cols[static_cast<std::size_t>(i)] &
                                           cols[static_cast<std::size_t>(j)]) %
                      2;
      const int expected = ((weight[static_cast<std::size_t>(i)] + 1) % 2) *
                           ((weight[static_cast<std::size_t>(j)] + 1) % 2);
      d.pairs.push_back({i, j});
      d.cross_parity.push_back(par);
      d.cross_ok.push_back(par == expected);
    }
  }

  // GF(2) dependency structure with combination tracking.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> basis;  // (vector, combination)
  std::vector<std::uint64_t> kernel;
  for (int j = 0; j < m; ++j) {
    std::uint64_t v = cols[static_cast<std::size_t>(j)];
    std::uint64_t combo = std::uint64_t{1} << j;
    for (const auto& [bv, bc] : basis) {
      if ((v ^ bv) < v) {
        v ^= bv;
        combo ^= bc;
      }
    }
    if (v != 0) {
      basis.emplace_back(v, combo);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    } else {
      kernel.push_back(combo);
    }
  }
  std::uint64_t even_mask = 0;
  for (int j = 0; j < m; ++j) {
    if (weight[static_cast<std::size_t>(j)] % 2 == 0) even_mask |= std::uint64_t{1} << j;
  }
  if (kernel.empty()) {
    d.dependency = Gf2Diagnostics::Dependency::Independent;
    d.claim_ok = true;
  } else if (kernel.size() == 1 && kernel[0] == even_mask && d.even_count % 2 == 1) {
    d.dependency = Gf2Diagnostics::Dependency::EvenSumOnly;
    d.alpha.assign(static_cast<std::size_t>(d.odd_count), 0);
    d.beta.assign(static_cast<std::size_t>(d.even_count), 1);
    d.claim_ok = true;
  } else {
    d.dependency = Gf2Diagnostics::Dependency::Other;
    d.claim_ok = false;
  }
  d.ok = d.claim_ok &&
         std::all_of(d.weight_ok.begin(), d.weight_ok.end(), [](bool b) { return b; }) &&
         std::all_of(d.cross_ok.begin(), d.cross_ok.end(), [](bool b) { return b; });
  return d;
}

long long partial_derivative_span_dim(const SparsePoly& p) {
  const FieldPtr& F = p.field();
  const int n = p.n();

  // Collect the derivative polynomials' monomials, then row-reduce over F.
  std::map<std::vector<int>, int> mono_index;
  std::vector<std::map<int, FieldElem>> rows(static_cast<std::size_t>(n));
  for (const auto& [exps, coeff] : p.terms()) {
    for (int i = 0; i < n; ++i) {
      const int e = exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      const FieldElem c = coeff * F->from_integer(e);
      if (c.is_zero()) continue;
      std::vector<int> de = exps;
      --de[static_cast<std::size_t>(i)];
      const auto [it, _] = mono_index.emplace(de, static_cast<int>(mono_index.size()));
      auto [cit, inserted] = rows[static_cast<std::size_t>(i)].emplace(it->second, c);
      if (!inserted) {
        cit->second = cit->second + c;
        if (cit->second.is_zero()) rows[static_cast<std::size_t>(i)].erase(cit);
      }
    }
  }
  const int cols = static_cast<int>(mono_index.size());
  RowReducer reducer(F, cols, 0);
  for (const auto& sparse_row : rows) {
    if (sparse_row.empty()) continue;
    std::vector<FieldElem> row(static_cast<std::size_t>(cols), F->zero());
    for (const auto& [idx, c] : sparse_row) row[static_cast<std::size_t>(idx)] = c;
    reducer.try_add(std::move(row));
  }
  return reducer.rank();
}

}  // namespace bicover
