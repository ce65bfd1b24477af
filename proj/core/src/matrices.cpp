#include "bicover/matrices.hpp"

#include <string>

namespace bicover {

SignMatrix::SignMatrix(int order) : n_(order) {
  if (order <= 0) throw Error(Errc::BadArgument, "matrix order must be positive");
  e_.assign(static_cast<std::size_t>(n_) * n_, 0);
}

SignMatrix SignMatrix::identity(int order) {
  SignMatrix m(order);
  for (int i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

void SignMatrix::set(int i, int j, int v) {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw Error(Errc::BadArgument, "index out of range");
  if (v < -1 || v > 1) throw Error(Errc::BadArgument, "entries must be -1, 0 or 1");
  e_[static_cast<std::size_t>(i) * n_ + j] = static_cast<signed char>(v);
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

long long SignMatrix::row_support(int i) const {
  long long c = 0;
  for (int j = 0; j < n_; ++j) c += at(i, j) != 0;
  return c;
}

long long SignMatrix::common_support(int i, int j) const {
  long long c = 0;
  for (int k = 0; k < n_; ++k) c += at(i, k) != 0 && at(j, k) != 0;
  return c;
}

long long SignMatrix::row_dot(int i, int j) const {
  long long c = 0;
  for (int k = 0; k < n_; ++k) c += static_cast<long long>(at(i, k)) * at(j, k);
  return c;
}

SignMatrix skew_family_power2(int n) {
  if (n < 2 || (n & (n - 1)) != 0) {
    throw Error(Errc::NotPowerOfTwo, "order " + std::to_string(n) + " is not a power of two >= 2");
  }
  SignMatrix f(2);
  f.set(0, 0, 1);
  f.set(0, 1, 1);
  f.set(1, 0, -1);
  f.set(1, 1, 1);
  while (f.order() < n) {
    const int m = f.order();
    const SignMatrix ft = f.transposed();
    SignMatrix g(2 * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        g.set(i, j, f.at(i, j));
        g.set(i + m, j, -f.at(i, j));
        g.set(i, j + m, ft.at(i, j));
        g.set(i + m, j + m, ft.at(i, j));
      }
    }
    f = g;
  }
  return f;
}

SignMatrix good_from_skew(const SignMatrix& f) {
  const int n = f.order();
  if (n % 4 != 0) {
    throw Error(Errc::OrderNot0Mod4, "order " + std::to_string(n) + " is not 0 mod 4");
  }
  // F must be Hadamard with F - I a skew symmetric conference matrix.
  SignMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f.at(i, j) == 0) throw Error(Errc::NotSkewHadamard, "zero entry in Hadamard candidate");
      c.set(i, j, i == j ? f.at(i, j) - 1 : f.at(i, j));
    }
    if (c.at(i, i) != 0) throw Error(Errc::NotSkewHadamard, "diagonal of F - I is not zero");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && c.at(i, j) != -c.at(j, i)) {
        throw Error(Errc::NotSkewHadamard, "F - I is not skew symmetric");
      }
      const long long dot = f.row_dot(i, j);
      if (dot != (i == j ? n : 0)) {
        throw Error(Errc::NotSkewHadamard, "F F^T is not n I");
      }
    }
  }
  return c;
}

namespace {

// Canonical projective representatives in lexicographic coordinate order:
// (0,0,1), then (0,1,*), then (1,*,*).
std::vector<std::vector<FieldElem>> projective_reps(const FieldPtr& F) {
  const std::int64_t q = F->order();
  std::vector<std::vector<FieldElem>> reps;
  reps.reserve(static_cast<std::size_t>(q * q + q + 1));
  const FieldElem zero = F->zero();
  const FieldElem one = F->one();
  reps.push_back({zero, zero, one});
  for (std::int64_t a = 0; a < q; ++a) reps.push_back({zero, one, F->element_at(a)});
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) {
      reps.push_back({one, F->element_at(a), F->element_at(b)});
    }
  }
  std::sort(reps.begin(), reps.end(),
            [&](const std::vector<FieldElem>& x, const std::vector<FieldElem>& y) {
              for (int i = 0; i < 3; ++i) {
                if (F->less(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)])) return true;
                if (F->less(y[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)])) return false;
              }
              return false;
            });
  return reps;
}

}  // namespace

PlaneDesc projective_plane(std::int64_t q) {
  FieldPtr F;
  try {
    F = Field::gf(q);
  } catch (const Error&) {
    throw Error(Errc::NotOddPrimePower, std::to_string(q) + " is not an odd prime power");
  }
  if (F->characteristic() == 2) {
    throw Error(Errc::NotOddPrimePower, std::to_string(q) + " has even characteristic");
  }
  PlaneDesc plane{q, F, projective_reps(F), projective_reps(F)};
  return plane;
}

namespace {

SignMatrix design_matrix_impl(std::int64_t q) {
  const PlaneDesc plane = projective_plane(q);
  const FieldPtr& F = plane.field;
  const int n = static_cast<int>(plane.points.size());
  SignMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& line = plane.lines[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const auto& pt = plane.points[static_cast<std::size_t>(j)];
      FieldElem v = F->zero();
      for (int k = 0; k < 3; ++k) {
        v = v + line[static_cast<std::size_t>(k)] * pt[static_cast<std::size_t>(k)];
      }
      m.set(i, j, quadratic_character(v));
    }
  }
  return m;
}

}  // namespace

SignMatrix symmetric_design_matrix(std::int64_t q) {
  if (q % 4 != 3) {
    throw Error(Errc::CongruenceViolated,
                "q = " + std::to_string(q) + " is not 3 mod 4");
  }
  return design_matrix_impl(q);
}

SignMatrix symmetric_design_matrix(std::int64_t q, std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::PEven, "p must be an odd number >= 3");
  if (q % (2 * p) != 2 * p - 1) {
    throw Error(Errc::CongruenceViolated,
                "q = " + std::to_string(q) + " is not -1 mod " + std::to_string(2 * p));
  }
  return design_matrix_impl(q);
}

GoodVerdict is_good(const SignMatrix& m) {
  GoodVerdict v{true, {}};
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    if (m.row_support(i) % 2 != 1) {
      v.failures.push_back({GoodCondition::RowParity, i, -1});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.common_support(i, j) % 4 != 2) {
        v.failures.push_back({GoodCondition::CommonSupport, i, j});
      }
      if (m.row_dot(i, j) != 0) {
        v.failures.push_back({GoodCondition::Orthogonality, i, j});
      }
    }
  }
  v.ok = v.failures.empty();
  return v;
}

GoodVerdict is_good_for_p(const SignMatrix& m, std::int64_t p) {
  if (p < 3 || p % 2 == 0) throw Error(Errc::PEven, "p must be an odd number >= 3");
  GoodVerdict v{true, {}};
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    if (m.row_support(i) % p != 1) {
      v.failures.push_back({GoodCondition::RowParity, i, -1});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m.common_support(i, j) % (2 * p) != 2) {
        v.failures.push_back({GoodCondition::CommonSupport, i, j});
      }
      if (m.row_dot(i, j) != 0) {
        v.failures.push_back({GoodCondition::Orthogonality, i, j});
      }
    }
  }
  v.ok = v.failures.empty();
  return v;
}

}  // namespace bicover
