#include "bicover/circuits.hpp"

#include <algorithm>
#include <string>

namespace bicover {

LinearForm::LinearForm(FieldPtr field, int n)
    : field_(std::move(field)),
      coeffs_(static_cast<std::size_t>(n), field_->zero()),
      constant_(field_->zero()) {
  if (n < 0) throw Error(Errc::BadArgument, "negative variable count");
}

LinearForm::LinearForm(FieldPtr field, std::vector<FieldElem> coeffs, FieldElem constant)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), constant_(std::move(constant)) {
  for (const auto& c : coeffs_) {
    if (!c.field()->same(*field_)) throw Error(Errc::FieldMismatch, "form coefficient field");
  }
  if (!constant_.field()->same(*field_)) throw Error(Errc::FieldMismatch, "form constant field");
}

int LinearForm::nonzero_terms() const {
  int c = 0;
  for (const auto& x : coeffs_) c += !x.is_zero();
  return c;
}

bool LinearForm::is_zero() const { return nonzero_terms() == 0 && constant_.is_zero(); }

LinearForm LinearForm::with_coeff(int i, FieldElem c) const {
  LinearForm f = *this;
  f.coeffs_[static_cast<std::size_t>(i)] = std::move(c);
  return f;
}

LinearForm LinearForm::with_constant(FieldElem c) const {
  LinearForm f = *this;
  f.constant_ = std::move(c);
  return f;
}

LinearForm LinearForm::scaled(const FieldElem& s) const {
  LinearForm f = *this;
  for (auto& c : f.coeffs_) c = c * s;
  f.constant_ = f.constant_ * s;
  return f;
}

bool Circuit::homogeneous() const {
  for (const auto& gate : gates) {
    for (const auto& form : gate) {
      if (!form.homogeneous()) return false;
    }
  }
  return true;
}

SparsePoly::SparsePoly(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (n < 0) throw Error(Errc::BadArgument, "negative variable count");
}

FieldElem SparsePoly::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? field_->zero() : it->second;
}

void SparsePoly::add_term(const std::vector<int>& exps, const FieldElem& c) {
  if (exps.size() != static_cast<std::size_t>(n_)) {
    throw Error(Errc::BadArgument, "exponent vector has wrong length");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

SparsePoly SparsePoly::from_form(const LinearForm& f) {
  SparsePoly p(f.field(), f.n());
  std::vector<int> exps(static_cast<std::size_t>(f.n()), 0);
  if (!f.constant().is_zero()) p.add_term(exps, f.constant());
  for (int i = 0; i < f.n(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    exps[static_cast<std::size_t>(i)] = 1;
    p.add_term(exps, f.coeff(i));
    exps[static_cast<std::size_t>(i)] = 0;
  }
  return p;
}

SparsePoly SparsePoly::times_form(const LinearForm& f, long long* ops, long long cap) const {
  SparsePoly r(field_, n_);
  for (const auto& [e, c] : terms_) {
    if (!f.constant().is_zero()) {
      r.add_term(e, c * f.constant());
      ++*ops;
    }
    for (int i = 0; i < f.n(); ++i) {
      if (f.coeff(i).is_zero()) continue;
      std::vector<int> e2 = e;
      ++e2[static_cast<std::size_t>(i)];
      r.add_term(e2, c * f.coeff(i));
      ++*ops;
    }
    if (cap > 0 && *ops > cap) {
      throw GuardError(Errc::ExpansionTooLarge,
                       "gate expansion exceeded " + std::to_string(cap) + " monomial operations");
    }
  }
  return r;
}

SparsePoly reference_s2(int n, const FieldPtr& F) {
  SparsePoly p(F, n);
  const FieldElem one = F->one();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      exps[static_cast<std::size_t>(i)] = 1;
      exps[static_cast<std::size_t>(j)] = 1;
      p.add_term(exps, one);
      exps[static_cast<std::size_t>(i)] = 0;
      exps[static_cast<std::size_t>(j)] = 0;
    }
  }
  return p;
}

SparsePoly reference_t2(int n, const FieldPtr& F) {
  SparsePoly p(F, n);
  const FieldElem one = F->one();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    exps[static_cast<std::size_t>(i)] = 2;
    p.add_term(exps, one);
    exps[static_cast<std::size_t>(i)] = 0;
  }
  return p;
}

SparsePoly expand(const Circuit& c, const ExpansionLimits& limits) {
  SparsePoly sum(c.field, c.n);
  for (const auto& gate : c.gates) {
    long long ops = 0;
    SparsePoly prod(c.field, c.n);
    prod.add_term(std::vector<int>(static_cast<std::size_t>(c.n), 0), c.field->one());
    for (const auto& form : gate) {
      prod = prod.times_form(form, &ops, limits.ops_per_gate);
    }
    sum = sum + prod;
  }
  return sum;
}

S2Check computes_s2(const Circuit& c, const ExpansionLimits& limits) {
  SparsePoly diff = expand(c, limits) - reference_s2(c.n, c.field);
  const bool ok = diff.is_zero();
  return {ok, std::move(diff)};
}

Circuit circuit_from_cover(const Cover& cover, const FieldPtr& F) {
  Circuit c;
  c.field = F;
  c.n = cover.n;
  const FieldElem one = F->one();
  for (const auto& g : cover.graphs) {
    LinearForm left(F, cover.n), right(F, cover.n);
    for (int v : g.a()) left = left.with_coeff(v - 1, one);
    for (int v : g.b()) right = right.with_coeff(v - 1, one);
    c.gates.push_back({left, right});
  }
  return c;
}

Circuit odd_construction(int k, const FieldPtr& F) {
  if (k < 0) throw Error(Errc::BadArgument, "k must be >= 0");
  if (F->characteristic() == 2) throw Error(Errc::CharTwo, "needs odd or zero characteristic");
  auto i_root = sqrt_in_field(F->from_integer(-1));
  if (!i_root) {
    throw Error(Errc::NoSquareRootOfMinusOne, "-1 has no square root in " + F->name());
  }
  const int n = 2 * k + 1;
  const FieldElem one = F->one();
  const FieldElem half = F->inv(F->from_integer(2));
  Circuit c;
  c.field = F;
  c.n = n;

  // (1/2) (sum_{m>=2} X_m) (2 X_1 + sum_{m>=2} X_m); the 1/2 rides on the
  // first form.
  LinearForm lead(F, n), rest(F, n);
  for (int m = 2; m <= n; ++m) {
    lead = lead.with_coeff(m - 1, half);
    rest = rest.with_coeff(m - 1, one);
  }
  rest = rest.with_coeff(0, F->from_integer(2));
  c.gates.push_back({lead, rest});

  // -(1/2) (X_{2j} + i X_{2j+1}) (X_{2j} - i X_{2j+1}) for j = 1..k.
  const FieldElem i = *i_root;
  const FieldElem neg_half = -half;
  for (int j = 1; j <= k; ++j) {
    LinearForm a(F, n), b(F, n);
    a = a.with_coeff(2 * j - 1, neg_half).with_coeff(2 * j, neg_half * i);
    b = b.with_coeff(2 * j - 1, one).with_coeff(2 * j, -i);
    c.gates.push_back({a, b});
  }
  return c;
}

namespace {

FieldElem require_sqrt(const FieldPtr& F, std::int64_t value) {
  auto root = sqrt_in_field(F->from_integer(value));
  if (!root) {
    throw Error(Errc::MissingSquareRoot,
                std::to_string(value) + " has no square root in " + F->name());
  }
  return *root;
}

}  // namespace

Circuit even_construction(int k, const FieldPtr& F) {
  if (k < 0) throw Error(Errc::BadArgument, "k must be >= 0");
  if (F->characteristic() == 2) throw Error(Errc::CharTwo, "needs odd or zero characteristic");
  if (k == 0) {
    return Circuit{F, 0, {}};
  }
  if (F->finite() && k % F->characteristic() == 0) {
    throw Error(Errc::KZeroInField, "k vanishes in " + F->name());
  }

  FieldPtr E = F;
  if (!F->finite()) {
    // Adjoin whatever is missing, in the order the roots are used below.
    for (std::int64_t d : {std::int64_t{-1}, std::int64_t{2 * k - 1}, std::int64_t{2}}) {
      if (!sqrt_in_field(E->from_integer(d))) E = E->extended_with(Rational(d));
    }
  }
  const FieldElem i = require_sqrt(E, -1);
  const FieldElem s = require_sqrt(E, 2 * k - 1);
  const FieldElem rt2 = require_sqrt(E, 2);

  const int n = 2 * k;
  // Shift z'_j = i e_j by (w, ..., w) with (i - w)^2 + (2k-1) w^2 = 0;
  // w = (i + s) / 2k picks the canonical root of the quadratic.
  const FieldElem w = (i + s) / E->from_integer(2 * k);

  // y_j = B z_j for the block change of basis with blocks (1/sqrt 2) [[1, i], [1, -i]].
  std::vector<std::vector<FieldElem>> y;
  y.reserve(static_cast<std::size_t>(n));
  const FieldElem inv_rt2 = E->inv(rt2);
  for (int j = 0; j < n; ++j) {
    std::vector<FieldElem> zj(static_cast<std::size_t>(n), -w);
    zj[static_cast<std::size_t>(j)] = i - w;
    std::vector<FieldElem> yj;
    yj.reserve(static_cast<std::size_t>(n));
    for (int m = 0; m < k; ++m) {
      const FieldElem& z0 = zj[static_cast<std::size_t>(2 * m)];
      const FieldElem& z1 = zj[static_cast<std::size_t>(2 * m + 1)];
      yj.push_back((z0 + i * z1) * inv_rt2);
      yj.push_back((z0 - i * z1) * inv_rt2);
    }
    y.push_back(std::move(yj));
  }

  // Gram conditions for the block form with blocks [[0,1],[1,0]]:
  // y_j A y_j = 0 and y_j A y_l = 1 for j != l.
  auto gram = [&](int j, int l) {
    FieldElem acc = E->zero();
    for (int m = 0; m < k; ++m) {
      acc = acc + y[static_cast<std::size_t>(j)][static_cast<std::size_t>(2 * m)] *
                      y[static_cast<std::size_t>(l)][static_cast<std::size_t>(2 * m + 1)] +
            y[static_cast<std::size_t>(j)][static_cast<std::size_t>(2 * m + 1)] *
                y[static_cast<std::size_t>(l)][static_cast<std::size_t>(2 * m)];
    }
    return acc;
  };
  for (int j = 0; j < n; ++j) {
    if (!gram(j, j).is_zero()) {
      throw Error(Errc::InternalInconsistency, "diagonal Gram condition failed");
    }
    for (int l = j + 1; l < n; ++l) {
      if (!gram(j, l).is_one()) {
        throw Error(Errc::InternalInconsistency, "off-diagonal Gram condition failed");
      }
    }
  }

  Circuit c;
  c.field = E;
  c.n = n;
  for (int m = 0; m < k; ++m) {
    LinearForm a(E, n), b(E, n);
    for (int j = 0; j < n; ++j) {
      a = a.with_coeff(j, y[static_cast<std::size_t>(j)][static_cast<std::size_t>(2 * m)]);
      b = b.with_coeff(j, y[static_cast<std::size_t>(j)][static_cast<std::size_t>(2 * m + 1)]);
    }
    c.gates.push_back({a, b});
  }
  return c;
}

Circuit gf2_lift(const Circuit& c) {
  if (c.field->kind() != FieldKind::Prime || c.field->p() != 2) {
    throw Error(Errc::WrongField, "lifting works over GF(2)");
  }
  if (!c.homogeneous()) throw Error(Errc::NotHomogeneous, "lifting needs a homogeneous circuit");
  for (const auto& gate : c.gates) {
    if (gate.size() != 2) {
      throw Error(Errc::WrongGateArity, "lifting needs exactly two forms per gate");
    }
  }
  if (c.n % 4 != 0) {
    throw Error(Errc::NNot0Mod4, "n = " + std::to_string(c.n) + " is not 0 mod 4");
  }
  if (!computes_s2(c).ok) {
    throw Error(Errc::PreconditionViolated, "input circuit does not compute S_n^2");
  }

  // Parity check of the lift over the integers: with t(f) X_{n+1} appended to
  // every form (t = term count), the X_j X_{n+1} coefficients must be odd and
  // the X_{n+1}^2 coefficient even.
  const FieldPtr Q = Field::rationals();
  Circuit zc;
  zc.field = Q;
  zc.n = c.n + 1;
  for (const auto& gate : c.gates) {
    std::vector<LinearForm> zgate;
    for (const auto& form : gate) {
      LinearForm zf(Q, c.n + 1);
      for (int i = 0; i < c.n; ++i) {
        if (!form.coeff(i).is_zero()) zf = zf.with_coeff(i, Q->one());
      }
      zf = zf.with_coeff(c.n, Q->from_integer(form.nonzero_terms()));
      zgate.push_back(zf);
    }
    zc.gates.push_back(std::move(zgate));
  }
  const SparsePoly zp = expand(zc);
  auto int_coeff = [&](const std::vector<int>& exps) {
    const FieldElem v = zp.coefficient(exps);
    const Rational r = v.qcoords()[0];
    if (denominator(r) != 1) {
      throw Error(Errc::InternalInconsistency, "integer lift produced a fraction");
    }
    return numerator(r);
  };
  std::vector<int> exps(static_cast<std::size_t>(c.n) + 1, 0);
  for (int j = 0; j < c.n; ++j) {
    exps[static_cast<std::size_t>(j)] = 1;
    exps[static_cast<std::size_t>(c.n)] = 1;
    if (int_coeff(exps) % 2 == 0) {
      throw Error(Errc::InternalInconsistency, "cross coefficient of the lift is even");
    }
    exps[static_cast<std::size_t>(j)] = 0;
  }
  exps[static_cast<std::size_t>(c.n)] = 2;
  if (int_coeff(exps) % 2 != 0) {
    throw Error(Errc::InternalInconsistency, "X_{n+1}^2 coefficient of the lift is odd");
  }

  Circuit out;
  out.field = c.field;
  out.n = c.n + 1;
  const FieldElem one = c.field->one();
  for (const auto& gate : c.gates) {
    std::vector<LinearForm> ogate;
    for (const auto& form : gate) {
      LinearForm of(c.field, c.n + 1);
      for (int i = 0; i < c.n; ++i) of = of.with_coeff(i, form.coeff(i));
      if (form.nonzero_terms() % 2 == 1) of = of.with_coeff(c.n, one);
      ogate.push_back(of);
    }
    out.gates.push_back(std::move(ogate));
  }
  return out;
}

}  // namespace bicover
