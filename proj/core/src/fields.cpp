#include "bicover/fields.hpp"

#include <algorithm>
#include <sstream>

namespace bicover {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t md(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mpow(std::int64_t base, std::int64_t e, std::int64_t p) {
  std::int64_t acc = 1 % p;
  base = md(base, p);
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc;
}

std::int64_t minv(std::int64_t a, std::int64_t p) {
  a = md(a, p);
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero mod " + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return md(t, p);
}

// --- GF(p)[x] helpers; polynomials are little-endian coefficient vectors ---

int pdeg(const std::vector<std::int64_t>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != 0) return i;
  }
  return -1;
}

std::vector<std::int64_t> ptrim(std::vector<std::int64_t> a) {
  a.resize(static_cast<std::size_t>(pdeg(a) + 1));
  return a;
}

std::vector<std::int64_t> pmul(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return ptrim(std::move(c));
}

// Remainder of a modulo b, b nonzero.
std::vector<std::int64_t> pmod(std::vector<std::int64_t> a,
                               const std::vector<std::int64_t>& b, std::int64_t p) {
  const int db = pdeg(b);
  const std::int64_t lead_inv = minv(b[static_cast<std::size_t>(db)], p);
  int da = pdeg(a);
  while (da >= db) {
    const std::int64_t f = a[static_cast<std::size_t>(da)] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      auto& c = a[static_cast<std::size_t>(da - db + i)];
      c = md(c - f * b[static_cast<std::size_t>(i)], p);
    }
    da = pdeg(a);
  }
  return ptrim(std::move(a));
}

// u with u * a == 1 modulo m; a nonzero mod m, m irreducible.
std::vector<std::int64_t> pinv(const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& m, std::int64_t p) {
  std::vector<std::int64_t> r0 = ptrim(m), r1 = pmod(a, m, p);
  std::vector<std::int64_t> s0 = {}, s1 = {1};
  if (pdeg(r1) < 0) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  while (pdeg(r1) > 0) {
    // r0 = q*r1 + r2
    std::vector<std::int64_t> q(static_cast<std::size_t>(pdeg(r0) - pdeg(r1) + 1), 0);
    std::vector<std::int64_t> rem = r0;
    const std::int64_t lead_inv = minv(r1[static_cast<std::size_t>(pdeg(r1))], p);
    while (pdeg(rem) >= pdeg(r1)) {
      const int shift = pdeg(rem) - pdeg(r1);
      const std::int64_t f = rem[static_cast<std::size_t>(pdeg(rem))] * lead_inv % p;
      q[static_cast<std::size_t>(shift)] = f;
      for (int i = 0; i <= pdeg(r1); ++i) {
        auto& c = rem[static_cast<std::size_t>(shift + i)];
        c = md(c - f * r1[static_cast<std::size_t>(i)], p);
      }
      rem = ptrim(std::move(rem));
    }
    // s2 = s0 - q*s1
    std::vector<std::int64_t> qs = pmul(q, s1, p);
    std::vector<std::int64_t> s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      std::int64_t v = (i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0);
      s2[i] = md(v, p);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = ptrim(std::move(s2));
  }
  // r1 is a nonzero constant c; answer is s1 / c
  const std::int64_t c_inv = minv(r1[0], p);
  for (auto& c : s1) c = c * c_inv % p;
  return pmod(std::move(s1), m, p);
}

// Exhaustive trial division by monic polynomials of degree 1..deg/2.
bool poly_irreducible(const std::vector<std::int64_t>& m, std::int64_t p) {
  const int deg = pdeg(m);
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<std::int64_t> div(static_cast<std::size_t>(d + 1), 0);
      div[static_cast<std::size_t>(d)] = 1;
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        div[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      if (pdeg(pmod(m, div, p)) < 0) return false;
    }
  }
  return true;
}

// Smallest monic irreducible of degree r over GF(p), ordering the non-leading
// coefficient tuples (c_0, ..., c_{r-1}) lexicographically with c_0 first.
std::vector<std::int64_t> default_modulus(std::int64_t p, int r) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(r), 0);
  while (true) {
    std::vector<std::int64_t> m(c);
    m.push_back(1);
    if (poly_irreducible(m, p)) return m;
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1) {
      c[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) {
      throw Error(Errc::NoIrreducibleFound,
                  "no monic irreducible of degree " + std::to_string(r) + " over GF(" +
                      std::to_string(p) + ")");
    }
    ++c[static_cast<std::size_t>(i)];
  }
}

// --- raw tower arithmetic on coordinate vectors of length 2^t ---

using QV = std::vector<Rational>;

bool tzero(const QV& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

QV tadd(const QV& a, const QV& b) {
  QV c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

QV tsub(const QV& a, const QV& b) {
  QV c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

QV tscale(const QV& a, const Rational& s) {
  QV c(a);
  for (auto& x : c) x *= s;
  return c;
}

QV tmul(const std::vector<Rational>& d, std::size_t t, const QV& a, const QV& b) {
  const std::size_t n = std::size_t{1} << t;
  QV c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Rational v = a[i] * b[j];
      std::size_t common = i & j;
      for (std::size_t bit = 0; common != 0; ++bit, common >>= 1) {
        if (common & 1) v *= d[bit];
      }
      c[i ^ j] += v;
    }
  }
  return c;
}

QV tlow(const QV& a) { return QV(a.begin(), a.begin() + a.size() / 2); }
QV thigh(const QV& a) { return QV(a.begin() + a.size() / 2, a.end()); }

QV tjoin(const QV& low, const QV& high) {
  QV c(low);
  c.insert(c.end(), high.begin(), high.end());
  return c;
}

QV tinv(const std::vector<Rational>& d, std::size_t t, const QV& v) {
  if (t == 0) {
    if (v[0] == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    return {Rational(1) / v[0]};
  }
  const QV x = tlow(v), y = thigh(v);
  // (x + y*s)^-1 = (x - y*s) / (x^2 - d*y^2), s = sqrt(d_{t-1});
  // the norm is zero only for the zero element because d_{t-1} is a nonsquare
  // in the subtower.
  const QV norm = tsub(tmul(d, t - 1, x, x), tscale(tmul(d, t - 1, y, y), d[t - 1]));
  const QV ni = tinv(d, t - 1, norm);
  QV low = tmul(d, t - 1, x, ni);
  QV high = tmul(d, t - 1, y, ni);
  for (auto& c : high) c = -c;
  return tjoin(low, high);
}

std::optional<QV> tsqrt(const std::vector<Rational>& d, std::size_t t, const QV& v) {
  if (t == 0) {
    auto s = rational_sqrt(v[0]);
    if (!s) return std::nullopt;
    return QV{*s};
  }
  const QV x = tlow(v), y = thigh(v);
  const Rational& dt = d[t - 1];
  if (tzero(y)) {
    if (auto s = tsqrt(d, t - 1, x)) {
      return tjoin(*s, QV(x.size(), Rational(0)));
    }
    if (auto s = tsqrt(d, t - 1, tscale(x, Rational(1) / dt))) {
      return tjoin(QV(x.size(), Rational(0)), *s);
    }
    return std::nullopt;
  }
  // v = x + y*s with y != 0; a root u + w*s needs u^2 + d*w^2 = x, 2uw = y.
  // Then u^2 = (x +- sqrt(x^2 - d*y^2)) / 2.
  const QV nrms = tsub(tmul(d, t - 1, x, x), tscale(tmul(d, t - 1, y, y), dt));
  auto ns = tsqrt(d, t - 1, nrms);
  if (!ns) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    QV n = *ns;
    if (sign == 1) {
      for (auto& c : n) c = -c;
    }
    const QV h = tscale(tadd(x, n), Rational(1, 2));
    auto u = tsqrt(d, t - 1, h);
    if (!u || tzero(*u)) continue;
    const QV w = tmul(d, t - 1, y, tinv(d, t - 1, tscale(*u, Rational(2))));
    const QV cand = tjoin(*u, w);
    if (tmul(d, t, cand, cand) == v) return cand;
  }
  return std::nullopt;
}

std::string pretty_rat(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return rational_to_string(x);
}

}  // namespace

// --- Field construction ---

namespace {
// Keeps products of residues inside int64.
constexpr std::int64_t kMaxCharacteristic = std::int64_t{1} << 31;
}  // namespace

FieldPtr Field::prime(std::int64_t p) {
  if (p > kMaxCharacteristic) throw Error(Errc::BadArgument, "characteristic too large");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->p_ = p;
  f->r_ = 1;
  return f;
}

FieldPtr Field::extension(std::int64_t p, int r) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(Errc::BadArgument, "extension degree must be >= 1");
  return extension(p, r, default_modulus(p, r));
}

FieldPtr Field::extension(std::int64_t p, int r, std::vector<std::int64_t> modulus) {
  if (p > kMaxCharacteristic) throw Error(Errc::BadArgument, "characteristic too large");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (r < 1) throw Error(Errc::BadArgument, "extension degree must be >= 1");
  if (modulus.size() != static_cast<std::size_t>(r) + 1) {
    throw Error(Errc::BadArgument, "modulus must have degree exactly r");
  }
  for (auto& c : modulus) c = md(c, p);
  if (modulus.back() != 1) throw Error(Errc::BadArgument, "modulus must be monic");
  if (!poly_irreducible(modulus, p)) {
    throw Error(Errc::BadArgument, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Extension;
  f->p_ = p;
  f->r_ = r;
  f->modulus_ = std::move(modulus);
  return f;
}

FieldPtr Field::rationals() {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Rational;
  return f;
}

FieldPtr Field::tower_unchecked(std::vector<Rational> adjoined) {
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Tower;
  f->adjoined_ = std::move(adjoined);
  return f;
}

FieldPtr Field::tower(const std::vector<Rational>& adjoined) {
  if (adjoined.empty()) return rationals();
  for (std::size_t i = 0; i < adjoined.size(); ++i) {
    const Rational& d = adjoined[i];
    if (d == 0) throw Error(Errc::BadArgument, "tower discriminants must be nonzero");
    QV as_const(std::size_t{1} << i, Rational(0));
    as_const[0] = d;
    if (tsqrt(adjoined, i, as_const)) {
      throw Error(Errc::DiscriminantIsSquare,
                  "discriminant " + pretty_rat(d) + " already has a square root in the tower");
    }
  }
  return tower_unchecked(adjoined);
}

FieldPtr Field::gf(std::int64_t q) {
  if (q < 2) throw Error(Errc::BadArgument, "field order must be >= 2");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return prime(q);
  int r = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw Error(Errc::BadArgument, std::to_string(q) + " is not a prime power");
  return extension(p, r);
}

std::int64_t Field::order() const {
  if (!finite()) return 0;
  std::int64_t q = 1;
  for (int i = 0; i < r_; ++i) {
    if (q > (std::int64_t{1} << 62) / p_) throw Error(Errc::BadArgument, "field order overflow");
    q *= p_;
  }
  return q;
}

int Field::dim() const {
  switch (kind_) {
    case FieldKind::Prime: return 1;
    case FieldKind::Extension: return r_;
    case FieldKind::Rational: return 1;
    case FieldKind::Tower: return 1 << adjoined_.size();
  }
  return 1;
}

bool Field::same(const Field& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && p_ == other.p_ && r_ == other.r_ &&
         modulus_ == other.modulus_ && adjoined_ == other.adjoined_;
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Prime: return "GF(" + std::to_string(p_) + ")";
    case FieldKind::Extension:
      return "GF(" + std::to_string(p_) + "^" + std::to_string(r_) + ")";
    case FieldKind::Rational: return "Q";
    case FieldKind::Tower: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < adjoined_.size(); ++i) {
        if (i) s += ",";
        s += "sqrt(" + pretty_rat(adjoined_[i]) + ")";
      }
      return s + ")";
    }
  }
  return "?";
}

// --- element construction ---

FieldElem Field::zero() const { return from_integer(0); }
FieldElem Field::one() const { return from_integer(1); }

FieldElem Field::from_integer(std::int64_t v) const {
  if (finite()) {
    std::vector<std::int64_t> ic(static_cast<std::size_t>(dim()), 0);
    ic[0] = md(v, p_);
    return FieldElem(shared_from_this(), std::move(ic), {});
  }
  QV qc(static_cast<std::size_t>(dim()), Rational(0));
  qc[0] = v;
  return FieldElem(shared_from_this(), {}, std::move(qc));
}

FieldElem Field::from_rational(const Rational& v) const {
  if (finite()) {
    const std::int64_t num = md(Integer(numerator(v) % p_).convert_to<std::int64_t>(), p_);
    const std::int64_t den = md(Integer(denominator(v) % p_).convert_to<std::int64_t>(), p_);
    if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes in GF(p)");
    std::vector<std::int64_t> ic(static_cast<std::size_t>(dim()), 0);
    ic[0] = num * minv(den, p_) % p_;
    return FieldElem(shared_from_this(), std::move(ic), {});
  }
  QV qc(static_cast<std::size_t>(dim()), Rational(0));
  qc[0] = v;
  return FieldElem(shared_from_this(), {}, std::move(qc));
}

FieldElem Field::make(std::vector<std::int64_t> coords) const {
  if (!finite()) throw Error(Errc::BadArgument, "integer coordinates need a finite field");
  if (coords.size() != static_cast<std::size_t>(dim())) {
    throw Error(Errc::BadArgument, "coordinate vector has wrong length");
  }
  for (auto& c : coords) c = md(c, p_);
  return FieldElem(shared_from_this(), std::move(coords), {});
}

FieldElem Field::make(std::vector<Rational> coords) const {
  if (finite()) throw Error(Errc::BadArgument, "rational coordinates need Q or a tower");
  if (coords.size() != static_cast<std::size_t>(dim())) {
    throw Error(Errc::BadArgument, "coordinate vector has wrong length");
  }
  return FieldElem(shared_from_this(), {}, std::move(coords));
}

FieldElem Field::basis_element(int i) const {
  if (i < 0 || i >= dim()) throw Error(Errc::BadArgument, "basis index out of range");
  if (finite()) {
    std::vector<std::int64_t> ic(static_cast<std::size_t>(dim()), 0);
    ic[static_cast<std::size_t>(i)] = 1;
    return FieldElem(shared_from_this(), std::move(ic), {});
  }
  QV qc(static_cast<std::size_t>(dim()), Rational(0));
  qc[static_cast<std::size_t>(i)] = 1;
  return FieldElem(shared_from_this(), {}, std::move(qc));
}

FieldElem Field::element_at(std::int64_t index) const {
  if (!finite()) throw Error(Errc::BadArgument, "element enumeration needs a finite field");
  const std::int64_t q = order();
  if (index < 0 || index >= q) throw Error(Errc::BadArgument, "element index out of range");
  std::vector<std::int64_t> ic(static_cast<std::size_t>(r_), 0);
  std::int64_t power = q / p_;
  for (int i = 0; i < r_; ++i) {
    ic[static_cast<std::size_t>(i)] = index / power;
    index %= power;
    power /= p_;
  }
  return FieldElem(shared_from_this(), std::move(ic), {});
}

std::int64_t Field::index_of(const FieldElem& e) const {
  check_same(e, e);
  std::int64_t idx = 0;
  for (int i = 0; i < r_; ++i) idx = idx * p_ + e.icoords()[static_cast<std::size_t>(i)];
  return idx;
}

bool Field::less(const FieldElem& a, const FieldElem& b) const {
  check_same(a, b);
  if (finite()) return a.icoords() < b.icoords();
  return a.qcoords() < b.qcoords();
}

// --- arithmetic ---

void Field::check_same(const FieldElem& a, const FieldElem& b) const {
  if (a.field().get() != this && !a.field()->same(*this)) {
    throw Error(Errc::FieldMismatch, "left operand from " + a.field()->name() + ", expected " + name());
  }
  if (b.field().get() != this && !b.field()->same(*this)) {
    throw Error(Errc::FieldMismatch, "right operand from " + b.field()->name() + ", expected " + name());
  }
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  check_same(a, b);
  if (finite()) {
    std::vector<std::int64_t> c(a.icoords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = md(c[i] + b.icoords()[i], p_);
    return FieldElem(shared_from_this(), std::move(c), {});
  }
  return FieldElem(shared_from_this(), {}, tadd(a.qcoords(), b.qcoords()));
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  check_same(a, b);
  if (finite()) {
    std::vector<std::int64_t> c(a.icoords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = md(c[i] - b.icoords()[i], p_);
    return FieldElem(shared_from_this(), std::move(c), {});
  }
  return FieldElem(shared_from_this(), {}, tsub(a.qcoords(), b.qcoords()));
}

FieldElem Field::neg(const FieldElem& a) const {
  check_same(a, a);
  if (finite()) {
    std::vector<std::int64_t> c(a.icoords());
    for (auto& x : c) x = md(-x, p_);
    return FieldElem(shared_from_this(), std::move(c), {});
  }
  QV c(a.qcoords());
  for (auto& x : c) x = -x;
  return FieldElem(shared_from_this(), {}, std::move(c));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  check_same(a, b);
  switch (kind_) {
    case FieldKind::Prime: {
      return FieldElem(shared_from_this(), {a.icoords()[0] * b.icoords()[0] % p_}, {});
    }
    case FieldKind::Extension: {
      auto prod = pmod(pmul(a.icoords(), b.icoords(), p_), modulus_, p_);
      prod.resize(static_cast<std::size_t>(r_), 0);
      return FieldElem(shared_from_this(), std::move(prod), {});
    }
    case FieldKind::Rational: {
      return FieldElem(shared_from_this(), {}, {a.qcoords()[0] * b.qcoords()[0]});
    }
    case FieldKind::Tower: {
      return FieldElem(shared_from_this(), {},
                       tmul(adjoined_, adjoined_.size(), a.qcoords(), b.qcoords()));
    }
  }
  throw Error(Errc::InternalInconsistency, "unknown field kind");
}

FieldElem Field::inv(const FieldElem& a) const {
  check_same(a, a);
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case FieldKind::Prime: {
      return FieldElem(shared_from_this(), {minv(a.icoords()[0], p_)}, {});
    }
    case FieldKind::Extension: {
      auto u = pinv(a.icoords(), modulus_, p_);
      u.resize(static_cast<std::size_t>(r_), 0);
      return FieldElem(shared_from_this(), std::move(u), {});
    }
    case FieldKind::Rational: {
      return FieldElem(shared_from_this(), {}, {Rational(1) / a.qcoords()[0]});
    }
    case FieldKind::Tower: {
      return FieldElem(shared_from_this(), {}, tinv(adjoined_, adjoined_.size(), a.qcoords()));
    }
  }
  throw Error(Errc::InternalInconsistency, "unknown field kind");
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem Field::pow(const FieldElem& a, std::int64_t e) const {
  check_same(a, a);
  if (e < 0) return pow(inv(a), -e);
  FieldElem acc = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldPtr Field::extended_with(const Rational& discriminant) const {
  if (finite()) throw Error(Errc::BadArgument, "only Q and towers can be extended");
  std::vector<Rational> adj = adjoined_;
  adj.push_back(discriminant);
  return tower(adj);
}

FieldElem Field::lift(const FieldElem& e) const {
  if (e.field()->same(*this)) {
    return FieldElem(shared_from_this(), e.icoords(), e.qcoords());
  }
  if (finite() || e.field()->finite()) {
    throw Error(Errc::FieldMismatch, "cannot lift " + e.field()->name() + " into " + name());
  }
  const auto& sub = e.field()->adjoined();
  if (sub.size() > adjoined_.size() ||
      !std::equal(sub.begin(), sub.end(), adjoined_.begin())) {
    throw Error(Errc::FieldMismatch, e.field()->name() + " is not a subtower of " + name());
  }
  QV qc(static_cast<std::size_t>(dim()), Rational(0));
  for (std::size_t i = 0; i < e.qcoords().size(); ++i) qc[i] = e.qcoords()[i];
  return FieldElem(shared_from_this(), {}, std::move(qc));
}

// --- FieldElem ---

bool FieldElem::is_zero() const {
  if (field_->finite()) {
    return std::all_of(ic_.begin(), ic_.end(), [](std::int64_t c) { return c == 0; });
  }
  return tzero(qc_);
}

bool FieldElem::is_one() const { return *this == field_->one(); }

bool FieldElem::operator==(const FieldElem& o) const {
  if (!field_->same(*o.field_)) {
    throw Error(Errc::FieldMismatch,
                "comparing elements of " + field_->name() + " and " + o.field_->name());
  }
  return ic_ == o.ic_ && qc_ == o.qc_;
}

std::string FieldElem::str() const {
  std::ostringstream os;
  if (field_->finite()) {
    if (ic_.size() == 1) {
      os << ic_[0];
    } else {
      os << "[";
      for (std::size_t i = 0; i < ic_.size(); ++i) os << (i ? "," : "") << ic_[i];
      os << "]";
    }
  } else if (qc_.size() == 1) {
    os << pretty_rat(qc_[0]);
  } else {
    os << "[";
    for (std::size_t i = 0; i < qc_.size(); ++i) os << (i ? "," : "") << pretty_rat(qc_[i]);
    os << "]";
  }
  return os.str();
}

// --- quadratic character and square roots ---

int quadratic_character(const FieldElem& x) {
  const Field& F = *x.field();
  if (!F.finite()) throw Error(Errc::BadArgument, "quadratic character needs a finite field");
  if (F.p() == 2) {
    throw Error(Errc::CharTwoUnsupported, "quadratic character undefined in characteristic 2");
  }
  if (x.is_zero()) return 0;
  const FieldElem t = F.pow(x, (F.order() - 1) / 2);
  if (t.is_one()) return 1;
  if (t == F.neg(F.one())) return -1;
  throw Error(Errc::InternalInconsistency, "character power is not +-1");
}

std::optional<FieldElem> sqrt_in_field(const FieldElem& x) {
  const FieldPtr F = x.field();
  if (F->finite()) {
    // Exhaustive scan in canonical order; the first hit is the smallest root.
    const std::int64_t q = F->order();
    for (std::int64_t i = 0; i < q; ++i) {
      FieldElem y = F->element_at(i);
      if (F->mul(y, y) == x) return y;
    }
    return std::nullopt;
  }
  auto coords = tsqrt(F->adjoined(), F->adjoined().size(), x.qcoords());
  if (!coords) return std::nullopt;
  // Canonical sign: first nonzero coordinate positive.
  for (const auto& c : *coords) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& v : *coords) v = -v;
    }
    break;
  }
  return F->make(std::move(*coords));
}

}  // namespace bicover
