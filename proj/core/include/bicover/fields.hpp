#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicover/errors.hpp"
#include "bicover/rational.hpp"

namespace bicover {

enum class FieldKind { Prime, Extension, Rational, Tower };

class Field;
class FieldElem;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable field descriptor plus the arithmetic on its elements.
//
// Supported fields:
//   Prime      GF(p), elements stored as one integer in [0, p)
//   Extension  GF(p^r) = GF(p)[x]/(m), elements as r coefficients (little-endian)
//   Rational   Q, elements as one exact fraction
//   Tower      Q(sqrt(d_1), ..., sqrt(d_t)), elements as 2^t fractions over the
//              product basis; basis index m contains sqrt(d_i) iff bit i-1 of m is set
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr prime(std::int64_t p);
  static FieldPtr extension(std::int64_t p, int r);
  static FieldPtr extension(std::int64_t p, int r, std::vector<std::int64_t> modulus);
  static FieldPtr rationals();
  static FieldPtr tower(const std::vector<Rational>& adjoined);
  // GF(q) for q = p^r; picks the default modulus when r > 1.
  static FieldPtr gf(std::int64_t q);

  FieldKind kind() const { return kind_; }
  bool finite() const { return kind_ == FieldKind::Prime || kind_ == FieldKind::Extension; }
  std::int64_t characteristic() const { return finite() ? p_ : 0; }
  std::int64_t p() const { return p_; }
  int degree() const { return r_; }
  std::int64_t order() const;  // p^r for finite fields, 0 otherwise
  // Modulus polynomial, little-endian, length r+1, leading coefficient 1.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  const std::vector<Rational>& adjoined() const { return adjoined_; }
  int dim() const;  // stored coordinates per element
  bool same(const Field& other) const;
  std::string name() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_integer(std::int64_t v) const;
  FieldElem from_rational(const Rational& v) const;
  FieldElem make(std::vector<std::int64_t> coords) const;  // Prime/Extension
  FieldElem make(std::vector<Rational> coords) const;      // Rational/Tower
  // Extension: the class of x^i. Tower: product-basis element for mask i.
  FieldElem basis_element(int i) const;

  // Canonical element enumeration for finite fields: index order equals the
  // lexicographic order on coefficient vectors read from c_0 upward.
  FieldElem element_at(std::int64_t index) const;
  std::int64_t index_of(const FieldElem& e) const;
  bool less(const FieldElem& a, const FieldElem& b) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(const FieldElem& a, std::int64_t e) const;

  // Tower/Rational only: the field with one more square root adjoined.
  // Rejects discriminants that are already squares here.
  FieldPtr extended_with(const Rational& discriminant) const;
  // Reinterprets an element of a shorter tower in this tower.
  FieldElem lift(const FieldElem& e) const;

 private:
  Field() = default;
  static FieldPtr tower_unchecked(std::vector<Rational> adjoined);
  void check_same(const FieldElem& a, const FieldElem& b) const;
  friend std::optional<FieldElem> sqrt_in_field(const FieldElem& x);

  FieldKind kind_ = FieldKind::Rational;
  std::int64_t p_ = 0;
  int r_ = 1;
  std::vector<std::int64_t> modulus_;
  std::vector<Rational> adjoined_;
};

class FieldElem {
 public:
  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  FieldElem operator+(const FieldElem& o) const { return field_->add(*this, o); }
  FieldElem operator-(const FieldElem& o) const { return field_->sub(*this, o); }
  FieldElem operator*(const FieldElem& o) const { return field_->mul(*this, o); }
  FieldElem operator/(const FieldElem& o) const { return field_->div(*this, o); }
  FieldElem operator-() const { return field_->neg(*this); }

  const std::vector<std::int64_t>& icoords() const { return ic_; }
  const std::vector<Rational>& qcoords() const { return qc_; }
  std::string str() const;

 private:
  friend class Field;
  FieldElem(FieldPtr f, std::vector<std::int64_t> ic, std::vector<Rational> qc)
      : field_(std::move(f)), ic_(std::move(ic)), qc_(std::move(qc)) {}

  FieldPtr field_;
  std::vector<std::int64_t> ic_;
  std::vector<Rational> qc_;
};

// The quadratic character of a finite field of odd characteristic:
// 0 on zero, +1 on nonzero squares, -1 on nonsquares.
int quadratic_character(const FieldElem& x);

// Square root in the element's field, when one exists. Deterministic choice:
// finite fields take the root with the smallest canonical representation;
// Q and towers take the root whose first nonzero coordinate is positive.
std::optional<FieldElem> sqrt_in_field(const FieldElem& x);

bool is_prime(std::int64_t n);

}  // namespace bicover
