#pragma once

#include <map>
#include <vector>

#include "bicover/covers.hpp"
#include "bicover/fields.hpp"

namespace bicover {

// Linear form c_1 X_1 + ... + c_n X_n + c_0 over a fixed field.
class LinearForm {
 public:
  LinearForm(FieldPtr field, int n);  // zero form
  LinearForm(FieldPtr field, std::vector<FieldElem> coeffs, FieldElem constant);

  const FieldPtr& field() const { return field_; }
  int n() const { return static_cast<int>(coeffs_.size()); }
  const FieldElem& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  const FieldElem& constant() const { return constant_; }
  bool homogeneous() const { return constant_.is_zero(); }
  int nonzero_terms() const;
  bool is_zero() const;

  LinearForm with_coeff(int i, FieldElem c) const;
  LinearForm with_constant(FieldElem c) const;
  LinearForm scaled(const FieldElem& s) const;

 private:
  FieldPtr field_;
  std::vector<FieldElem> coeffs_;
  FieldElem constant_;
};

// Sum of products of linear forms; each gate is one product.
struct Circuit {
  FieldPtr field;
  int n = 0;
  std::vector<std::vector<LinearForm>> gates;

  bool homogeneous() const;
};

inline int gate_count(const Circuit& c) { return static_cast<int>(c.gates.size()); }

// Exact multivariate polynomial with terms keyed by exponent vectors of
// length n; zero coefficients are never stored.
class SparsePoly {
 public:
  SparsePoly(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  const std::map<std::vector<int>, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coefficient(const std::vector<int>& exps) const;

  void add_term(const std::vector<int>& exps, const FieldElem& c);
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  static SparsePoly from_form(const LinearForm& f);
  // Product with a linear form; adds the monomial operations performed to
  // *ops and fails once they exceed the cap (cap <= 0 disables the guard).
  SparsePoly times_form(const LinearForm& f, long long* ops, long long cap) const;

 private:
  FieldPtr field_;
  int n_;
  std::map<std::vector<int>, FieldElem> terms_;
};

SparsePoly reference_s2(int n, const FieldPtr& F);
SparsePoly reference_t2(int n, const FieldPtr& F);

struct ExpansionLimits {
  long long ops_per_gate = 1'000'000;
};

SparsePoly expand(const Circuit& c, const ExpansionLimits& limits = {});

struct S2Check {
  bool ok;
  SparsePoly difference;  // expand(c) - S_n^2
};

S2Check computes_s2(const Circuit& c, const ExpansionLimits& limits = {});

// One two-form gate per bipartite graph, 0/1 coefficients.
Circuit circuit_from_cover(const Cover& c, const FieldPtr& F);

// Homogeneous circuit for S^2_{2k+1} with k+1 gates over a field of odd or
// zero characteristic containing a square root of -1. The scalar factors are
// folded into the first form of each gate.
Circuit odd_construction(int k, const FieldPtr& F);

// Homogeneous circuit for S^2_{2k} with k gates. Needs square roots of -1,
// 2k-1 and 2; over Q or a tower the missing discriminants are adjoined, so
// the returned circuit may live in an extension of F (see circuit.field).
Circuit even_construction(int k, const FieldPtr& F);

// From a homogeneous two-form-per-gate GF(2) circuit for S_n^2, n = 0 mod 4,
// produces one for S^2_{n+1} with the same gate count by appending X_{n+1}
// to every form with an odd number of terms.
Circuit gf2_lift(const Circuit& c);

}  // namespace bicover
