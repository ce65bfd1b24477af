#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bicover/fields.hpp"

namespace bicover {

// Square matrix with entries in {-1, 0, +1}.
class SignMatrix {
 public:
  explicit SignMatrix(int order);
  static SignMatrix identity(int order);

  int order() const { return n_; }
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, int v);
  bool operator==(const SignMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const SignMatrix& o) const { return !(*this == o); }
  SignMatrix transposed() const;

  // Exact integer row statistics; never reduced before comparison.
  long long row_support(int i) const;
  long long common_support(int i, int j) const;
  long long row_dot(int i, int j) const;

 private:
  int n_;
  std::vector<signed char> e_;
};

enum class GoodCondition { RowParity, CommonSupport, Orthogonality };

struct GoodFailure {
  GoodCondition condition;
  int row_a;
  int row_b;  // -1 for single-row conditions
};

struct GoodVerdict {
  bool ok;
  std::vector<GoodFailure> failures;
};

// One canonical representative per projective point and line of PG(2, q).
// Representatives are normalized so the first nonzero coordinate is 1 and are
// listed in lexicographic coordinate order.
struct PlaneDesc {
  std::int64_t q;
  FieldPtr field;
  std::vector<std::vector<FieldElem>> points;  // each of size 3
  std::vector<std::vector<FieldElem>> lines;   // normal vectors, each of size 3
};

// The skew Hadamard family for orders 2^t: F_2 has entry (2,1) = -1 and ones
// elsewhere; doubling places F_n top-left, -F_n bottom-left and F_n^T in the
// right half. Satisfies F F^T = n I and F + F^T = 2 I.
SignMatrix skew_family_power2(int n);

// Conference matrix F - I from a skew Hadamard matrix of order 0 mod 4.
SignMatrix good_from_skew(const SignMatrix& f);

PlaneDesc projective_plane(std::int64_t q);

// Line-by-point quadratic character matrix of PG(2, q).
// q = 3 mod 4 makes it good; q = -1 mod 2p makes it good for p.
SignMatrix symmetric_design_matrix(std::int64_t q);
SignMatrix symmetric_design_matrix(std::int64_t q, std::int64_t p);

// Checks: odd row support, pairwise common support 2 mod 4, integer-orthogonal
// rows. Verdicts carry witnesses instead of throwing.
GoodVerdict is_good(const SignMatrix& m);

// Row support 1 mod p, common support 2 mod 2p, integer-orthogonal rows.
GoodVerdict is_good_for_p(const SignMatrix& m, std::int64_t p);

}  // namespace bicover
