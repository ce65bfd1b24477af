#include "bicover/analysis.hpp"

namespace bicover {

namespace {

long long floor_half(long long n) { return n / 2; }
long long ceil_half(long long n) { return (n + 1) / 2; }

}  // namespace

BoundsEntry predicted_bounds(const FamilySpec& family, long long n) {
  if (n < 2) throw Error(Errc::BadArgument, "bounds are tabulated for n >= 2");
  BoundsEntry e;
  e.n = n;
  e.fallback_upper = {n - 1, BoundModel::Graph, true};

  switch (family.family) {
    case FieldFamily::Gf2: {
      e.family = "GF(2)";
      e.upper = e.fallback_upper;
      switch (n % 4) {
        case 0:
        case 2:
          e.lower = {n / 2, BoundModel::Inhomogeneous, true};
          e.upper_io = BoundSide{n / 2, BoundModel::Graph, false};
          e.citation =
              "odd covers from conference matrices (n = 0 mod 4) and quadratic-character "
              "symmetric designs (n = 2 mod 4); substitution-method lower bound";
          break;
        case 3:
          e.lower = {ceil_half(n), BoundModel::Inhomogeneous, true};
          e.upper_io = BoundSide{ceil_half(n), BoundModel::Graph, false};
          e.citation =
              "odd covers of K_{n+1} restricted to K_n; mod-4 weight analysis raises the "
              "lower bound to ceil(n/2)";
          break;
        case 1:
          e.lower = {floor_half(n), BoundModel::Inhomogeneous, true};
          e.upper_io = BoundSide{floor_half(n), BoundModel::Homogeneous, false};
          e.citation =
              "appending the parity variable to an S^2_{n-1} circuit keeps floor(n/2) gates; "
              "graph-model covers need ceil(n/2) for infinitely many such n";
          break;
      }
      return e;
    }
    case FieldFamily::RationalReal: {
      e.family = "Q/R";
      e.lower = {n - 1, BoundModel::Inhomogeneous, true};
      e.upper = {n - 1, BoundModel::Graph, true};
      e.citation = "star decomposition; sum-of-squares substitution argument";
      return e;
    }
    case FieldFamily::Complex: {
      e.family = "C";
      e.lower = {ceil_half(n), BoundModel::Inhomogeneous, true};
      e.upper = {ceil_half(n), BoundModel::Homogeneous, true};
      e.citation = "isotropic equidistant vector construction; equidistant-point impossibility";
      return e;
    }
    case FieldFamily::GfOddPrimePower: {
      const std::int64_t p = family.p;
      const int r = family.r;
      if (!is_prime(p) || p == 2 || r < 1) {
        throw Error(Errc::UnknownFamily, "need an odd prime p and degree r >= 1");
      }
      e.family = "GF(" + std::to_string(p) + "^" + std::to_string(r) + ")";
      const bool even_n = n % 2 == 0;
      if (r % 2 == 0) {
        if (even_n) {
          e.lower = {n / 2, BoundModel::Inhomogeneous, true};
          e.upper = {n / 2, BoundModel::Homogeneous, true};
        } else {
          e.upper = {ceil_half(n), BoundModel::Homogeneous, true};
          e.lower = {floor_half(n), BoundModel::Inhomogeneous, true};
          if (p > 3) e.lower_io = BoundSide{ceil_half(n), BoundModel::Inhomogeneous, false};
        }
        e.citation =
            "every base-field element is a square in an even-degree extension, so the "
            "isotropic vector construction applies for all n" +
            std::string(p == 3 ? "; mod-3 side conditions cap odd-n lower bounds at floor(n/2)"
                                : "");
        return e;
      }
      if (p % 4 == 1) {
        if (even_n) {
          e.lower = {n / 2, BoundModel::Inhomogeneous, true};
          e.upper = {std::min(n / 2 + 1, n - 1), BoundModel::Homogeneous, true};
          e.upper_io = BoundSide{n / 2, BoundModel::Homogeneous, false};
        } else {
          e.upper = {ceil_half(n), BoundModel::Homogeneous, true};
          e.lower = {floor_half(n), BoundModel::Inhomogeneous, true};
          e.lower_io = BoundSide{ceil_half(n), BoundModel::Inhomogeneous, false};
        }
        e.citation =
            "-1 is a square mod p = 1 mod 4; n/2 gates need a square root of n-1, which "
            "exists for infinitely many even n";
        return e;
      }
      // p = 3 mod 4, r odd: no square root of -1; the route goes through
      // 1 mod p covers, which only reach n = 1 mod p cases for odd n.
      e.upper = e.fallback_upper;
      if (even_n) {
        e.lower = {n / 2, BoundModel::Inhomogeneous, true};
        e.upper_io = BoundSide{n / 2, BoundModel::Graph, false};
      } else {
        e.lower = {floor_half(n), BoundModel::Inhomogeneous, true};
        e.upper_io = BoundSide{ceil_half(n), BoundModel::Graph, false};
      }
      e.citation =
          "1 mod p covers from symmetric designs with q = -1 mod 2p; for odd n the "
          "infinitely-many upper bound covers only n = 1 mod p, leaving an additive gap of "
          "one against the floor(n/2) lower bound";
      return e;
    }
  }
  throw Error(Errc::UnknownFamily, "unrecognized field family");
}

}  // namespace bicover
