#include <doctest.h>

#include <random>

#include "bicover/fields.hpp"

using namespace bicover;

namespace {

// Independent oracle: the monic quadratics x^2 + c1 x + c0 over GF(3) without
// roots, scanned in (c0, c1) order.
std::vector<std::int64_t> smallest_irreducible_quadratic_gf3() {
  for (std::int64_t c0 = 0; c0 < 3; ++c0) {
    for (std::int64_t c1 = 0; c1 < 3; ++c1) {
      bool has_root = false;
      for (std::int64_t x = 0; x < 3 && !has_root; ++x) {
        has_root = (x * x + c1 * x + c0) % 3 == 0;
      }
      if (!has_root) return {c0, c1, 1};
    }
  }
  return {};
}

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  auto f7 = Field::prime(7);
  CHECK(f7->order() == 7);
  CHECK((f7->from_integer(3) * f7->from_integer(5)) == f7->one());
  CHECK((f7->from_integer(4) + f7->from_integer(5)).icoords()[0] == 2);
  CHECK((f7->from_integer(2) - f7->from_integer(5)).icoords()[0] == 4);
  CHECK_THROWS_AS((void)Field::prime(10), Error);
  CHECK_THROWS_WITH_AS((void)Field::prime(9), "NotPrime: 9 is not prime", Error);
  CHECK_THROWS_AS((void)f7->inv(f7->zero()), Error);
}

TEST_CASE("field mismatch is rejected") {
  auto f5 = Field::prime(5);
  auto f7 = Field::prime(7);
  CHECK_THROWS_AS((void)(f5->one() + f7->one()), Error);
}

TEST_CASE("extension field picks the smallest irreducible modulus") {
  auto f9 = Field::gf(9);
  CHECK(f9->kind() == FieldKind::Extension);
  CHECK(f9->modulus() == smallest_irreducible_quadratic_gf3());

  // x * x reduced by the modulus
  const FieldElem x = f9->basis_element(1);
  const FieldElem xx = x * x;
  std::vector<std::int64_t> expected = {
      ((-f9->modulus()[0]) % 3 + 3) % 3, ((-f9->modulus()[1]) % 3 + 3) % 3};
  CHECK(xx.icoords() == expected);

  // a * inv(a) = 1 for every nonzero element
  for (std::int64_t i = 1; i < 9; ++i) {
    const FieldElem a = f9->element_at(i);
    CHECK((a * f9->inv(a)) == f9->one());
  }
}

TEST_CASE("extension rejects reducible moduli") {
  CHECK_THROWS_AS((void)Field::extension(3, 2, {0, 0, 1}), Error);  // x^2
  CHECK_THROWS_AS((void)Field::extension(3, 2, {2, 0, 0}), Error);  // not monic
}

TEST_CASE("rationals are canonical") {
  CHECK(rational_to_string(make_rational(2, -4)) == "-1/2");
  CHECK(rational_to_string(make_rational(6, 4)) == "3/2");
  CHECK(rational_from_string("-10/4") == make_rational(-5, 2));
  CHECK(rational_from_string("7") == Rational(7));
  CHECK_THROWS_AS((void)make_rational(1, 0), Error);
}

TEST_CASE("tower Q(i) basics") {
  auto qi = Field::tower({Rational(-1)});
  CHECK(qi->dim() == 2);
  const FieldElem i = qi->basis_element(1);
  CHECK((i * i) == qi->from_integer(-1));

  // (1 + i)(1 - i) = 2
  const FieldElem a = qi->one() + i;
  const FieldElem b = qi->one() - i;
  CHECK((a * b) == qi->from_integer(2));

  // division round-trips
  const FieldElem c = qi->make(std::vector<Rational>{Rational(3, 4), Rational(-2, 5)});
  CHECK(((a / c) * c) == a);
}

TEST_CASE("tower rejects square discriminants") {
  CHECK_THROWS_AS((void)Field::tower({Rational(4)}), Error);
  CHECK_THROWS_AS((void)Field::tower({Rational(-1), Rational(-1)}), Error);
  CHECK_THROWS_AS((void)Field::tower({Rational(2), Rational(8)}), Error);  // 8 = (2)^2 * 2
  CHECK_THROWS_AS((void)Field::tower({Rational(0)}), Error);
  CHECK(Field::tower({Rational(-1), Rational(2)})->dim() == 4);
  CHECK(Field::tower({})->kind() == FieldKind::Rational);
}

TEST_CASE("quadratic character on GF(7)") {
  auto f7 = Field::prime(7);
  // squares mod 7 by enumeration
  std::set<std::int64_t> squares;
  for (std::int64_t x = 1; x < 7; ++x) squares.insert(x * x % 7);
  CHECK(quadratic_character(f7->zero()) == 0);
  CHECK(squares.count(2) == 1);
  CHECK(quadratic_character(f7->from_integer(2)) == 1);
  CHECK(squares.count(3) == 0);
  CHECK(quadratic_character(f7->from_integer(3)) == -1);

  auto f2 = Field::prime(2);
  CHECK_THROWS_AS((void)quadratic_character(f2->one()), Error);
}

TEST_CASE("quadratic character is multiplicative and balanced") {
  for (std::int64_t q : {3, 5, 7, 9, 13, 17, 25, 27, 49}) {
    auto F = Field::gf(q);
    long long sum = 0;
    for (std::int64_t i = 1; i < q; ++i) sum += quadratic_character(F->element_at(i));
    CHECK(sum == 0);
    for (std::int64_t i = 1; i < q; ++i) {
      for (std::int64_t j = 1; j < q; ++j) {
        const FieldElem a = F->element_at(i), b = F->element_at(j);
        CHECK(quadratic_character(a * b) == quadratic_character(a) * quadratic_character(b));
      }
    }
  }
}

TEST_CASE("square roots in finite fields") {
  auto f13 = Field::prime(13);
  auto r = sqrt_in_field(f13->from_integer(-1));
  REQUIRE(r.has_value());
  CHECK(r->icoords()[0] == 5);  // 5^2 = 25 = -1 mod 13; 5 < 8

  CHECK(sqrt_in_field(f13->one())->icoords()[0] == 1);
  CHECK(sqrt_in_field(f13->zero())->is_zero());

  // 7 is not a square mod 13; confirm by scan
  bool any = false;
  for (std::int64_t y = 0; y < 13; ++y) any = any || (y * y % 13 == 7);
  CHECK_FALSE(any);
  CHECK_FALSE(sqrt_in_field(f13->from_integer(7)).has_value());

  // every returned root squares back, across a few fields
  for (std::int64_t q : {9, 17, 25, 27}) {
    auto F = Field::gf(q);
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElem x = F->element_at(i);
      if (auto y = sqrt_in_field(x)) CHECK((*y) * (*y) == x);
    }
  }
}

TEST_CASE("square roots in towers") {
  auto t = Field::tower({Rational(-1), Rational(2)});
  CHECK(sqrt_in_field(t->one())->is_one());

  auto rt2 = sqrt_in_field(t->from_integer(2));
  REQUIRE(rt2.has_value());
  CHECK((*rt2) * (*rt2) == t->from_integer(2));
  // canonical choice has a positive leading coordinate
  CHECK(rt2->qcoords()[2] == Rational(1));

  auto i = sqrt_in_field(t->from_integer(-1));
  REQUIRE(i.has_value());
  CHECK((*i) * (*i) == t->from_integer(-1));

  // sqrt(-2) = i * sqrt(2) lives in the tower
  auto rm2 = sqrt_in_field(t->from_integer(-2));
  REQUIRE(rm2.has_value());
  CHECK((*rm2) * (*rm2) == t->from_integer(-2));

  // 3 has no square root in Q(i, sqrt 2)
  CHECK_FALSE(sqrt_in_field(t->from_integer(3)).has_value());

  // a non-rational square: (1 + sqrt 2)^2 = 3 + 2 sqrt 2
  const FieldElem v = t->one() + *rt2;
  auto back = sqrt_in_field(v * v);
  REQUIRE(back.has_value());
  CHECK((*back) * (*back) == v * v);
}

TEST_CASE("inverse laws hold everywhere") {
  std::mt19937 rng(919);
  for (std::int64_t q : {2, 3, 7, 9, 13}) {
    auto F = Field::gf(q);
    for (std::int64_t i = 1; i < q; ++i) {
      const FieldElem a = F->element_at(i);
      CHECK(a * F->inv(a) == F->one());
    }
  }
  auto t = Field::tower({Rational(-1), Rational(3)});
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> coords;
    for (int c = 0; c < t->dim(); ++c) {
      coords.push_back(make_rational(static_cast<int>(rng() % 9) - 4,
                                     static_cast<int>(rng() % 4) + 1));
    }
    const FieldElem a = t->make(coords);
    if (a.is_zero()) continue;
    CHECK(a * t->inv(a) == t->one());
    const FieldElem b = t->from_rational(make_rational(static_cast<int>(rng() % 7) + 1, 3));
    CHECK((a * b) * t->inv(b) == a);
  }
}

TEST_CASE("mapping Q(i) into GF(13) via i -> 5 is a ring homomorphism") {
  auto qi = Field::tower({Rational(-1)});
  auto f13 = Field::prime(13);
  const FieldElem five = f13->from_integer(5);

  auto phi = [&](const FieldElem& e) {
    return f13->from_rational(e.qcoords()[0]) + f13->from_rational(e.qcoords()[1]) * five;
  };

  std::mt19937 rng(2711);
  auto random_elem = [&]() {
    // denominators stay coprime to 13
    const int dens[] = {1, 2, 3, 4, 5, 6, 7};
    return qi->make(std::vector<Rational>{
        make_rational(static_cast<int>(rng() % 21) - 10, dens[rng() % 7]),
        make_rational(static_cast<int>(rng() % 21) - 10, dens[rng() % 7])});
  };
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElem a = random_elem(), b = random_elem();
    CHECK(phi(a + b) == phi(a) + phi(b));
    CHECK(phi(a * b) == phi(a) * phi(b));
    CHECK(phi(a - b) == phi(a) - phi(b));
  }
  CHECK(phi(qi->basis_element(1)) == five);
}

TEST_CASE("element enumeration is lexicographic") {
  auto f9 = Field::gf(9);
  for (std::int64_t i = 0; i + 1 < 9; ++i) {
    CHECK(f9->less(f9->element_at(i), f9->element_at(i + 1)));
    CHECK(f9->index_of(f9->element_at(i)) == i);
  }
}

TEST_CASE("lifting tower elements into a longer tower") {
  auto qi = Field::tower({Rational(-1)});
  auto big = Field::tower({Rational(-1), Rational(5)});
  const FieldElem a = qi->make(std::vector<Rational>{Rational(2, 3), Rational(-1)});
  const FieldElem lifted = big->lift(a);
  CHECK(lifted.qcoords()[0] == Rational(2, 3));
  CHECK(lifted.qcoords()[1] == Rational(-1));
  CHECK(lifted.qcoords()[2] == Rational(0));
  auto other = Field::tower({Rational(2)});
  CHECK_THROWS_AS((void)big->lift(other->one()), Error);
}
