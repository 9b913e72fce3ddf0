#include <doctest.h>

#include <random>

#include "akizuki/base_ring.hpp"

using namespace akizuki;

namespace {

template <typename F>
Err code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return Err::Internal;
}

AElem poly(const RingPtr& R, std::initializer_list<std::pair<long, long>> terms) {
  detail::KPoly p;
  for (auto [e, c] : terms) p.emplace_back(e, mpq_class(c));
  return AElem::from_poly(R, p);
}

}  // namespace

TEST_SUITE("base_ring") {

TEST_CASE("factories and describe") {
  auto Q = BaseRing::poly_rationals();
  CHECK(Q->describe() == "Q[t]_(t)");
  CHECK(Q->residue_modulus() == 0);

  auto F7 = BaseRing::poly_prime_field(7);
  CHECK(F7->describe() == "F7[t]_(t)");

  auto Z5 = BaseRing::padic_ring(5);
  CHECK(Z5->describe() == "Z_(5)");

  CHECK(code_of([] { BaseRing::poly_prime_field(6); }) == Err::ConfigError);
  CHECK(code_of([] { BaseRing::padic_ring(1); }) == Err::ConfigError);
  CHECK(Q->same(*BaseRing::poly_rationals()));
  CHECK(!Q->same(*F7));
}

TEST_CASE("valuation and unit split, poly mode") {
  auto Q = BaseRing::poly_rationals();
  AElem f = poly(Q, {{3, 1}, {7, 1}});  // t^3 + t^7
  auto [v, u] = f.unit_part_split();
  CHECK(v == 3);
  CHECK(u == poly(Q, {{0, 1}, {4, 1}}));
  CHECK(u.to_string() == "1 + t^4");

  AElem five = AElem::from_long(Q, 5);
  auto [v5, u5] = five.unit_part_split();
  CHECK(v5 == 0);
  CHECK(u5 == five);

  CHECK(!AElem::zero(Q).valuation().has_value());
  CHECK(code_of([&] { AElem::zero(Q).unit_part_split(); }) == Err::ZeroInput);
}

TEST_CASE("valuation and unit split, padic mode") {
  auto Z5 = BaseRing::padic_ring(5);
  AElem f = AElem::from_long(Z5, 50);
  auto [v, u] = f.unit_part_split();
  CHECK(v == 2);
  CHECK(u == AElem::from_long(Z5, 2));

  CHECK(AElem::from_mpq(Z5, mpq_class(3, 2)).valuation() == 0);
  CHECK(code_of([&] { AElem::from_mpq(Z5, mpq_class(1, 5)); }) ==
        Err::NotInBaseRing);
  CHECK(AElem::from_long(Z5, 2).mul_t_pow(3) == AElem::from_long(Z5, 250));
}

TEST_CASE("invert_unit is exact") {
  auto Q = BaseRing::poly_rationals();
  AElem u = poly(Q, {{0, 1}, {1, 1}});  // 1 + t
  AElem inv = u.invert_unit();
  CHECK(u * inv == AElem::one(Q));
  CHECK(inv.to_string() == "(1)/(1 + t)");

  CHECK(code_of([&] { AElem::t_pow(Q, 1).invert_unit(); }) == Err::NotAUnit);
  CHECK(code_of([&] { AElem::zero(Q).invert_unit(); }) == Err::NotAUnit);

  auto Z5 = BaseRing::padic_ring(5);
  AElem two = AElem::from_long(Z5, 2);
  CHECK(two.invert_unit() * two == AElem::one(Z5));
  CHECK(code_of([&] { AElem::from_long(Z5, 5).invert_unit(); }) == Err::NotAUnit);
}

TEST_CASE("residue map") {
  auto Q = BaseRing::poly_rationals();
  AElem f = AElem::from_long(Q, 7).divide_exact(poly(Q, {{0, 1}, {1, 1}}));
  CHECK(f.residue().value() == 7);
  CHECK(AElem::t_pow(Q, 2).residue().is_zero());

  // residue is a ring homomorphism
  std::mt19937_64 rng(2024);
  auto rand_elem = [&] {
    detail::KPoly p;
    for (long e = 0; e < 4; ++e) {
      long c = static_cast<long>(rng() % 11) - 5;
      if (c != 0) p.emplace_back(e, mpq_class(c));
    }
    return AElem::from_poly(Q, p);
  };
  for (int i = 0; i < 50; ++i) {
    AElem a = rand_elem(), b = rand_elem();
    CHECK((a + b).residue() == a.residue() + b.residue());
    CHECK((a * b).residue() == a.residue() * b.residue());
  }

  auto Z5 = BaseRing::padic_ring(5);
  CHECK(AElem::from_mpq(Z5, mpq_class(1, 2)).residue().value() == 3);
  CHECK(AElem::from_long(Z5, 50).residue().is_zero());
}

TEST_CASE("residue field arithmetic") {
  auto F7 = BaseRing::poly_prime_field(7);
  Residue a(F7, 3), b(F7, 5);
  CHECK((a + b).value() == 1);
  CHECK((a * b).value() == 1);
  CHECK(a.inverse().value() == 5);
  CHECK((-a).value() == 4);

  auto Q = BaseRing::poly_rationals();
  Residue q(Q, mpq_class(2, 3));
  CHECK(q.inverse().value() == mpq_class(3, 2));
  CHECK(code_of([&] { Residue::zero(Q).inverse(); }) == Err::NotAUnit);
}

TEST_CASE("prime field coefficients stay reduced") {
  auto F7 = BaseRing::poly_prime_field(7);
  CHECK(AElem::from_long(F7, 10) == AElem::from_long(F7, 3));
  CHECK(AElem::from_long(F7, -1) == AElem::from_long(F7, 6));
  CHECK(AElem::from_long(F7, 14).is_zero());
  AElem f = poly(F7, {{0, 3}, {2, 5}});
  CHECK((f + f).to_string() == "6 + 3*t^2");
}

TEST_CASE("divide_exact and t powers") {
  auto Q = BaseRing::poly_rationals();
  AElem num = poly(Q, {{0, 1}, {1, 1}}) * poly(Q, {{0, 3}, {2, 1}});
  CHECK(num.divide_exact(poly(Q, {{0, 1}, {1, 1}})) == poly(Q, {{0, 3}, {2, 1}}));

  CHECK(AElem::t_pow(Q, 5).div_t_pow(2) == AElem::t_pow(Q, 3));
  CHECK(code_of([&] { AElem::t_pow(Q, 2).div_t_pow(3); }) == Err::NotDivisible);
  CHECK(code_of([&] { AElem::one(Q).divide_exact(AElem::zero(Q)); }) ==
        Err::ZeroInput);

  // division tracks fractions exactly: (t^2) / (1+t) then * (1+t) round-trips
  AElem g = AElem::t_pow(Q, 2).divide_exact(poly(Q, {{0, 1}, {1, 1}}));
  CHECK(g * poly(Q, {{0, 1}, {1, 1}}) == AElem::t_pow(Q, 2));
  CHECK(g.valuation() == 2);
}

TEST_CASE("fraction canonical form") {
  auto Q = BaseRing::poly_rationals();
  // (2 + 2t)/2 reduces to 1 + t with den(0) = 1
  AElem f = poly(Q, {{0, 2}, {1, 2}}).divide_exact(AElem::from_long(Q, 2));
  CHECK(f == poly(Q, {{0, 1}, {1, 1}}));
  CHECK(f.den() == detail::KPoly{{0, 1}});

  AElem g = poly(Q, {{1, 4}}).divide_exact(poly(Q, {{0, 2}, {1, 2}}));
  CHECK(g.den().front().second == 1);  // den constant term normalized
  CHECK(g * poly(Q, {{0, 1}, {1, 1}}) == poly(Q, {{1, 2}}));
}

TEST_CASE("arithmetic properties, seeded") {
  auto F101 = BaseRing::poly_prime_field(101);
  std::mt19937_64 rng(42);
  auto rand_elem = [&] {
    detail::KPoly p;
    for (long e = 0; e < 5; ++e) {
      long c = static_cast<long>(rng() % 101);
      if (c != 0) p.emplace_back(e, mpq_class(c));
    }
    AElem base = AElem::from_poly(F101, p);
    if (rng() % 3 == 0 && !base.is_zero())
      return base.divide_exact(poly(F101, {{0, 1}, {1, static_cast<long>(rng() % 4 + 1)}}));
    return base;
  };
  for (int i = 0; i < 60; ++i) {
    AElem a = rand_elem(), b = rand_elem(), c = rand_elem();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == AElem::zero(F101));
    if (!a.is_zero() && !b.is_zero()) {
      auto va = a.valuation(), vb = b.valuation();
      CHECK((a * b).valuation() == *va + *vb);
      CHECK((a * b).divide_exact(b) == a);
    }
  }
}

TEST_CASE("to_string forms") {
  auto Q = BaseRing::poly_rationals();
  CHECK(AElem::zero(Q).to_string() == "0");
  CHECK(AElem::from_mpq(Q, mpq_class(-3, 2)).to_string() == "-3/2");
  CHECK(poly(Q, {{1, 1}}).to_string() == "t");
  CHECK(poly(Q, {{0, 2}, {3, -5}}).to_string() == "2 - 5*t^3");
  auto Z5 = BaseRing::padic_ring(5);
  CHECK(AElem::from_long(Z5, 50).to_string() == "50");
}

}  // TEST_SUITE
