#include <doctest.h>

#include "akizuki/construction.hpp"

using namespace akizuki;

TEST_SUITE("construction") {

TEST_CASE("minimal exponents") {
  CHECK(minimal_exponents(3) == std::vector<long>{0, 2, 6, 14, 30});
  CHECK(minimal_exponents(0) == std::vector<long>{0, 2});
  CHECK(minimal_exponents(5) == std::vector<long>{0, 2, 6, 14, 30, 62, 126});
  // recurrence n_r = 2 n_{r-1} + 2 is met with equality
  auto n = minimal_exponents(10);
  for (size_t r = 1; r < n.size(); ++r) CHECK(n[r] == 2 * n[r - 1] + 2);
}

TEST_CASE("validate accepts the minimal instance") {
  auto Q = BaseRing::poly_rationals();
  auto P = make_ones_instance(Q, 3);
  CHECK(validate(P).empty());
  CHECK(P.m(1) == 2);
  CHECK(P.m(2) == 4);
  CHECK(P.m(4) == 16);
}

TEST_CASE("validate reports violations by index") {
  auto Q = BaseRing::poly_rationals();
  ConstructionParams P;
  P.ring = Q;
  P.r_max = 1;
  P.n = {0, 2, 5};
  for (int i = 0; i < 3; ++i) P.a.push_back(AElem::one(Q));
  auto bad = validate(P);
  REQUIRE(bad.size() >= 1);
  CHECK(bad[0].find("n_2") != std::string::npos);
  CHECK(bad[0].find("6") != std::string::npos);

  auto P2 = make_ones_instance(Q, 2);
  P2.a[1] = AElem::t_pow(Q, 1);
  auto bad2 = validate(P2);
  REQUIRE(bad2.size() == 1);
  CHECK(bad2[0] == "a_1 not a unit");
}

TEST_CASE("z_series matches hand expansions") {
  auto Q = BaseRing::poly_rationals();
  auto P = make_ones_instance(Q, 3);
  auto term = [&](std::initializer_list<long> exps, long N) {
    TruncSeries s = TruncSeries::zero(Q, N);
    for (long e : exps)
      if (e < N) s = s + TruncSeries::one(Q, N).mul_t_pow(e);
    return s;
  };
  CHECK(z_series(P, 0, 7) == term({0, 2, 6}, 7));
  CHECK(z_series(P, 1, 6) == term({0, 4}, 6));
  CHECK(z_series(P, 2, 9) == term({0, 8}, 9));
  CHECK_THROWS_AS(z_series(P, 5, 8), Error);
}

TEST_CASE("defining identities hold at any precision") {
  auto Q = BaseRing::poly_rationals();
  auto P = make_ones_instance(Q, 4);
  CHECK(check_defining_identities(P, 64).ok);
  CHECK(check_defining_identities(P, 7).ok);

  auto F101 = BaseRing::poly_prime_field(101);
  auto PR = make_random_units_instance(F101, 3, 12345);
  CHECK(validate(PR).empty());
  CHECK(check_defining_identities(PR, 40).ok);

  auto Z5 = BaseRing::padic_ring(5);
  auto PP = make_random_units_instance(Z5, 2, 99);
  CHECK(validate(PP).empty());
  CHECK(check_defining_identities(PP, 32).ok);
}

TEST_CASE("corrupting z_2 is caught at r=1") {
  auto Q = BaseRing::poly_rationals();
  auto P = make_ones_instance(Q, 4);
  long N = 64;
  std::vector<TruncSeries> zs;
  for (long r = 0; r <= P.r_max + 1; ++r) zs.push_back(z_series(P, r, N));
  zs[2] = zs[2].perturbed(1);
  auto rep = check_defining_identities_with(P, N, zs);
  CHECK(!rep.ok);
  CHECK(rep.first_bad_r == 1);
}

TEST_CASE("random units are units") {
  auto Z5 = BaseRing::padic_ring(5);
  auto P = make_random_units_instance(Z5, 4, 7);
  for (const auto& a : P.a) CHECK(a.valuation() == 0);
  // deterministic for a fixed seed
  auto P2 = make_random_units_instance(Z5, 4, 7);
  for (size_t i = 0; i < P.a.size(); ++i) CHECK(P.a[i] == P2.a[i]);
  auto P3 = make_random_units_instance(Z5, 4, 8);
  bool all_same = true;
  for (size_t i = 0; i < P.a.size(); ++i)
    if (P.a[i] != P3.a[i]) all_same = false;
  CHECK(!all_same);
}

}  // TEST_SUITE
