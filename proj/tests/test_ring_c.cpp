#include <doctest.h>

#include "akizuki/ring_c.hpp"
#include "akizuki/rng.hpp"

using namespace akizuki;

namespace {

ParamsPtr ones(long r_max = 6) {
  return std::make_shared<ConstructionParams>(
      make_ones_instance(BaseRing::poly_rationals(), r_max));
}

AElem tp(const ParamsPtr& P, long k) { return AElem::t_pow(P->ring, k); }

CElem rand_celem(const ParamsPtr& P, Rng& rng, long max_level, long max_b) {
  long lvl = rng.next_long(0, max_level);
  CElem::Track c, d;
  for (long b = 0; b <= max_b; ++b) {
    if (rng.next(2) == 0) {
      long v = rng.next_long(-3, 3);
      if (v != 0) c.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
    }
    if (rng.next(2) == 0) {
      long v = rng.next_long(-3, 3);
      if (v != 0) d.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
    }
  }
  return CElem::from_tracks(P, lvl, std::move(c), std::move(d));
}

}  // namespace

TEST_SUITE("ring_c") {

TEST_CASE("products land on normal-form words") {
  auto P = ones();
  CElem w0 = CElem::w(P, 0);
  CElem y0 = CElem::y(P, 0);

  CElem sq = w0 * w0;  // w^2 = t^2 y at level 0
  CHECK(sq.c_at(1) == tp(P, 2));
  CHECK(sq.d().empty());
  CHECK(sq == y0.mul_t_pow(2));

  CElem dbl = y0 + y0;
  CHECK(dbl.c_at(1) == AElem::from_long(P->ring, 2));

  CElem mixed = w0 * y0;
  CHECK(mixed.d_at(1) == AElem::one(P->ring));
  CHECK(mixed.c().empty());
}

TEST_CASE("to_b and membership round-trip") {
  auto P = ones();
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    CElem f = rand_celem(P, rng, 3, 4);
    auto res = c_membership(f.to_b(), f.level());
    REQUIRE(res.ok());
    CHECK(*res.elem == f);
  }
}

TEST_CASE("coercion preserves value") {
  auto P = ones();
  Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    CElem f = rand_celem(P, rng, 2, 3);
    CElem up = f.coerce_c_up();
    CHECK(up.level() == f.level() + 1);
    CHECK(up.to_b() == f.to_b());
    CHECK(up.to_series(64) == f.to_series(64));
  }
}

TEST_CASE("coercion rules R1 and R2, minimal-ones level 0 to 1") {
  auto P = ones();
  CElem w1 = CElem::w(P, 0).coerce_c_up();
  CHECK(w1.d_at(0) == AElem::one(P->ring));
  CHECK(w1.c_at(0) == tp(P, 3));  // w_0 = w_1 + t^3

  CElem y1 = CElem::y(P, 0).coerce_c_up();
  CHECK(y1.c_at(1) == tp(P, 4));
  CHECK(y1.d_at(0) == AElem::from_long(P->ring, 2).mul_t_pow(1));
  CHECK(y1.c_at(0) == tp(P, 4));  // y_0 = t^4 y_1 + 2t w_1 + t^4

  CElem seven = CElem::from_a(P, AElem::from_long(P->ring, 7));
  CHECK(seven.coerce_c_up().c_at(0) == AElem::from_long(P->ring, 7));
}

TEST_CASE("bare-w coefficient is stable under coercion") {
  auto P = ones();
  Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    CElem f = rand_celem(P, rng, 3, 3);
    CElem up = f.coerce_c_up();
    AElem diff = up.d_at(0) - f.d_at(0);
    if (!diff.is_zero()) CHECK(*diff.valuation() >= 1);
  }
}

TEST_CASE("eval and M membership") {
  auto P = ones();
  CHECK(CElem::w(P, 0).in_M());
  CHECK(!(CElem::from_a(P, AElem::one(P->ring)) + CElem::w(P, 0)).in_M());
  CHECK(CElem::y(P, 0).mul_t_pow(1).in_M());
  CHECK(CElem::y(P, 0).in_M());  // y evaluates to 0 even unscaled
  // eval agrees with the B-side evaluation
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    CElem f = rand_celem(P, rng, 2, 3);
    CHECK(f.eval_k() == f.to_b().eval_k());
  }
}

TEST_CASE("membership examples") {
  auto P = ones();
  BElem z0 = BElem::z(P, 0);
  BElem one = BElem::from_a(P, AElem::one(P->ring));

  auto gen = c_membership((z0 - one) * (z0 - one), 6);
  REQUIRE(gen.ok());
  CHECK(gen.elem->level() == 0);
  CHECK(gen.elem->c_at(1) == AElem::one(P->ring));

  // t^2 (z_1 - 1) stays out through level 6
  BElem bad = (BElem::z(P, 1) - one).mul_t_pow(2);
  auto nm = c_membership(bad, 6);
  CHECK(!nm.ok());
  CHECK(nm.failures.size() == 6);  // levels 1..6

  // t^3 z_1 = w_1 + a_1 t^3
  BElem tz = BElem::z(P, 1).mul_t_pow(3);
  auto m = c_membership(tz, 6);
  REQUIRE(m.ok());
  CHECK(m.elem->level() == 1);
  CHECK(m.elem->d_at(0) == AElem::one(P->ring));
  CHECK(m.elem->c_at(0) == tp(P, 3));
  CHECK(m.elem->to_b() == tz);
}

TEST_CASE("degree-1 membership criterion") {
  auto P = ones();
  Rng rng(35);
  for (long s = 0; s <= 3; ++s) {
    long need = P->n[static_cast<size_t>(s)] + 1;
    for (int i = 0; i < 25; ++i) {
      AElem alpha = AElem::from_long(P->ring, rng.next_long(-5, 5));
      AElem beta = AElem::from_long(P->ring, rng.next_long(1, 5))
                       .mul_t_pow(rng.next_long(0, need + 2));
      BElem f = BElem::z(P, s).scaled(beta) + BElem::from_a(P, alpha).coerce_up(s);
      bool divisible = *beta.valuation() >= need;
      CHECK(c_membership(f, s).ok() == divisible);
    }
  }
}

TEST_CASE("decompose_eq6 on the worked examples") {
  auto P = ones();

  auto nf = decompose_eq6(CElem::w(P, 0), 2, 20);
  CHECK(nf.X == tp(P, 3) + tp(P, 7));
  CHECK(nf.Y == AElem::one(P->ring));
  CHECK(nf.Z.is_zero());
  CHECK(verify_eq6(CElem::w(P, 0), nf));

  CElem five = CElem::from_a(P, AElem::from_long(P->ring, 5));
  auto nf5 = decompose_eq6(five, 3, 12);
  CHECK(nf5.X == AElem::from_long(P->ring, 5));
  CHECK(nf5.Y.is_zero());
  CHECK(nf5.Z.is_zero());
  CHECK(verify_eq6(five, nf5));

  // y_0 = t^4 + 2t w_1 + t^4 y_1, so at r=1, N=4: X = t^4, Y = 2t, Z = y_1
  auto nfy = decompose_eq6(CElem::y(P, 0), 1, 4);
  CHECK(nfy.X == tp(P, 4));
  CHECK(nfy.Y == AElem::from_long(P->ring, 2).mul_t_pow(1));
  CHECK(nfy.Z == CElem::y(P, 1));
  CHECK(verify_eq6(CElem::y(P, 0), nfy));
}

TEST_CASE("decompose_eq6 recomposes for random inputs") {
  auto P = ones();
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    CElem f = rand_celem(P, rng, 3, 4);
    long r = rng.next_long(0, 4);
    long N = rng.next_long(1, 64);
    auto nf = decompose_eq6(f, r, N);
    CHECK(verify_eq6(f, nf));
  }
}

TEST_CASE("decompose_eq6 level budget") {
  auto P = ones(1);  // levels only up to 2
  CHECK_THROWS_AS(decompose_eq6(CElem::y(P, 0), 1, 40), Error);
  try {
    decompose_eq6(CElem::y(P, 0), 1, 40);
  } catch (const Error& e) {
    CHECK(e.code() == Err::LevelBudgetExceeded);
  }
}

TEST_CASE("claim_inverse worked examples") {
  auto P = ones();

  CElem t = CElem::from_a(P, tp(P, 1));
  auto ct = claim_inverse(t, 64);
  CHECK(ct.n == 1);
  CHECK(ct.g == t);
  CHECK(ct.w == CElem::from_a(P, AElem::one(P->ring)));
  CHECK(verify_claim(t, ct));

  CElem w0 = CElem::w(P, 0);
  auto cw = claim_inverse(w0, 64);
  CHECK(cw.n == 3);
  CElem expect_g = CElem::from_a(P, tp(P, 3) + tp(P, 7)) - CElem::w(P, 2);
  CHECK(cw.g == expect_g);
  CElem u14 = CElem::from_a(P, AElem::one(P->ring) + tp(P, 4));
  CHECK(cw.w == u14 * u14 - CElem::y(P, 2).mul_t_pow(8));
  CHECK(verify_claim(w0, cw));

  CElem ty0 = CElem::y(P, 0).mul_t_pow(1);
  auto cy = claim_inverse(ty0, 64);
  CHECK(cy.n == 5);
  CHECK(verify_claim(ty0, cy));
}

TEST_CASE("claim_inverse error cases") {
  auto P = ones();
  CHECK_THROWS_AS(claim_inverse(CElem::zero(P), 64), Error);
  CHECK_THROWS_AS(claim_inverse(CElem::from_a(P, AElem::one(P->ring)), 64), Error);
  try {
    claim_inverse(CElem::from_a(P, AElem::one(P->ring)), 64);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotInM);
  }
  try {
    claim_inverse(CElem::from_a(P, tp(P, 10)), 8);
  } catch (const Error& e) {
    CHECK(e.code() == Err::ValuationCapExceeded);
  }
}

TEST_CASE("claim_inverse on random members of M") {
  auto P = ones();
  Rng rng(37);
  int done = 0;
  while (done < 50) {
    CElem f = rand_celem(P, rng, 2, 3);
    if (!f.in_M()) f = f - CElem::from_a(P, f.c_at(0));  // strip the unit part
    if (f.is_zero()) continue;
    auto v = f.to_series(64).val_lower_bound();
    if (!v) continue;
    auto ci = claim_inverse(f, 64);
    CHECK(ci.n == *v);
    CHECK(verify_claim(f, ci));
    ++done;
  }
}

TEST_CASE("y_in_tc certificates") {
  auto P = ones();
  auto c1 = y_in_tc_certificate(P, 1);
  CHECK(c1.verify());
  // the i=1 inner factor is t^3 y_1 + 2 w_1 + t^3
  const CElem& inner = c1.terms[0].first;
  CHECK(inner.c_at(1) == tp(P, 3));
  CHECK(inner.d_at(0) == AElem::from_long(P->ring, 2));
  CHECK(inner.c_at(0) == tp(P, 3));

  auto c2 = y_in_tc_certificate(P, 2);
  CHECK(c2.verify());
  CHECK(c2.terms[0].first.c_at(1) == tp(P, 7));
  CHECK(c2.terms[0].first.d_at(0) == AElem::from_long(P->ring, 2));

  for (long i = 1; i <= P->r_max; ++i) CHECK(y_in_tc_certificate(P, i).verify());
  CHECK_THROWS_AS(y_in_tc_certificate(P, 0), Error);

  // fault injection: dropping a term must break verification
  Certificate broken = c1;
  broken.terms[0].first = broken.terms[0].first - CElem::from_a(P, tp(P, 3), 1);
  CHECK(!broken.verify());
}

TEST_CASE("M^2 = tM certificates") {
  auto P = ones();
  auto [m2_in_tm, tm_in_m2] = m2_equals_tm(P);
  CHECK(m2_in_tm.size() == 3);
  CHECK(tm_in_m2.size() == 2);
  for (const auto& c : m2_in_tm) CHECK(c.verify());
  for (const auto& c : tm_in_m2) CHECK(c.verify());
  // the interesting entry: w_0^2 expressed through t^2
  CHECK(m2_in_tm[2].target == CElem::w(P, 0) * CElem::w(P, 0));
  CHECK(m2_in_tm[2].terms[0].first == CElem::y(P, 0));
}

TEST_CASE("integral equations") {
  auto P = ones();
  for (long i = 0; i <= P->r_max + 1; ++i) {
    auto q = integral_equation(P, i);
    CHECK(q.residual().is_zero());
  }
  auto q0 = integral_equation(P, 0);
  CHECK(q0.c1 == CElem::from_a(P, AElem::from_long(P->ring, -2)));
  CHECK(q0.c0 == CElem::from_a(P, AElem::one(P->ring)) - CElem::y(P, 0));
  // fault injection on the constant term
  auto qbad = integral_equation(P, 2);
  qbad.c0 = qbad.c0 + CElem::from_a(P, tp(P, 1));
  CHECK(!qbad.residual().is_zero());
}

TEST_CASE("frac witness expresses z_0") {
  auto P = ones();
  auto [num, den] = frac_witness(P);
  CHECK(!den.is_zero());
  CHECK(num.to_series(64) == den.to_series(64) * z_series(*P, 0, 64));

  auto P3 = std::make_shared<ConstructionParams>(
      make_ones_instance(BaseRing::poly_rationals(), 4));
  {
    ConstructionParams tweaked = *P3;
    tweaked.a[0] = AElem::from_long(tweaked.ring, 3);
    auto Pt = std::make_shared<ConstructionParams>(tweaked);
    auto [n2, d2] = frac_witness(Pt);
    CHECK(n2.c_at(0) == AElem::from_long(Pt->ring, 3).mul_t_pow(1));
    CHECK(n2.to_series(64) == d2.to_series(64) * z_series(*Pt, 0, 64));
  }
}

TEST_CASE("exercise 2 evidence") {
  auto P = ones();
  auto ev = ex2_nonmembership(P, 1, 4);
  REQUIRE(ev.size() == 4);
  long want_vals[4][2] = {{2, 3}, {6, 7}, {14, 15}, {30, 31}};
  for (size_t i = 0; i < 4; ++i) {
    CHECK(ev[i].level == static_cast<long>(i) + 1);
    CHECK(ev[i].coeff_val == want_vals[i][0]);
    CHECK(ev[i].required_val == want_vals[i][1]);
  }

  auto ev0 = ex2_nonmembership(P, 0, 3);
  CHECK(ev0[0].coeff_val == 0);
  CHECK(ev0[0].required_val == 1);

  // contrast: one more power of t makes it the generator w_1
  BElem w1b = (BElem::z(P, 1) - BElem::from_a(P, AElem::one(P->ring)))
                  .mul_t_pow(P->n[1] + 1);
  CHECK(c_membership(w1b, 1).ok());
}

TEST_CASE("akizuki witness") {
  auto P = ones();
  auto aw1 = akizuki_witness(P, 1, 5);
  for (auto [lvl, val] : aw1.w_unit_coeff) CHECK(val == 0);
  CHECK(aw1.w_unit_coeff.size() == 5);  // levels 1..5
  CHECK(aw1.e_star == P->n[1] + 1);     // cross term blocks anything higher
  CHECK(aw1.quotient.to_b().mul_t_pow(aw1.e_star) ==
        BElem::z(P, 1).mul_t_pow(P->n[1] + 1) * BElem::z(P, 1).mul_t_pow(P->n[1] + 1));

  auto aw0 = akizuki_witness(P, 0, 4);
  CHECK(aw0.w_unit_coeff.size() == 5);  // levels 0..4
  for (auto [lvl, val] : aw0.w_unit_coeff) CHECK(val == 0);

  // characteristic 2: the cross term vanishes and the full exponent is reached
  auto P2 = std::make_shared<ConstructionParams>(
      make_ones_instance(BaseRing::poly_prime_field(2), 4));
  auto aw2 = akizuki_witness(P2, 1, 5);
  CHECK(aw2.e_star == 2 * P2->n[1] + 2);
}

TEST_CASE("noetherian generation: f mod t^N lies in A + A t^{n_r+1} z_r") {
  auto P = ones();
  Rng rng(38);
  for (int i = 0; i < 40; ++i) {
    CElem f = rand_celem(P, rng, 2, 3);
    long r = rng.next_long(0, 3);
    long N = rng.next_long(2, 48);
    auto nf = decompose_eq6(f, r, N);
    // w_r = t^{n_r+1} z_r - a_r t^{n_r+1}, so f = X' + Y (t^{n_r+1} z_r) + t^N Z
    AElem Xp = nf.X - nf.Y * P->a[static_cast<size_t>(nf.r)].mul_t_pow(P->n[static_cast<size_t>(nf.r)] + 1);
    BElem recomposed = BElem::from_a(P, Xp) +
                       BElem::z(P, nf.r).mul_t_pow(P->n[static_cast<size_t>(nf.r)] + 1).scaled(nf.Y) +
                       nf.Z.to_b().mul_t_pow(nf.N);
    CHECK(recomposed == f.to_b());
  }
}

}  // TEST_SUITE
