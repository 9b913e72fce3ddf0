#pragma once

#include <map>

#include "akizuki/ring_b.hpp"

namespace akizuki {

// Element of C = A[t(z_0-a_0), {(z_i-a_i)^2}] in two-track normal form at a
// level s:
//   sum_b c_b y_s^b  +  sum_b d_b w_s y_s^b
// with y_s = (z_s-a_s)^2 and w_s = t^{n_s+1}(z_s-a_s). The words {y^b, w y^b}
// have pairwise distinct z-degrees, so the form is unique per level.
class CElem {
 public:
  using Track = std::map<long, AElem>;  // exponent b -> coefficient, no zeros

  CElem() = default;  // invalid placeholder; use only as a slot to assign into

  static CElem zero(ParamsPtr P, long level = 0);
  static CElem from_a(ParamsPtr P, const AElem& a, long level = 0);
  static CElem y(ParamsPtr P, long level);
  static CElem w(ParamsPtr P, long level);
  static CElem from_tracks(ParamsPtr P, long level, Track c, Track d);

  const ParamsPtr& params() const { return P_; }
  long level() const { return level_; }
  const Track& c() const { return c_; }
  const Track& d() const { return d_; }
  AElem c_at(long b) const;
  AElem d_at(long b) const;
  bool is_zero() const { return c_.empty() && d_.empty(); }

  CElem operator+(const CElem& o) const;
  CElem operator-(const CElem& o) const;
  CElem operator*(const CElem& o) const;
  CElem operator-() const;
  bool operator==(const CElem& o) const;
  bool operator!=(const CElem& o) const { return !(*this == o); }

  CElem scaled(const AElem& a) const;
  CElem mul_t_pow(long k) const;
  CElem div_t_pow(long k) const;  // coefficient-wise, throws NotDivisible
  bool divisible_by_t() const;

  // one application of the rewrite rules
  //   R1: w_s = w_{s+1} + a_{s+1} t^{n_{s+1}+1}
  //   R2: y_s = t^{2m} y_{s+1} + 2 a_{s+1} t^{2m-n_{s+1}-1} w_{s+1}
  //           + a_{s+1}^2 t^{2m}            (m = m_{s+1})
  CElem coerce_c_up() const;
  CElem coerce_to(long target_level) const;

  BElem to_b() const;
  TruncSeries to_series(long N) const { return to_b().to_series(N); }

  // evaluation reads the constant-word coefficient: y and w both map to 0
  Residue eval_k() const;
  bool in_M() const { return eval_k().is_zero(); }

  std::string to_string() const;

 private:
  CElem(ParamsPtr P, long level) : P_(std::move(P)), level_(level) {}
  void add_c(long b, const AElem& v);
  void add_d(long b, const AElem& v);

  ParamsPtr P_;
  long level_ = 0;
  Track c_, d_;

  friend CElem c_mul_same_level(const CElem& a, const CElem& b);
};

// --- membership -------------------------------------------------------------

struct MembershipFailure {
  long level;
  long z_degree;      // odd degree whose coefficient failed divisibility
  long coeff_val;     // valuation of that coefficient
  long required_val;  // n_level + 1
};

struct MembershipResult {
  std::optional<CElem> elem;  // normal form on success; its level() says where
  std::vector<MembershipFailure> failures;  // one per level tried, on failure
  bool ok() const { return elem.has_value(); }
};

// tries levels g.level()..max_level in order; deterministic, and failures are
// certified per level by a concrete failed divisibility
MembershipResult c_membership(const BElem& g, long max_level);

// --- Eq (6) normal form and the Claim ---------------------------------------

struct NormalFormEq6 {
  AElem X;
  AElem Y;
  CElem Z;
  long r = 0;
  long N = 0;
};

// f = X + Y w_r + t^N Z exactly; found by coercing until every coefficient on
// words other than {1, w} has valuation >= N, then transporting w back to
// level r via R1
NormalFormEq6 decompose_eq6(const CElem& f, long r, long N);
bool verify_eq6(const CElem& f, const NormalFormEq6& nf);

struct ClaimInverse {
  CElem g;
  long n = 0;
  CElem w;
};

// for nonzero f in M with valuation n < cap: produces g with f g = t^{2n} w
// and eval_k(w) != 0, so the principal ideal f C_M contains t^{2n}
ClaimInverse claim_inverse(const CElem& f, long cap);
bool verify_claim(const CElem& f, const ClaimInverse& ci);

// --- certificates -----------------------------------------------------------

struct Certificate {
  CElem target;
  std::vector<std::pair<CElem, CElem>> terms;  // (multiplier, generator)
  bool verify() const;  // sum multiplier*generator == target, recomputed in B
};

// y_{i-1} = t * (t^{2m_i-1} y_i + 2 a_i t^{2m_i-n_i-2} w_i + a_i^2 t^{2m_i-1})
Certificate y_in_tc_certificate(const ParamsPtr& P, long i);

// each generator of M^2 = (t^2, t w_0, w_0^2) in terms of tM = (t^2, t w_0),
// and conversely
std::pair<std::vector<Certificate>, std::vector<Certificate>> m2_equals_tm(
    const ParamsPtr& P);

// z_i^2 + c1 z_i + c0 = 0 with c1 = -2 a_i, c0 = a_i^2 - y_i
struct MonicQuadratic {
  long i = 0;
  CElem c1;
  CElem c0;
  BElem residual() const;  // zero iff the equation holds
};
MonicQuadratic integral_equation(const ParamsPtr& P, long i);

// z_0 = num/den in Frac C: num = w_0 + a_0 t, den = t
std::pair<CElem, CElem> frac_witness(const ParamsPtr& P);

// --- Exercise 2 and the x_r witness -----------------------------------------

struct Ex2Evidence {
  long level;
  long coeff_val;     // valuation of the degree-1 coefficient, = n_level
  long required_val;  // n_level + 1
};

// t^{n_r}(z_r - a_r): the degree-1 coefficient misses divisibility by exactly
// one power of t at every level r..max_level
std::vector<Ex2Evidence> ex2_nonmembership(const ParamsPtr& P, long r,
                                           long max_level);

struct AkizukiWitness {
  // (level, valuation of the bare-w coefficient of w_r there): all zeros,
  // so w_r is not in t times any level subring up to max_level
  std::vector<std::pair<long, long>> w_unit_coeff;
  // largest e <= 2 n_r + 2 with (t^{n_r+1} z_r)^2 in t^e C, by downward search
  long e_star = 0;
  CElem quotient;  // (t^{n_r+1} z_r)^2 / t^{e_star} in normal form
};
AkizukiWitness akizuki_witness(const ParamsPtr& P, long r, long max_level);

}  // namespace akizuki
