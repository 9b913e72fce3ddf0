#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "akizuki/errors.hpp"

namespace akizuki {

enum class RingMode { Poly, Padic };
enum class FieldKind { Rationals, Prime };

// Shared context for the discrete valuation ring A.
//   Poly mode:  A = k[t] localized at (t), k = Q or F_q.
//   Padic mode: A = Z localized at (p), with t standing for p.
class BaseRing {
 public:
  static std::shared_ptr<const BaseRing> poly_rationals();
  static std::shared_ptr<const BaseRing> poly_prime_field(const mpz_class& q);
  static std::shared_ptr<const BaseRing> padic_ring(const mpz_class& p);

  RingMode mode() const { return mode_; }
  FieldKind field() const { return field_; }

  // q for F_q or p for Z_(p); 0 means the residue field is Q
  const mpz_class& residue_modulus() const { return mod_; }

  bool same(const BaseRing& o) const {
    return mode_ == o.mode_ && field_ == o.field_ && mod_ == o.mod_;
  }
  std::string describe() const;

 private:
  BaseRing(RingMode m, FieldKind f, mpz_class mod)
      : mode_(m), field_(f), mod_(std::move(mod)) {}

  RingMode mode_;
  FieldKind field_;
  mpz_class mod_;
};

using RingPtr = std::shared_ptr<const BaseRing>;

namespace detail {

// Sparse polynomial over the residue field, strictly increasing exponents,
// no zero coefficients. Coefficients of prime fields are kept in [0, q).
using KPoly = std::vector<std::pair<long, mpq_class>>;

mpq_class k_normalize(const BaseRing& R, const mpq_class& v);
mpq_class k_add(const BaseRing& R, const mpq_class& a, const mpq_class& b);
mpq_class k_mul(const BaseRing& R, const mpq_class& a, const mpq_class& b);
mpq_class k_neg(const BaseRing& R, const mpq_class& a);
mpq_class k_inv(const BaseRing& R, const mpq_class& a);

long kp_degree(const KPoly& a);  // -1 for the zero polynomial
KPoly kp_from_const(const BaseRing& R, const mpq_class& c);
KPoly kp_add(const BaseRing& R, const KPoly& a, const KPoly& b);
KPoly kp_sub(const BaseRing& R, const KPoly& a, const KPoly& b);
KPoly kp_mul(const BaseRing& R, const KPoly& a, const KPoly& b);
KPoly kp_neg(const BaseRing& R, const KPoly& a);
KPoly kp_shift(const KPoly& a, long k);
KPoly kp_gcd(const BaseRing& R, KPoly a, KPoly b);  // monic
KPoly kp_divexact(const BaseRing& R, const KPoly& a, const KPoly& b);
std::string kp_to_string(const KPoly& a);

}  // namespace detail

// Element of the residue field k.
class Residue {
 public:
  Residue(RingPtr ring, const mpq_class& v);
  static Residue zero(RingPtr ring) { return Residue(std::move(ring), 0); }

  const mpq_class& value() const { return v_; }
  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return v_ == 0; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue inverse() const;
  bool operator==(const Residue& o) const { return v_ == o.v_; }
  bool operator!=(const Residue& o) const { return v_ != o.v_; }

  std::string to_string() const;

 private:
  RingPtr ring_;
  mpq_class v_;
};

// Element of A, stored in canonical form.
//   Poly mode: fraction num/den of KPolys with gcd 1 and den(0) = 1
//              (zero is 0/1), so valuation is the lowest exponent of num.
//   Padic mode: canonical mpq_class whose denominator is coprime to p.
class AElem {
 public:
  AElem() = default;  // invalid placeholder; any operation on it throws

  static AElem zero(RingPtr ring);
  static AElem one(RingPtr ring);
  static AElem from_long(RingPtr ring, long v);
  static AElem from_mpq(RingPtr ring, const mpq_class& v);
  static AElem t_pow(RingPtr ring, long k);
  static AElem from_poly(RingPtr ring, const detail::KPoly& p);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  AElem operator+(const AElem& o) const;
  AElem operator-(const AElem& o) const;
  AElem operator*(const AElem& o) const;
  AElem operator-() const;
  bool operator==(const AElem& o) const;
  bool operator!=(const AElem& o) const { return !(*this == o); }

  // t-adic (resp. p-adic) valuation; nullopt for zero
  std::optional<long> valuation() const;

  // (v, u) with *this = t^v * u and u a unit; throws ZeroInput on zero
  std::pair<long, AElem> unit_part_split() const;

  // exact inverse; throws NotAUnit unless valuation is 0
  AElem invert_unit() const;

  // image in the residue field k = A/(t)
  Residue residue() const;

  AElem mul_t_pow(long k) const;
  AElem div_t_pow(long k) const;  // throws NotDivisible if valuation < k
  AElem divide_exact(const AElem& b) const;  // throws NotDivisible if b ∤ this

  // poly-mode representation (den is 0/1 constant poly {{0,1}})
  const detail::KPoly& num() const { return num_; }
  const detail::KPoly& den() const { return den_; }
  // padic-mode representation
  const mpq_class& rat() const { return rat_; }

  std::string to_string() const;

 private:
  explicit AElem(RingPtr ring) : ring_(std::move(ring)) {}
  void check_valid() const;
  void canonicalize();

  RingPtr ring_;
  detail::KPoly num_;
  detail::KPoly den_{{0, 1}};
  mpq_class rat_;
};

void check_same_ring(const AElem& a, const AElem& b);

}  // namespace akizuki
