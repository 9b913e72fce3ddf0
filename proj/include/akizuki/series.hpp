#pragma once

#include <vector>

#include "akizuki/base_ring.hpp"

namespace akizuki {

// Element of the completion modulo t^N. Poly mode keeps a dense coefficient
// vector over k; padic mode keeps a single residue mod p^N with digits
// extracted on demand. Used as an independent oracle for ring arithmetic.
class TruncSeries {
 public:
  static TruncSeries zero(RingPtr ring, long N);
  static TruncSeries one(RingPtr ring, long N);
  static TruncSeries from_aelem(const AElem& a, long N);

  long precision() const { return N_; }
  const RingPtr& ring() const { return ring_; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;
  bool operator==(const TruncSeries& o) const;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  TruncSeries mul_t_pow(long k) const;
  TruncSeries truncate(long M) const;  // M <= N

  bool is_zero() const;

  // index of the lowest nonzero coefficient; nullopt means "everything
  // representable vanished", i.e. the valuation is >= precision()
  std::optional<long> val_lower_bound() const;

  // poly mode: coefficient of t^i as a k-element
  const mpq_class& coeff(long i) const;
  // padic mode: base-p digit i, and the full residue mod p^N
  mpz_class digit(long i) const;
  const mpz_class& residue_value() const { return value_; }

  // adds 1 to coefficient i; only used to model data corruption in tests
  TruncSeries perturbed(long i) const;

  std::string to_string() const;

 private:
  TruncSeries(RingPtr ring, long N);
  void check_compatible(const TruncSeries& o) const;

  RingPtr ring_;
  long N_ = 0;
  std::vector<mpq_class> coeff_;  // poly mode, size N_
  mpz_class value_;               // padic mode, in [0, p^N)
  mpz_class modulus_;             // padic mode, p^N
};

}  // namespace akizuki
