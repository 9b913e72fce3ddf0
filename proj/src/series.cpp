#include "akizuki/series.hpp"

#include <sstream>

namespace akizuki {

TruncSeries::TruncSeries(RingPtr ring, long N) : ring_(std::move(ring)), N_(N) {
  if (N_ < 1) fail(Err::ConfigError, "series precision must be >= 1");
  if (ring_->mode() == RingMode::Poly) {
    coeff_.assign(static_cast<size_t>(N_), mpq_class(0));
  } else {
    mpz_pow_ui(modulus_.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(N_));
    value_ = 0;
  }
}

TruncSeries TruncSeries::zero(RingPtr ring, long N) {
  return TruncSeries(std::move(ring), N);
}

TruncSeries TruncSeries::one(RingPtr ring, long N) {
  TruncSeries s(std::move(ring), N);
  if (s.ring_->mode() == RingMode::Poly)
    s.coeff_[0] = 1;
  else
    s.value_ = 1;
  return s;
}

TruncSeries TruncSeries::from_aelem(const AElem& a, long N) {
  TruncSeries s(a.ring(), N);
  const BaseRing& R = *a.ring();
  if (R.mode() == RingMode::Padic) {
    mpz_class den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), a.rat().get_den().get_mpz_t(),
                   s.modulus_.get_mpz_t()) == 0)
      fail(Err::Internal, "denominator not invertible mod p^N");
    mpz_class v = a.rat().get_num() * den_inv;
    mpz_mod(s.value_.get_mpz_t(), v.get_mpz_t(), s.modulus_.get_mpz_t());
    return s;
  }
  // dense numerator and denominator mod t^N
  std::vector<mpq_class> num(static_cast<size_t>(N), 0), den(static_cast<size_t>(N), 0);
  for (const auto& [e, c] : a.num())
    if (e < N) num[static_cast<size_t>(e)] = c;
  for (const auto& [e, c] : a.den())
    if (e < N) den[static_cast<size_t>(e)] = c;
  // canonical AElem has den(0) = 1, so the series inverse recurrence applies
  std::vector<mpq_class> inv(static_cast<size_t>(N), 0);
  inv[0] = 1;
  mpq_class acc, tmp;
  for (long i = 1; i < N; ++i) {
    mpq_set_ui(acc.get_mpq_t(), 0, 1);
    for (long j = 1; j <= i; ++j) {
      const mpq_class& d = den[static_cast<size_t>(j)];
      if (sgn(d) == 0) continue;
      const mpq_class& v = inv[static_cast<size_t>(i - j)];
      if (sgn(v) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), d.get_mpq_t(), v.get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    inv[static_cast<size_t>(i)] = detail::k_normalize(R, -acc);
  }
  for (long i = 0; i < N; ++i) {
    mpq_set_ui(acc.get_mpq_t(), 0, 1);
    for (long j = 0; j <= i; ++j) {
      const mpq_class& n = num[static_cast<size_t>(j)];
      if (sgn(n) == 0) continue;
      const mpq_class& v = inv[static_cast<size_t>(i - j)];
      if (sgn(v) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), n.get_mpq_t(), v.get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
    }
    s.coeff_[static_cast<size_t>(i)] = detail::k_normalize(R, acc);
  }
  return s;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (!ring_->same(*o.ring_))
    fail(Err::Internal, "mixed base rings in TruncSeries operation");
}

TruncSeries TruncSeries::truncate(long M) const {
  if (M > N_) fail(Err::Internal, "truncate cannot raise precision");
  TruncSeries s(ring_, M);
  if (ring_->mode() == RingMode::Poly) {
    for (long i = 0; i < M; ++i) s.coeff_[static_cast<size_t>(i)] = coeff_[static_cast<size_t>(i)];
  } else {
    mpz_mod(s.value_.get_mpz_t(), value_.get_mpz_t(), s.modulus_.get_mpz_t());
  }
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_compatible(o);
  long M = std::min(N_, o.N_);
  TruncSeries a = truncate(M), b = o.truncate(M);
  if (ring_->mode() == RingMode::Poly) {
    for (long i = 0; i < M; ++i)
      a.coeff_[static_cast<size_t>(i)] = detail::k_add(*ring_, a.coeff_[static_cast<size_t>(i)],
                                                       b.coeff_[static_cast<size_t>(i)]);
  } else {
    mpz_class v = a.value_ + b.value_;
    mpz_mod(a.value_.get_mpz_t(), v.get_mpz_t(), a.modulus_.get_mpz_t());
  }
  return a;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries s = *this;
  if (ring_->mode() == RingMode::Poly) {
    for (auto& c : s.coeff_) c = detail::k_neg(*ring_, c);
  } else {
    mpz_class v = -s.value_;
    mpz_mod(s.value_.get_mpz_t(), v.get_mpz_t(), s.modulus_.get_mpz_t());
  }
  return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  return *this + (-o);
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(o);
  long M = std::min(N_, o.N_);
  TruncSeries a = truncate(M), b = o.truncate(M);
  TruncSeries s(ring_, M);
  if (ring_->mode() == RingMode::Poly) {
    // series here are typically very sparse (z itself has one term per n_r),
    // so skip zero factors and reuse the temporaries across products
    mpq_class acc, tmp;
    for (long i = 0; i < M; ++i) {
      mpq_set_ui(acc.get_mpq_t(), 0, 1);
      for (long j = 0; j <= i; ++j) {
        const mpq_class& x = a.coeff_[static_cast<size_t>(j)];
        if (sgn(x) == 0) continue;
        const mpq_class& y = b.coeff_[static_cast<size_t>(i - j)];
        if (sgn(y) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
      }
      s.coeff_[static_cast<size_t>(i)] = detail::k_normalize(*ring_, acc);
    }
  } else {
    mpz_class v = a.value_ * b.value_;
    mpz_mod(s.value_.get_mpz_t(), v.get_mpz_t(), s.modulus_.get_mpz_t());
  }
  return s;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  check_compatible(o);
  if (N_ != o.N_) return false;
  return ring_->mode() == RingMode::Poly ? coeff_ == o.coeff_ : value_ == o.value_;
}

TruncSeries TruncSeries::mul_t_pow(long k) const {
  if (k < 0) fail(Err::Internal, "mul_t_pow with negative exponent");
  TruncSeries s(ring_, N_);
  if (ring_->mode() == RingMode::Poly) {
    for (long i = 0; i + k < N_; ++i) s.coeff_[static_cast<size_t>(i + k)] = coeff_[static_cast<size_t>(i)];
  } else {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(k));
    mpz_class v = value_ * pk;
    mpz_mod(s.value_.get_mpz_t(), v.get_mpz_t(), s.modulus_.get_mpz_t());
  }
  return s;
}

bool TruncSeries::is_zero() const {
  if (ring_->mode() == RingMode::Padic) return value_ == 0;
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

std::optional<long> TruncSeries::val_lower_bound() const {
  if (ring_->mode() == RingMode::Poly) {
    for (long i = 0; i < N_; ++i)
      if (coeff_[static_cast<size_t>(i)] != 0) return i;
    return std::nullopt;
  }
  if (value_ == 0) return std::nullopt;
  mpz_class v = value_;
  const mpz_class& p = ring_->residue_modulus();
  long k = 0;
  while (mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) {
    v /= p;
    ++k;
  }
  return k;
}

const mpq_class& TruncSeries::coeff(long i) const {
  if (ring_->mode() != RingMode::Poly)
    fail(Err::Internal, "coeff() is poly-mode only; use digit()");
  if (i < 0 || i >= N_) fail(Err::IndexOutOfRange, "coefficient index " + std::to_string(i));
  return coeff_[static_cast<size_t>(i)];
}

mpz_class TruncSeries::digit(long i) const {
  if (ring_->mode() != RingMode::Padic)
    fail(Err::Internal, "digit() is padic-mode only; use coeff()");
  if (i < 0 || i >= N_) fail(Err::IndexOutOfRange, "digit index " + std::to_string(i));
  mpz_class pi, q, r;
  mpz_pow_ui(pi.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
             static_cast<unsigned long>(i));
  q = value_ / pi;
  mpz_mod(r.get_mpz_t(), q.get_mpz_t(), ring_->residue_modulus().get_mpz_t());
  return r;
}

TruncSeries TruncSeries::perturbed(long i) const {
  if (i < 0 || i >= N_) fail(Err::IndexOutOfRange, "perturb index " + std::to_string(i));
  TruncSeries s = *this;
  if (ring_->mode() == RingMode::Poly) {
    s.coeff_[static_cast<size_t>(i)] =
        detail::k_add(*ring_, s.coeff_[static_cast<size_t>(i)], 1);
  } else {
    mpz_class pi;
    mpz_pow_ui(pi.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(i));
    mpz_class v = s.value_ + pi;
    mpz_mod(s.value_.get_mpz_t(), v.get_mpz_t(), s.modulus_.get_mpz_t());
  }
  return s;
}

std::string TruncSeries::to_string() const {
  if (ring_->mode() == RingMode::Padic)
    return value_.get_str() + " mod " + ring_->residue_modulus().get_str() + "^" +
           std::to_string(N_);
  detail::KPoly terms;
  for (long i = 0; i < N_; ++i)
    if (coeff_[static_cast<size_t>(i)] != 0) terms.emplace_back(i, coeff_[static_cast<size_t>(i)]);
  std::ostringstream os;
  os << detail::kp_to_string(terms) << " + O(t^" << N_ << ")";
  return os.str();
}

}  // namespace akizuki
