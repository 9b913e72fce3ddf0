#include "akizuki/base_ring.hpp"

#include <algorithm>
#include <sstream>

namespace akizuki {

std::shared_ptr<const BaseRing> BaseRing::poly_rationals() {
  return std::shared_ptr<const BaseRing>(
      new BaseRing(RingMode::Poly, FieldKind::Rationals, 0));
}

std::shared_ptr<const BaseRing> BaseRing::poly_prime_field(const mpz_class& q) {
  if (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
    fail(Err::ConfigError, "residue field modulus " + q.get_str() + " is not prime");
  return std::shared_ptr<const BaseRing>(
      new BaseRing(RingMode::Poly, FieldKind::Prime, q));
}

std::shared_ptr<const BaseRing> BaseRing::padic_ring(const mpz_class& p) {
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    fail(Err::ConfigError, "padic prime " + p.get_str() + " is not prime");
  return std::shared_ptr<const BaseRing>(
      new BaseRing(RingMode::Padic, FieldKind::Prime, p));
}

std::string BaseRing::describe() const {
  if (mode_ == RingMode::Padic) return "Z_(" + mod_.get_str() + ")";
  if (field_ == FieldKind::Rationals) return "Q[t]_(t)";
  return "F" + mod_.get_str() + "[t]_(t)";
}

namespace detail {

static mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

static mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(Err::NotAUnit, "no inverse of " + a.get_str() + " mod " + m.get_str());
  return r;
}

mpq_class k_normalize(const BaseRing& R, const mpq_class& v) {
  if (R.residue_modulus() == 0) return v;
  const mpz_class& q = R.residue_modulus();
  mpz_class num = mod_pos(v.get_num(), q);
  mpz_class den = mod_pos(v.get_den(), q);
  if (den == 0) fail(Err::NotInBaseRing, "denominator vanishes mod " + q.get_str());
  if (den != 1) num = mod_pos(num * mod_inverse(den, q), q);
  return mpq_class(num);
}

mpq_class k_add(const BaseRing& R, const mpq_class& a, const mpq_class& b) {
  return k_normalize(R, a + b);
}

mpq_class k_mul(const BaseRing& R, const mpq_class& a, const mpq_class& b) {
  return k_normalize(R, a * b);
}

mpq_class k_neg(const BaseRing& R, const mpq_class& a) {
  return k_normalize(R, -a);
}

mpq_class k_inv(const BaseRing& R, const mpq_class& a) {
  if (a == 0) fail(Err::NotAUnit, "inverse of zero residue");
  if (R.residue_modulus() == 0) return 1 / a;
  return mpq_class(mod_inverse(a.get_num(), R.residue_modulus()));
}

long kp_degree(const KPoly& a) { return a.empty() ? -1 : a.back().first; }

KPoly kp_from_const(const BaseRing& R, const mpq_class& c) {
  mpq_class v = k_normalize(R, c);
  if (v == 0) return {};
  return {{0, v}};
}

KPoly kp_add(const BaseRing& R, const KPoly& a, const KPoly& b) {
  KPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      mpq_class s = k_add(R, a[i].second, b[j].second);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i, ++j;
    }
  }
  return out;
}

KPoly kp_neg(const BaseRing& R, const KPoly& a) {
  KPoly out = a;
  for (auto& [e, c] : out) c = k_neg(R, c);
  return out;
}

KPoly kp_sub(const BaseRing& R, const KPoly& a, const KPoly& b) {
  return kp_add(R, a, kp_neg(R, b));
}

KPoly kp_mul(const BaseRing& R, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  // accumulate into a sorted map replacement: collect then combine
  std::vector<std::pair<long, mpq_class>> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) terms.emplace_back(ea + eb, ca * cb);
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  KPoly out;
  for (auto& [e, c] : terms) {
    if (!out.empty() && out.back().first == e) {
      out.back().second += c;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(e, c);
    }
  }
  for (auto& [e, c] : out) c = k_normalize(R, c);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  return out;
}

KPoly kp_shift(const KPoly& a, long k) {
  KPoly out = a;
  for (auto& [e, c] : out) {
    e += k;
    if (e < 0) fail(Err::NotDivisible, "negative exponent after shift");
  }
  return out;
}

// remainder of a by b, with b made monic internally
static KPoly kp_rem(const BaseRing& R, KPoly a, const KPoly& b) {
  long db = kp_degree(b);
  mpq_class lead_inv = k_inv(R, b.back().second);
  while (kp_degree(a) >= db) {
    long sh = kp_degree(a) - db;
    mpq_class f = k_mul(R, a.back().second, lead_inv);
    KPoly sub = kp_shift(b, sh);
    for (auto& [e, c] : sub) c = k_mul(R, c, f);
    a = kp_sub(R, a, sub);
  }
  return a;
}

KPoly kp_gcd(const BaseRing& R, KPoly a, KPoly b) {
  while (!b.empty()) {
    KPoly r = kp_rem(R, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class inv = k_inv(R, a.back().second);
    for (auto& [e, c] : a) c = k_mul(R, c, inv);
  }
  return a;
}

KPoly kp_divexact(const BaseRing& R, const KPoly& a, const KPoly& b) {
  if (b.empty()) fail(Err::ZeroInput, "division by zero polynomial");
  KPoly rem = a, quot;
  long db = kp_degree(b);
  mpq_class lead_inv = k_inv(R, b.back().second);
  while (kp_degree(rem) >= db) {
    long sh = kp_degree(rem) - db;
    mpq_class f = k_mul(R, rem.back().second, lead_inv);
    quot.emplace_back(sh, f);
    KPoly sub = kp_shift(b, sh);
    for (auto& [e, c] : sub) c = k_mul(R, c, f);
    rem = kp_sub(R, rem, sub);
  }
  if (!rem.empty()) fail(Err::NotDivisible, "inexact polynomial division");
  std::sort(quot.begin(), quot.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return quot;
}

std::string kp_to_string(const KPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : a) {
    mpq_class v = c;
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      os << v;
    } else {
      if (v != 1) os << v << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(RingPtr ring, const mpq_class& v) : ring_(std::move(ring)) {
  v_ = detail::k_normalize(*ring_, v);
}

Residue Residue::operator+(const Residue& o) const {
  return Residue(ring_, v_ + o.v_);
}
Residue Residue::operator-(const Residue& o) const {
  return Residue(ring_, v_ - o.v_);
}
Residue Residue::operator*(const Residue& o) const {
  return Residue(ring_, v_ * o.v_);
}
Residue Residue::operator-() const { return Residue(ring_, -v_); }

Residue Residue::inverse() const {
  return Residue(ring_, detail::k_inv(*ring_, v_));
}

std::string Residue::to_string() const { return v_.get_str(); }

// ---------------------------------------------------------------------------
// AElem

void AElem::check_valid() const {
  if (!ring_) fail(Err::Internal, "operation on default-constructed AElem");
}

void check_same_ring(const AElem& a, const AElem& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
    fail(Err::Internal, "mixed base rings in AElem operation");
}

AElem AElem::zero(RingPtr ring) {
  AElem a(std::move(ring));
  if (a.ring_->mode() == RingMode::Poly) a.den_ = {{0, 1}};
  return a;
}

AElem AElem::one(RingPtr ring) { return from_long(std::move(ring), 1); }

AElem AElem::from_long(RingPtr ring, long v) {
  return from_mpq(std::move(ring), mpq_class(v));
}

AElem AElem::from_mpq(RingPtr ring, const mpq_class& v) {
  AElem a(std::move(ring));
  if (a.ring_->mode() == RingMode::Poly) {
    a.num_ = detail::kp_from_const(*a.ring_, v);
    a.den_ = {{0, 1}};
  } else {
    mpq_class c = v;
    c.canonicalize();
    if (c != 0 && mpz_divisible_p(c.get_den().get_mpz_t(),
                                  a.ring_->residue_modulus().get_mpz_t()))
      fail(Err::NotInBaseRing, "denominator of " + c.get_str() + " divisible by p");
    a.rat_ = c;
  }
  return a;
}

AElem AElem::t_pow(RingPtr ring, long k) {
  if (k < 0) fail(Err::NotInBaseRing, "negative power of t");
  AElem a(std::move(ring));
  if (a.ring_->mode() == RingMode::Poly) {
    a.num_ = {{k, mpq_class(1)}};
    a.den_ = {{0, 1}};
  } else {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), a.ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(k));
    a.rat_ = mpq_class(pk);
  }
  return a;
}

AElem AElem::from_poly(RingPtr ring, const detail::KPoly& p) {
  AElem a(std::move(ring));
  if (a.ring_->mode() != RingMode::Poly)
    fail(Err::Internal, "from_poly requires poly mode");
  a.num_ = p;
  for (auto& [e, c] : a.num_) {
    if (e < 0) fail(Err::NotInBaseRing, "negative exponent");
    c = detail::k_normalize(*a.ring_, c);
  }
  a.num_.erase(std::remove_if(a.num_.begin(), a.num_.end(),
                              [](const auto& t) { return t.second == 0; }),
               a.num_.end());
  a.den_ = {{0, 1}};
  return a;
}

void AElem::canonicalize() {
  const BaseRing& R = *ring_;
  if (R.mode() == RingMode::Padic) return;  // mpq_class is always canonical
  if (num_.empty()) {
    den_ = {{0, 1}};
    return;
  }
  if (detail::kp_degree(den_) > 0) {
    detail::KPoly g = detail::kp_gcd(R, num_, den_);
    if (detail::kp_degree(g) > 0) {
      num_ = detail::kp_divexact(R, num_, g);
      den_ = detail::kp_divexact(R, den_, g);
    }
  }
  // constant term of den must be a unit of k; normalize it to 1
  if (den_.empty() || den_.front().first != 0)
    fail(Err::Internal, "denominator not invertible at t = 0");
  if (den_.front().second != 1) {
    mpq_class inv = detail::k_inv(R, den_.front().second);
    for (auto& [e, c] : num_) c = detail::k_mul(R, c, inv);
    for (auto& [e, c] : den_) c = detail::k_mul(R, c, inv);
  }
}

bool AElem::is_zero() const {
  check_valid();
  return ring_->mode() == RingMode::Poly ? num_.empty() : rat_ == 0;
}

bool AElem::is_one() const {
  check_valid();
  if (ring_->mode() == RingMode::Padic) return rat_ == 1;
  return den_.size() == 1 && den_[0].first == 0 && den_[0].second == 1 &&
         num_.size() == 1 && num_[0].first == 0 && num_[0].second == 1;
}

AElem AElem::operator+(const AElem& o) const {
  check_same_ring(*this, o);
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = detail::kp_add(*ring_, detail::kp_mul(*ring_, num_, o.den_),
                            detail::kp_mul(*ring_, o.num_, den_));
    r.den_ = detail::kp_mul(*ring_, den_, o.den_);
    r.canonicalize();
  } else {
    r.rat_ = rat_ + o.rat_;
  }
  return r;
}

AElem AElem::operator-(const AElem& o) const { return *this + (-o); }

AElem AElem::operator-() const {
  check_valid();
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = detail::kp_neg(*ring_, num_);
    r.den_ = den_;
  } else {
    r.rat_ = -rat_;
  }
  return r;
}

AElem AElem::operator*(const AElem& o) const {
  check_same_ring(*this, o);
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = detail::kp_mul(*ring_, num_, o.num_);
    r.den_ = detail::kp_mul(*ring_, den_, o.den_);
    r.canonicalize();
  } else {
    r.rat_ = rat_ * o.rat_;
  }
  return r;
}

bool AElem::operator==(const AElem& o) const {
  check_same_ring(*this, o);
  if (ring_->mode() == RingMode::Padic) return rat_ == o.rat_;
  return num_ == o.num_ && den_ == o.den_;
}

std::optional<long> AElem::valuation() const {
  check_valid();
  if (is_zero()) return std::nullopt;
  if (ring_->mode() == RingMode::Poly) return num_.front().first;
  // p-adic valuation of the numerator; the denominator is coprime to p
  mpz_class n = rat_.get_num();
  const mpz_class& p = ring_->residue_modulus();
  long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  return v;
}

std::pair<long, AElem> AElem::unit_part_split() const {
  check_valid();
  auto v = valuation();
  if (!v) fail(Err::ZeroInput, "unit_part_split of zero");
  return {*v, div_t_pow(*v)};
}

AElem AElem::invert_unit() const {
  check_valid();
  if (valuation() != std::optional<long>(0))
    fail(Err::NotAUnit, "invert_unit: " + to_string() + " has nonzero valuation");
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize();
  } else {
    r.rat_ = 1 / rat_;
  }
  return r;
}

Residue AElem::residue() const {
  check_valid();
  if (ring_->mode() == RingMode::Poly) {
    // den(0) = 1, so the image mod t is simply num(0)
    if (num_.empty() || num_.front().first != 0) return Residue::zero(ring_);
    return Residue(ring_, num_.front().second);
  }
  const mpz_class& p = ring_->residue_modulus();
  mpz_class num = detail::mod_pos(rat_.get_num(), p);
  mpz_class den = detail::mod_pos(rat_.get_den(), p);
  return Residue(ring_, mpq_class(num) / mpq_class(den));
}

AElem AElem::mul_t_pow(long k) const {
  check_valid();
  if (k < 0) fail(Err::Internal, "mul_t_pow with negative exponent");
  if (k == 0 || is_zero()) return *this;
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = detail::kp_shift(num_, k);
    r.den_ = den_;
  } else {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(k));
    r.rat_ = rat_ * mpq_class(pk);
  }
  return r;
}

AElem AElem::div_t_pow(long k) const {
  check_valid();
  if (k < 0) fail(Err::Internal, "div_t_pow with negative exponent");
  if (k == 0 || is_zero()) return *this;
  auto v = valuation();
  if (!v || *v < k)
    fail(Err::NotDivisible, to_string() + " not divisible by t^" + std::to_string(k));
  AElem r(ring_);
  if (ring_->mode() == RingMode::Poly) {
    r.num_ = detail::kp_shift(num_, -k);
    r.den_ = den_;
  } else {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), ring_->residue_modulus().get_mpz_t(),
               static_cast<unsigned long>(k));
    r.rat_ = rat_ / mpq_class(pk);
  }
  return r;
}

AElem AElem::divide_exact(const AElem& b) const {
  check_same_ring(*this, b);
  if (b.is_zero()) fail(Err::ZeroInput, "division by zero");
  if (is_zero()) return *this;
  auto [vb, ub] = b.unit_part_split();
  return div_t_pow(vb) * ub.invert_unit();
}

std::string AElem::to_string() const {
  check_valid();
  if (ring_->mode() == RingMode::Padic) return rat_.get_str();
  std::string s = detail::kp_to_string(num_);
  if (detail::kp_degree(den_) > 0)
    s = "(" + s + ")/(" + detail::kp_to_string(den_) + ")";
  return s;
}

}  // namespace akizuki
