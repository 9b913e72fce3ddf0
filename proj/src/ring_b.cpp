#include "akizuki/ring_b.hpp"

#include <sstream>

namespace akizuki {

void check_same_params(const BElem& f, const BElem& g) {
  if (f.params().get() != g.params().get())
    fail(Err::Internal, "mixed construction instances in BElem operation");
}

void BElem::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BElem BElem::zero(ParamsPtr P) { return BElem(std::move(P), 0); }

BElem BElem::from_a(ParamsPtr P, const AElem& a) {
  BElem f(std::move(P), 0);
  f.coeffs_.push_back(a);
  f.trim();
  return f;
}

BElem BElem::z(ParamsPtr P, long level) {
  P->check_index(level);
  BElem f(P, level);
  f.coeffs_.push_back(AElem::zero(P->ring));
  f.coeffs_.push_back(AElem::one(P->ring));
  return f;
}

BElem BElem::from_coeffs(ParamsPtr P, long level, std::vector<AElem> coeffs) {
  P->check_index(level);
  BElem f(std::move(P), level);
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

BElem BElem::coerce_up(long target_level) const {
  if (target_level < level_)
    fail(Err::LevelOutOfRange, "cannot coerce level " + std::to_string(level_) +
                                   " down to " + std::to_string(target_level));
  P_->check_index(target_level);
  BElem f = *this;
  while (f.level_ < target_level) {
    long s = f.level_;
    const AElem& as = P_->a[static_cast<size_t>(s)];
    long m = P_->m(s + 1);
    // Horner: substitute z_s = a_s + t^m z_{s+1}
    std::vector<AElem> acc;  // polynomial in z_{s+1}
    for (long k = f.degree(); k >= 0; --k) {
      // acc = acc * (a_s + t^m Z) + p_k
      std::vector<AElem> next(acc.size() + 1, AElem::zero(P_->ring));
      for (size_t j = 0; j < acc.size(); ++j) {
        next[j] = next[j] + acc[j] * as;
        next[j + 1] = next[j + 1] + acc[j].mul_t_pow(m);
      }
      if (next.empty()) next.push_back(AElem::zero(P_->ring));
      next[0] = next[0] + f.coeffs_[static_cast<size_t>(k)];
      acc = std::move(next);
    }
    f.coeffs_ = std::move(acc);
    f.level_ = s + 1;
    f.trim();
  }
  return f;
}

BElem BElem::operator+(const BElem& o) const {
  check_same_params(*this, o);
  long lvl = std::max(level_, o.level_);
  BElem a = coerce_up(lvl), b = o.coerce_up(lvl);
  if (a.coeffs_.size() < b.coeffs_.size()) std::swap(a, b);
  for (size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  a.trim();
  return a;
}

BElem BElem::operator-() const {
  BElem f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

BElem BElem::operator-(const BElem& o) const { return *this + (-o); }

BElem BElem::operator*(const BElem& o) const {
  check_same_params(*this, o);
  long lvl = std::max(level_, o.level_);
  BElem a = coerce_up(lvl), b = o.coerce_up(lvl);
  BElem r(P_, lvl);
  if (a.is_zero() || b.is_zero()) {
    r.level_ = lvl;
    return r;
  }
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, AElem::zero(P_->ring));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

bool BElem::operator==(const BElem& o) const {
  check_same_params(*this, o);
  long lvl = std::max(level_, o.level_);
  BElem a = coerce_up(lvl), b = o.coerce_up(lvl);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

BElem BElem::scaled(const AElem& a) const {
  BElem f = *this;
  for (auto& c : f.coeffs_) c = c * a;
  f.trim();
  return f;
}

BElem BElem::mul_t_pow(long k) const {
  BElem f = *this;
  for (auto& c : f.coeffs_) c = c.mul_t_pow(k);
  return f;
}

Residue BElem::eval_k() const {
  Residue az = P_->a[static_cast<size_t>(level_)].residue();
  Residue acc = Residue::zero(P_->ring);
  for (long k = degree(); k >= 0; --k)
    acc = acc * az + coeffs_[static_cast<size_t>(k)].residue();
  return acc;
}

TruncSeries BElem::to_series(long N) const {
  TruncSeries zs = z_series(*P_, level_, N);
  TruncSeries acc = TruncSeries::zero(P_->ring, N);
  for (long k = degree(); k >= 0; --k)
    acc = acc * zs + TruncSeries::from_aelem(coeffs_[static_cast<size_t>(k)], N);
  return acc;
}

std::optional<long> BElem::valuation_capped(long N) const {
  return to_series(N).val_lower_bound();
}

BElem BElem::divide_by_t() const {
  if (is_zero()) return *this;
  bool direct = true;
  for (const auto& c : coeffs_)
    if (!c.is_zero() && *c.valuation() < 1) direct = false;
  BElem f = *this;
  if (!direct) {
    if (!eval_k().is_zero())
      fail(Err::NotInKernel, "divide_by_t: eval_k(f) != 0 for " + to_string());
    if (level_ + 1 > P_->r_max + 1)
      fail(Err::LevelBudgetExceeded,
           "divide_by_t would need level " + std::to_string(level_ + 1));
    f = coerce_up(level_ + 1);
    // one coercion makes every coefficient divisible: the new constant term
    // has residue eval_k(f) = 0 and the z-terms gained t^m factors
    for (const auto& c : f.coeffs_)
      if (!c.is_zero() && *c.valuation() < 1)
        fail(Err::Internal, "divisibility lost after coercion of " + to_string());
  }
  for (auto& c : f.coeffs_) c = c.div_t_pow(1);
  return f;
}

BElem BElem::div_t_pow(long k) const {
  BElem f = *this;
  for (long i = 0; i < k; ++i) f = f.divide_by_t();
  return f;
}

std::optional<std::pair<long, BElem>> BElem::unit_normalize(long cap) const {
  BElem f = *this;
  long n = 0;
  while (f.eval_k().is_zero()) {
    if (n >= cap || f.is_zero()) return std::nullopt;
    f = f.divide_by_t();
    ++n;
  }
  return std::make_pair(n, f);
}

std::string BElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs_[k].to_string();
    bool needs_paren = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
    if (k == 0) {
      os << (needs_paren ? "(" + c + ")" : c);
      continue;
    }
    if (c != "1") os << (needs_paren ? "(" + c + ")" : c) << "*";
    os << "z" << level_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace akizuki
