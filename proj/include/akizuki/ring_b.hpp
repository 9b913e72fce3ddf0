#pragma once

#include "akizuki/construction.hpp"

namespace akizuki {

// Element of B = A[z_0, z_1, ...] held as a polynomial in a single z_s:
// coeffs_[k] is the coefficient of z_s^k. B is the increasing union of the
// A[z_s], so any two elements meet at the max of their levels.
class BElem {
 public:
  static BElem zero(ParamsPtr P);
  static BElem from_a(ParamsPtr P, const AElem& a);
  static BElem z(ParamsPtr P, long level);
  static BElem from_coeffs(ParamsPtr P, long level, std::vector<AElem> coeffs);

  const ParamsPtr& params() const { return P_; }
  long level() const { return level_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<AElem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BElem operator+(const BElem& o) const;
  BElem operator-(const BElem& o) const;
  BElem operator*(const BElem& o) const;
  BElem operator-() const;
  bool operator==(const BElem& o) const;
  bool operator!=(const BElem& o) const { return !(*this == o); }

  BElem scaled(const AElem& a) const;
  BElem mul_t_pow(long k) const;

  // substitute z_s = a_s + t^{m_{s+1}} z_{s+1} until the target level
  BElem coerce_up(long target_level) const;

  // evaluation homomorphism B -> k, t |-> 0 and z_s |-> a_s
  Residue eval_k() const;

  TruncSeries to_series(long N) const;

  // val_lower_bound of the image mod t^N; nullopt means ">= N"
  std::optional<long> valuation_capped(long N) const;

  // exact division by t inside B; requires eval_k = 0 (kernel of eval)
  BElem divide_by_t() const;
  BElem div_t_pow(long k) const;

  // f = t^n u with eval_k(u) != 0, found by repeated division;
  // nullopt reports "valuation >= cap" without deciding f = 0
  std::optional<std::pair<long, BElem>> unit_normalize(long cap) const;

  std::string to_string() const;

 private:
  BElem(ParamsPtr P, long level) : P_(std::move(P)), level_(level) {}
  void trim();

  ParamsPtr P_;
  long level_ = 0;
  std::vector<AElem> coeffs_;
};

void check_same_params(const BElem& f, const BElem& g);

}  // namespace akizuki
