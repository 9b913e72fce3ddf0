#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "akizuki/series.hpp"

namespace akizuki {

// Construction data: unit coefficients a_0..a_{r_max+1} and gap exponents
// n_0..n_{r_max+1}. The element z is stored by these finitely many
// coefficients; the tail beyond index r_max+1 is treated as zero.
struct ConstructionParams {
  RingPtr ring;
  std::vector<AElem> a;
  std::vector<long> n;
  long r_max = 0;
  bool transcendence_assumed = true;

  // m_r = n_r - n_{r-1}, defined for 1 <= r <= r_max+1
  long m(long r) const;
  void check_index(long r) const;  // 0 <= r <= r_max+1
};

using ParamsPtr = std::shared_ptr<const ConstructionParams>;

// n_r = 2(2^r - 1) for r = 0..r_max+1, the smallest admissible choice
std::vector<long> minimal_exponents(long r_max);

// empty list means the hypotheses hold; entries name index and inequality
std::vector<std::string> validate(const ConstructionParams& P);

ConstructionParams make_ones_instance(RingPtr ring, long r_max);
ConstructionParams make_random_units_instance(RingPtr ring, long r_max,
                                              uint64_t seed);

// z_r = sum_{k >= r} a_k t^{n_k - n_r}, truncated mod t^N
TruncSeries z_series(const ConstructionParams& P, long r, long N);

struct IdentityReport {
  bool ok = true;
  long first_bad_r = -1;
  std::string detail;
};

// checks z_r - a_r = t^{m_{r+1}} z_{r+1} and
// t^{n_r} z_r = z_0 - sum_{i<r} a_i t^{n_i} for r = 0..r_max, mod t^N
IdentityReport check_defining_identities(const ConstructionParams& P, long N);

// same, but against externally supplied series zs[0..r_max+1] so callers can
// inject corrupted data
IdentityReport check_defining_identities_with(const ConstructionParams& P,
                                              long N,
                                              const std::vector<TruncSeries>& zs);

}  // namespace akizuki
