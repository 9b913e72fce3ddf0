#include "akizuki/construction.hpp"

#include <sstream>

#include "akizuki/rng.hpp"

namespace akizuki {

long ConstructionParams::m(long r) const {
  if (r < 1 || r > r_max + 1)
    fail(Err::IndexOutOfRange, "m(" + std::to_string(r) + ") undefined");
  return n[static_cast<size_t>(r)] - n[static_cast<size_t>(r - 1)];
}

void ConstructionParams::check_index(long r) const {
  if (r < 0 || r > r_max + 1)
    fail(Err::IndexOutOfRange,
         "level " + std::to_string(r) + " outside 0.." + std::to_string(r_max + 1));
}

std::vector<long> minimal_exponents(long r_max) {
  if (r_max < 0 || r_max > 58)
    fail(Err::ConfigError, "r_max out of supported range");
  std::vector<long> n;
  for (long r = 0; r <= r_max + 1; ++r) n.push_back(2 * ((1L << r) - 1));
  return n;
}

std::vector<std::string> validate(const ConstructionParams& P) {
  std::vector<std::string> bad;
  size_t want = static_cast<size_t>(P.r_max + 2);
  if (P.a.size() != want)
    bad.push_back("coefficient list has " + std::to_string(P.a.size()) +
                  " entries, expected " + std::to_string(want));
  if (P.n.size() != want)
    bad.push_back("exponent list has " + std::to_string(P.n.size()) +
                  " entries, expected " + std::to_string(want));
  if (!bad.empty()) return bad;

  for (size_t i = 0; i < P.a.size(); ++i)
    if (P.a[i].valuation() != 0)
      bad.push_back("a_" + std::to_string(i) + " not a unit");
  if (P.n[0] != 0) bad.push_back("n_0 = " + std::to_string(P.n[0]) + ", expected 0");
  for (long r = 1; r <= P.r_max + 1; ++r) {
    long nr = P.n[static_cast<size_t>(r)], np = P.n[static_cast<size_t>(r - 1)];
    if (nr < 2 * np + 2) {
      std::ostringstream os;
      os << "n_" << r << " = " << nr << " violates n_" << r << " >= 2*n_" << (r - 1)
         << " + 2 = " << 2 * np + 2;
      bad.push_back(os.str());
    }
    long mr = nr - np;
    if (2 * mr < nr + 2) {
      std::ostringstream os;
      os << "m_" << r << " = " << mr << " violates 2*m_" << r << " >= n_" << r
         << " + 2 = " << nr + 2;
      bad.push_back(os.str());
    }
  }
  return bad;
}

ConstructionParams make_ones_instance(RingPtr ring, long r_max) {
  ConstructionParams P;
  P.ring = ring;
  P.r_max = r_max;
  P.n = minimal_exponents(r_max);
  for (long i = 0; i <= r_max + 1; ++i) P.a.push_back(AElem::one(ring));
  return P;
}

ConstructionParams make_random_units_instance(RingPtr ring, long r_max,
                                              uint64_t seed) {
  ConstructionParams P;
  P.ring = ring;
  P.r_max = r_max;
  P.n = minimal_exponents(r_max);
  Rng rng(seed);
  for (long i = 0; i <= r_max + 1; ++i) {
    if (ring->mode() == RingMode::Padic) {
      long p = ring->residue_modulus().get_si();
      long u = rng.next_long(1, p - 1) + p * rng.next_long(0, 9);
      P.a.push_back(AElem::from_long(ring, u));
    } else {
      long q = ring->field() == FieldKind::Prime
                   ? ring->residue_modulus().get_si()
                   : 17;  // small palette of constants for k = Q
      detail::KPoly poly;
      poly.emplace_back(0, mpq_class(rng.next_long(1, q - 1)));
      for (long e = 1; e <= 2; ++e) {
        long c = rng.next_long(0, q - 1);
        if (c != 0) poly.emplace_back(e, mpq_class(c));
      }
      P.a.push_back(AElem::from_poly(ring, poly));
    }
  }
  return P;
}

TruncSeries z_series(const ConstructionParams& P, long r, long N) {
  P.check_index(r);
  TruncSeries s = TruncSeries::zero(P.ring, N);
  long nr = P.n[static_cast<size_t>(r)];
  for (long k = r; k <= P.r_max + 1; ++k) {
    long shift = P.n[static_cast<size_t>(k)] - nr;
    if (shift >= N) break;
    s = s + TruncSeries::from_aelem(P.a[static_cast<size_t>(k)], N).mul_t_pow(shift);
  }
  return s;
}

IdentityReport check_defining_identities_with(const ConstructionParams& P,
                                              long N,
                                              const std::vector<TruncSeries>& zs) {
  if (zs.size() != static_cast<size_t>(P.r_max + 2))
    fail(Err::DimensionMismatch, "need series for levels 0.." +
                                     std::to_string(P.r_max + 1));
  IdentityReport rep;
  for (long r = 0; r <= P.r_max; ++r) {
    TruncSeries ar = TruncSeries::from_aelem(P.a[static_cast<size_t>(r)], N);
    TruncSeries res1 = zs[static_cast<size_t>(r)] - ar -
                       zs[static_cast<size_t>(r + 1)].mul_t_pow(P.m(r + 1));
    if (!res1.is_zero()) {
      rep.ok = false;
      rep.first_bad_r = r;
      rep.detail = "z_" + std::to_string(r) + " - a_" + std::to_string(r) +
                   " != t^m*z_" + std::to_string(r + 1) + ": residual " +
                   res1.to_string();
      return rep;
    }
    TruncSeries rhs = zs[0];
    for (long i = 0; i < r; ++i)
      rhs = rhs - TruncSeries::from_aelem(P.a[static_cast<size_t>(i)], N)
                      .mul_t_pow(P.n[static_cast<size_t>(i)]);
    TruncSeries res2 =
        zs[static_cast<size_t>(r)].mul_t_pow(P.n[static_cast<size_t>(r)]) - rhs;
    if (!res2.is_zero()) {
      rep.ok = false;
      rep.first_bad_r = r;
      rep.detail = "t^n_" + std::to_string(r) + "*z_" + std::to_string(r) +
                   " mismatch: residual " + res2.to_string();
      return rep;
    }
  }
  return rep;
}

IdentityReport check_defining_identities(const ConstructionParams& P, long N) {
  std::vector<TruncSeries> zs;
  for (long r = 0; r <= P.r_max + 1; ++r) zs.push_back(z_series(P, r, N));
  return check_defining_identities_with(P, N, zs);
}

}  // namespace akizuki
