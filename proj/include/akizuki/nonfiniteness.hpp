#pragma once

#include "akizuki/ring_c.hpp"
#include "akizuki/rng.hpp"

namespace akizuki {

// Purported finiteness relation f_r (z_r - a_r) = sum_{i<r} f_i (z_i - a_i).
// Candidates are restricted to level-0 CElems so that the transformed
// polynomial F has coefficients in A (higher-level f_i are not polynomials
// in z over A).
struct RelationCandidate {
  long r = 0;
  std::vector<CElem> f;  // f_0..f_r
};

struct PolyOverA {
  RingPtr ring;
  std::vector<AElem> coeff;  // coeff[k] multiplies z^k, trimmed

  bool is_zero() const { return coeff.empty(); }
  long degree() const { return static_cast<long>(coeff.size()) - 1; }
  BElem to_belem(const ParamsPtr& P) const;
  std::string to_string() const;
};

// R = f_r (z_r - a_r) - sum_{i<r} f_i (z_i - a_i), exact in B
BElem relation_residual(const ParamsPtr& P, const RelationCandidate& cand);

// F = t^{n_r} R rewritten at level 0 via t^{n_i} z_i = z - sum_{j<i} a_j t^{n_j};
// the identity t^{n_r} R = F(z) is re-verified in B before returning
PolyOverA to_polynomial_in_z(const ParamsPtr& P, const RelationCandidate& cand);

struct Nontriviality {
  bool certified = false;  // false = inconclusive, not "zero"
  long coeff_index = -1;   // a coefficient of F with valuation 0
  AElem coeff;
};

// if eval_k(f_r) != 0 then F mod t = (f_r mod t)(z - a_0 mod t) != 0; the
// witness coefficient is located by direct inspection
Nontriviality nontriviality_check(const PolyOverA& F, const ParamsPtr& P,
                                  const RelationCandidate& cand);

// smallest N with F(z) != 0 mod t^N, probing a doubling precision ladder up
// to N_max; nullopt = exhausted
std::optional<long> f_nonzero_in_series(const PolyOverA& F,
                                        const ConstructionParams& params,
                                        long N_max);

RelationCandidate sample_candidate(const ParamsPtr& P, long r, long degree_bound,
                                   Rng& rng);

struct ChainTrial {
  uint64_t index = 0;
  bool hypothesis_ok = false;  // eval_k(f_r) != 0; excluded otherwise
  bool residual_zero = false;
  bool certified_nonzero = false;
  std::optional<long> series_N;
  bool consistent = false;
};

ChainTrial run_chain_trial(const ParamsPtr& P, long r, long degree_bound,
                           uint64_t seed, uint64_t index);

struct ChainReport {
  long r = 0;
  long trials = 0;
  uint64_t seed = 0;
  long degree_bound = 0;
  long checked = 0;
  long excluded = 0;
  long relations_found = 0;
  bool all_consistent = true;
  std::vector<ChainTrial> anomalies;  // trials violating consistency
};

ChainReport strict_chain_search(const ParamsPtr& P, long r, long trials,
                                uint64_t seed, long degree_bound,
                                bool serial = false);

}  // namespace akizuki
