#include "akizuki/nonfiniteness.hpp"

#include <sstream>

#include "akizuki/parallel.hpp"

namespace akizuki {

namespace {

void trim(std::vector<AElem>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<AElem> poly_mul(const std::vector<AElem>& a,
                            const std::vector<AElem>& b, const RingPtr& ring) {
  if (a.empty() || b.empty()) return {};
  std::vector<AElem> out(a.size() + b.size() - 1, AElem::zero(ring));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  trim(out);
  return out;
}

void check_candidate(const ParamsPtr& P, const RelationCandidate& cand) {
  if (cand.r < 0 || cand.r > P->r_max)
    fail(Err::IndexOutOfRange, "relation index r = " + std::to_string(cand.r));
  if (cand.f.size() != static_cast<size_t>(cand.r + 1))
    fail(Err::DimensionMismatch, "candidate needs f_0..f_r");
  for (const auto& fi : cand.f)
    if (fi.level() != 0)
      fail(Err::LevelOutOfRange,
           "relation candidates must be level-0 elements of C");
}

}  // namespace

BElem PolyOverA::to_belem(const ParamsPtr& P) const {
  return BElem::from_coeffs(P, 0, coeff);
}

std::string PolyOverA::to_string() const {
  if (coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeff[k].to_string();
    bool paren = c.find(' ') != std::string::npos || c.find('/') != std::string::npos;
    if (k == 0) {
      os << (paren ? "(" + c + ")" : c);
      continue;
    }
    if (c != "1") os << (paren ? "(" + c + ")" : c) << "*";
    os << "z0";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

BElem relation_residual(const ParamsPtr& P, const RelationCandidate& cand) {
  check_candidate(P, cand);
  auto zma = [&](long i) {
    return BElem::z(P, i) - BElem::from_a(P, P->a[static_cast<size_t>(i)]).coerce_up(i);
  };
  BElem R = cand.f[static_cast<size_t>(cand.r)].to_b() * zma(cand.r);
  for (long i = 0; i < cand.r; ++i)
    R = R - cand.f[static_cast<size_t>(i)].to_b() * zma(i);
  return R;
}

PolyOverA to_polynomial_in_z(const ParamsPtr& P, const RelationCandidate& cand) {
  check_candidate(P, cand);
  const RingPtr& ring = P->ring;
  long r = cand.r;

  // t^{n_i}(z_i - a_i) = z - sum_{j<=i} a_j t^{n_j}
  auto shifted_linear = [&](long i) {
    AElem s = AElem::zero(ring);
    for (long j = 0; j <= i; ++j)
      s = s + P->a[static_cast<size_t>(j)].mul_t_pow(P->n[static_cast<size_t>(j)]);
    return std::vector<AElem>{-s, AElem::one(ring)};
  };

  long nr = P->n[static_cast<size_t>(r)];
  PolyOverA F;
  F.ring = ring;
  F.coeff = poly_mul(cand.f[static_cast<size_t>(r)].to_b().coeffs(), shifted_linear(r), ring);
  for (long i = 0; i < r; ++i) {
    auto part = poly_mul(cand.f[static_cast<size_t>(i)].to_b().coeffs(), shifted_linear(i), ring);
    long gap = nr - P->n[static_cast<size_t>(i)];
    if (F.coeff.size() < part.size()) F.coeff.resize(part.size(), AElem::zero(ring));
    for (size_t k = 0; k < part.size(); ++k)
      F.coeff[k] = F.coeff[k] - part[k].mul_t_pow(gap);
  }
  trim(F.coeff);

  BElem lhs = relation_residual(P, cand).mul_t_pow(nr);
  if (lhs != F.to_belem(P))
    fail(Err::Internal, "level-0 rewriting of t^{n_r} R failed verification");
  return F;
}

Nontriviality nontriviality_check(const PolyOverA& F, const ParamsPtr& P,
                                  const RelationCandidate& cand) {
  check_candidate(P, cand);
  Nontriviality out;
  if (cand.f[static_cast<size_t>(cand.r)].eval_k().is_zero()) return out;
  for (size_t k = 0; k < F.coeff.size(); ++k) {
    if (F.coeff[k].is_zero()) continue;
    if (*F.coeff[k].valuation() == 0) {
      out.certified = true;
      out.coeff_index = static_cast<long>(k);
      out.coeff = F.coeff[k];
      return out;
    }
  }
  fail(Err::Internal,
       "eval_k(f_r) != 0 but every coefficient of F is divisible by t");
}

std::optional<long> f_nonzero_in_series(const PolyOverA& F,
                                        const ConstructionParams& params,
                                        long N_max) {
  if (F.is_zero()) return std::nullopt;
  for (long N = 32;; N *= 2) {
    if (N > N_max) N = N_max;
    TruncSeries z = z_series(params, 0, N);
    TruncSeries acc = TruncSeries::zero(params.ring, N);
    for (long k = F.degree(); k >= 0; --k)
      acc = acc * z + TruncSeries::from_aelem(F.coeff[static_cast<size_t>(k)], N);
    auto v = acc.val_lower_bound();
    if (v) return *v + 1;  // smallest precision exposing a nonzero coefficient
    if (N == N_max) return std::nullopt;
  }
}

RelationCandidate sample_candidate(const ParamsPtr& P, long r, long degree_bound,
                                   Rng& rng) {
  RelationCandidate cand;
  cand.r = r;
  for (long i = 0; i <= r; ++i) {
    CElem::Track c, d;
    for (long b = 0; b <= degree_bound / 2; ++b) {
      if (rng.next(2) == 0) {
        long v = rng.next_long(-3, 3);
        if (v != 0)
          c.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
      }
      if (rng.next(2) == 0) {
        long v = rng.next_long(-3, 3);
        if (v != 0)
          d.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
      }
    }
    cand.f.push_back(CElem::from_tracks(P, 0, std::move(c), std::move(d)));
  }
  return cand;
}

ChainTrial run_chain_trial(const ParamsPtr& P, long r, long degree_bound,
                           uint64_t seed, uint64_t index) {
  ChainTrial trial;
  trial.index = index;
  Rng rng = trial_rng(seed, index);
  RelationCandidate cand = sample_candidate(P, r, degree_bound, rng);
  trial.hypothesis_ok = !cand.f[static_cast<size_t>(r)].eval_k().is_zero();
  if (!trial.hypothesis_ok) return trial;  // out of hypothesis, excluded

  PolyOverA F = to_polynomial_in_z(P, cand);
  // t^{n_r} R = F and t^{n_r} is a nonzerodivisor, so R = 0 iff F = 0
  trial.residual_zero = F.is_zero();
  trial.certified_nonzero = nontriviality_check(F, P, cand).certified;
  trial.series_N = f_nonzero_in_series(F, *P, 256);
  trial.consistent = trial.certified_nonzero && trial.series_N.has_value() &&
                     !trial.residual_zero;
  return trial;
}

ChainReport strict_chain_search(const ParamsPtr& P, long r, long trials,
                                uint64_t seed, long degree_bound, bool serial) {
  if (r < 0 || r > P->r_max)
    fail(Err::IndexOutOfRange, "chain search r = " + std::to_string(r));
  ChainReport rep;
  rep.r = r;
  rep.trials = trials;
  rep.seed = seed;
  rep.degree_bound = degree_bound;

  std::vector<ChainTrial> results(static_cast<size_t>(trials));
  parallel_for(trials, serial, [&](long i) {
    // a throw may not cross the omp region; surface it as an inconsistent
    // trial so the report flags it
    try {
      results[static_cast<size_t>(i)] =
          run_chain_trial(P, r, degree_bound, seed, static_cast<uint64_t>(i));
    } catch (const std::exception&) {
      ChainTrial t;
      t.index = static_cast<uint64_t>(i);
      t.hypothesis_ok = true;
      t.consistent = false;
      results[static_cast<size_t>(i)] = t;
    }
  });

  for (const auto& t : results) {
    if (!t.hypothesis_ok) {
      rep.excluded++;
      continue;
    }
    rep.checked++;
    if (t.residual_zero) rep.relations_found++;
    if (!t.consistent) {
      rep.all_consistent = false;
      rep.anomalies.push_back(t);
    }
  }
  return rep;
}

}  // namespace akizuki
