#include "akizuki/suite.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "akizuki/expr.hpp"
#include "akizuki/linalg.hpp"
#include "akizuki/nonfiniteness.hpp"
#include "akizuki/parallel.hpp"
#include "akizuki/rng.hpp"

using nlohmann::json;

namespace akizuki {

const std::vector<std::string> all_suites = {
    "identities",  "dvr-witnesses", "c-normal-form", "eq6",
    "claim",       "ex1",           "ex2",           "akizuki",
    "nonfiniteness", "oracle-equivalence"};

// ---------------------------------------------------------------------------
// config

namespace {

void expect_keys(const json& j, const std::vector<std::string>& allowed,
                 const std::string& ctx) {
  if (!j.is_object()) fail(Err::ConfigError, ctx + " must be an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const auto& a : allowed) known = known || key == a;
    if (!known) fail(Err::ConfigError, "unknown key \"" + key + "\" in " + ctx);
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Err::ConfigError, std::string("bad value for \"") + key + "\"");
  }
}

template <typename T>
T need(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key))
    fail(Err::ConfigError, "missing key \"" + std::string(key) + "\" in " + ctx);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(Err::ConfigError, std::string("bad value for \"") + key + "\" in " + ctx);
  }
}

}  // namespace

SuiteConfig parse_config(const json& j) {
  expect_keys(j, {"ring", "coefficients", "exponents", "caps", "suites",
                  "fault", "serial"},
              "config");
  SuiteConfig cfg;

  if (!j.contains("ring")) fail(Err::ConfigError, "missing key \"ring\" in config");
  const json& r = j.at("ring");
  auto mode = need<std::string>(r, "mode", "ring");
  if (mode == "poly") {
    expect_keys(r, {"mode", "field", "q"}, "ring");
    auto field = need<std::string>(r, "field", "ring");
    if (field == "rationals") {
      cfg.ring = BaseRing::poly_rationals();
    } else if (field == "prime") {
      long q = need<long>(r, "q", "ring");
      if (q < 2) fail(Err::ConfigError, "ring.q must be a prime >= 2");
      cfg.ring = BaseRing::poly_prime_field(q);
    } else {
      fail(Err::ConfigError, "ring.field must be \"rationals\" or \"prime\"");
    }
  } else if (mode == "padic") {
    expect_keys(r, {"mode", "p"}, "ring");
    long p = need<long>(r, "p", "ring");
    if (p < 2) fail(Err::ConfigError, "ring.p must be a prime >= 2");
    cfg.ring = BaseRing::padic_ring(p);
  } else {
    fail(Err::ConfigError, "ring.mode must be \"poly\" or \"padic\"");
  }

  if (j.contains("coefficients")) {
    const json& c = j.at("coefficients");
    expect_keys(c, {"preset", "seed", "values"}, "coefficients");
    cfg.coeff_preset = need<std::string>(c, "preset", "coefficients");
    if (cfg.coeff_preset == "ones") {
    } else if (cfg.coeff_preset == "random-units") {
      cfg.coeff_seed = need<uint64_t>(c, "seed", "coefficients");
    } else if (cfg.coeff_preset == "explicit") {
      cfg.coeff_values = need<std::vector<std::string>>(c, "values", "coefficients");
    } else {
      fail(Err::ConfigError,
           "coefficients.preset must be \"ones\", \"random-units\" or \"explicit\"");
    }
  }

  if (j.contains("exponents")) {
    const json& e = j.at("exponents");
    expect_keys(e, {"preset", "r_max", "values"}, "exponents");
    cfg.exp_preset = need<std::string>(e, "preset", "exponents");
    if (cfg.exp_preset == "minimal") {
      cfg.r_max = need<long>(e, "r_max", "exponents");
    } else if (cfg.exp_preset == "explicit") {
      cfg.exp_values = need<std::vector<long>>(e, "values", "exponents");
      if (cfg.exp_values.size() < 2)
        fail(Err::ConfigError, "exponents.values needs n_0..n_{r_max+1}");
      cfg.r_max = static_cast<long>(cfg.exp_values.size()) - 2;
    } else {
      fail(Err::ConfigError, "exponents.preset must be \"minimal\" or \"explicit\"");
    }
    if (cfg.r_max < 0) fail(Err::ConfigError, "r_max must be >= 0");
  }

  if (j.contains("caps")) {
    const json& c = j.at("caps");
    expect_keys(c, {"N", "degree_bound", "max_level", "trials", "seed"}, "caps");
    cfg.N = get_or<long>(c, "N", cfg.N);
    cfg.degree_bound = get_or<long>(c, "degree_bound", cfg.degree_bound);
    cfg.max_level = get_or<long>(c, "max_level", cfg.max_level);
    cfg.trials = get_or<long>(c, "trials", cfg.trials);
    cfg.seed = get_or<uint64_t>(c, "seed", cfg.seed);
    if (cfg.N <= 0 || cfg.degree_bound <= 0 || cfg.max_level <= 0 || cfg.trials <= 0)
      fail(Err::ConfigError, "caps must be positive");
  }

  if (j.contains("suites")) {
    cfg.suites = need<std::vector<std::string>>(j, "suites", "config");
    for (const auto& s : cfg.suites) {
      bool known = false;
      for (const auto& k : all_suites) known = known || s == k;
      if (!known) fail(Err::ConfigError, "unknown suite \"" + s + "\"");
    }
  }

  cfg.fault = get_or<std::string>(j, "fault", "");
  if (!cfg.fault.empty() && cfg.fault != "corrupt-series" &&
      cfg.fault != "corrupt-certificate")
    fail(Err::ConfigError, "unknown fault \"" + cfg.fault + "\"");
  cfg.serial = get_or<bool>(j, "serial", false);
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ConfigError, "cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Err::ConfigError, "config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(j);
}

json SuiteConfig::echo() const {
  json r;
  if (ring->mode() == RingMode::Poly) {
    r["mode"] = "poly";
    if (ring->field() == FieldKind::Rationals) {
      r["field"] = "rationals";
    } else {
      r["field"] = "prime";
      r["q"] = ring->residue_modulus().get_si();
    }
  } else {
    r["mode"] = "padic";
    r["p"] = ring->residue_modulus().get_si();
  }

  json c;
  c["preset"] = coeff_preset;
  if (coeff_preset == "random-units") c["seed"] = coeff_seed;
  if (coeff_preset == "explicit") c["values"] = coeff_values;

  json e;
  e["preset"] = exp_preset;
  if (exp_preset == "minimal") e["r_max"] = r_max;
  if (exp_preset == "explicit") e["values"] = exp_values;

  json out;
  out["ring"] = r;
  out["coefficients"] = c;
  out["exponents"] = e;
  out["caps"] = {{"N", N},
                 {"degree_bound", degree_bound},
                 {"max_level", max_level},
                 {"trials", trials},
                 {"seed", seed}};
  out["suites"] = suites.empty() ? all_suites : suites;
  if (!fault.empty()) out["fault"] = fault;
  out["serial"] = serial;
  return out;
}

ParamsPtr build_params(const SuiteConfig& cfg) {
  ConstructionParams P;
  try {
    if (cfg.coeff_preset == "random-units") {
      P = make_random_units_instance(cfg.ring, cfg.r_max, cfg.coeff_seed);
    } else {
      P = make_ones_instance(cfg.ring, cfg.r_max);
    }
    if (cfg.exp_preset == "explicit") P.n = cfg.exp_values;
    if (cfg.coeff_preset == "explicit") {
      if (cfg.coeff_values.size() != static_cast<size_t>(cfg.r_max) + 2)
        fail(Err::ConfigError, "coefficients.values needs a_0..a_{r_max+1}");
      auto scratch =
          std::make_shared<ConstructionParams>(make_ones_instance(cfg.ring, 0));
      P.a.clear();
      for (const auto& s : cfg.coeff_values) {
        BElem v = parse_expression(scratch, s);
        if (v.degree() > 0)
          fail(Err::ConfigError, "coefficient \"" + s + "\" is not a constant");
        P.a.push_back(v.is_zero() ? AElem::zero(cfg.ring) : v.coeffs()[0]);
      }
    }
  } catch (const Error& e) {
    if (e.code() == Err::ConfigError) throw;
    fail(Err::ConfigError, e.what());
  }

  auto problems = validate(P);
  if (!problems.empty()) {
    std::string msg = "construction hypotheses violated:";
    for (const auto& p : problems) msg += " " + p + ";";
    fail(Err::ConfigError, msg);
  }
  return std::make_shared<const ConstructionParams>(std::move(P));
}

// ---------------------------------------------------------------------------
// report

long Report::passed() const {
  long n = 0;
  for (const auto& c : checks) n += c.status == "pass";
  return n;
}
long Report::failed() const {
  long n = 0;
  for (const auto& c : checks) n += c.status == "fail";
  return n;
}
long Report::inconclusive() const {
  long n = 0;
  for (const auto& c : checks) n += c.status == "inconclusive";
  return n;
}

json Report::to_json() const {
  json out;
  out["schema_version"] = schema_version;
  out["config"] = config;
  out["checks"] = json::array();
  for (const auto& c : checks)
    out["checks"].push_back({{"name", c.name},
                             {"anchor", c.anchor},
                             {"status", c.status},
                             {"witness", c.witness},
                             {"millis", c.millis}});
  out["summary"] = {{"pass", passed()},
                    {"fail", failed()},
                    {"inconclusive", inconclusive()}};
  return out;
}

// ---------------------------------------------------------------------------
// samplers and the trial harness

namespace {

struct Outcome {
  std::string status;
  std::string witness;
};

Outcome pass(std::string w) { return {"pass", std::move(w)}; }
Outcome failed_with(std::string w) { return {"fail", std::move(w)}; }

// runs one named check, timing it and converting thrown errors into failures
struct Recorder {
  std::vector<CheckRecord>& out;

  void run(const std::string& name, const std::string& anchor,
           const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome oc;
    try {
      oc = body();
    } catch (const Error& e) {
      oc = failed_with(std::string(err_name(e.code())) + ": " + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    out.push_back({name, anchor, oc.status, oc.witness, static_cast<long>(ms)});
  }
};

// per-trial failure slots; empty string = trial passed
struct TrialTally {
  std::vector<std::string> slots;
  explicit TrialTally(long n) : slots(static_cast<size_t>(n)) {}

  Outcome summarize(const std::string& all_good) const {
    long bad = 0;
    std::string first;
    for (const auto& s : slots)
      if (!s.empty()) {
        if (first.empty()) first = s;
        ++bad;
      }
    if (bad == 0) return pass(all_good);
    return failed_with(std::to_string(bad) + "/" +
                       std::to_string(slots.size()) + " trials failed; first: " + first);
  }
};

// exceptions must not cross the omp region boundary, so each trial converts
// them into a failed slot instead
template <typename F>
void run_trials(long n, bool serial, TrialTally& tally, F&& body) {
  parallel_for(n, serial, [&](long i) {
    try {
      body(i);
    } catch (const Error& e) {
      tally.slots[static_cast<size_t>(i)] = e.what();
    } catch (const std::exception& e) {
      tally.slots[static_cast<size_t>(i)] = std::string("unexpected: ") + e.what();
    }
  });
}

AElem rand_aelem(const RingPtr& R, Rng& rng, long max_val = 3) {
  return AElem::from_long(R, rng.next_long(-4, 4)).mul_t_pow(rng.next_long(0, max_val));
}

BElem rand_belem(const ParamsPtr& P, Rng& rng, long max_level, long max_deg) {
  long lvl = rng.next_long(0, max_level);
  std::vector<AElem> coeffs;
  long d = rng.next_long(0, max_deg);
  for (long k = 0; k <= d; ++k) coeffs.push_back(rand_aelem(P->ring, rng));
  return BElem::from_coeffs(P, lvl, std::move(coeffs));
}

CElem rand_celem(const ParamsPtr& P, Rng& rng, long max_level, long max_b) {
  long lvl = rng.next_long(0, max_level);
  CElem::Track c, d;
  for (long b = 0; b <= max_b; ++b) {
    if (rng.next(2) == 0) {
      long v = rng.next_long(-3, 3);
      if (v != 0) c.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
    }
    if (rng.next(2) == 0) {
      long v = rng.next_long(-3, 3);
      if (v != 0) d.emplace(b, AElem::from_long(P->ring, v).mul_t_pow(rng.next_long(0, 2)));
    }
  }
  return CElem::from_tracks(P, lvl, std::move(c), std::move(d));
}

// ---------------------------------------------------------------------------
// the individual suites

void suite_identities(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("identities.defining", "Eq (z_r=), Eq (tnrz_r=)", [&]() -> Outcome {
    IdentityReport ir;
    if (cfg.fault == "corrupt-series") {
      std::vector<TruncSeries> zs;
      for (long r = 0; r <= P->r_max + 1; ++r) zs.push_back(z_series(*P, r, cfg.N));
      long victim = std::min<long>(2, P->r_max + 1);
      zs[static_cast<size_t>(victim)] = zs[static_cast<size_t>(victim)].perturbed(5);
      ir = check_defining_identities_with(*P, cfg.N, zs);
    } else {
      ir = check_defining_identities(*P, cfg.N);
    }
    if (!ir.ok) return failed_with("first failing index r=" +
                                   std::to_string(ir.first_bad_r) + ": " + ir.detail);
    return pass("residuals zero mod t^" + std::to_string(cfg.N) +
                " for r <= " + std::to_string(P->r_max));
  });

  rec.run("identities.frac_witness", "Thm 2 (i)", [&]() -> Outcome {
    auto [num, den] = frac_witness(P);
    BElem lhs = BElem::z(P, 0) * den.to_b();
    if (lhs != num.to_b()) return failed_with("z_0 * den != num in B");
    if (lhs.to_series(64) != num.to_series(64))
      return failed_with("series disagree at N=64");
    return pass("z_0 = (" + num.to_string() + ")/(" + den.to_string() + ")");
  });

  rec.run("identities.integral", "Thm 2 (ii)", [&]() -> Outcome {
    long imax = std::min<long>(5, P->r_max);
    for (long i = 1; i <= imax; ++i) {
      MonicQuadratic eq = integral_equation(P, i);
      if (!eq.residual().is_zero())
        return failed_with("residual nonzero at i=" + std::to_string(i));
    }
    return pass("monic quadratics vanish for i <= " + std::to_string(imax));
  });
}

void suite_dvr(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  const long trials = 200;
  rec.run("dvr.unit_normalize", "Thm 1", [&]() -> Outcome {
    TrialTally tally(trials);
    run_trials(trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0xd1f3ull, static_cast<uint64_t>(i));
      BElem f = rand_belem(P, rng, 3, 4);
      while (f.is_zero() || !f.valuation_capped(32)) f = rand_belem(P, rng, 3, 4);
      auto nu = f.unit_normalize(32);
      if (!nu) {
        tally.slots[static_cast<size_t>(i)] = "unit_normalize gave up below cap";
        return;
      }
      auto [n, u] = *nu;
      if (u.eval_k().is_zero())
        tally.slots[static_cast<size_t>(i)] = "u not a unit at trial " + std::to_string(i);
      else if (u.mul_t_pow(n) != f)
        tally.slots[static_cast<size_t>(i)] = "t^n u != f at trial " + std::to_string(i);
      else if (*f.valuation_capped(32) != n)
        tally.slots[static_cast<size_t>(i)] = "n disagrees with series valuation";
    });
    return tally.summarize(std::to_string(trials) + " exact t^n*unit factorizations");
  });

  rec.run("dvr.kernel_divisibility", "Thm 1", [&]() -> Outcome {
    TrialTally tally(trials);
    run_trials(trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0x7e11ull, static_cast<uint64_t>(i));
      BElem f = rand_belem(P, rng, 3, 4);
      auto& slot = tally.slots[static_cast<size_t>(i)];
      if (f.eval_k().is_zero()) {
        BElem q = f.divide_by_t();
        if (q.mul_t_pow(1) != f) slot = "t*(f/t) != f";
      } else {
        try {
          f.divide_by_t();
          slot = "divide_by_t accepted a non-kernel element";
        } catch (const Error& e) {
          if (e.code() != Err::NotInKernel) slot = std::string("wrong error: ") + e.what();
        }
      }
      // and the converse: multiples of t are always in the kernel
      if (slot.empty() && !f.mul_t_pow(1).eval_k().is_zero())
        slot = "t*f escaped the kernel";
    });
    return tally.summarize("kernel of eval = (t) in both directions, " +
                           std::to_string(trials) + " samples");
  });
}

void suite_cnf(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("cnf.trick2", "Eq ((z_i-a_i)^2)", [&]() -> Outcome {
    long imax = std::min<long>(4, P->r_max);
    for (long i = 1; i <= imax; ++i) {
      const AElem& ai = P->a[static_cast<size_t>(i)];
      long twom = 2 * P->m(i);
      BElem zi = BElem::z(P, i);
      BElem u = zi - BElem::from_a(P, ai);
      BElem lhs = [&] {
        BElem v = BElem::z(P, i - 1) - BElem::from_a(P, P->a[static_cast<size_t>(i - 1)]);
        return v * v;
      }();
      BElem term1 = (u * u - BElem::from_a(P, ai * ai)).mul_t_pow(twom);
      BElem term2 = zi.scaled(ai + ai).mul_t_pow(twom);
      if (lhs != term1 + term2)
        return failed_with("identity fails at i=" + std::to_string(i));
      for (const BElem* term : {&term1, &term2})
        if (!c_membership(term->div_t_pow(1), cfg.max_level).ok())
          return failed_with("RHS term not in tC at i=" + std::to_string(i));
      Certificate cert = y_in_tc_certificate(P, i);
      if (!cert.verify())
        return failed_with("tC certificate fails at i=" + std::to_string(i));
    }
    return pass("identity + tC membership certified for i <= " + std::to_string(imax));
  });

  rec.run("cnf.round_trip", "Eq (6)", [&]() -> Outcome {
    TrialTally tally(cfg.trials);
    run_trials(cfg.trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0xcf01ull, static_cast<uint64_t>(i));
      CElem f = rand_celem(P, rng, 3, cfg.degree_bound / 2);
      auto res = c_membership(f.to_b(), f.level());
      if (!res.ok() || *res.elem != f)
        tally.slots[static_cast<size_t>(i)] = "round-trip broke at trial " + std::to_string(i);
    });
    return tally.summarize(std::to_string(cfg.trials) + " normal-form round-trips");
  });

  rec.run("cnf.coercion", "Eq (6)", [&]() -> Outcome {
    TrialTally tally(cfg.trials);
    run_trials(cfg.trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0xcf02ull, static_cast<uint64_t>(i));
      CElem f = rand_celem(P, rng, 2, cfg.degree_bound / 2);
      CElem up = f.coerce_c_up();
      if (up.to_b() != f.to_b())
        tally.slots[static_cast<size_t>(i)] = "coercion changed the element";
    });
    return tally.summarize("R1/R2 rewrites preserve values, " +
                           std::to_string(cfg.trials) + " samples");
  });
}

void suite_eq6(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("eq6.decompose", "Eq (6)", [&]() -> Outcome {
    const long samples = 100;
    long rmax = std::min<long>(4, P->r_max);
    std::vector<long> Ns = {4, 16, 64};
    TrialTally tally(samples);
    long grid = (rmax + 1) * static_cast<long>(Ns.size());
    run_trials(samples, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0xe600ull, static_cast<uint64_t>(i));
      CElem f = rand_celem(P, rng, 3, cfg.degree_bound / 2);
      auto& slot = tally.slots[static_cast<size_t>(i)];
      for (long r = 0; r <= rmax && slot.empty(); ++r)
        for (long N : Ns) {
          NormalFormEq6 nf = decompose_eq6(f, r, N);
          if (!verify_eq6(f, nf)) {
            slot = "recomposition failed at r=" + std::to_string(r) +
                   " N=" + std::to_string(N);
            break;
          }
          if (!c_membership(nf.Z.to_b(), cfg.max_level).ok()) {
            slot = "Z left C at r=" + std::to_string(r) + " N=" + std::to_string(N);
            break;
          }
        }
    });
    return tally.summarize(std::to_string(samples * grid) +
                           " decompositions recomposed exactly, Z in C");
  });
}

void suite_claim(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("claim.inverse", "Claim", [&]() -> Outcome {
    if (P->r_max < 1) return {"inconclusive", "needs r_max >= 1"};
    // inverting f of valuation v needs a level with n_r >= v+1, so small
    // instances get a smaller sampling cap
    long vcap = std::min<long>(48, P->n[static_cast<size_t>(P->r_max)]);
    const long samples = 50;
    TrialTally tally(samples);
    run_trials(samples, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0xc1a1ull, static_cast<uint64_t>(i));
      CElem f = rand_celem(P, rng, 2, 3);
      if (!f.in_M()) f = f.mul_t_pow(1);
      while (f.is_zero() || !f.to_series(vcap).val_lower_bound()) {
        f = rand_celem(P, rng, 2, 3);
        if (!f.in_M()) f = f.mul_t_pow(1);
      }
      auto& slot = tally.slots[static_cast<size_t>(i)];
      ClaimInverse ci = claim_inverse(f, vcap);
      if (!verify_claim(f, ci)) {
        slot = "f*g != t^{2n}*w or w not a unit, trial " + std::to_string(i);
        return;
      }
      auto v = f.to_series(ci.n + 2).val_lower_bound();
      if (!v || *v != ci.n) slot = "n disagrees with the series valuation";
    });
    return tally.summarize(std::to_string(samples) +
                           " principal ideals shown to contain t^{2n}");
  });
}

void suite_ex1(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("ex1.certificates", "Ex. 1", [&]() -> Outcome {
    auto [fwd, bwd] = m2_equals_tm(P);
    if (cfg.fault == "corrupt-certificate" && !fwd.empty() && !fwd[0].terms.empty())
      fwd[0].terms[0].first =
          fwd[0].terms[0].first + CElem::from_a(P, AElem::one(P->ring));
    for (size_t i = 0; i < fwd.size(); ++i)
      if (!fwd[i].verify())
        return failed_with("M^2 generator " + std::to_string(i) + " not certified in tM");
    for (size_t i = 0; i < bwd.size(); ++i)
      if (!bwd[i].verify())
        return failed_with("tM generator " + std::to_string(i) + " not certified in M^2");
    return pass("M^2 = tM, both directions certified exactly");
  });

  rec.run("ex1.module_membership", "Ex. 1", [&]() -> Outcome {
    AElem t2 = AElem::t_pow(P->ring, 2);
    CElem g_t2 = CElem::from_a(P, t2);
    CElem g_tw = CElem::w(P, 0).mul_t_pow(1);
    CElem g_ww = CElem::w(P, 0) * CElem::w(P, 0);
    std::vector<CElem> tm = {g_t2, g_tw};
    std::vector<CElem> m2 = {g_t2, g_tw, g_ww};
    for (const CElem& target : m2) {
      auto cert = module_membership(target.to_b(), tm, 1, cfg.degree_bound);
      if (!cert || !cert->verify())
        return failed_with("search failed for an M^2 generator in tM");
    }
    for (const CElem& target : tm) {
      auto cert = module_membership(target.to_b(), m2, 1, cfg.degree_bound);
      if (!cert || !cert->verify())
        return failed_with("search failed for a tM generator in M^2");
    }
    return pass("independent search reproduces all five memberships");
  });
}

void suite_ex2(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("ex2.evidence", "Ex. 2", [&]() -> Outcome {
    long rmax = std::min<long>(4, P->r_max);
    for (long r = 0; r <= rmax; ++r) {
      auto ev = ex2_nonmembership(P, r, cfg.max_level);
      if (ev.empty()) return failed_with("no evidence rows at r=" + std::to_string(r));
      for (const auto& row : ev) {
        if (row.coeff_val != P->n[static_cast<size_t>(row.level)] ||
            row.required_val != row.coeff_val + 1)
          return failed_with("unexpected valuations at r=" + std::to_string(r) +
                             " level=" + std::to_string(row.level));
      }
    }
    return pass("t^{n_r}(z_r - a_r) misses C by one power of t at every level, r <= " +
                std::to_string(rmax));
  });

  rec.run("ex2.table_r1", "Ex. 2", [&]() -> Outcome {
    if (cfg.exp_preset != "minimal" || P->r_max < 4 || cfg.max_level < 4)
      return {"inconclusive", "needs minimal exponents with r_max >= 4"};
    auto ev = ex2_nonmembership(P, 1, 4);
    std::vector<std::pair<long, long>> expected = {{2, 3}, {6, 7}, {14, 15}, {30, 31}};
    if (ev.size() != expected.size()) return failed_with("table size mismatch");
    std::ostringstream os;
    for (size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].coeff_val != expected[i].first ||
          ev[i].required_val != expected[i].second)
        return failed_with("row " + std::to_string(i) + " mismatch");
      os << (i ? ", " : "") << "(" << ev[i].coeff_val << " vs " << ev[i].required_val << ")";
    }
    return pass(os.str());
  });
}

void suite_akizuki(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("akizuki.witness", "History", [&]() -> Outcome {
    long rmax = std::min<long>(3, P->r_max);
    bool char2 = P->ring->residue_modulus() == 2;
    std::ostringstream os;
    for (long r = 0; r <= rmax; ++r) {
      AkizukiWitness wit = akizuki_witness(P, r, cfg.max_level);
      for (const auto& [lvl, val] : wit.w_unit_coeff)
        if (val != 0)
          return failed_with("w coefficient gained valuation at level " +
                             std::to_string(lvl));
      long nr = P->n[static_cast<size_t>(r)];
      if (wit.e_star < nr + 1)
        return failed_with("e_star below n_r+1 at r=" + std::to_string(r));
      if (char2 && wit.e_star != 2 * nr + 2)
        return failed_with("char-2 e_star != 2n_r+2 at r=" + std::to_string(r));
      os << (r ? ", " : "") << "e_star(" << r << ")=" << wit.e_star;
    }
    os << (char2 ? " (char 2: full 2n_r+2)" : "");
    return pass(os.str());
  });
}

void suite_nonfiniteness(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  long rmax = std::min<long>(3, P->r_max);

  rec.run("nonfin.transform", "Eq (9)", [&]() -> Outcome {
    TrialTally tally(cfg.trials);
    run_trials(cfg.trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0x9f01ull, static_cast<uint64_t>(i));
      long r = rng.next_long(1, std::max<long>(1, rmax));
      RelationCandidate cand = sample_candidate(P, r, cfg.degree_bound, rng);
      auto& slot = tally.slots[static_cast<size_t>(i)];
      // to_polynomial_in_z re-verifies t^{n_r} R = F(z) in B and throws on any
      // mismatch
      PolyOverA F = to_polynomial_in_z(P, cand);
      bool hyp = !cand.f[static_cast<size_t>(r)].eval_k().is_zero();
      Nontriviality nt = nontriviality_check(F, P, cand);
      if (hyp != nt.certified) {
        slot = "nontriviality disagreed with eval_k(f_r) at trial " + std::to_string(i);
        return;
      }
      if (nt.certified && !f_nonzero_in_series(F, *P, 256))
        slot = "certified-nonzero F vanished in series to N=256";
    });
    return tally.summarize("transformation identity exact in B, " +
                           std::to_string(cfg.trials) + " candidates");
  });

  rec.run("nonfin.chain", "Eq (7), Eq (8)", [&]() -> Outcome {
    std::ostringstream os;
    long top = std::max<long>(1, rmax);
    long share = (cfg.trials + top - 1) / top;  // trials split across the r values
    for (long r = 1; r <= top; ++r) {
      ChainReport cr = strict_chain_search(P, r, share, cfg.seed, cfg.degree_bound,
                                           cfg.serial);
      if (cr.relations_found != 0)
        return failed_with("a relation surfaced at r=" + std::to_string(r));
      if (!cr.all_consistent)
        return failed_with(std::to_string(cr.anomalies.size()) +
                           " inconsistent trials at r=" + std::to_string(r));
      os << (r > 1 ? "; " : "") << "r=" << r << ": " << cr.checked << " checked, "
         << cr.excluded << " excluded, 0 relations";
    }
    return pass(os.str());
  });
}

void suite_oracle(const SuiteConfig& cfg, const ParamsPtr& P, Recorder& rec) {
  rec.run("oracle.b_ops", "internal", [&]() -> Outcome {
    // independent oracle: Horner evaluation against a shared z-series ladder,
    // never touching the ring's own to_series
    std::vector<TruncSeries> zs;
    for (long s = 0; s <= 3; ++s) zs.push_back(z_series(*P, s, 64));
    auto eval = [&](const BElem& f) {
      TruncSeries acc = TruncSeries::zero(P->ring, 64);
      const TruncSeries& z = zs[static_cast<size_t>(f.level())];
      for (long k = f.degree(); k >= 0; --k)
        acc = acc * z + TruncSeries::from_aelem(f.coeffs()[static_cast<size_t>(k)], 64);
      return acc;
    };
    TrialTally tally(cfg.trials);
    run_trials(cfg.trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0x0bacull, static_cast<uint64_t>(i));
      BElem f = rand_belem(P, rng, 3, 3), g = rand_belem(P, rng, 3, 3);
      TruncSeries fs = eval(f), gs = eval(g);
      auto& slot = tally.slots[static_cast<size_t>(i)];
      switch (i % 3) {
        case 0:
          if (eval(f + g) != fs + gs) slot = "+ disagreed with the series oracle";
          break;
        case 1:
          if (eval(f - g) != fs - gs) slot = "- disagreed with the series oracle";
          break;
        default:
          if (eval(f * g) != fs * gs) slot = "* disagreed with the series oracle";
      }
    });
    return tally.summarize(std::to_string(cfg.trials) +
                           " random ring operations match mod t^64");
  });

  rec.run("oracle.c_round_trip", "internal", [&]() -> Outcome {
    TrialTally tally(cfg.trials);
    run_trials(cfg.trials, cfg.serial, tally, [&](long i) {
      Rng rng = trial_rng(cfg.seed ^ 0x0cb2ull, static_cast<uint64_t>(i));
      CElem f = rand_celem(P, rng, 3, cfg.degree_bound / 2);
      auto res = c_membership(f.to_b(), f.level());
      if (!res.ok() || *res.elem != f)
        tally.slots[static_cast<size_t>(i)] = "from_b(to_b(f)) != f at trial " + std::to_string(i);
    });
    return tally.summarize(std::to_string(cfg.trials) + " C round-trips are identities");
  });
}

}  // namespace

// ---------------------------------------------------------------------------

Report run_suite(const SuiteConfig& cfg) {
  ParamsPtr P = build_params(cfg);
  Report rep;
  rep.config = cfg.echo();
  Recorder rec{rep.checks};

  auto wants = [&](const std::string& s) {
    if (cfg.suites.empty()) return true;
    for (const auto& k : cfg.suites)
      if (k == s) return true;
    return false;
  };

  if (wants("identities")) suite_identities(cfg, P, rec);
  if (wants("dvr-witnesses")) suite_dvr(cfg, P, rec);
  if (wants("c-normal-form")) suite_cnf(cfg, P, rec);
  if (wants("eq6")) suite_eq6(cfg, P, rec);
  if (wants("claim")) suite_claim(cfg, P, rec);
  if (wants("ex1")) suite_ex1(cfg, P, rec);
  if (wants("ex2")) suite_ex2(cfg, P, rec);
  if (wants("akizuki")) suite_akizuki(cfg, P, rec);
  if (wants("nonfiniteness")) suite_nonfiniteness(cfg, P, rec);
  if (wants("oracle-equivalence")) suite_oracle(cfg, P, rec);

  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return rep;
}

}  // namespace akizuki
