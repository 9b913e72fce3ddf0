#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "akizuki/expr.hpp"
#include "akizuki/nonfiniteness.hpp"
#include "akizuki/suite.hpp"

using namespace akizuki;

namespace {

// exit codes: 0 all good, 1 a check failed, 2 bad configuration or usage
constexpr int kFail = 1;
constexpr int kUsage = 2;

SuiteConfig config_or_default(const std::string& path) {
  if (!path.empty()) return load_config(path);
  SuiteConfig cfg;
  cfg.ring = BaseRing::poly_rationals();
  return cfg;
}

bool input_class_error(Err code) {
  switch (code) {
    case Err::ConfigError:
    case Err::SyntaxError:
    case Err::UnknownIndex:
    case Err::NotInM:
    case Err::NotInBaseRing:
    case Err::ZeroInput:
    case Err::IndexOutOfRange:
    case Err::ValuationCapExceeded:
      return true;
    default:
      return false;
  }
}

CElem require_in_c(const BElem& f, long max_level, const std::string& what) {
  auto res = c_membership(f, max_level);
  if (!res.ok())
    fail(Err::NotInBaseRing,
         what + " is not in C at levels up to " + std::to_string(max_level));
  return *res.elem;
}

int cmd_validate(const std::string& config_path) {
  SuiteConfig cfg = config_or_default(config_path);
  ParamsPtr P = build_params(cfg);
  std::cout << "ring: " << P->ring->describe() << "\n";
  std::cout << "r_max = " << P->r_max << ", exponents n =";
  for (long n : P->n) std::cout << " " << n;
  std::cout << "\nall construction hypotheses hold\n";
  return 0;
}

int cmd_suite(const std::string& config_path, const std::string& out_path) {
  SuiteConfig cfg = load_config(config_path);
  Report rep = run_suite(cfg);
  for (const auto& c : rep.checks)
    std::cout << c.status << "  " << c.name << "  [" << c.anchor << "]  ("
              << c.millis << " ms)\n";
  std::cout << "summary: " << rep.passed() << " passed, " << rep.failed()
            << " failed, " << rep.inconclusive() << " inconclusive\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(Err::ConfigError, "cannot write report to " + out_path);
    out << rep.to_json().dump(2) << "\n";
    std::cout << "report written to " << out_path << "\n";
  }
  return rep.all_passed() ? 0 : kFail;
}

int cmd_decompose(const std::string& config_path, const std::string& expr,
                  long r, long N) {
  SuiteConfig cfg = config_or_default(config_path);
  ParamsPtr P = build_params(cfg);
  CElem f = require_in_c(parse_expression(P, expr), cfg.max_level, "\"" + expr + "\"");
  NormalFormEq6 nf = decompose_eq6(f, r, N);
  if (!verify_eq6(f, nf)) fail(Err::Internal, "decomposition failed to recompose");
  std::cout << "X = " << nf.X.to_string() << "\n";
  std::cout << "Y = " << nf.Y.to_string() << "\n";
  std::cout << "Z = " << nf.Z.to_string() << "\n";
  std::cout << "with f = X + Y*w" << r << " + t^" << N << "*Z, Z at level "
            << nf.Z.level() << "\n";
  return 0;
}

int cmd_member(const std::string& config_path, const std::string& expr,
               long max_level) {
  SuiteConfig cfg = config_or_default(config_path);
  ParamsPtr P = build_params(cfg);
  BElem f = parse_expression(P, expr);
  auto res = c_membership(f, max_level);
  if (res.ok()) {
    std::cout << "Member at level " << res.elem->level() << ": "
              << res.elem->to_string() << "\n";
    return 0;
  }
  std::cout << "NotMember: no normal form at levels up to " << max_level << "\n";
  for (const auto& fl : res.failures)
    std::cout << "  level " << fl.level << ": z-degree " << fl.z_degree
              << " coefficient has valuation " << fl.coeff_val << ", needs "
              << fl.required_val << "\n";
  return 0;
}

int cmd_claim(const std::string& config_path, const std::string& expr) {
  SuiteConfig cfg = config_or_default(config_path);
  ParamsPtr P = build_params(cfg);
  CElem f = require_in_c(parse_expression(P, expr), cfg.max_level, "\"" + expr + "\"");
  ClaimInverse ci = claim_inverse(f, cfg.N);
  if (!verify_claim(f, ci)) fail(Err::Internal, "claim certificate failed to verify");
  std::cout << "n = " << ci.n << "\n";
  std::cout << "g = " << ci.g.to_string() << "\n";
  std::cout << "w = " << ci.w.to_string() << "\n";
  std::cout << "f*g = t^" << 2 * ci.n << "*w exactly, and w is a unit of C_M\n";
  return 0;
}

int cmd_chain(const std::string& config_path, long r, long trials, uint64_t seed) {
  SuiteConfig cfg = config_or_default(config_path);
  ParamsPtr P = build_params(cfg);
  ChainReport rep = strict_chain_search(P, r, trials, seed, cfg.degree_bound, cfg.serial);
  std::cout << "r = " << rep.r << ", trials = " << rep.trials << ", seed = "
            << rep.seed << "\n";
  std::cout << "checked " << rep.checked << " candidates in the hypothesis, excluded "
            << rep.excluded << "\n";
  std::cout << "relations found: " << rep.relations_found << "\n";
  if (!rep.all_consistent) {
    std::cout << "INCONSISTENT: " << rep.anomalies.size()
              << " certified-nonzero residuals misbehaved\n";
    return kFail;
  }
  std::cout << "every checked candidate has a certified-nonzero residual\n";
  return rep.relations_found == 0 ? 0 : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic checks for the Akizuki rings B and C"};
  app.require_subcommand(1);
  std::string config_path, out_path, expr;
  long r = 0, N = 16, max_level = 6, trials = 200;
  uint64_t seed = 2026;

  auto* validate = app.add_subcommand("validate", "check construction hypotheses");
  validate->add_option("--config", config_path, "config file (JSON)");

  auto* suite = app.add_subcommand("suite", "run check suites and write a report");
  suite->add_option("--config", config_path, "config file (JSON)")->required();
  suite->add_option("--out", out_path, "write the JSON report here");

  auto* decompose = app.add_subcommand("decompose", "f = X + Y*w_r + t^N*Z");
  decompose->add_option("expr", expr, "element of C")->required();
  decompose->add_option("--r", r, "target level r")->required();
  decompose->add_option("--N", N, "truncation exponent N")->required();
  decompose->add_option("--config", config_path, "config file (JSON)");

  auto* member = app.add_subcommand("member", "normal form in C, or a refusal table");
  member->add_option("expr", expr, "element of B")->required();
  member->add_option("--max-level", max_level, "deepest level to try");
  member->add_option("--config", config_path, "config file (JSON)");

  auto* claim = app.add_subcommand("claim", "invert f in M up to a power of t");
  claim->add_option("expr", expr, "nonzero element of M")->required();
  claim->add_option("--config", config_path, "config file (JSON)");

  auto* chain = app.add_subcommand("chain", "search for finiteness relations");
  chain->add_option("--r", r, "relation length r")->required();
  chain->add_option("--trials", trials, "number of random candidates");
  chain->add_option("--seed", seed, "PRNG seed");
  chain->add_option("--config", config_path, "config file (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(config_path);
    if (app.got_subcommand(suite)) return cmd_suite(config_path, out_path);
    if (app.got_subcommand(decompose)) return cmd_decompose(config_path, expr, r, N);
    if (app.got_subcommand(member)) return cmd_member(config_path, expr, max_level);
    if (app.got_subcommand(claim)) return cmd_claim(config_path, expr);
    if (app.got_subcommand(chain)) return cmd_chain(config_path, r, trials, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_class_error(e.code()) ? kUsage : kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
