#pragma once

#include <json.hpp>

#include "akizuki/construction.hpp"

namespace akizuki {

// Parsed form of the JSON config consumed by the harness. Unknown keys are
// rejected so that a typo cannot silently disable a check.
struct SuiteConfig {
  RingPtr ring;

  std::string coeff_preset = "ones";  // ones | random-units | explicit
  uint64_t coeff_seed = 0;
  std::vector<std::string> coeff_values;

  std::string exp_preset = "minimal";  // minimal | explicit
  long r_max = 6;
  std::vector<long> exp_values;

  long N = 64;
  long degree_bound = 6;
  long max_level = 6;
  long trials = 1000;
  uint64_t seed = 2026;

  std::vector<std::string> suites;  // empty = all
  std::string fault;                // "", corrupt-series, corrupt-certificate
  bool serial = false;

  nlohmann::json echo() const;  // canonical re-serialization
};

SuiteConfig parse_config(const nlohmann::json& j);
SuiteConfig load_config(const std::string& path);

// materializes the construction; throws ConfigError when validate() objects
ParamsPtr build_params(const SuiteConfig& cfg);

struct CheckRecord {
  std::string name;
  std::string anchor;
  std::string status;  // pass | fail | inconclusive
  std::string witness;
  long millis = 0;
};

struct Report {
  static constexpr int schema_version = 1;
  nlohmann::json config;
  std::vector<CheckRecord> checks;

  long passed() const;
  long failed() const;
  long inconclusive() const;
  bool all_passed() const { return failed() == 0; }

  nlohmann::json to_json() const;
};

extern const std::vector<std::string> all_suites;

Report run_suite(const SuiteConfig& cfg);

}  // namespace akizuki
