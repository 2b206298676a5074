// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hypersplit/rational.hpp"

namespace hypersplit {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

// One [case.<id>] table.  Scalars are stored as one-element lists and all
// values are kept as text until a campaign reads them.
struct CaseConfig {
  std::string id;
  std::map<std::string, std::vector<std::string>> params;

  bool has(const std::string& key) const { return params.count(key) != 0; }
  std::vector<long long> integers(const std::string& key, std::vector<long long> fallback) const;
  std::vector<Rational> rationals(const std::string& key, std::vector<Rational> fallback) const;
  long long integer(const std::string& key, long long fallback) const;
  std::string text(const std::string& key, std::string fallback) const;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<CaseConfig> cases;
};

// ConfigParse on malformed input, a missing seed or an unknown key type.
RunConfig parse_config(std::string_view toml_text);
RunConfig load_config(const std::string& path);

enum class CaseStatus { Pass, Fail, Error, NotApplicable };
std::string_view status_name(CaseStatus s);

struct CaseRecord {
  std::string case_id;
  std::string q_or_p;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  std::string residual;
  CaseStatus status = CaseStatus::Fail;
  // Report-only identities do not affect the exit code.
  bool gating = true;
  std::string note;
  double elapsed_ms = 0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CaseRecord> records;
  // Campaign-level remarks such as calibration outcomes, in config order.
  std::vector<std::pair<std::string, std::string>> notes;

  std::size_t count(CaseStatus s) const;
  bool gating_failure() const;
  bool any_error() const;
  // 0 all gating records pass, 1 some identity failed, 2 some case raised.
  int exit_code() const;
};

struct IdentityInfo {
  std::string id;
  std::string summary;
  bool gating = true;
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo* find_identity(std::string_view id);

// A planned case.  Planning is serial and consumes the seeded stream, so the
// task list and every record are independent of the worker count.
using CaseTask = std::function<CaseRecord()>;

struct Campaign {
  std::vector<CaseTask> tasks;
  std::vector<std::string> notes;
};

// UnknownIdentity for ids outside the registry.
Campaign plan_campaign(const CaseConfig& config, std::uint64_t seed);

struct RunOptions {
  unsigned workers = 1;
  bool timing = false;
};

// HYPERSPLIT_WORKERS when set to a positive integer, else 1.
unsigned workers_from_env();

Report run_verification(const RunConfig& config, const RunOptions& options);

std::string report_json(const Report& report, bool timing);
std::string report_csv(const Report& report);

// Seeded stream used by every campaign.  below() avoids
// std::uniform_int_distribution, whose output is implementation-defined.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 gen_;
};

std::uint64_t campaign_seed(std::uint64_t seed, std::string_view id);

}  // namespace hypersplit
