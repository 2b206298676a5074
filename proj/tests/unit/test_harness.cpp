// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "hypersplit/errors.hpp"
#include "hypersplit/harness.hpp"

using namespace hypersplit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Unsupported;
}

const char* kSmall = R"(seed = 7
[case.ff_split]
q = [5, 7]
n = [2]
draws = 4
[case.gamma_reflection]
draws = 5
[case.hermite]
draws = 10
)";

Report run(const std::string& toml, unsigned workers = 1, bool timing = false) {
  return run_verification(parse_config(toml), {workers, timing});
}

CaseRecord record(CaseStatus s, bool gating = true) {
  CaseRecord r;
  r.case_id = "x";
  r.status = s;
  r.gating = gating;
  return r;
}

}  // namespace

TEST(Harness, RegistryCoversApplications) {
  const std::vector<std::string> applications = {
      "ff_reduction_m2", "ff_reduction_m3",  "ff_reduction_m4", "g_phi2_values",   "g_phi3_values",
      "g_phi2_modular",  "g_phi3_modular",   "ono_elliptic",    "g_phi3_twisted",  "trace_single",
      "trace_pair",      "trace_example",    "g_phi4_modular",  "classical_reduction_m2",
      "classical_reduction_m3", "classical_reduction_m4"};
  for (const auto& id : applications) {
    const IdentityInfo* info = find_identity(id);
    ASSERT_NE(info, nullptr) << id;
    EXPECT_FALSE(info->summary.empty());
  }
  EXPECT_FALSE(find_identity("ff_reduction_m4")->gating);
  std::set<std::string> ids;
  for (const auto& info : identity_registry()) EXPECT_TRUE(ids.insert(info.id).second) << info.id;
  EXPECT_EQ(ids.size(), 34u);
}

TEST(Harness, DeterministicAcrossWorkers) {
  Report a = run(kSmall, 1), b = run(kSmall, 3), c = run(kSmall, 1);
  EXPECT_EQ(report_json(a, false), report_json(b, false));
  EXPECT_EQ(report_json(a, false), report_json(c, false));
  EXPECT_EQ(report_csv(a), report_csv(b));
  EXPECT_EQ(a.exit_code(), 0);
  EXPECT_GT(a.records.size(), 10u);
}

TEST(Harness, SeedChangesDraws) {
  std::string other = kSmall;
  other.replace(other.find("seed = 7"), 8, "seed = 8");
  EXPECT_NE(report_csv(run(kSmall)), report_csv(run(other)));
  EXPECT_NE(campaign_seed(1, "ff_split"), campaign_seed(1, "g_split"));
  EXPECT_NE(campaign_seed(1, "ff_split"), campaign_seed(2, "ff_split"));
  EXPECT_EQ(campaign_seed(1, "ff_split"), campaign_seed(1, "ff_split"));
}

TEST(Harness, SeededStream) {
  SeededStream s(3), t(3);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = s.below(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, t.below(7));
  }
  EXPECT_EQ(s.below(1), 0u);
  EXPECT_THROW(s.below(0), Error);
}

TEST(Harness, ConfigErrors) {
  EXPECT_EQ(kind_of([] { parse_config("[case.ff_split]\n"); }), ErrorKind::ConfigParse);
  EXPECT_EQ(kind_of([] { parse_config("seed = 1\n[case.ff_split]\ndraws = 2.5\n"); }), ErrorKind::ConfigParse);
  EXPECT_EQ(kind_of([] { parse_config("seed = 1\nworkers = 2\n"); }), ErrorKind::ConfigParse);
  EXPECT_EQ(kind_of([] { parse_config("seed = -1\n"); }), ErrorKind::ConfigParse);
  EXPECT_EQ(kind_of([] { parse_config("seed = 1\n[case\n"); }), ErrorKind::ConfigParse);
  EXPECT_EQ(kind_of([] { run("seed = 1\n[case.no_such_identity]\n"); }), ErrorKind::UnknownIdentity);
  EXPECT_EQ(kind_of([] { load_config("/nonexistent/config.toml"); }), ErrorKind::ConfigParse);
}

TEST(Harness, ConfigValues) {
  RunConfig cfg = parse_config("seed = 5\n[case.g_split]\na = [\"1/4\", \"3/4\"]\nM = 4\nmode = \"converse\"\n");
  ASSERT_EQ(cfg.cases.size(), 1u);
  const CaseConfig& c = cfg.cases[0];
  EXPECT_EQ(c.rationals("a", {}), (std::vector<Rational>{make_rational(1, 4), make_rational(3, 4)}));
  EXPECT_EQ(c.integer("M", 0), 4);
  EXPECT_EQ(c.integer("draws", 9), 9);
  EXPECT_EQ(c.text("mode", ""), "converse");
  EXPECT_EQ(kind_of([&] { c.integers("a", {}); }), ErrorKind::ConfigParse);
}

TEST(Harness, CasesKeepFileOrder) {
  RunConfig cfg = parse_config("seed = 1\n[case.hermite]\n[case.ff_split]\n[case.gamma_product]\n");
  ASSERT_EQ(cfg.cases.size(), 3u);
  EXPECT_EQ(cfg.cases[0].id, "hermite");
  EXPECT_EQ(cfg.cases[1].id, "ff_split");
  EXPECT_EQ(cfg.cases[2].id, "gamma_product");
}

TEST(Harness, ExitCodes) {
  Report r;
  r.records = {record(CaseStatus::Pass), record(CaseStatus::NotApplicable)};
  EXPECT_EQ(r.exit_code(), 0);
  r.records.push_back(record(CaseStatus::Fail, false));
  EXPECT_EQ(r.exit_code(), 0);
  r.records.push_back(record(CaseStatus::Fail));
  EXPECT_EQ(r.exit_code(), 1);
  r.records.push_back(record(CaseStatus::Error));
  EXPECT_EQ(r.exit_code(), 2);
}

TEST(Harness, CsvLayout) {
  Report r;
  CaseRecord rec = record(CaseStatus::Pass);
  rec.inputs = "a=[1/2, 1/2]; note \"x\"";
  r.records = {rec, record(CaseStatus::NotApplicable), record(CaseStatus::Fail)};
  std::string csv = report_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "case_id,q_or_p,inputs,lhs,rhs,residual,pass");
  std::getline(in, line);
  EXPECT_EQ(line, "x,,\"a=[1/2, 1/2]; note \"\"x\"\"\",,,,true");
  std::getline(in, line);
  EXPECT_EQ(line.substr(line.rfind(',') + 1), "n/a");
  std::getline(in, line);
  EXPECT_EQ(line.substr(line.rfind(',') + 1), "false");
}

TEST(Harness, JsonLayout) {
  Report r = run(kSmall, 2, false);
  auto j = nlohmann::json::parse(report_json(r, false));
  EXPECT_EQ(j["artifact"], "hypersplit");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["summary"]["total"], r.records.size());
  ASSERT_FALSE(j["records"].empty());
  for (const char* key : {"case_id", "q_or_p", "inputs", "lhs", "rhs", "residual"})
    EXPECT_TRUE(j["records"][0].contains(key)) << key;
  EXPECT_FALSE(j["records"][0].contains("elapsed_ms"));
  auto t = nlohmann::json::parse(report_json(run(kSmall, 1, true), true));
  EXPECT_TRUE(t["records"][0].contains("elapsed_ms"));
}
