// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "hypersplit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#include <toml.hpp>

#include "hypersplit/errors.hpp"

namespace hypersplit {

std::vector<long long> CaseConfig::integers(const std::string& key, std::vector<long long> fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::vector<long long> out;
  for (const auto& s : it->second) {
    Rational x = parse_rational(s);
    if (x.get_den() != 1) fail(ErrorKind::ConfigParse, id + "." + key + ": expected integers, got " + s);
    out.push_back(to_int64(x.get_num()));
  }
  return out;
}

std::vector<Rational> CaseConfig::rationals(const std::string& key, std::vector<Rational> fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  std::vector<Rational> out;
  for (const auto& s : it->second) out.push_back(parse_rational(s));
  return out;
}

long long CaseConfig::integer(const std::string& key, long long fallback) const {
  auto v = integers(key, {fallback});
  if (v.size() != 1) fail(ErrorKind::ConfigParse, id + "." + key + ": expected a single integer");
  return v[0];
}

std::string CaseConfig::text(const std::string& key, std::string fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  if (it->second.size() != 1) fail(ErrorKind::ConfigParse, id + "." + key + ": expected a single value");
  return it->second[0];
}

namespace {

std::string scalar_text(const toml::node& node, const std::string& where) {
  if (auto v = node.as_integer()) return std::to_string(v->get());
  if (auto v = node.as_string()) return v->get();
  if (auto v = node.as_boolean()) return v->get() ? "true" : "false";
  if (node.is_floating_point())
    fail(ErrorKind::ConfigParse, where + ": write non-integers as quoted rationals, e.g. \"1/4\" or \"0.25\"");
  fail(ErrorKind::ConfigParse, where + ": unsupported value type");
}

}  // namespace

RunConfig parse_config(std::string_view toml_text) {
  toml::table root;
  try {
    root = toml::parse(toml_text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << e.description() << " (line " << e.source().begin.line << ")";
    fail(ErrorKind::ConfigParse, os.str());
  }
  RunConfig out;
  bool have_seed = false;
  for (auto&& [key, node] : root) {
    const std::string k(key.str());
    if (k == "seed") {
      auto v = node.as_integer();
      if (!v || v->get() < 0) fail(ErrorKind::ConfigParse, "seed must be a non-negative integer");
      out.seed = static_cast<std::uint64_t>(v->get());
      have_seed = true;
    } else if (k == "case") {
      auto cases = node.as_table();
      if (!cases) fail(ErrorKind::ConfigParse, "case must be a table of [case.<id>] tables");
      // toml++ orders keys alphabetically; restore the order of the file.
      std::vector<std::pair<toml::source_position, std::pair<std::string, const toml::node*>>> ordered;
      for (auto&& [cid, cnode] : *cases) ordered.push_back({cnode.source().begin, {std::string(cid.str()), &cnode}});
      std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first.line, x.first.column) < std::pair(y.first.line, y.first.column);
      });
      for (auto&& [pos, entry] : ordered) {
        const auto& [cid, node] = entry;
        const toml::node& cnode = *node;
        CaseConfig c;
        c.id = cid;
        auto tbl = cnode.as_table();
        if (!tbl) fail(ErrorKind::ConfigParse, "case." + c.id + " must be a table");
        for (auto&& [pk, pv] : *tbl) {
          const std::string name(pk.str());
          const std::string where = "case." + c.id + "." + name;
          std::vector<std::string> vals;
          if (auto arr = pv.as_array()) {
            for (auto&& el : *arr) vals.push_back(scalar_text(el, where));
          } else {
            vals.push_back(scalar_text(pv, where));
          }
          c.params[name] = std::move(vals);
        }
        out.cases.push_back(std::move(c));
      }
    } else {
      fail(ErrorKind::ConfigParse, "unknown top-level key '" + k + "'");
    }
  }
  if (!have_seed) fail(ErrorKind::ConfigParse, "seed is mandatory");
  return out;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ConfigParse, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

std::string_view status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Error: return "error";
    case CaseStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::size_t Report::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const CaseRecord& r) { return r.status == s; }));
}

bool Report::gating_failure() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CaseRecord& r) { return r.gating && r.status == CaseStatus::Fail; });
}

bool Report::any_error() const { return count(CaseStatus::Error) != 0; }

int Report::exit_code() const {
  if (any_error()) return 2;
  return gating_failure() ? 1 : 0;
}

std::uint64_t SeededStream::below(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::PreconditionViolated, "empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

std::uint64_t campaign_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

unsigned workers_from_env() {
  const char* s = std::getenv("HYPERSPLIT_WORKERS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v <= 0) fail(ErrorKind::ConfigParse, "HYPERSPLIT_WORKERS must be a positive integer");
  return static_cast<unsigned>(std::min<long>(v, 256));
}

Report run_verification(const RunConfig& config, const RunOptions& options) {
  struct Planned {
    std::string id;
    CaseTask task;
  };
  std::vector<Planned> tasks;
  Report report;
  report.seed = config.seed;
  for (const auto& c : config.cases) {
    if (!find_identity(c.id)) fail(ErrorKind::UnknownIdentity, "unknown identity '" + c.id + "'");
  }
  for (const auto& c : config.cases) {
    Campaign camp = plan_campaign(c, campaign_seed(config.seed, c.id));
    for (auto& n : camp.notes) report.notes.emplace_back(c.id, std::move(n));
    for (auto& t : camp.tasks) tasks.push_back({c.id, std::move(t)});
  }

  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      CaseRecord rec;
      try {
        rec = tasks[i].task();
      } catch (const Error& e) {
        rec.case_id = tasks[i].id;
        rec.status = CaseStatus::Error;
        rec.note = e.what();
      } catch (const std::exception& e) {
        rec.case_id = tasks[i].id;
        rec.status = CaseStatus::Error;
        rec.note = std::string("runtime error: ") + e.what();
      }
      rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      report.records[i] = std::move(rec);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

std::string report_json(const Report& report, bool timing) {
  using json = nlohmann::ordered_json;
  json j;
  j["artifact"] = "hypersplit";
  j["version"] = std::string(kArtifactVersion);
  j["seed"] = report.seed;
  j["summary"] = {{"total", report.records.size()},
                  {"pass", report.count(CaseStatus::Pass)},
                  {"fail", report.count(CaseStatus::Fail)},
                  {"error", report.count(CaseStatus::Error)},
                  {"not_applicable", report.count(CaseStatus::NotApplicable)},
                  {"exit_code", report.exit_code()}};
  json notes = json::array();
  for (const auto& [id, text] : report.notes) notes.push_back({{"case_id", id}, {"note", text}});
  j["notes"] = notes;
  json recs = json::array();
  for (const auto& r : report.records) {
    json x = {{"case_id", r.case_id}, {"q_or_p", r.q_or_p},   {"inputs", r.inputs},
              {"lhs", r.lhs},         {"rhs", r.rhs},         {"residual", r.residual},
              {"status", std::string(status_name(r.status))}, {"gating", r.gating}};
    if (!r.note.empty()) x["note"] = r.note;
    if (timing) x["elapsed_ms"] = r.elapsed_ms;
    recs.push_back(std::move(x));
  }
  j["records"] = recs;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const Report& report) {
  std::ostringstream os;
  os << "case_id,q_or_p,inputs,lhs,rhs,residual,pass\n";
  for (const auto& r : report.records) {
    std::string pass = r.status == CaseStatus::Pass ? "true" : r.status == CaseStatus::NotApplicable ? "n/a" : "false";
    os << csv_field(r.case_id) << ',' << csv_field(r.q_or_p) << ',' << csv_field(r.inputs) << ','
       << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << csv_field(r.residual) << ',' << pass << '\n';
  }
  return os.str();
}

}  // namespace hypersplit
