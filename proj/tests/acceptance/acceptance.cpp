// This file is part of hypersplit.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Acceptance gate.  Runs criteria 1-16 at their stated parameters and prints
// one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion N   only N
//
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hypersplit/errors.hpp"
#include "hypersplit/harness.hpp"

using namespace hypersplit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Tally {
  std::size_t pass = 0, fail = 0, error = 0, na = 0, report_only_fail = 0;
  std::vector<std::string> problems;
};

Report run(const std::string& toml) {
  RunConfig cfg = parse_config("seed = " + std::to_string(kSeed) + "\n" + toml);
  RunOptions opts;
  opts.workers = workers_from_env();
  return run_verification(cfg, opts);
}

Tally tally(const Report& r, const std::set<std::string>& ids = {}) {
  Tally t;
  for (const auto& rec : r.records) {
    if (!ids.empty() && !ids.count(rec.case_id)) continue;
    switch (rec.status) {
      case CaseStatus::Pass: ++t.pass; break;
      case CaseStatus::NotApplicable: ++t.na; break;
      case CaseStatus::Error:
        ++t.error;
        t.problems.push_back(rec.case_id + " q=" + rec.q_or_p + " " + rec.inputs + ": " + rec.note);
        break;
      case CaseStatus::Fail:
        if (!rec.gating) {
          ++t.report_only_fail;
          break;
        }
        ++t.fail;
        t.problems.push_back(rec.case_id + " q=" + rec.q_or_p + " " + rec.inputs + " lhs=" + rec.lhs +
                             " rhs=" + rec.rhs + (rec.note.empty() ? "" : " (" + rec.note + ")"));
        break;
    }
  }
  return t;
}

std::string summary(const Tally& t) {
  std::ostringstream os;
  os << t.pass << " pass, " << t.fail << " fail, " << t.error << " error, " << t.na << " n/a";
  return os.str();
}

// Every gating record passes or is not applicable, and something ran.
Outcome all_pass(const Report& r, const std::set<std::string>& ids = {}) {
  Tally t = tally(r, ids);
  Outcome o;
  o.pass = t.fail == 0 && t.error == 0 && t.pass > 0;
  o.detail = summary(t);
  for (std::size_t i = 0; i < t.problems.size() && i < 5; ++i) o.detail += "\n    " + t.problems[i];
  return o;
}

std::size_t count(const Report& r, const std::string& id) {
  std::size_t n = 0;
  for (const auto& rec : r.records) n += rec.case_id == id;
  return n;
}

// Integer values of the campaign's lhs column keyed by q_or_p.
std::map<long long, std::string> lhs_by_q(const Report& r) {
  std::map<long long, std::string> out;
  for (const auto& rec : r.records) out[std::stoll(rec.q_or_p)] = rec.lhs;
  return out;
}

Outcome frozen_table(const Report& r, const std::map<long long, long long>& table) {
  Outcome o = all_pass(r);
  auto got = lhs_by_q(r);
  for (auto [q, v] : table) {
    if (!got.count(q) || got[q] != std::to_string(v)) {
      o.pass = false;
      o.detail += "\n    q=" + std::to_string(q) + " expected " + std::to_string(v) + " got " +
                  (got.count(q) ? got[q] : std::string("nothing"));
    }
  }
  return o;
}

Outcome criterion(int n) {
  switch (n) {
    case 1: {
      Report r = run("[case.ff_split]\nq = [5, 7, 9, 11, 13, 17, 19, 25]\nn = [1, 2, 3, 4, 5, 6]\ndraws = 50\n");
      std::size_t expected = 0;
      for (long long q : {5, 7, 9, 11, 13, 17, 19, 25})
        for (long long d = 1; d <= 6; ++d) expected += (q - 1) % d == 0 ? 50 : 0;
      Outcome o = all_pass(r);
      if (count(r, "ff_split") != expected) {
        o.pass = false;
        o.detail += "; expected " + std::to_string(expected) + " cases";
      }
      return o;
    }
    case 2:
      return all_pass(run("[case.ff_converse]\nq = [3, 5, 7, 9, 11, 13]\n"
                          "[case.g_converse]\nq = [3, 5, 7, 9, 11, 13]\nM = 5\n"));
    case 3: {
      Report r = run(
          "[case.gauss_conjugation]\nq = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25]\n"
          "[case.hasse_davenport]\nq = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25]\n"
          "[case.orthogonality]\nq = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25]\n"
          "[case.gamma_reflection]\n[case.gamma_product]\n[case.digit_parity]\ndraws = 200\n");
      Outcome o = all_pass(r);
      if (count(r, "digit_parity") != 200) {
        o.pass = false;
        o.detail += "; digit_parity did not run 200 instances";
      }
      return o;
    }
    case 4:
      return all_pass(run("[case.g_over_Q]\np = [3, 5, 7, 11, 13]\nr = [1, 2]\nM = 5\n"));
    case 5:
      return all_pass(run("[case.g_split]\np = [3, 5, 7, 11, 13]\nr = [1, 2]\nM = 5\ndraws = 20\n"));
    case 6:
      return frozen_table(run("[case.g_phi2_values]\nq = [3, 5, 7, 9, 11, 13, 17, 25, 29, 49]\n"),
                          {{3, -1}, {5, -1}, {7, -1}, {9, -5}, {11, -1},
                           {13, 7}, {17, 3}, {25, -5}, {29, -9}, {49, -13}});
    case 7:
      return frozen_table(run("[case.g_phi3_values]\nq = [3, 5, 7, 9, 11, 13, 17, 25, 29, 49]\n"),
                          {{3, -1}, {5, -1}, {7, -7}, {9, 13}, {11, -25},
                           {13, 23}, {17, -11}, {25, 61}, {29, 71}, {49, 245}});
    case 8:
      return all_pass(run("[case.g_phi2_modular]\np = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]\n"));
    case 9:
      return all_pass(run("[case.g_phi3_modular]\np = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]\n"));
    case 10:
      return all_pass(run("[case.ono_elliptic]\n"
                          "t = [\"1\", \"3\", \"5\", \"8\", \"7/2\", \"9/2\", \"65/16\", \"63/16\"]\n"
                          "p = [5, 7, 11, 13, 17, 19, 23, 29, 31]\n"));
    case 11:
      return all_pass(run("[case.g_phi3_twisted]\nitems = [1, 2, 3, 4]\np = [5, 7, 11, 13, 17, 19, 23]\n"));
    case 12:
      return all_pass(run("[case.trace_pair]\na = [1, 1, 2, 1]\nb = [1, 2, 1, -1]\n"
                          "p = [5, 7, 11, 13, 17, 19, 23, 29, 31]\n"
                          "[case.trace_example]\np = [5, 7, 11, 13, 17, 19, 23, 29, 31]\n"));
    case 13: {
      Report r = run("[case.g_phi4_modular]\np = [3, 5, 7, 11, 13, 17, 29]\n");
      Outcome o = all_pass(r);
      for (const auto& [id, note] : r.notes) o.detail += "\n    " + note;
      return o;
    }
    case 14: {
      Report r = run(
          "[case.ff_reduction_m2]\nq = [5, 9, 13, 17, 25]\ndraws = 20\n"
          "[case.ff_reduction_m3]\nq = [5, 9, 13, 17, 25]\ndraws = 20\n"
          "[case.ff_reduction_m4]\nq = [5, 9, 13, 17, 25]\ndraws = 20\nmode = \"both\"\n");
      Outcome o = all_pass(r, {"ff_reduction_m2", "ff_reduction_m3"});
      Tally m4 = tally(r, {"ff_reduction_m4"});
      o.detail += "; m4 report-only: " + std::to_string(m4.pass) + " pass, " + std::to_string(m4.report_only_fail) +
                  " fail (generalized 3F2 reading)";
      if (m4.error) {
        o.pass = false;
        o.detail += ", " + std::to_string(m4.error) + " error";
      }
      return o;
    }
    case 15:
      return all_pass(run("[case.classical_split]\ndraws = 20\nprec = 40\ntolerance_exp = -25\n"
                          "[case.classical_reduction_m2]\ndraws = 10\nprec = 30\ntolerance_exp = -20\n"
                          "[case.classical_reduction_m3]\ndraws = 10\nprec = 30\ntolerance_exp = -20\n"
                          "[case.classical_reduction_m4]\ndraws = 10\nprec = 30\ntolerance_exp = -20\n"));
    case 16: {
      Report r = run("[case.g_invariance]\ndraws = 150\n[case.pochhammer]\ndraws = 150\n"
                     "[case.hermite]\ndraws = 100\n[case.hasse_bound]\ndraws = 100\n");
      Outcome o = all_pass(r);
      if (r.records.size() != 500) {
        o.pass = false;
        o.detail += "; expected 500 cases, ran " + std::to_string(r.records.size());
      }
      return o;
    }
  }
  return {false, "no such criterion"};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (which.empty())
    for (int n = 1; n <= 16; ++n) which.push_back(n);

  bool ok = true;
  for (int n : which) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criterion(n);
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto cut = o.detail.find('\n');
    const std::string head = o.detail.substr(0, cut), rest = cut == std::string::npos ? "" : o.detail.substr(cut);
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " (" << head << ") [" << secs << " s]"
              << rest << std::endl;
    ok &= o.pass;
  }
  return ok ? 0 : 1;
}
