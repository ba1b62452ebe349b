// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. Runtime budgets are asserted alongside the correctness checks.

#include <chrono>
#include <iostream>
#include <thread>

#include "coxbraid/verify.hpp"
#include "oracles.hpp"

using namespace coxbraid;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, bool pass, double secs, const std::string& extra = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << name << "  (" << secs << "s)";
  if (!extra.empty()) std::cout << "  " << extra;
  std::cout << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

void run_named_suite(const std::string& label, const std::string& suite, const SuiteConfig& config,
                     double budget_secs) {
  auto start = Clock::now();
  SuiteResult result = run_suite(suite, config);
  double secs = seconds_since(start);
  std::string extra = std::to_string(result.checks) + " checks";
  for (const auto& c : result.counterexamples) extra += "\n        counterexample: " + c;
  report(label, result.pass && secs < budget_secs, secs, extra);
}

// Criterion 3 pieces that live outside the named suites.
bool cone_oracle_battery() {
  const RealCyclotomicField* q = RealCyclotomicField::get(1);
  auto qv = [&](std::initializer_list<long> xs) {
    FVec v;
    for (long x : xs) v.push_back(q->from_rational(Rational(x)));
    return v;
  };
  std::vector<long> coeffs = {-2, -1, 0, 1, 2};
  for (long a : coeffs)
    for (long b : coeffs)
      for (long c : coeffs)
        for (long d : coeffs)
          for (long e : coeffs) {
            ConeProblem p;
            p.ambient_dim = 3;
            p.subspace_basis = {qv({1, 0, 1}), qv({0, 1, -1})};
            p.strict = {qv({a, b, c}), qv({d, e, 1})};
            p.weak = {qv({b, -a, d})};
            if (cone_strictly_feasible(p).feasible != oracles::fm_feasible(p)) return false;
          }
  return true;
}

bool shift_oracle_battery() {
  for (const std::string& t : {"A2", "B2", "G2", "A3", "B3"}) {
    const RootSystem* rs = RootSystem::build(t);
    auto all = enumerate_group(rs);
    for (const auto& w : all) {
      for (ShiftKind kind : {ShiftKind::Cyclic, ShiftKind::Strong, ShiftKind::Mixed}) {
        std::vector<GroupElement> targets;
        for (auto& e : shift_steps(w, kind)) targets.push_back(e.target);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        if (targets != shift_steps_all_tau(w, kind, all)) return false;
      }
    }
  }
  return true;
}

bool greedy_oracle_battery() {
  for (const std::string& t : {"A2", "B2", "G2"}) {
    const RootSystem* rs = RootSystem::build(t);
    auto all = enumerate_group(rs);
    for (const auto& u : all)
      for (const auto& v : all) {
        if (u.is_identity() || v.is_identity()) continue;
        std::vector<int> word;
        auto wu = u.canonical_word();
        auto wv = v.canonical_word();
        word.insert(word.end(), wu.begin(), wu.end());
        word.insert(word.end(), wv.begin(), wv.end());
        if (word.size() > 9) continue;
        NormalForm nf = normal_form(BraidWord::lift(u) * BraidWord::lift(v));
        auto oracle = oracles::dgn_oracle(rs, word);
        if (nf.size() != static_cast<int>(oracle.size())) return false;
        for (int i = 1; i <= nf.size(); ++i)
          if (!(nf.factor(i) == oracle[i - 1])) return false;
      }
  }
  return true;
}

bool inversion_move_battery() {
  for (const std::string& t : {"A2", "B2", "G2"}) {
    const RootSystem* rs = RootSystem::build(t);
    std::vector<std::vector<int>> words = {{1, 2, 1}, {1, 2, 1, 2}, {2, 1, 2, 1, 2},
                                           {1, 1, 2, 2}, {2, 1, 2, 1, 2, 1}};
    for (const auto& word : words) {
      auto base = inversion_sequence_for_word(rs, 0, word);
      RootSet base_set(base.begin(), base.end());
      for (const auto& alt : oracles::braid_word_closure(rs, word)) {
        auto seq = inversion_sequence_for_word(rs, 0, alt);
        if (RootSet(seq.begin(), seq.end()) != base_set) return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = std::max(2u, std::thread::hardware_concurrency());
  if (argc > 1) jobs = std::atoi(argv[1]);
  std::cout << "== acceptance battery (jobs=" << jobs << ") ==\n";

  // 1. fixture suite, < 10 s
  {
    SuiteConfig config;
    config.jobs = jobs;
    run_named_suite("1. fixture suite", "fixtures", config, 10.0);
  }

  // 2. exhaustive rank <= 4 suites, < 5 min each
  {
    SuiteConfig config;
    config.rank_cap = 4;
    config.jobs = jobs;
    run_named_suite("2a. dominance chain + main lemma", "dominance-chain", config, 300.0);
    run_named_suite("2b. involutions", "involutions", config, 300.0);
    SuiteConfig small = config;
    small.rank_cap = 3;  // the dg-bound criterion is stated at rank <= 3
    run_named_suite("2c. dg-bound", "dg-bound", small, 300.0);
    run_named_suite("2d. theorem", "theorem", config, 300.0);
    run_named_suite("2e. braiding-dgn", "braiding-dgn", config, 300.0);
  }

  // 3. oracle batteries, < 1 min each
  {
    auto start = Clock::now();
    bool ok = greedy_oracle_battery();
    double secs = seconds_since(start);
    report("3a. greedy normal form vs word-closure oracle", ok && secs < 60.0, secs);

    start = Clock::now();
    ok = cone_oracle_battery();
    secs = seconds_since(start);
    report("3b. cone feasibility vs Fourier-Motzkin", ok && secs < 60.0, secs);

    start = Clock::now();
    ok = shift_oracle_battery();
    secs = seconds_since(start);
    report("3c. shift steps vs literal all-tau", ok && secs < 60.0, secs);

    start = Clock::now();
    ok = inversion_move_battery();
    secs = seconds_since(start);
    report("3d. inversion sequence under braid moves", ok && secs < 60.0, secs);
  }

  // 4. scale checks, < 5 min each
  {
    auto start = Clock::now();
    const RootSystem* d6 = RootSystem::build("D6");
    ClassifyOptions opt;
    opt.jobs = jobs;
    auto reports = classify(d6, opt);
    double secs = seconds_since(start);
    report("4a. classify D6", reports.size() == 37 && secs < 300.0, secs,
           std::to_string(reports.size()) + " classes");

    start = Clock::now();
    const RootSystem* e6 = RootSystem::build("E6");
    bool ok = true;
    std::vector<std::vector<int>> words = {
        {1, 2, 3, 4, 5, 6}, {1, 3, 2, 4, 5, 6, 1, 3}, {1, 2, 3, 4, 5, 6, 1, 2, 3, 4},
        {2, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 3}};
    for (const auto& word : words) {
      GroupElement w = GroupElement::from_word(e6, 0, word);
      if (w.length() > 12) continue;
      NormalForm nf = power_normal_form(w, 20);
      if (!is_right_greedy(nf) || !(nf.total_length() == 20L * w.length())) ok = false;
    }
    secs = seconds_since(start);
    report("4b. dgn of b_w^20 in E6", ok && secs < 300.0, secs);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
