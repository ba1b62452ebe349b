// Command line surface: single-element queries, Deligne-Garside normal
// forms, per-class tables and the named verification suites.
//
// Exit codes: 0 pass, 1 fail (verify counterexamples), 2 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxbraid/verify.hpp"

using namespace coxbraid;

namespace {

struct CommonArgs {
  std::string type;
  std::string format = "text";
  std::string out_path;
};

void write_out(const CommonArgs& args, const std::string& payload) {
  if (args.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(args.out_path);
    out << payload;
  }
}

int run_element(const CommonArgs& args, const std::string& word) {
  const RootSystem* rs = RootSystem::build(args.type);
  GroupElement w = parse_element(rs, word);
  ElementReport r = element_report(w);
  if (args.format == "json")
    write_out(args, element_report_json(rs, r));
  else
    write_out(args, element_report_text(r));
  return 0;
}

int run_dgn(const CommonArgs& args, const std::string& word, int power, bool left) {
  const RootSystem* rs = RootSystem::build(args.type);
  BraidWord braid = parse_braid(rs, word);
  BraidWord powered(rs);
  for (int i = 0; i < power; ++i) powered = powered * braid;
  NormalForm nf = left ? left_normal_form(powered) : normal_form(powered);
  std::ostringstream os;
  if (args.format == "json") {
    nlohmann::json out;
    out["schema"] = "1";
    out["type"] = rs->type().str();
    out["power"] = power;
    out["factors"] = nlohmann::json::array();
    for (int i = nf.size(); i >= 1; --i) {
      nlohmann::json f;
      f["word"] = nf.factor(i).str();
      f["length"] = nf.factor(i).length();
      out["factors"].push_back(f);
    }
    os << out.dump(2);
  } else {
    os << nf.str() << "\n";
    os << "factors: " << nf.size() << "  lengths:";
    for (int i = nf.size(); i >= 1; --i) os << " " << nf.factor(i).length();
    os << "\n";
  }
  write_out(args, os.str());
  return 0;
}

int run_classify(const CommonArgs& args, const std::string& twist, const std::string& parabolic,
                 int jobs, int rank_cap) {
  const RootSystem* rs = RootSystem::build(args.type);
  if (rs->rank() > rank_cap) {
    std::cerr << "rank " << rs->rank() << " exceeds the cap " << rank_cap
              << " (raise with --rank-cap)\n";
    return 2;
  }
  ClassifyOptions opt;
  opt.jobs = jobs;
  if (!twist.empty()) {
    if (twist[0] != 'd') {
      std::cerr << "twist must look like d1\n";
      return 2;
    }
    opt.twist = std::stoi(twist.substr(1));
    if (opt.twist <= 0 || opt.twist >= rs->num_twists()) {
      std::cerr << "no such twist for " << rs->type().str() << "\n";
      return 2;
    }
  }
  if (!parabolic.empty()) {
    ParabolicIndex J;
    std::istringstream in(parabolic);
    std::string tok;
    while (std::getline(in, tok, ',')) J.push_back(std::stoi(tok) - 1);
    opt.parabolic = J;
  }
  auto reports = classify(rs, opt);
  if (args.format == "json")
    write_out(args, class_reports_json(rs, reports));
  else if (args.format == "csv")
    write_out(args, class_reports_csv(reports));
  else
    write_out(args, class_reports_text(reports));
  return 0;
}

int run_verify(const CommonArgs& args, const std::string& suite, int rank_cap, int jobs) {
  if (!is_suite_name(suite)) {
    std::cerr << "unknown suite '" << suite << "'; available:";
    for (const auto& n : suite_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  SuiteConfig config;
  config.rank_cap = rank_cap;
  config.jobs = jobs;
  if (!args.type.empty()) config.types = {args.type};
  SuiteResult result = run_suite(suite, config);
  std::ostringstream os;
  if (args.format == "json") {
    nlohmann::json out;
    out["schema"] = "1";
    out["suite"] = result.name;
    out["pass"] = result.pass;
    out["checks"] = result.checks;
    out["counterexamples"] = result.counterexamples;
    os << out.dump(2);
  } else {
    os << result.name << ": " << (result.pass ? "PASS" : "FAIL") << " (" << result.checks
       << " checks)\n";
    for (const auto& c : result.counterexamples) os << "  counterexample: " << c << "\n";
  }
  write_out(args, os.str());
  return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter/braid combinatorics toolkit"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string word;
  int power = 1;
  bool left = false;
  std::string twist, parabolic, suite;
  int jobs = 1;
  int classify_cap = 6;
  int verify_cap = 4;

  auto add_common = [&](CLI::App* cmd, bool need_type) {
    auto* t = cmd->add_option("--type", common.type, "Coxeter type, e.g. A4, B3, I2(7), A2xA1");
    if (need_type) t->required();
    cmd->add_option("--format", common.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", common.out_path, "write output to a file");
  };

  auto* element = app.add_subcommand("element", "report on a single group element");
  add_common(element, true);
  element->add_option("--word", word, "word in simple reflections, e.g. \"3 1 2 1\"");

  auto* dgn = app.add_subcommand("dgn", "Deligne-Garside normal form of a braid power");
  add_common(dgn, true);
  dgn->add_option("--word", word, "braid input, factors split by '|'");
  dgn->add_option("--power", power, "raise the braid to this power")->check(CLI::NonNegativeNumber);
  dgn->add_flag("--left", left, "left-greedy normal form instead");

  auto* cls = app.add_subcommand("classify", "per-conjugacy-class classification table");
  add_common(cls, true);
  cls->add_option("--twist", twist, "include the cosets of a twist, e.g. d1");
  cls->add_option("--parabolic", parabolic, "conjugate only by W_J, e.g. \"1,3\"");
  cls->add_option("--jobs", jobs, "worker threads");
  cls->add_option("--rank-cap", classify_cap, "refuse larger ranks");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, false);
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--rank-cap", verify_cap, "exhaustive suite rank cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (element->parsed()) return run_element(common, word);
    if (dgn->parsed()) return run_dgn(common, word, power, left);
    if (cls->parsed()) return run_classify(common, twist, parabolic, jobs, classify_cap);
    if (verify->parsed()) return run_verify(common, suite, verify_cap, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
