#pragma once

#include <optional>
#include <string>

#include "coxbraid/braid.hpp"
#include "coxbraid/eigen.hpp"

namespace coxbraid {

// Per-orbit summary used by the classify command. Layer flags are evaluated
// on the canonical (minimal, lexicographically least) representative of the
// layer in question.
struct ClassReport {
  std::string rep;  // minimal-length representative word
  size_t size = 0;
  long order = 1;
  int ell_f = 0;
  bool elliptic = false;
  int ell_min = 0;
  int ell_max = 0;
  size_t dom_count = 0;
  std::optional<int> ell_dom_min, ell_dom_max;
  std::string dom_min_rep;
  bool rep_convex = false;
  bool rep_firmly_convex = false;
  bool rep_dominant = false;
  bool rep_quasiregular = false;
  std::optional<int> braid_witness_d;  // on the dom-min rep when present
};

struct ClassifyOptions {
  int twist = 0;  // > 0: include the cosets of <d_twist> and report W~-orbits
  std::optional<ParabolicIndex> parabolic;  // orbits of W_J instead of W~
  int jobs = 1;
  size_t cap = 2'000'000;
};

std::vector<ClassReport> classify(const RootSystem* rs, const ClassifyOptions& opt = {});

std::string class_reports_csv(const std::vector<ClassReport>& reports);
std::string class_reports_json(const RootSystem* rs, const std::vector<ClassReport>& reports);
std::string class_reports_text(const std::vector<ClassReport>& reports);

// Single-element report for the element command.
struct ElementReport {
  std::string word;
  int length = 0;
  long order = 1;
  int ell_f = 0;
  std::vector<std::string> inversions;
  std::vector<std::string> fixed;
  std::vector<std::string> stable;
  bool convex = false;
  bool firmly_convex = false;
  bool elliptic = false;
  bool dominant = false;
  bool quasiregular = false;
  bool regular = false;
  std::optional<std::string> pb_word;
  std::vector<std::string> eigen_thetas;  // "k/n (dim d)"
  // parabolic whose braid submonoid is centralised by b_w^ord, when a
  // monotone braiding sequence certifies one (1-based indices)
  std::vector<int> centralized_parabolic;
};

ElementReport element_report(const GroupElement& w);
std::string element_report_json(const RootSystem* rs, const ElementReport& r);
std::string element_report_text(const ElementReport& r);

}  // namespace coxbraid
