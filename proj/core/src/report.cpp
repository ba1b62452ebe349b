#include "coxbraid/report.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>

#include <json.hpp>

namespace coxbraid {

namespace {

std::string word_str(const GroupElement& w) {
  std::string s = w.str();
  return s;
}

const GroupElement* canonical_rep(const std::vector<GroupElement>& layer) {
  const GroupElement* best = nullptr;
  for (const auto& w : layer) {
    if (!best || w.canonical_word() < best->canonical_word()) best = &w;
  }
  return best;
}

ClassReport build_report(const std::vector<GroupElement>& cls) {
  ClassReport r;
  r.size = cls.size();
  r.order = cls[0].order();
  r.ell_f = cls[0].num_fixed_roots();
  r.elliptic = is_elliptic(cls[0]);
  r.ell_min = cls[0].length();
  r.ell_max = cls[0].length();
  for (const auto& w : cls) {
    r.ell_min = std::min(r.ell_min, w.length());
    r.ell_max = std::max(r.ell_max, w.length());
  }
  std::vector<GroupElement> min_layer;
  for (const auto& w : cls)
    if (w.length() == r.ell_min) min_layer.push_back(w);
  GroupElement flag_rep = *canonical_rep(min_layer);
  r.rep = word_str(flag_rep);

  // Dominant elements only need inspecting among the firmly convex ones.
  std::vector<GroupElement> dom;
  for (const auto& w : cls) {
    if (!is_firmly_convex(w)) continue;
    if (is_dominant(w)) dom.push_back(w);
  }
  r.dom_count = dom.size();
  if (!dom.empty()) {
    int dmin = dom[0].length(), dmax = dom[0].length();
    for (const auto& w : dom) {
      dmin = std::min(dmin, w.length());
      dmax = std::max(dmax, w.length());
    }
    r.ell_dom_min = dmin;
    r.ell_dom_max = dmax;
    std::vector<GroupElement> dom_min;
    for (const auto& w : dom)
      if (w.length() == dmin) dom_min.push_back(w);
    flag_rep = *canonical_rep(dom_min);
    r.dom_min_rep = word_str(flag_rep);
  }
  r.rep_convex = is_convex(flag_rep);
  r.rep_firmly_convex = r.rep_convex && is_firmly_convex(flag_rep);
  r.rep_dominant = is_dominant(flag_rep);
  r.rep_quasiregular = is_quasiregular(flag_rep);
  if (r.rep_convex) {
    auto be = braid_equation(flag_rep);
    if (be.satisfied) r.braid_witness_d = be.witness_d;
  }
  return r;
}

}  // namespace

std::vector<ClassReport> classify(const RootSystem* rs, const ClassifyOptions& opt) {
  std::vector<GroupElement> all = enumerate_group(rs, false, opt.cap);
  if (opt.twist > 0) {
    // include every coset d^k W~ of the cyclic group generated by the twist
    std::vector<GroupElement> extended = all;
    int t = opt.twist;
    while (t != 0) {
      GroupElement d = GroupElement::twist_element(rs, t);
      for (const auto& w : all) extended.push_back(d * w);
      t = rs->twist_compose(opt.twist, t);
      if (t == opt.twist) break;  // safety against non-cyclic composition
    }
    all = std::move(extended);
  }

  ParabolicIndex J;
  if (opt.parabolic)
    J = *opt.parabolic;
  else {
    J.resize(rs->rank());
    for (int i = 0; i < rs->rank(); ++i) J[i] = i;
  }

  // Partition into W_J-conjugation orbits.
  ElementSet assigned;
  std::vector<std::vector<GroupElement>> classes;
  std::sort(all.begin(), all.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  for (const auto& w : all) {
    if (assigned.count(w)) continue;
    std::vector<GroupElement> cls = conjugacy_class(w, J);
    for (const auto& u : cls) assigned.insert(u);
    classes.push_back(std::move(cls));
  }

  std::vector<ClassReport> reports(classes.size());
  if (opt.jobs <= 1) {
    for (size_t i = 0; i < classes.size(); ++i) reports[i] = build_report(classes[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= classes.size()) return;
        reports[i] = build_report(classes[i]);
      }
    };
    std::vector<std::future<void>> futs;
    for (int t = 0; t < opt.jobs; ++t) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
  }

  std::sort(reports.begin(), reports.end(), [](const ClassReport& a, const ClassReport& b) {
    if (a.ell_min != b.ell_min) return a.ell_min < b.ell_min;
    return a.rep < b.rep;
  });
  return reports;
}

std::string class_reports_csv(const std::vector<ClassReport>& reports) {
  std::ostringstream os;
  os << "rep,size,order,ell_f,elliptic,ell_min,ell_max,dom_count,ell_dom_min,ell_dom_max,"
        "dom_min_rep,convex,firmly_convex,dominant,quasiregular,braid_witness_d\n";
  auto opt_str = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : reports) {
    os << '"' << r.rep << '"' << ',' << r.size << ',' << r.order << ',' << r.ell_f << ','
       << (r.elliptic ? 1 : 0) << ',' << r.ell_min << ',' << r.ell_max << ',' << r.dom_count
       << ',' << opt_str(r.ell_dom_min) << ',' << opt_str(r.ell_dom_max) << ',' << '"'
       << r.dom_min_rep << '"' << ',' << (r.rep_convex ? 1 : 0) << ','
       << (r.rep_firmly_convex ? 1 : 0) << ',' << (r.rep_dominant ? 1 : 0) << ','
       << (r.rep_quasiregular ? 1 : 0) << ',' << opt_str(r.braid_witness_d) << '\n';
  }
  return os.str();
}

std::string class_reports_json(const RootSystem* rs, const std::vector<ClassReport>& reports) {
  nlohmann::json out;
  out["schema"] = "1";
  out["type"] = rs->type().str();
  out["classes"] = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json c;
    c["rep"] = r.rep;
    c["size"] = r.size;
    c["order"] = r.order;
    c["ell_f"] = r.ell_f;
    c["elliptic"] = r.elliptic;
    c["ell_min"] = r.ell_min;
    c["ell_max"] = r.ell_max;
    c["dom_count"] = r.dom_count;
    if (r.ell_dom_min) c["ell_dom_min"] = *r.ell_dom_min;
    if (r.ell_dom_max) c["ell_dom_max"] = *r.ell_dom_max;
    if (!r.dom_min_rep.empty()) c["dom_min_rep"] = r.dom_min_rep;
    c["convex"] = r.rep_convex;
    c["firmly_convex"] = r.rep_firmly_convex;
    c["dominant"] = r.rep_dominant;
    c["quasiregular"] = r.rep_quasiregular;
    if (r.braid_witness_d) c["braid_witness_d"] = *r.braid_witness_d;
    out["classes"].push_back(std::move(c));
  }
  return out.dump(2);
}

std::string class_reports_text(const std::vector<ClassReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "[" << r.rep << "] size=" << r.size << " ord=" << r.order << " ell=" << r.ell_min
       << ".." << r.ell_max << " ell_f=" << r.ell_f << (r.elliptic ? " elliptic" : "");
    if (r.ell_dom_min)
      os << " dom=" << r.dom_count << " ell_dom=" << *r.ell_dom_min << ".." << *r.ell_dom_max;
    else
      os << " dom=0";
    if (r.braid_witness_d) os << " braid_d=" << *r.braid_witness_d;
    os << "\n";
  }
  return os.str();
}

ElementReport element_report(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  ElementReport r;
  r.word = w.str();
  r.length = w.length();
  r.order = w.order();
  r.ell_f = w.num_fixed_roots();
  for (int k : w.inversion_set()) r.inversions.push_back(rs->root_name(k + 1));
  for (int k : w.fixed_roots()) r.fixed.push_back(rs->root_name(k));
  for (int k : w.stable_roots()) r.stable.push_back(rs->root_name(k));
  r.convex = is_convex(w);
  r.firmly_convex = r.convex && is_firmly_convex(w);
  r.elliptic = is_elliptic(w);
  r.dominant = is_dominant(w);
  r.quasiregular = is_quasiregular(w);
  r.regular = is_regular(w);
  if (r.convex) r.pb_word = power_bound(w).str();
  EigenDecomposition dec = eigen_decompose(w);
  for (const auto& c : dec.components) {
    std::ostringstream os;
    os << c.theta.str() << " (dim " << c.dim() << ")";
    r.eigen_thetas.push_back(os.str());
  }
  if (auto J = centralization_certificate(w)) {
    for (int j : *J) r.centralized_parabolic.push_back(j + 1);
  }
  return r;
}

std::string element_report_json(const RootSystem* rs, const ElementReport& r) {
  nlohmann::json out;
  out["schema"] = "1";
  out["type"] = rs->type().str();
  out["word"] = r.word;
  out["length"] = r.length;
  out["order"] = r.order;
  out["ell_f"] = r.ell_f;
  out["inversions"] = r.inversions;
  out["fixed"] = r.fixed;
  out["stable"] = r.stable;
  out["convex"] = r.convex;
  out["firmly_convex"] = r.firmly_convex;
  out["elliptic"] = r.elliptic;
  out["dominant"] = r.dominant;
  out["quasiregular"] = r.quasiregular;
  out["regular"] = r.regular;
  if (r.pb_word) out["pb"] = *r.pb_word;
  out["eigen"] = r.eigen_thetas;
  if (!r.centralized_parabolic.empty())
    out["centralized_parabolic"] = r.centralized_parabolic;
  return out.dump(2);
}

std::string element_report_text(const ElementReport& r) {
  std::ostringstream os;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s.empty() ? "-" : s;
  };
  os << "word: " << r.word << "\n";
  os << "length: " << r.length << "  order: " << r.order << "  ell_f: " << r.ell_f << "\n";
  os << "inversions: " << join(r.inversions) << "\n";
  os << "fixed: " << join(r.fixed) << "\n";
  os << "stable: " << join(r.stable) << "\n";
  os << "convex: " << (r.convex ? "yes" : "no")
     << "  firmly_convex: " << (r.firmly_convex ? "yes" : "no")
     << "  elliptic: " << (r.elliptic ? "yes" : "no") << "\n";
  os << "dominant: " << (r.dominant ? "yes" : "no")
     << "  quasiregular: " << (r.quasiregular ? "yes" : "no")
     << "  regular: " << (r.regular ? "yes" : "no") << "\n";
  if (r.pb_word) os << "pb: " << *r.pb_word << "\n";
  os << "eigen:";
  for (const auto& t : r.eigen_thetas) os << " [" << t << "]";
  os << "\n";
  if (!r.centralized_parabolic.empty()) {
    os << "centralized parabolic:";
    for (int j : r.centralized_parabolic) os << " " << j;
    os << "\n";
  }
  return os.str();
}

}  // namespace coxbraid
