#include "coxbraid/braid.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace coxbraid {

namespace {

GroupElement twist_conj(const GroupElement& f, int t) {
  // delta_t^-1 * f * delta_t
  const RootSystem* rs = f.rs();
  GroupElement d = GroupElement::twist_element(rs, t);
  return d.inverse() * f * d;
}

}  // namespace

BraidWord BraidWord::lift(const GroupElement& w) {
  BraidWord b(w.rs());
  b.twist_ = w.twist();
  GroupElement u = w.untwisted_part();
  if (!u.is_identity()) b.factors_.push_back(std::move(u));
  return b;
}

BraidWord BraidWord::from_factors(const RootSystem* rs, int twist,
                                  std::vector<GroupElement> factors) {
  BraidWord b(rs);
  b.twist_ = twist;
  for (auto& f : factors) {
    if (f.twist() != 0) throw std::invalid_argument("braid factors must be untwisted");
    if (!f.is_identity()) b.factors_.push_back(std::move(f));
  }
  return b;
}

GroupElement BraidWord::factor(int i) const {
  if (i < 1 || i > size()) return GroupElement::identity(rs_);
  return factors_[i - 1];
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  assert(rs_ == o.rs_);
  BraidWord r(rs_);
  r.twist_ = rs_->twist_compose(twist_, o.twist_);
  r.factors_ = o.factors_;
  for (const auto& f : factors_)
    r.factors_.push_back(o.twist_ == 0 ? f : twist_conj(f, o.twist_));
  return r;
}

BraidWord BraidWord::pow(int d) const {
  BraidWord r(rs_);
  for (int i = 0; i < d; ++i) r = r * *this;
  return r;
}

GroupElement BraidWord::group_image() const {
  GroupElement g = GroupElement::twist_element(rs_, twist_);
  for (int i = size(); i >= 1; --i) g = g * factors_[i - 1];
  return g;
}

long BraidWord::total_length() const {
  long l = 0;
  for (const auto& f : factors_) l += f.length();
  return l;
}

std::string BraidWord::str() const {
  std::ostringstream os;
  if (twist_ != 0) os << "d" << twist_ << ": ";
  if (factors_.empty()) {
    os << (twist_ == 0 ? "e" : "");
  } else {
    for (int i = size(); i >= 1; --i) {
      auto word = factors_[i - 1].canonical_word();
      for (size_t j = 0; j < word.size(); ++j) os << (j ? " " : "") << word[j];
      if (i > 1) os << " | ";
    }
  }
  return os.str();
}

namespace {

// Slide letters right until the pair (x, y) is greedy; x may become the
// identity. Returns true when something moved.
bool stabilize_pair(const RootSystem* rs, GroupElement& x, GroupElement& y) {
  bool moved = false;
  for (;;) {
    int found = -1;
    for (int i = 0; i < rs->rank(); ++i) {
      if (x.right_descent(i) && !y.left_descent(i)) { found = i; break; }
    }
    if (found < 0) return moved;
    GroupElement s = GroupElement::simple(rs, found);
    x = x * s;
    y = s * y;
    moved = true;
  }
}

}  // namespace

NormalForm normal_form(const BraidWord& b) {
  const RootSystem* rs = b.rs();
  std::vector<GroupElement> fs = b.factors();
  auto drop_identities = [&fs]() {
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const GroupElement& g) { return g.is_identity(); }),
             fs.end());
  };
  drop_identities();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      if (stabilize_pair(rs, fs[i + 1], fs[i])) changed = true;
    }
    drop_identities();
  }
  return BraidWord::from_factors(rs, b.twist(), std::move(fs));
}

bool is_right_greedy(const BraidWord& b) {
  const RootSystem* rs = b.rs();
  for (const auto& f : b.factors())
    if (f.is_identity()) return false;
  for (int i = 0; i + 1 < b.size(); ++i) {
    const GroupElement& y = b.factors()[i];
    const GroupElement& x = b.factors()[i + 1];
    for (int s = 0; s < rs->rank(); ++s)
      if (x.right_descent(s) && !y.left_descent(s)) return false;
  }
  return true;
}

namespace {

bool stabilize_pair_left(const RootSystem* rs, GroupElement& x, GroupElement& y) {
  // move letters left: y = s y', x x s reduced
  bool moved = false;
  for (;;) {
    int found = -1;
    for (int i = 0; i < rs->rank(); ++i) {
      if (y.left_descent(i) && !x.right_descent(i)) { found = i; break; }
    }
    if (found < 0) return moved;
    GroupElement s = GroupElement::simple(rs, found);
    x = x * s;
    y = s * y;
    moved = true;
  }
}

}  // namespace

NormalForm left_normal_form(const BraidWord& b) {
  const RootSystem* rs = b.rs();
  std::vector<GroupElement> fs = b.factors();
  auto drop_identities = [&fs]() {
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const GroupElement& g) { return g.is_identity(); }),
             fs.end());
  };
  drop_identities();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = fs.size(); i >= 2; --i) {
      if (stabilize_pair_left(rs, fs[i - 1], fs[i - 2])) changed = true;
    }
    drop_identities();
  }
  return BraidWord::from_factors(rs, b.twist(), std::move(fs));
}

bool is_left_greedy(const BraidWord& b) {
  const RootSystem* rs = b.rs();
  for (const auto& f : b.factors())
    if (f.is_identity()) return false;
  for (int i = 0; i + 1 < b.size(); ++i) {
    const GroupElement& y = b.factors()[i];
    const GroupElement& x = b.factors()[i + 1];
    for (int s = 0; s < rs->rank(); ++s)
      if (y.left_descent(s) && !x.right_descent(s)) return false;
  }
  return true;
}

GroupElement dg(const BraidWord& b, int i) {
  if (i < 1) throw std::invalid_argument("DG index must be >= 1");
  NormalForm nf = is_right_greedy(b) ? b : normal_form(b);
  return nf.factor(i);
}

GroupElement dg1(const BraidWord& b) { return dg(b, 1); }

BraidWord dg_prefix(const BraidWord& b, int i) {
  NormalForm nf = is_right_greedy(b) ? b : normal_form(b);
  BraidWord r(b.rs());
  std::vector<GroupElement> fs;
  for (int j = 1; j <= std::min(i, nf.size()); ++j) fs.push_back(nf.factor(j));
  return BraidWord::from_factors(b.rs(), 0, std::move(fs));
}

NormalForm power_normal_form(const GroupElement& w, int d) {
  BraidWord bw = BraidWord::lift(w);
  NormalForm nf(w.rs());
  for (int i = 0; i < d; ++i) nf = normal_form(nf * bw);
  return nf;
}

int stabilization_bound(const GroupElement& w, int i) {
  int nonstable = w.rs()->num_positive() - static_cast<int>(stable_root_set(w).size()) / 2;
  return i * (nonstable - w.length() + 1);
}

BraidWord stabilized_prefix(const GroupElement& w, int i) {
  int d = stabilization_bound(w, i);
  NormalForm at_d = power_normal_form(w, d);
  NormalForm at_d1 = normal_form(at_d * BraidWord::lift(w));
  BraidWord p = dg_prefix(at_d, i);
  BraidWord p1 = dg_prefix(at_d1, i);
  if (!(p == p1)) throw std::logic_error("stabilisation bound not confirmed by extra power");
  return p;
}

BraidEquationResult braid_equation(const GroupElement& w) {
  BraidEquationResult res;
  if (!is_convex(w)) return res;
  GroupElement pbw = power_bound(w);
  int nonstable = w.rs()->num_positive() - static_cast<int>(stable_root_set(w).size()) / 2;
  int bound = nonstable - w.length() + 1;
  if (bound < 0) bound = 0;
  NormalForm nf(w.rs());
  BraidWord bw = BraidWord::lift(w);
  if (dg1(nf) == pbw) res.witness_d = 0;
  for (int d = 1; d <= bound; ++d) {
    nf = normal_form(nf * bw);
    if (!res.witness_d && dg1(nf) == pbw) res.witness_d = d;
  }
  res.satisfied = dg1(nf) == pbw;
  return res;
}

bool quasiregular_power_identity(const GroupElement& w) {
  if (w.twist() != 0) throw std::invalid_argument("untwisted elements only");
  if (!is_convex(w)) return false;
  GroupElement pbw = power_bound(w);
  NormalForm lhs = power_normal_form(w, static_cast<int>(w.order()));
  NormalForm rhs = normal_form(BraidWord::lift(pbw.inverse()) * BraidWord::lift(pbw));
  return lhs == rhs;
}

std::vector<int> inversion_sequence_for_word(const RootSystem* rs, int /*twist*/,
                                             const std::vector<int>& word) {
  // entry_t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t}) where i_1 is the
  // rightmost (first applied) letter; entries listed first-applied first.
  std::vector<int> out;
  GroupElement u = GroupElement::identity(rs);
  for (size_t t = word.size(); t-- > 0;) {
    int letter = word[t];
    out.push_back(u.apply(letter));  // letter is the positive index + 1
    u = u * GroupElement::simple(rs, letter - 1);
  }
  return out;
}

std::vector<int> inversion_sequence(const BraidWord& b) {
  std::vector<int> word;
  for (int i = b.size(); i >= 1; --i) {
    auto fw = b.factor(i).canonical_word();
    word.insert(word.end(), fw.begin(), fw.end());
  }
  return inversion_sequence_for_word(b.rs(), b.twist(), word);
}

RootSet inversion_set_of_braid(const BraidWord& b) {
  auto seq = inversion_sequence(b);
  return RootSet(seq.begin(), seq.end());
}

NormalForm predicted_dgn(const GroupElement& w, const EigenSequence& seq, int d) {
  SequenceClass cls = classify_sequence(w, seq);
  if (!cls.braiding) throw std::domain_error("predicted_dgn needs a braiding sequence");
  ThetaData data = theta_elements(w, seq);
  int m = seq.length();
  const RootSystem* rs = w.rs();

  // exponents e_i = d * d_i' must be half-integers
  std::vector<Fraction> exps;
  for (int i = 0; i < m; ++i) {
    Fraction e(d * data.d_primes[i].num, data.d_primes[i].den);
    if (e.den != 1 && e.den != 2)
      throw std::domain_error("d * theta_i is not a half-integer");
    exps.push_back(e);
  }

  std::vector<GroupElement> factors;  // rightmost first
  for (int i = 0; i < m; ++i) {
    const GroupElement& v = data.varthetas[i];
    if (v.is_identity()) continue;
    GroupElement vinv = v.inverse();
    long halves = exps[i].den == 1 ? 2 * exps[i].num : exps[i].num;
    // staircase of `halves` factors, rightmost b_v, alternating leftwards
    for (long t = 0; t < halves; ++t) factors.push_back(t % 2 == 0 ? v : vinv);
  }
  int twist_pow = 0;
  for (int i = 0; i < d; ++i) twist_pow = rs->twist_compose(w.twist(), twist_pow);
  return BraidWord::from_factors(rs, twist_pow, std::move(factors));
}

NormalForm dg_square_form(const GroupElement& w, int d) {
  const RootSystem* rs = w.rs();
  BraidWord bw = BraidWord::lift(w);
  NormalForm sq = normal_form(bw * bw);
  GroupElement wt = w.untwisted_part();
  if (!(dg1(sq) == wt))
    throw std::domain_error("dg_square_form precondition DG(b_w^2) = w~ fails");
  std::vector<GroupElement> factors;
  GroupElement cur = wt;
  int twist_pow = 0;
  for (int j = 0; j < d; ++j) {
    factors.push_back(cur);  // delta^{-j}(w~)
    cur = twist_conj(cur, w.twist());
    twist_pow = rs->twist_compose(w.twist(), twist_pow);
  }
  return BraidWord::from_factors(rs, twist_pow, std::move(factors));
}

BraidWord mixed_shift_to_braid_conjugator(const GroupElement& w,
                                          const std::vector<GroupElement>& taus) {
  const RootSystem* rs = w.rs();
  BraidWord acc(rs);
  GroupElement target = w;
  for (const auto& tau : taus) {
    acc = BraidWord::lift(tau) * acc;
    target = tau * target * tau.inverse();
  }
  NormalForm lhs = normal_form(acc * BraidWord::lift(w));
  NormalForm rhs = normal_form(BraidWord::lift(target) * acc);
  if (!(lhs == rhs)) throw std::logic_error("shift path does not conjugate the braid");
  return acc;
}

std::optional<ParabolicIndex> centralization_certificate(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  EigenDecomposition dec = eigen_decompose(w);
  int n = static_cast<int>(dec.components.size());
  std::vector<EigenSequence> candidates;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<Fraction> thetas;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) thetas.push_back(dec.components[i].theta);
    for (bool increasing : {true, false})
      candidates.push_back(merged_sequence(dec, rs, thetas, increasing));
  }
  for (const auto& seq : candidates) {
    SequenceClass cls = classify_sequence(w, seq);
    if (!cls.braiding) continue;
    if (!cls.increasing && !cls.decreasing) continue;
    // last nontrivial stabiliser of the filtration
    ParabolicIndex J;
    for (int i = seq.length(); i >= 1 && J.empty(); --i) {
      std::vector<int> h = seq.hyperplanes(i);
      RootSet hset(h.begin(), h.end());
      for (int j = 0; j < rs->rank(); ++j)
        if (hset.count(j)) J.push_back(j);
    }
    if (J.empty()) continue;
    NormalForm power = power_normal_form(w, static_cast<int>(w.order()));
    bool commutes = true;
    for (int j : J) {
      BraidWord s = BraidWord::lift(GroupElement::simple(rs, j));
      if (!(normal_form(power * s) == normal_form(s * power))) { commutes = false; break; }
    }
    if (commutes) return J;
  }
  return std::nullopt;
}

std::optional<BraidWord> right_divide(const BraidWord& b, const GroupElement& v) {
  NormalForm nf = normal_form(b);
  std::vector<int> word = v.canonical_word();
  const RootSystem* rs = b.rs();
  for (size_t t = word.size(); t-- > 0;) {
    int s = word[t] - 1;
    if (nf.size() == 0) return std::nullopt;
    GroupElement f1 = nf.factor(1);
    if (!f1.right_descent(s)) return std::nullopt;
    std::vector<GroupElement> fs = nf.factors();
    fs[0] = f1 * GroupElement::simple(rs, s);
    nf = normal_form(BraidWord::from_factors(rs, nf.twist(), std::move(fs)));
  }
  return nf;
}

BraidWord parse_braid(const RootSystem* rs, const std::string& text) {
  int twist = 0;
  std::string rest = text;
  size_t colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    size_t a = head.find_first_not_of(" \t");
    if (a == std::string::npos || head[a] != 'd')
      throw std::invalid_argument("bad twist prefix in braid '" + text + "'");
    twist = std::stoi(head.substr(a + 1));
    if (twist < 0 || twist >= rs->num_twists())
      throw std::invalid_argument("twist d" + std::to_string(twist) + " does not exist");
    rest = text.substr(colon + 1);
  }
  std::vector<GroupElement> letter_factors;
  std::string factor_text;
  std::istringstream in(rest);
  std::vector<std::vector<int>> factor_words;
  while (std::getline(in, factor_text, '|')) {
    std::istringstream fin(factor_text);
    std::vector<int> word;
    std::string tok;
    while (fin >> tok) {
      try {
        word.push_back(std::stoi(tok));
      } catch (...) {
        throw std::invalid_argument("bad braid token '" + tok + "' in '" + text + "'");
      }
    }
    if (!word.empty()) factor_words.push_back(std::move(word));
  }
  // Letters multiply as simple braids; rightmost factor is the last one.
  for (auto it = factor_words.rbegin(); it != factor_words.rend(); ++it) {
    for (auto lt = it->rbegin(); lt != it->rend(); ++lt) {
      if (*lt < 1 || *lt > rs->rank())
        throw std::invalid_argument("braid letter out of range: " + std::to_string(*lt));
      letter_factors.push_back(GroupElement::simple(rs, *lt - 1));
    }
  }
  return BraidWord::from_factors(rs, twist, std::move(letter_factors));
}

}  // namespace coxbraid
