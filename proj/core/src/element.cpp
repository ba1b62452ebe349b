#include "coxbraid/element.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxbraid {

GroupElement GroupElement::identity(const RootSystem* rs) {
  std::vector<int16_t> perm(rs->num_positive());
  for (int k = 0; k < rs->num_positive(); ++k) perm[k] = static_cast<int16_t>(k + 1);
  return GroupElement(rs, 0, std::move(perm));
}

GroupElement GroupElement::simple(const RootSystem* rs, int i) {
  std::vector<int16_t> perm(rs->num_positive());
  for (int k = 0; k < rs->num_positive(); ++k)
    perm[k] = static_cast<int16_t>(rs->reflect(i, k + 1));
  return GroupElement(rs, 0, std::move(perm));
}

GroupElement GroupElement::twist_element(const RootSystem* rs, int t) {
  std::vector<int16_t> perm(rs->num_positive());
  for (int k = 0; k < rs->num_positive(); ++k)
    perm[k] = static_cast<int16_t>(rs->twist_apply(t, k + 1));
  return GroupElement(rs, t, std::move(perm));
}

GroupElement GroupElement::from_word(const RootSystem* rs, int twist,
                                     const std::vector<int>& word) {
  GroupElement w = twist_element(rs, twist);
  for (int letter : word) {
    if (letter < 1 || letter > rs->rank())
      throw std::invalid_argument("word letter out of range: " + std::to_string(letter));
    w = w * simple(rs, letter - 1);
  }
  return w;
}

GroupElement GroupElement::reflection_in_root(const RootSystem* rs, int pos_index) {
  const FVec& beta = rs->root_coords(pos_index);
  const FieldElement& norm = rs->root_norm(pos_index);
  std::vector<int16_t> perm(rs->num_positive());
  for (int k = 0; k < rs->num_positive(); ++k) {
    FieldElement c = rs->inner(rs->root_coords(k), beta) / norm;
    FVec img = fvec_sub(rs->root_coords(k), fvec_scale(beta, c + c));
    auto idx = rs->find_root(img);
    assert(idx.has_value());
    perm[k] = static_cast<int16_t>(*idx);
  }
  return GroupElement(rs, 0, std::move(perm));
}

GroupElement GroupElement::longest(const RootSystem* rs, const ParabolicIndex& J) {
  GroupElement w = identity(rs);
  for (;;) {
    bool moved = false;
    for (int i : J) {
      if (!w.right_descent(i)) {
        // ascend while possible, keeping letters within J
        w = w * simple(rs, i);
        moved = true;
      }
    }
    if (!moved) break;
  }
  return w;
}

GroupElement GroupElement::longest(const RootSystem* rs) {
  ParabolicIndex all(rs->rank());
  std::iota(all.begin(), all.end(), 0);
  return longest(rs, all);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  assert(rs_ == o.rs_);
  std::vector<int16_t> perm(perm_.size());
  for (size_t k = 0; k < perm.size(); ++k)
    perm[k] = static_cast<int16_t>(apply(o.perm_[k]));
  return GroupElement(rs_, rs_->twist_compose(twist_, o.twist_), std::move(perm));
}

GroupElement GroupElement::inverse() const {
  std::vector<int16_t> perm(perm_.size());
  for (size_t k = 0; k < perm_.size(); ++k) {
    int img = perm_[k];
    if (img > 0)
      perm[img - 1] = static_cast<int16_t>(k + 1);
    else
      perm[-img - 1] = static_cast<int16_t>(-(k + 1));
  }
  return GroupElement(rs_, rs_->twist_inverse(twist_), std::move(perm));
}

GroupElement GroupElement::conjugated_by(const GroupElement& tau) const {
  return tau * *this * tau.inverse();
}

bool GroupElement::is_identity() const {
  if (twist_ != 0) return false;
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

bool GroupElement::untwisted_part_trivial() const {
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != rs_->twist_apply(twist_, static_cast<int>(k) + 1)) return false;
  return true;
}

GroupElement GroupElement::untwisted_part() const {
  return twist_element(rs_, rs_->twist_inverse(twist_)) * *this;
}

int GroupElement::length() const {
  int l = 0;
  for (int16_t img : perm_)
    if (img < 0) ++l;
  return l;
}

std::vector<int> GroupElement::inversion_set() const {
  std::vector<int> inv;
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] < 0) inv.push_back(static_cast<int>(k));
  return inv;
}

std::vector<int> GroupElement::fixed_roots() const {
  std::vector<int> fixed;
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] == static_cast<int>(k) + 1) {
      fixed.push_back(static_cast<int>(k) + 1);
      fixed.push_back(-(static_cast<int>(k) + 1));
    }
  std::sort(fixed.begin(), fixed.end());
  return fixed;
}

std::vector<int> GroupElement::stable_roots() const {
  // A root is stable iff its whole <w>-orbit keeps one sign.
  int P = static_cast<int>(perm_.size());
  std::vector<int> stable;
  std::vector<char> seen(P, 0);
  for (int k = 0; k < P; ++k) {
    if (seen[k]) continue;
    // Walk the orbit of +(k+1) until the underlying positive root repeats.
    std::vector<int> orbit;
    int r = k + 1;
    do {
      orbit.push_back(r);
      seen[std::abs(r) - 1] = 1;
      r = apply(r);
    } while (std::abs(r) != k + 1);
    bool same_sign = true;
    // The orbit of the underlying line: signs along one period, plus the
    // return sign which tells whether the second period flips.
    for (int x : orbit)
      if ((x > 0) != (orbit[0] > 0)) same_sign = false;
    if (r != orbit[0]) same_sign = false;  // returned with flipped sign
    if (same_sign) {
      for (int x : orbit) {
        stable.push_back(std::abs(x));
        stable.push_back(-std::abs(x));
      }
    }
  }
  std::sort(stable.begin(), stable.end());
  return stable;
}

int GroupElement::num_fixed_roots() const {
  int n = 0;
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] == static_cast<int>(k) + 1) n += 2;
  return n;
}

long GroupElement::order() const {
  int P = static_cast<int>(perm_.size());
  std::vector<char> seen(P, 0);
  long ord = 1;
  for (int k = 0; k < P; ++k) {
    if (seen[k]) continue;
    int r = k + 1;
    long period = 0;
    do {
      seen[std::abs(r) - 1] = 1;
      r = apply(r);
      ++period;
    } while (std::abs(r) != k + 1);
    if (r != k + 1) period *= 2;  // sign flip doubles the period
    ord = std::lcm(ord, period);
  }
  return ord;
}

bool GroupElement::left_descent(int i) const {
  // ell(s_i w) < ell(w) iff w^-1(alpha_i) < 0 iff alpha_i in w(R_-)...
  // directly: s_i w has fewer inversions iff w^-1(alpha_i) is negative.
  // w^-1(alpha_i) < 0 iff alpha_i = w(beta) for some negative beta.
  for (size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] == i + 1) return false;
    if (perm_[k] == -(i + 1)) return true;
  }
  return false;
}

bool GroupElement::right_descent(int i) const { return perm_[i] < 0; }

std::vector<int> GroupElement::canonical_word() const {
  GroupElement u = untwisted_part();
  std::vector<int> word;
  while (!u.is_identity()) {
    int i = 0;
    while (!u.left_descent(i)) ++i;
    word.push_back(i + 1);
    u = simple(rs_, i) * u;
  }
  return word;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  if (twist_ != 0) os << "d" << twist_ << ":";
  std::vector<int> word = canonical_word();
  if (word.empty() && twist_ == 0) return "e";
  for (size_t i = 0; i < word.size(); ++i) {
    if (i || twist_ != 0) os << (i ? " " : " ");
    os << word[i];
  }
  return os.str();
}

FMat GroupElement::matrix(long modulus) const {
  const Geometry& geo = rs_->geometry(modulus);
  const auto* f = geo.field;
  int n = rs_->rank();
  FMat m = fmat_zero(f, n, n);
  for (int j = 0; j < n; ++j) {
    int img = perm_[j];  // image of alpha_j
    const FVec& coords = geo.pos_roots[std::abs(img) - 1];
    for (int i = 0; i < n; ++i) m[i][j] = img > 0 ? coords[i] : -coords[i];
  }
  return m;
}

size_t GroupElement::hash() const {
  size_t h = 1469598103934665603ull ^ static_cast<size_t>(twist_);
  for (int16_t x : perm_) {
    h ^= static_cast<size_t>(static_cast<uint16_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

InversionData inversion_data(const GroupElement& w) {
  InversionData d;
  d.inversions = w.inversion_set();
  d.fixed = w.fixed_roots();
  d.stable = w.stable_roots();
  d.ell = static_cast<int>(d.inversions.size());
  d.ell_f = static_cast<int>(d.fixed.size());
  return d;
}

RootSet stable_root_set(const GroupElement& w) {
  auto v = w.stable_roots();
  return RootSet(v.begin(), v.end());
}

RootSet fixed_root_set(const GroupElement& w) {
  auto v = w.fixed_roots();
  return RootSet(v.begin(), v.end());
}

std::optional<ParabolicIndex> stable_parabolic(const GroupElement& w) {
  return standard_parabolic_set(*w.rs(), stable_root_set(w));
}

bool is_convex(const GroupElement& w) { return stable_parabolic(w).has_value(); }

bool is_firmly_convex(const GroupElement& w) {
  if (!is_convex(w)) return false;
  return w.stable_roots() == w.fixed_roots();
}

GroupElement power_bound(const GroupElement& w) {
  auto J = stable_parabolic(w);
  if (!J) throw std::domain_error("power_bound needs a convex element");
  const RootSystem* rs = w.rs();
  return GroupElement::longest(rs) * GroupElement::longest(rs, *J);
}

bool is_elliptic(const GroupElement& w) {
  // No nonzero fixed vectors: ker(id - w) = 0 over the base field.
  FMat m = w.matrix(w.rs()->field()->modulus());
  FMat diff = fmat_sub(fmat_identity(w.rs()->field(), w.rs()->rank()), m);
  return rank(std::move(diff)) == w.rs()->rank();
}

GroupElement parse_element(const RootSystem* rs, const std::string& text) {
  int twist = 0;
  std::string rest = text;
  size_t colon = text.find(':');
  if (colon != std::string::npos) {
    std::string head = text.substr(0, colon);
    size_t a = head.find_first_not_of(" \t");
    if (a == std::string::npos || head[a] != 'd')
      throw std::invalid_argument("bad twist prefix at position 0 in '" + text + "'");
    try {
      twist = std::stoi(head.substr(a + 1));
    } catch (...) {
      throw std::invalid_argument("bad twist index in '" + text + "'");
    }
    if (twist < 0 || twist >= rs->num_twists())
      throw std::invalid_argument("twist d" + std::to_string(twist) + " does not exist for " +
                                  rs->type().str());
    rest = text.substr(colon + 1);
  }
  std::vector<int> word;
  std::istringstream in(rest);
  std::string tok;
  size_t pos = colon == std::string::npos ? 0 : colon + 1;
  while (in >> tok) {
    if (tok == "e" && word.empty()) continue;  // the identity, as printed
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      word.push_back(v);
    } catch (...) {
      throw std::invalid_argument("bad word token '" + tok + "' near position " +
                                  std::to_string(pos) + " in '" + text + "'");
    }
    pos += tok.size() + 1;
  }
  return GroupElement::from_word(rs, twist, word);
}

}  // namespace coxbraid
