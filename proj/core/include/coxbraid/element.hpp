#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coxbraid/rootsystem.hpp"

namespace coxbraid {

// Element of the twisted group Omega x| W~, stored as its twist label
// together with the total signed permutation of positive roots.
class GroupElement {
 public:
  GroupElement() : rs_(nullptr) {}

  static GroupElement identity(const RootSystem* rs);
  static GroupElement simple(const RootSystem* rs, int i);  // 0-based
  static GroupElement twist_element(const RootSystem* rs, int t);
  // Product twist * s_{w[0]} * ... * s_{w[k-1]} for a 1-based word,
  // rightmost letter applied first. The word need not be reduced.
  static GroupElement from_word(const RootSystem* rs, int twist, const std::vector<int>& word);
  static GroupElement reflection_in_root(const RootSystem* rs, int pos_index);
  // Longest element of the standard parabolic on J (0-based indices).
  static GroupElement longest(const RootSystem* rs, const ParabolicIndex& J);
  static GroupElement longest(const RootSystem* rs);

  const RootSystem* rs() const { return rs_; }
  int twist() const { return twist_; }
  bool valid() const { return rs_ != nullptr; }

  int apply(int signed_root) const {
    int img = perm_[std::abs(signed_root) - 1];
    return signed_root > 0 ? img : -img;
  }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement conjugated_by(const GroupElement& tau) const;  // tau w tau^-1

  bool is_identity() const;
  // True when the untwisted part is trivial, i.e. the action coincides with
  // the stored twist's action.
  bool untwisted_part_trivial() const;
  GroupElement untwisted_part() const;  // delta^-1 w

  int length() const;
  std::vector<int> inversion_set() const;  // positive indices (0-based)
  std::vector<int> fixed_roots() const;    // signed indices, both signs
  std::vector<int> stable_roots() const;   // signed indices, both signs
  int num_fixed_roots() const;             // ell_f, counting both signs
  long order() const;

  bool left_descent(int i) const;   // ell(s_i w) < ell(w)
  bool right_descent(int i) const;  // ell(w s_i) < ell(w)

  // Lexicographically smallest reduced word of the untwisted part (1-based).
  std::vector<int> canonical_word() const;
  std::string str() const;  // "d1: 3 1 2 1" / "3 1 2 1" / "e"

  // Action matrix in the simple-root basis, over the field Q(2cos(2pi/N)).
  FMat matrix(long modulus) const;

  bool operator==(const GroupElement& o) const {
    return twist_ == o.twist_ && perm_ == o.perm_;
  }
  std::strong_ordering operator<=>(const GroupElement& o) const {
    if (auto c = twist_ <=> o.twist_; c != 0) return c;
    return perm_ <=> o.perm_;
  }
  size_t hash() const;

  const std::vector<int16_t>& perm() const { return perm_; }

 private:
  GroupElement(const RootSystem* rs, int twist, std::vector<int16_t> perm)
      : rs_(rs), twist_(twist), perm_(std::move(perm)) {}

  const RootSystem* rs_;
  int twist_ = 0;
  std::vector<int16_t> perm_;
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// Inversion, fixed and stable root data of one element; ell_f is cached.
struct InversionData {
  std::vector<int> inversions;  // positive root indices
  std::vector<int> fixed;       // signed
  std::vector<int> stable;      // signed
  int ell = 0;
  int ell_f = 0;
};

InversionData inversion_data(const GroupElement& w);

// Positive part of the stable roots, as a sign-symmetric RootSet.
RootSet stable_root_set(const GroupElement& w);
RootSet fixed_root_set(const GroupElement& w);

bool is_convex(const GroupElement& w);
bool is_firmly_convex(const GroupElement& w);
// Standard parabolic index of the stable subsystem, when convex.
std::optional<ParabolicIndex> stable_parabolic(const GroupElement& w);

// pb(w) = w_o w_st; requires is_convex(w).
GroupElement power_bound(const GroupElement& w);

// Elliptic: no nonzero fixed vectors in the reflection representation.
bool is_elliptic(const GroupElement& w);

// Word / element parsing ("d1: 3 1 2 1"); throws std::invalid_argument with
// a position message on bad input.
GroupElement parse_element(const RootSystem* rs, const std::string& text);

}  // namespace coxbraid
