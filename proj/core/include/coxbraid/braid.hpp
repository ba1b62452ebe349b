#pragma once

#include <optional>

#include "coxbraid/eigen.hpp"
#include "coxbraid/element.hpp"

namespace coxbraid {

// Positive braid in the twisted braid monoid Omega x| Br+:
// b = twist * b_{w_m} ... b_{w_1}, factor(1) = w_1 rightmost, applied first.
// Factors are nonidentity untwisted group elements.
class BraidWord {
 public:
  BraidWord() : rs_(nullptr) {}
  explicit BraidWord(const RootSystem* rs) : rs_(rs) {}
  // The reduced braid b_w of a group element (twist split off).
  static BraidWord lift(const GroupElement& w);
  static BraidWord from_factors(const RootSystem* rs, int twist,
                                std::vector<GroupElement> factors);

  const RootSystem* rs() const { return rs_; }
  int twist() const { return twist_; }
  int size() const { return static_cast<int>(factors_.size()); }
  bool empty() const { return factors_.empty() && twist_ == 0; }
  // 1-based from the right; identity beyond the length.
  GroupElement factor(int i) const;
  const std::vector<GroupElement>& factors() const { return factors_; }

  BraidWord operator*(const BraidWord& o) const;
  BraidWord pow(int d) const;
  GroupElement group_image() const;
  long total_length() const;

  bool operator==(const BraidWord& o) const {
    return twist_ == o.twist_ && factors_ == o.factors_;
  }

  std::string str() const;  // "d1: 3 2 | 1 2 1 3 2 1" style

 private:
  const RootSystem* rs_;
  int twist_ = 0;
  std::vector<GroupElement> factors_;  // factors_[0] rightmost
};

// A BraidWord satisfying the right-greedy condition; obtained from
// normal_form and friends.
using NormalForm = BraidWord;

// Right Deligne-Garside normal form by local sliding: while some simple s
// has ell(x s) < ell(x) and ell(s y) > ell(y) for an adjacent pair (x, y),
// slide it; bubble until fixed point.
NormalForm normal_form(const BraidWord& b);
bool is_right_greedy(const BraidWord& b);

// Mirror form: factors maximal on the left.
NormalForm left_normal_form(const BraidWord& b);
bool is_left_greedy(const BraidWord& b);

// i-th Deligne-Garside factor (i >= 1, from the right) and the product of
// the first i factors.
GroupElement dg(const BraidWord& b, int i);
GroupElement dg1(const BraidWord& b);
BraidWord dg_prefix(const BraidWord& b, int i);

// DGN(b_w^d), computed incrementally power by power.
NormalForm power_normal_form(const GroupElement& w, int d);

// Stabilisation d = i (|R+ \ R_st| - ell(w) + 1) for DG_{i>=}; the returned
// prefix is verified stable by one extra power.
int stabilization_bound(const GroupElement& w, int i);
BraidWord stabilized_prefix(const GroupElement& w, int i);

// DG(b_w^d) = pb(w) for some d: decided at d = |R+ \ R_st| - ell(w) + 1 and
// reporting the least witness.
struct BraidEquationResult {
  bool satisfied = false;
  std::optional<int> witness_d;
};
BraidEquationResult braid_equation(const GroupElement& w);

// b_w^ord(w) = b_{pb(w)^-1} b_{pb(w)} by normal-form equality (untwisted w).
bool quasiregular_power_identity(const GroupElement& w);

// Right root inversion sequence of a braid along a chosen simple
// decomposition (canonical factor words by default). Entries are signed
// roots; for a reduced braid they are distinct, positive, and equal R_w.
std::vector<int> inversion_sequence(const BraidWord& b);
std::vector<int> inversion_sequence_for_word(const RootSystem* rs, int twist,
                                             const std::vector<int>& word);
RootSet inversion_set_of_braid(const BraidWord& b);

// Predicted DGN(b_w^d) for a braiding sequence, with the half-integer power
// convention b_{+-v}^(n+1/2) = b_v b_{+-v}^n; throws when the sequence is
// not braiding or some d*theta_i is not a half-integer.
NormalForm predicted_dgn(const GroupElement& w, const EigenSequence& seq, int d);

// Closed form DGN(b_w^d) = twist^d b_{d^(1-d)(w~)} ... b_{d^-1(w~)} b_{w~}
// valid when DG(b_w^2) equals the untwisted part of w (checked).
NormalForm dg_square_form(const GroupElement& w, int d);

// Braid conjugator b_{tau_n} ... b_{tau_0} of a shift path, verified to
// satisfy tau b_w = b_w' tau in the monoid.
BraidWord mixed_shift_to_braid_conjugator(const GroupElement& w,
                                          const std::vector<GroupElement>& taus);

// Right quotient b / b_v in the monoid when it exists.
std::optional<BraidWord> right_divide(const BraidWord& b, const GroupElement& v);

// When w has a monotone (increasing or decreasing) braiding sequence, the
// braid b_w^ord(w) centralises the submonoid over the last nontrivial
// filtration stabiliser. Returns that parabolic after verifying the
// commuting identities on its generators.
std::optional<ParabolicIndex> centralization_certificate(const GroupElement& w);

// Braid input syntax "d1: 1 2 | 2 1" (factors split by '|').
BraidWord parse_braid(const RootSystem* rs, const std::string& text);

}  // namespace coxbraid
