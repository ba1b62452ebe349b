#include "coxbraid/involutions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxbraid {

bool is_involution(const GroupElement& w) {
  GroupElement sq = w * w;
  return sq.untwisted_part_trivial();
}

namespace {

// The twisted setting produces orbits generated by elements with w^2 in
// Omega whose other members square outside Omega (conjugating moves the
// square within its class). The min/max machinery applies to the whole
// orbit, so the precondition accepts conjugates of strict involutions.
bool involution_like(const GroupElement& w) {
  if (is_involution(w)) return true;
  if (w.twist() == 0) return false;  // untwisted squares stay untwisted
  for (const auto& u : conjugacy_class(w))
    if (is_involution(u)) return true;
  return false;
}

}  // namespace

std::vector<int> minus_one_roots(const GroupElement& w) {
  std::vector<int> out;
  for (int k = 1; k <= w.rs()->num_positive(); ++k)
    if (w.apply(k) == -k) {
      out.push_back(k);
      out.push_back(-k);
    }
  return out;
}

namespace {

// Positive roots of the standard parabolic subsystem on J.
std::vector<int> parabolic_positive(const RootSystem* rs, const ParabolicIndex& J) {
  std::vector<char> in_j(rs->rank(), 0);
  for (int j : J) in_j[j] = 1;
  std::vector<int> out;
  for (int k = 0; k < rs->num_positive(); ++k) {
    bool inside = true;
    for (int s : rs->support(k))
      if (!in_j[s]) { inside = false; break; }
    if (inside) out.push_back(k);
  }
  return out;
}

}  // namespace

bool involution_minmax_check(const GroupElement& w, const ParabolicIndex& J, bool maximal) {
  if (!involution_like(w)) throw std::invalid_argument("w^2 must lie in Omega");
  const RootSystem* rs = w.rs();
  for (int k : parabolic_positive(rs, J)) {
    bool inverted = w.apply(k + 1) < 0;
    if (maximal) {
      // R_w cap JR+ == JR+ \ R^w: inverted iff not fixed
      bool fixed = w.apply(k + 1) == k + 1;
      if (inverted == fixed) return false;
    } else {
      // R_w cap JR+ == JR+ cap R_-1^w
      bool minus = w.apply(k + 1) == -(k + 1);
      if (inverted != minus) return false;
    }
  }
  return true;
}

InvolutionForm involution_explicit_form(const GroupElement& w, const ParabolicIndex& J,
                                        bool maximal) {
  if (!involution_like(w)) throw std::invalid_argument("w^2 must lie in Omega");
  const RootSystem* rs = w.rs();
  InvolutionForm form;
  // J' = { s_j in J : s_j w s_j = w and ell(w s_j) > ell(w) (max) /
  //                                    ell(w s_j) < ell(w) (min) }
  for (int j : J) {
    GroupElement s = GroupElement::simple(rs, j);
    if (!(s * w * s == w)) continue;
    int lw = w.length();
    int lws = (w * s).length();
    if ((maximal && lws > lw) || (!maximal && lws < lw)) form.J_prime.push_back(j);
  }
  // w = w^{J'} w_{J'} with w_{J'} the longest element of W_{J'}; in the
  // maximal case the coset representative absorbs it upwards
  // (ell(w) = ell(w^{J'}) - ell(w_{J'})), in the minimal case reducedly.
  form.parabolic_part = GroupElement::longest(rs, form.J_prime);
  form.coset_rep = w * form.parabolic_part;  // w_{J'} is an involution

  form.valid = true;
  // (1) coset_rep is an involution
  if (!is_involution(form.coset_rep)) form.valid = false;
  // (2) max/min double coset representative in W_J x W_{J'}: extremal
  // against J on the left and J' on the right
  if (form.valid) {
    for (int j : J) {
      int l = form.coset_rep.length();
      int ls = (GroupElement::simple(rs, j) * form.coset_rep).length();
      if (!(maximal ? ls < l : ls > l)) { form.valid = false; break; }
    }
  }
  if (form.valid) {
    for (int j : form.J_prime) {
      int l = form.coset_rep.length();
      int ls = (form.coset_rep * GroupElement::simple(rs, j)).length();
      if (!(maximal ? ls < l : ls > l)) { form.valid = false; break; }
    }
  }
  // (3) coset_rep permutes the simple reflections of J' by conjugation
  if (form.valid) {
    for (int j : form.J_prime) {
      GroupElement conj = form.coset_rep * GroupElement::simple(rs, j) * form.coset_rep.inverse();
      bool ok = false;
      for (int j2 : form.J_prime)
        if (conj == GroupElement::simple(rs, j2)) ok = true;
      if (!ok) { form.valid = false; break; }
    }
  }
  // (4) JR+ cap J'R+ equals JR+ cap R^w (max) / JR+ cap R_-1^w (min)
  if (form.valid) {
    std::vector<char> in_jp(rs->num_positive(), 0);
    for (int k : parabolic_positive(rs, form.J_prime)) in_jp[k] = 1;
    for (int k : parabolic_positive(rs, J)) {
      bool lhs = in_jp[k];
      bool rhs = maximal ? w.apply(k + 1) == k + 1 : w.apply(k + 1) == -(k + 1);
      if (lhs != rhs) { form.valid = false; break; }
    }
  }
  // (5) the factorisation recomposes with the right length bookkeeping
  if (form.valid) {
    if (!(form.coset_rep * form.parabolic_part == w)) form.valid = false;
    int expected = maximal ? form.coset_rep.length() - form.parabolic_part.length()
                           : form.coset_rep.length() + form.parabolic_part.length();
    if (w.length() != expected) form.valid = false;
  }
  return form;
}

std::vector<InvolutionOrbit> classify_involution_orbits(const RootSystem* rs,
                                                        const ParabolicIndex& J, size_t cap) {
  std::vector<GroupElement> all = enumerate_group(rs, false, cap);
  ElementSet assigned;
  std::vector<InvolutionOrbit> orbits;
  std::sort(all.begin(), all.end(), [](const GroupElement& a, const GroupElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  for (const auto& w : all) {
    if (!is_involution(w)) continue;
    if (assigned.count(w)) continue;
    std::vector<GroupElement> orbit = conjugacy_class(w, J);
    for (const auto& u : orbit) assigned.insert(u);
    InvolutionOrbit rec;
    rec.orbit_size = orbit.size();
    // minimal length, then lexicographically least canonical word
    const GroupElement* best = &orbit[0];
    for (const auto& u : orbit) {
      if (u.length() < best->length() ||
          (u.length() == best->length() && u.canonical_word() < best->canonical_word()))
        best = &u;
    }
    rec.representative = *best;
    rec.min_form = involution_explicit_form(rec.representative, J, false);
    orbits.push_back(std::move(rec));
  }
  std::sort(orbits.begin(), orbits.end(), [](const InvolutionOrbit& a, const InvolutionOrbit& b) {
    if (a.representative.length() != b.representative.length())
      return a.representative.length() < b.representative.length();
    return a.representative < b.representative;
  });
  return orbits;
}

}  // namespace coxbraid
