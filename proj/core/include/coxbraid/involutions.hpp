#pragma once

#include "coxbraid/conjugacy.hpp"

namespace coxbraid {

// w^2 in Omega (the twisted notion of involution; includes the identity).
bool is_involution(const GroupElement& w);

// Roots on which w acts as -1 (signed indices).
std::vector<int> minus_one_roots(const GroupElement& w);

// Condition (b) of the max/min characterisation: R_w restricted to the
// parabolic J equals JR+ \ R^w (max) resp. JR+ cap R_-1^w (min).
bool involution_minmax_check(const GroupElement& w, const ParabolicIndex& J, bool maximal);

// Explicit coset description: J' = {s_j in J : s_j w s_j = w, ell drops /
// grows appropriately}, w = w^{J'} w_{J'} with w_{J'} the identity (max)
// or the longest element (min) of W_{J'}.
struct InvolutionForm {
  bool valid = false;  // all side conditions hold
  ParabolicIndex J_prime;
  GroupElement coset_rep;   // w^{J'}
  GroupElement parabolic_part;  // w_{J'}
};
InvolutionForm involution_explicit_form(const GroupElement& w, const ParabolicIndex& J,
                                        bool maximal);

// Exhaustive classification of involutions in W~ into J-parabolic orbits;
// one minimal-length representative per orbit, with its explicit form.
struct InvolutionOrbit {
  GroupElement representative;  // minimal length, lexicographically least
  size_t orbit_size = 0;
  InvolutionForm min_form;
};
std::vector<InvolutionOrbit> classify_involution_orbits(const RootSystem* rs,
                                                        const ParabolicIndex& J,
                                                        size_t cap = 200'000);

}  // namespace coxbraid
