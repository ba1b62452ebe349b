#pragma once

#include <optional>

#include "coxbraid/conjugacy.hpp"
#include "coxbraid/element.hpp"

namespace coxbraid {

// Real eigenspace data of one element: rotation angle theta = k/ord in
// [0, 1/2] with an exact basis of V_lambda = ker(w + w^-1 - 2cos(2pi theta)).
struct EigenComponent {
  Fraction theta;
  FMat basis;  // rows are coordinate vectors in the simple-root basis
  int dim() const { return static_cast<int>(basis.size()); }
};

struct EigenDecomposition {
  long order = 1;
  const RealCyclotomicField* field = nullptr;  // Q(2cos(2pi/N)), N = lcm(ord, m0)
  std::vector<EigenComponent> components;      // theta ascending, nonzero kernels only
  FMat fixed_basis;  // V^w (the theta = 0 component; empty when elliptic)
  FMat moved_basis;  // V_w = sum of the theta > 0 components
};

EigenDecomposition eigen_decompose(const GroupElement& w);

// Ordered sequence of eigenspaces. Entries are stored in filtration order:
// entries[0] is V_1 (the first summand of F_1), entries[m-1] is V_m.
struct EigenSequence {
  const RootSystem* rs = nullptr;
  const RealCyclotomicField* field = nullptr;
  struct Entry {
    Fraction theta;
    FMat basis;
  };
  std::vector<Entry> entries;

  int length() const { return static_cast<int>(entries.size()); }
  FMat partial_span(int i) const;  // F_i basis, 0 <= i <= length
  // Positive-root indices whose hyperplanes contain F_i.
  std::vector<int> hyperplanes(int i) const;
  std::vector<int> theta_hyperplanes() const { return hyperplanes(length()); }
};

// Merged sequence from the components whose thetas lie in theta_set
// (empty set means every component). increasing = true orders the sequence
// so the first filtration step V_1 carries the largest theta (the "+"
// ordering); false gives the decreasing ("-") ordering.
EigenSequence merged_sequence(const EigenDecomposition& dec, const RootSystem* rs,
                              const std::vector<Fraction>& theta_set, bool increasing);

// Positive roots orthogonal to every vector of the basis.
std::vector<int> subspace_hyperplanes(const RootSystem& rs, const RealCyclotomicField* field,
                                      const FMat& basis);

// Does the closed dominant chamber contain a regular point of span(basis)?
bool has_regular_point_in_dominant_chamber(const RootSystem& rs, const FMat& basis);

// Good position of the dominant chamber: a regular point of every F_i.
bool good_position(const EigenSequence& seq);
// Connected-component formulation; must agree with good_position.
bool good_position_alt(const EigenSequence& seq);

struct SequenceClass {
  bool braiding = false;
  bool complete = false;
  bool anisotropic = false;
  bool increasing = false;
  bool decreasing = false;
};
SequenceClass classify_sequence(const GroupElement& w, const EigenSequence& seq);

bool is_quasiregular(const GroupElement& w);
bool is_regular(const GroupElement& w);
// Quasiregularity witnessed at the principal angle theta = 1/ord(w); this
// is the variant entering the minimal dominant length equality (the power
// w^{1/theta} argument needs 1/theta integral).
bool is_principally_quasiregular(const GroupElement& w);

// V_w = im(id - w), over the base field of the root system.
FMat moved_space(const GroupElement& w);
bool is_dominant(const GroupElement& w);

// Filters over an enumerated class.
std::vector<GroupElement> dominant_subset(const std::vector<GroupElement>& cls);
std::vector<GroupElement> minimally_dominant(const std::vector<GroupElement>& cls);
std::vector<GroupElement> maximally_dominant(const std::vector<GroupElement>& cls);

// ell(O^Theta_max/min) = 2 sum theta_i |H_{F_i-1} \ H_{F_i}|; requires a
// braiding sequence.
Rational length_formula(const EigenSequence& seq);

// The inductively defined exponents d_i' and elements vartheta_i attached to
// a sequence in good position.
struct ThetaData {
  std::vector<Fraction> d_primes;        // d_0' .. d_{m-1}'
  std::vector<GroupElement> varthetas;   // vartheta_0 .. vartheta_{m-1}
  std::vector<GroupElement> w_primes;    // w_j' = w_j w_{j+1}
  std::vector<GroupElement> parabolic_longest;  // w_0 .. w_m
};
ThetaData theta_elements(const GroupElement& w, const EigenSequence& seq);

// Searches merged eigencomponent subsets and orderings for a braiding
// sequence; anisotropic_only restricts to sequences avoiding theta = 0.
std::optional<EigenSequence> find_braiding_sequence(const GroupElement& w, bool anisotropic_only);
std::vector<EigenSequence> all_braiding_sequences(const GroupElement& w);

}  // namespace coxbraid
