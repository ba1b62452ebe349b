#pragma once

#include <functional>
#include <optional>
#include <unordered_set>

#include "coxbraid/element.hpp"

namespace coxbraid {

using ElementSet = std::unordered_set<GroupElement, GroupElementHash>;
using ElementPredicate = std::function<bool(const GroupElement&)>;

// All elements of the untwisted group W~ (include_twists adds the other
// Omega-cosets). Throws std::length_error beyond the cap.
std::vector<GroupElement> enumerate_group(const RootSystem* rs, bool include_twists = false,
                                          size_t cap = 2'000'000);

// Closure of {w} under conjugation by the simple reflections of the standard
// parabolic subgroup on J; breadth-first, deterministic order.
std::vector<GroupElement> conjugacy_class(const GroupElement& w, const ParabolicIndex& J);
std::vector<GroupElement> conjugacy_class(const GroupElement& w);  // J = all

enum class ShiftKind { SimpleShift, Cyclic, Strong, Mixed };

struct ShiftEdge {
  ShiftKind kind;
  GroupElement conjugator;  // tau with tau * source * tau^-1 == target
  GroupElement source, target;
};

// Single shift steps out of w, with the length-preservation and
// reducedness/augmentedness side conditions of each kind:
//  - SimpleShift: tau a simple reflection, ell preserved;
//  - Cyclic: some reduced decomposition w = ab rotates to ba, ell preserved;
//  - Strong: tau with tau*w or w*tau^-1 reduced, ell preserved;
//  - Mixed: union of Cyclic and Strong.
// Conjugators may be restricted to a standard parabolic subgroup W_J.
std::vector<ShiftEdge> shift_steps(const GroupElement& w, ShiftKind kind,
                                   const std::optional<ParabolicIndex>& J = std::nullopt,
                                   bool include_loops = false);

// Elementary conjugation edges w -> s w s filtered by length comparison:
// dir > 0 keeps ell nondecreasing, dir < 0 nonincreasing, dir = 0 equal;
// strict additionally excludes equal lengths.
std::vector<ShiftEdge> elementary_steps(const GroupElement& w, int dir, bool strict,
                                        const std::optional<ParabolicIndex>& J = std::nullopt);

// The elementary conjugation by one simple reflection, classified against
// the literal side conditions of the requested kind; empty when they fail.
std::optional<ShiftEdge> shift_step(const GroupElement& w, int simple_index, ShiftKind kind);

// Closure of {w} under shift_steps of the given kind; every element of the
// closure satisfies the constraint when one is given ("in O" classes).
std::vector<GroupElement> shift_class(const GroupElement& w, ShiftKind kind,
                                      const ElementPredicate& constraint = nullptr,
                                      const std::optional<ParabolicIndex>& J = std::nullopt);

// Monotone closures under elementary steps (w +-> / w --> and the strict
// double-arrow versions).
std::vector<GroupElement> elementary_closure(const GroupElement& w, int dir, bool strict,
                                             const std::optional<ParabolicIndex>& J = std::nullopt);

// Path search in the constrained shift graph; returns the conjugator
// sequence tau_0, ..., tau_n (applied in this order) when w' is reachable.
std::optional<std::vector<GroupElement>> transporter_search(
    const GroupElement& w, const GroupElement& target, ShiftKind kind,
    const ElementPredicate& constraint = nullptr,
    const std::optional<ParabolicIndex>& J = std::nullopt);

// All products tau_n...tau_0 realised by shift paths from w to itself
// (the image of the constrained transporter in Tran(w)). Exhaustive BFS over
// (element, accumulated conjugator) pairs; small ranks only.
std::vector<GroupElement> transporter_products(const GroupElement& w, ShiftKind kind,
                                               const ElementPredicate& constraint = nullptr);

// Left weak-order divisors: all a with ell(a) + ell(a^-1 w) = ell(w).
std::vector<GroupElement> left_divisors(const GroupElement& w);

// Literal single-step shift relation, checking every tau in the conjugating
// group against the length conditions; oracle for shift_steps.
std::vector<GroupElement> shift_steps_all_tau(const GroupElement& w, ShiftKind kind,
                                              const std::vector<GroupElement>& taus);

}  // namespace coxbraid
