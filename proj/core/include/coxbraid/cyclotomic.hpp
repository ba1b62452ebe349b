#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coxbraid/polynomial.hpp"
#include "coxbraid/rational.hpp"

namespace coxbraid {

class FieldElement;

// The real cyclotomic field Q(c) with c = 2cos(2pi/N). Elements are
// polynomials in c reduced modulo the minimal polynomial of c, which is
// extracted from the cyclotomic polynomial Phi_N via the substitution
// Phi_N(x) = x^(phi(N)/2) * psi_N(x + 1/x). Instances are interned and
// immutable, so they can be shared freely across threads.
class RealCyclotomicField {
 public:
  static const RealCyclotomicField* get(long modulus);

  long modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const poly::Poly& minpoly() const { return minpoly_; }
  // Open rational interval containing c and no other root of minpoly.
  const Rational& interval_lo() const { return lo_; }
  const Rational& interval_hi() const { return hi_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement generator() const;  // c itself
  // 2cos(2pi k / N) as the Chebyshev-style polynomial p_k(c).
  FieldElement cos_value(long k) const;

  // Image of the generator of the subfield Q(2cos(2pi/m)), m | N.
  FieldElement subfield_generator(long m) const;

 private:
  explicit RealCyclotomicField(long modulus);

  long modulus_;
  poly::Poly minpoly_;
  Rational lo_, hi_;
  int sign_at_lo_;  // sign of minpoly at lo_ (nonzero)
  // c^deg .. c^(2deg-2) reduced mod minpoly, for multiplication.
  std::vector<std::vector<Rational>> power_table_;

  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement() : field_(nullptr) {}
  FieldElement(const RealCyclotomicField* field, std::vector<Rational> coeffs);

  const RealCyclotomicField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;      // true iff all coeffs beyond degree 0 vanish
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  // Exact sign of the real embedding at the distinguished root: symbolic zero
  // test first, then adaptive refinement of the isolating interval.
  int sign() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const RealCyclotomicField* field_;
  std::vector<Rational> coeffs_;  // size == field degree
};

// Maps x living in Q(2cos(2pi/m)) into Q(2cos(2pi/N)) for m | N.
FieldElement embed(const FieldElement& x, const RealCyclotomicField* target);

}  // namespace coxbraid
