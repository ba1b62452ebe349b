#pragma once

#include <vector>

#include "coxbraid/rational.hpp"

namespace coxbraid {

// Dense univariate polynomials over Q, coefficient 0 first. Only what the
// cyclotomic construction and root isolation need.
namespace poly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
// Division with remainder; denominators appear only through the divisor's
// leading coefficient.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);
Rational eval(const Poly& p, const Rational& x);

// Number of distinct real roots in (a, b], via a Sturm chain. The polynomial
// must be squarefree and nonzero at both endpoints.
struct SturmChain {
  std::vector<Poly> chain;
  explicit SturmChain(const Poly& p);
  int sign_variations(const Rational& x) const;
  int count_roots(const Rational& a, const Rational& b) const;
};

}  // namespace poly
}  // namespace coxbraid
