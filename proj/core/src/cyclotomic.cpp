#include "coxbraid/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxbraid {
namespace poly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  assert(!b.empty());
  Poly rem = a, quo;
  trim(rem);
  int db = degree(b);
  if (degree(rem) >= db) quo.assign(rem.size() - db, Rational(0));
  while (degree(rem) >= db) {
    int d = degree(rem) - db;
    Rational c = rem.back() / b.back();
    quo[d] = c;
    for (int i = 0; i <= db; ++i) rem[d + i] -= c * b[i];
    trim(rem);
  }
  return {quo, rem};
}

Poly derivative(const Poly& p) {
  Poly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(r);
  return r;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

SturmChain::SturmChain(const Poly& p) {
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (degree(chain.back()) > 0) {
    Poly r = divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
}

int SturmChain::sign_variations(const Rational& x) const {
  int vars = 0, prev = 0;
  for (const auto& p : chain) {
    Rational v = eval(p, x);
    int s = v.sign();
    if (s != 0) {
      if (prev != 0 && s != prev) ++vars;
      prev = s;
    }
  }
  return vars;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  return sign_variations(a) - sign_variations(b);
}

}  // namespace poly

namespace {

using poly::Poly;

// Phi_N by repeated exact division of x^N - 1 by the Phi_d for proper d | N.
Poly cyclotomic_polynomial(long n) {
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phi_d = cyclotomic_polynomial(d);
    auto [q, r] = poly::divrem(num, phi_d);
    assert(r.empty());
    num = q;
  }
  return num;
}

// psi_N with Phi_N(x) = x^m psi_N(x + 1/x), m = phi(N)/2, using the
// palindromic symmetry of Phi_N and p_k(y) = x^k + x^-k.
Poly halved_cyclotomic(const Poly& phi) {
  int m = poly::degree(phi) / 2;
  Poly p_prev{Rational(2)};         // p_0 = 2
  Poly p_cur{Rational(0), Rational(1)};  // p_1 = y
  Poly result{phi[m]};
  for (int k = 1; k <= m; ++k) {
    if (k > 1) {
      Poly next = poly::sub(poly::mul(Poly{Rational(0), Rational(1)}, p_cur), p_prev);
      p_prev = p_cur;
      p_cur = next;
    }
    result = poly::add(result, poly::mul(Poly{phi[m + k]}, p_cur));
  }
  return result;
}

std::mutex g_field_mutex;
std::map<long, std::unique_ptr<RealCyclotomicField>>& field_registry() {
  static std::map<long, std::unique_ptr<RealCyclotomicField>> reg;
  return reg;
}

struct Interval {
  Rational lo, hi;
};

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval iv_mul(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

Interval iv_horner(const std::vector<Rational>& coeffs, const Interval& x) {
  Interval r{Rational(0), Rational(0)};
  for (size_t i = coeffs.size(); i-- > 0;) {
    r = iv_mul(r, x);
    r = iv_add(r, Interval{coeffs[i], coeffs[i]});
  }
  return r;
}

}  // namespace

const RealCyclotomicField* RealCyclotomicField::get(long modulus) {
  if (modulus < 1) throw std::invalid_argument("field modulus must be >= 1");
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto& reg = field_registry();
  auto it = reg.find(modulus);
  if (it == reg.end()) {
    it = reg.emplace(modulus, std::unique_ptr<RealCyclotomicField>(
                                  new RealCyclotomicField(modulus))).first;
  }
  return it->second.get();
}

RealCyclotomicField::RealCyclotomicField(long modulus) : modulus_(modulus) {
  if (modulus == 1) {
    minpoly_ = {Rational(-2), Rational(1)};  // c = 2
  } else if (modulus == 2) {
    minpoly_ = {Rational(2), Rational(1)};  // c = -2
  } else {
    minpoly_ = halved_cyclotomic(cyclotomic_polynomial(modulus));
  }
  assert(minpoly_.back() == 1);

  int deg = degree();
  if (deg == 1) {
    Rational root = -minpoly_[0];
    lo_ = root - 1;
    hi_ = root + 1;
    sign_at_lo_ = poly::eval(minpoly_, lo_).sign();
  } else {
    // All roots of psi_N are 2cos(2pi k/N), so they live in (-2, 2); the
    // distinguished root 2cos(2pi/N) is the largest one.
    poly::SturmChain sturm(minpoly_);
    Rational a(-2), b(2);
    while (sturm.count_roots(a, b) > 1) {
      Rational mid = (a + b) / 2;
      if (sturm.count_roots(mid, b) >= 1)
        a = mid;
      else
        b = mid;
    }
    // Tighten now so later sign() calls rarely need to bisect.
    for (int i = 0; i < 16; ++i) {
      Rational mid = (a + b) / 2;
      Rational v = poly::eval(minpoly_, mid);
      if (v == 0) break;
      if (v.sign() == poly::eval(minpoly_, a).sign())
        a = mid;
      else
        b = mid;
    }
    lo_ = a;
    hi_ = b;
    sign_at_lo_ = poly::eval(minpoly_, lo_).sign();
    assert(sign_at_lo_ != 0 && poly::eval(minpoly_, hi_).sign() != 0);
  }

  // Powers c^deg .. c^(2deg-2) reduced mod minpoly.
  std::vector<Rational> cur(deg, Rational(0));
  if (deg > 1) cur[1] = 1;
  else cur[0] = -minpoly_[0];
  auto shift_reduce = [&](const std::vector<Rational>& v) {
    std::vector<Rational> r(deg, Rational(0));
    for (int i = 0; i < deg - 1; ++i) r[i + 1] = v[i];
    Rational top = v[deg - 1];
    if (top != 0)
      for (int i = 0; i < deg; ++i) r[i] -= top * minpoly_[i];
    return r;
  };
  // cur currently represents c^1 (or c^0 when deg == 1).
  std::vector<Rational> p = cur;
  if (deg > 1) {
    for (int k = 2; k <= deg; ++k) p = shift_reduce(p);
    power_table_.push_back(p);  // c^deg
    for (int k = deg + 1; k <= 2 * deg - 2; ++k) {
      p = shift_reduce(p);
      power_table_.push_back(p);
    }
  }
}

FieldElement RealCyclotomicField::zero() const {
  return FieldElement(this, std::vector<Rational>(degree(), Rational(0)));
}

FieldElement RealCyclotomicField::one() const { return from_rational(Rational(1)); }

FieldElement RealCyclotomicField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return FieldElement(this, c);
}

FieldElement RealCyclotomicField::generator() const {
  std::vector<Rational> c(degree(), Rational(0));
  if (degree() == 1)
    c[0] = -minpoly_[0];
  else
    c[1] = 1;
  return FieldElement(this, c);
}

FieldElement RealCyclotomicField::cos_value(long k) const {
  long n = modulus_;
  k %= n;
  if (k < 0) k += n;
  if (k > n - k) k = n - k;  // cos symmetry
  FieldElement p_prev = from_rational(Rational(2));
  if (k == 0) return p_prev;
  FieldElement c = generator();
  FieldElement p_cur = c;
  for (long i = 2; i <= k; ++i) {
    FieldElement next = c * p_cur - p_prev;
    p_prev = p_cur;
    p_cur = next;
  }
  return p_cur;
}

FieldElement RealCyclotomicField::subfield_generator(long m) const {
  assert(modulus_ % m == 0);
  return cos_value(modulus_ / m);
}

FieldElement::FieldElement(const RealCyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  assert(static_cast<int>(coeffs_.size()) == field->degree());
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return coeffs_[0].sign();
  // Nonzero is known symbolically, so interval refinement terminates.
  Rational lo = field_->interval_lo(), hi = field_->interval_hi();
  int mp_sign_lo = field_->sign_at_lo_;
  const auto& mp = field_->minpoly();
  for (;;) {
    Interval v = iv_horner(coeffs_, Interval{lo, hi});
    if (v.lo.sign() > 0) return 1;
    if (v.hi.sign() < 0) return -1;
    Rational mid = (lo + hi) / 2;
    int s = poly::eval(mp, mid).sign();
    assert(s != 0);  // minpoly irreducible of degree >= 2 has no rational root
    if (s == mp_sign_lo)
      lo = mid;
    else
      hi = mid;
  }
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  assert(field_ == o.field_);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  assert(field_ == o.field_);
  int deg = field_->degree();
  if (deg == 1) {
    return FieldElement(field_, {coeffs_[0] * o.coeffs_[0]});
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  std::vector<Rational> c(prod.begin(), prod.begin() + deg);
  for (int k = deg; k <= 2 * deg - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& pw = field_->power_table_[k - deg];
    for (int i = 0; i < deg; ++i) c[i] += prod[k] * pw[i];
  }
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero field element");
  int deg = field_->degree();
  if (deg == 1) return FieldElement(field_, {Rational(1) / coeffs_[0]});
  // Extended Euclid in Q[x] against the minimal polynomial.
  Poly r0 = field_->minpoly();
  Poly r1(coeffs_.begin(), coeffs_.end());
  poly::trim(r1);
  Poly s0{}, s1{Rational(1)};  // coefficients of *this in the Bezout identity
  while (poly::degree(r1) > 0) {
    auto [q, r] = poly::divrem(r0, r1);
    Poly s2 = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  assert(!r1.empty());  // gcd is a nonzero constant: minpoly is irreducible
  Rational inv_c = Rational(1) / r1[0];
  std::vector<Rational> c(deg, Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] * inv_c;
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

bool FieldElement::operator==(const FieldElement& o) const {
  assert(field_ == o.field_);
  return coeffs_ == o.coeffs_;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << to_string(coeffs_[i]);
    if (i >= 1) os << "*c";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement embed(const FieldElement& x, const RealCyclotomicField* target) {
  const RealCyclotomicField* src = x.field();
  if (src == target) return x;
  if (target->modulus() % src->modulus() != 0)
    throw std::invalid_argument("no embedding: source modulus does not divide target");
  FieldElement g = target->subfield_generator(src->modulus());
  FieldElement acc = target->zero();
  for (size_t i = x.coeffs().size(); i-- > 0;) {
    acc = acc * g + target->from_rational(x.coeffs()[i]);
  }
  return acc;
}

}  // namespace coxbraid
