#include "coxbraid/coxtype.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxbraid {

namespace {

CoxeterType::Factor parse_factor(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty type factor");
  CoxeterType::Factor f;
  f.family = static_cast<char>(std::toupper(s[0]));
  std::string rest = s.substr(1);
  if (f.family == 'I') {
    // I2(m)
    size_t open = rest.find('(');
    size_t close = rest.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw std::invalid_argument("I2 type needs the form I2(m): " + s);
    f.rank = std::stoi(rest.substr(0, open));
    f.m = std::stoi(rest.substr(open + 1, close - open - 1));
  } else {
    f.rank = std::stoi(rest);
  }
  return f;
}

}  // namespace

CoxeterType CoxeterType::parse(const std::string& text) {
  CoxeterType t;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, 'x')) {
    // trim spaces
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("empty type factor in " + text);
    t.factors.push_back(parse_factor(token.substr(a, b - a + 1)));
  }
  if (t.factors.empty()) throw std::invalid_argument("empty Coxeter type");
  validate(t);
  return t;
}

std::string CoxeterType::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    const Factor& f = factors[i];
    s += f.family;
    s += std::to_string(f.rank);
    if (f.family == 'I') s += "(" + std::to_string(f.m) + ")";
  }
  return s;
}

int CoxeterType::total_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

long CoxeterType::base_modulus() const {
  long m0 = 1;
  for (const auto& f : factors) {
    long fm = 1;
    if (f.family == 'H') fm = 5;
    if (f.family == 'I') fm = 2L * f.m;
    m0 = std::lcm(m0, fm);
  }
  return m0;
}

void validate(const CoxeterType& t) {
  for (const auto& f : t.factors) {
    bool ok = false;
    switch (f.family) {
      case 'A': ok = f.rank >= 1; break;
      case 'B':
      case 'C': ok = f.rank >= 2; break;
      case 'D': ok = f.rank >= 3; break;
      case 'E': ok = f.rank >= 6 && f.rank <= 8; break;
      case 'F': ok = f.rank == 4; break;
      case 'G': ok = f.rank == 2; break;
      case 'H': ok = f.rank == 3 || f.rank == 4; break;
      case 'I': ok = f.rank == 2 && f.m >= 3; break;
      default: ok = false;
    }
    if (!ok) {
      throw std::invalid_argument("illegal Coxeter type factor: " + std::string(1, f.family) +
                                  std::to_string(f.rank));
    }
  }
}

}  // namespace coxbraid
