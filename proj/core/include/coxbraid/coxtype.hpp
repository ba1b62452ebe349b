#pragma once

#include <string>
#include <vector>

namespace coxbraid {

// Finite Coxeter type, possibly a product of irreducible factors.
// Text syntax: "A4", "B3", "I2(7)", products "A2xA1".
struct CoxeterType {
  struct Factor {
    char family = 'A';  // A B C D E F G H I
    int rank = 1;
    int m = 0;  // only for I2(m)
    bool operator==(const Factor&) const = default;
  };
  std::vector<Factor> factors;

  static CoxeterType parse(const std::string& text);
  std::string str() const;

  int total_rank() const;
  // Modulus m0 of the scalar field: 1 for crystallographic factors,
  // 5 for H3/H4, 2m for I2(m); lcm across factors.
  long base_modulus() const;
  bool irreducible() const { return factors.size() == 1; }

  bool operator==(const CoxeterType&) const = default;
};

// Throws std::invalid_argument for an illegal rank/family combination.
void validate(const CoxeterType& t);

}  // namespace coxbraid
