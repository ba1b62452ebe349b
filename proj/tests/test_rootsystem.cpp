#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxbraid/element.hpp"

using namespace coxbraid;

TEST_CASE("classical positive root counts") {
  auto count = [](const std::string& t) { return RootSystem::build(t)->num_positive(); };
  CHECK(count("A1") == 1);
  CHECK(count("A2") == 3);
  CHECK(count("A4") == 10);
  CHECK(count("B2") == 4);
  CHECK(count("B3") == 9);
  CHECK(count("B4") == 16);
  CHECK(count("C3") == 9);
  CHECK(count("D4") == 12);
  CHECK(count("D6") == 30);
  CHECK(count("E6") == 36);
  CHECK(count("F4") == 24);
  CHECK(count("G2") == 6);
  CHECK(count("H3") == 15);
  CHECK(count("H4") == 60);
  CHECK(count("I2(5)") == 5);
  CHECK(count("I2(7)") == 7);
  CHECK(count("A2xA1") == 4);
}

TEST_CASE("roots close under reflections and come in +- pairs") {
  for (const std::string& t : {"A3", "B3", "H3", "I2(7)", "A2xA1"}) {
    const RootSystem* rs = RootSystem::build(t);
    for (int i = 0; i < rs->rank(); ++i)
      for (int k = 1; k <= rs->num_positive(); ++k) {
        int img = rs->reflect(i, k);
        CHECK(std::abs(img) >= 1);
        CHECK(std::abs(img) <= rs->num_positive());
        CHECK(rs->reflect(i, img) == k);  // involution
      }
  }
}

TEST_CASE("fundamental weights are dual to coroots") {
  for (const std::string& t : {"A3", "B3", "C3", "G2", "H3"}) {
    const RootSystem* rs = RootSystem::build(t);
    for (int i = 0; i < rs->rank(); ++i)
      for (int j = 0; j < rs->rank(); ++j) {
        FVec alpha = fvec_zero(rs->field(), rs->rank());
        alpha[j] = rs->field()->one();
        FieldElement ip = rs->inner(rs->fundamental_weights()[i], alpha);
        FieldElement expected = i == j ? rs->simple_norm(j) / rs->field()->from_rational(Rational(2))
                                       : rs->field()->zero();
        CHECK(ip == expected);
      }
  }
}

TEST_CASE("twists permute positive roots and preserve the Gram matrix") {
  for (const std::string& t : {"A3", "D4", "A2xA2"}) {
    const RootSystem* rs = RootSystem::build(t);
    for (int tw = 0; tw < rs->num_twists(); ++tw) {
      const Twist& twist = rs->twists()[tw];
      for (int i = 0; i < rs->rank(); ++i)
        for (int j = 0; j < rs->rank(); ++j)
          CHECK(rs->gram()[twist.perm[i]][twist.perm[j]] == rs->gram()[i][j]);
      std::set<int> images;
      for (int k = 1; k <= rs->num_positive(); ++k) {
        int img = rs->twist_apply(tw, k);
        CHECK(img > 0);
        images.insert(img);
      }
      CHECK(static_cast<int>(images.size()) == rs->num_positive());
    }
  }
  // block-preserving only: A2xA2 keeps the factor blocks, so its twist
  // group is the product of the factor flips
  CHECK(RootSystem::build("A2xA2")->num_twists() == 4);
}

TEST_CASE("convexity and standard parabolic subsystems") {
  const RootSystem* b3 = RootSystem::build("B3");
  RootSet all_pos;
  for (int k = 1; k <= 9; ++k) all_pos.insert(k);
  CHECK(convex_root_set(*b3, all_pos));

  FVec a23 = fvec_add(b3->root_coords(1), b3->root_coords(2));
  int k23 = *b3->find_root(a23);
  RootSet missing = all_pos;
  missing.erase(k23);
  CHECK(!convex_root_set(*b3, missing));  // a2 + a3 escapes

  const RootSystem* a2 = RootSystem::build("A2");
  CHECK(convex_root_set(*a2, RootSet{1}));

  // closed-complement equivalence over every sign-symmetric subset:
  // standard parabolic iff -L = L, L convex, R+ \ L convex
  for (const std::string& t : {"A2", "B2", "A3", "G2"}) {
    const RootSystem* rs = RootSystem::build(t);
    int p = rs->num_positive();
    for (int mask = 0; mask < (1 << p); ++mask) {
      RootSet L;
      for (int k = 0; k < p; ++k)
        if (mask & (1 << k)) {
          L.insert(k + 1);
          L.insert(-(k + 1));
        }
      RootSet pos_complement;
      for (int k = 1; k <= p; ++k)
        if (!L.count(k)) pos_complement.insert(k);
      bool expected = convex_root_set(*rs, L) && convex_root_set(*rs, pos_complement);
      CHECK(standard_parabolic_set(*rs, L).has_value() == expected);
    }
  }
}

TEST_CASE("type parsing and validation") {
  CHECK(CoxeterType::parse("I2(7)").factors[0].m == 7);
  CHECK(CoxeterType::parse("A2xA1").total_rank() == 3);
  CHECK(CoxeterType::parse("H3").base_modulus() == 5);
  CHECK(CoxeterType::parse("I2(6)").base_modulus() == 12);
  CHECK_THROWS(CoxeterType::parse("E9"));
  CHECK_THROWS(CoxeterType::parse("F5"));
  CHECK_THROWS(CoxeterType::parse("I2(2)"));
  CHECK_THROWS(CoxeterType::parse(""));
}

TEST_CASE("B and C differ per the short/long convention") {
  const RootSystem* b3 = RootSystem::build("B3");
  const RootSystem* c3 = RootSystem::build("C3");
  // B3: alpha_3 short; C3: alpha_3 long
  CHECK((b3->simple_norm(2) - b3->simple_norm(0)).sign() < 0);
  CHECK((c3->simple_norm(2) - c3->simple_norm(0)).sign() > 0);
}
