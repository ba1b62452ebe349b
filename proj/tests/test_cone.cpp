#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxbraid/rootsystem.hpp"
#include "oracles.hpp"

using namespace coxbraid;

namespace {

const RealCyclotomicField* Q() { return RealCyclotomicField::get(1); }

FVec qv(const std::vector<long>& xs) {
  FVec v;
  for (long x : xs) v.push_back(Q()->from_rational(Rational(x)));
  return v;
}

}  // namespace

TEST_CASE("whole plane with coordinate strict functionals") {
  ConeProblem p;
  p.ambient_dim = 2;
  p.subspace_basis = {qv({1, 0}), qv({0, 1})};
  p.strict = {qv({1, 0}), qv({0, 1})};
  auto res = cone_strictly_feasible(p);
  CHECK(res.feasible);
  REQUIRE(res.witness.has_value());
  CHECK(dot((*res.witness), qv({1, 0})).sign() > 0);
  CHECK(dot((*res.witness), qv({0, 1})).sign() > 0);
}

TEST_CASE("line through alpha1 in A2 against both Gram functionals") {
  const RootSystem* a2 = RootSystem::build("A2");
  const Geometry& geo = a2->geometry(1);
  ConeProblem p;
  p.ambient_dim = 2;
  p.subspace_basis = {geo.pos_roots[0]};  // alpha1
  p.strict = {geo.root_functionals[0], geo.root_functionals[1]};
  CHECK(!cone_strictly_feasible(p).feasible);

  // line through alpha1 + alpha2 (the highest root) is interior
  int hr = *a2->highest_root();
  ConeProblem q;
  q.ambient_dim = 2;
  q.subspace_basis = {geo.pos_roots[hr]};
  q.strict = {geo.root_functionals[0], geo.root_functionals[1], geo.root_functionals[hr]};
  auto res = cone_strictly_feasible(q);
  CHECK(res.feasible);
}

TEST_CASE("degenerate inputs") {
  ConeProblem p;
  p.ambient_dim = 3;
  CHECK(cone_strictly_feasible(p).feasible);  // nothing demanded
  p.strict = {qv({1, 1, 1})};
  CHECK(!cone_strictly_feasible(p).feasible);  // no subspace to move in
}

TEST_CASE("simplex agrees with Fourier-Motzkin on small cones") {
  // exhaustive-ish battery of dimension <= 3 cone problems with entries in
  // {-2..2}; compares the exact simplex with the FM oracle.
  std::vector<long> coeffs = {-2, -1, 0, 1, 2};
  int cases = 0;
  for (long a : coeffs)
    for (long b : coeffs)
      for (long c : coeffs)
        for (long d : coeffs) {
          ConeProblem p;
          p.ambient_dim = 2;
          p.subspace_basis = {qv({1, 0}), qv({0, 1})};
          p.strict = {qv({a, b}), qv({c, d})};
          p.weak = {qv({b, -a})};
          bool simplex = cone_strictly_feasible(p).feasible;
          bool fm = oracles::fm_feasible(p);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(d);
          CHECK(simplex == fm);
          ++cases;
        }
  CHECK(cases == 625);

  // a few 3d problems over the B3 geometry, restricted to planes
  const RootSystem* b3 = RootSystem::build("B3");
  const Geometry& geo = b3->geometry(1);
  for (int i = 0; i < b3->num_positive(); ++i)
    for (int j = 0; j < b3->num_positive(); j += 2) {
      ConeProblem p;
      p.ambient_dim = 3;
      p.subspace_basis = {geo.pos_roots[i], geo.pos_roots[(i + 3) % 9]};
      p.strict = {geo.root_functionals[j], geo.root_functionals[(j + 4) % 9]};
      p.weak = {geo.root_functionals[(j + 7) % 9]};
      CHECK(cone_strictly_feasible(p).feasible == oracles::fm_feasible(p));
    }
}

TEST_CASE("witness satisfies every constraint exactly") {
  const RootSystem* b3 = RootSystem::build("B3");
  const Geometry& geo = b3->geometry(1);
  ConeProblem p;
  p.ambient_dim = 3;
  p.subspace_basis = {geo.pos_roots[0], geo.pos_roots[1], geo.pos_roots[2]};
  for (int r = 0; r < b3->num_positive(); ++r) p.strict.push_back(geo.root_functionals[r]);
  auto res = cone_strictly_feasible(p);
  CHECK(res.feasible);  // interior of the chamber
  REQUIRE(res.witness.has_value());
  for (const auto& fn : p.strict) CHECK(dot(fn, *res.witness).sign() > 0);
}
