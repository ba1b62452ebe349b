#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxbraid/conjugacy.hpp"

using namespace coxbraid;

namespace {
GroupElement el(const RootSystem* rs, const std::vector<int>& w) {
  return GroupElement::from_word(rs, 0, w);
}
}  // namespace

TEST_CASE("left divisors describe the weak order interval") {
  const RootSystem* a2 = RootSystem::build("A2");
  GroupElement wo = GroupElement::longest(a2);
  auto divs = left_divisors(wo);
  CHECK(divs.size() == enumerate_group(a2).size());  // everything divides w_o
  GroupElement w = el(a2, {1, 2});
  auto d2 = left_divisors(w);
  CHECK(d2.size() == 3);  // e, s1, s1 s2
  for (const auto& a : d2)
    CHECK(a.length() + (a.inverse() * w).length() == w.length());
}

TEST_CASE("single shift steps against the all-tau oracle") {
  for (const std::string& t : {"A2", "B2", "A3", "B3"}) {
    const RootSystem* rs = RootSystem::build(t);
    auto all = enumerate_group(rs);
    int tested = 0;
    for (const auto& w : all) {
      if (w.length() % 2 == 0 && t == "B3" && w.length() > 6) continue;  // keep B3 fast
      for (ShiftKind kind : {ShiftKind::Cyclic, ShiftKind::Strong, ShiftKind::Mixed}) {
        std::vector<GroupElement> targets;
        for (auto& e : shift_steps(w, kind)) targets.push_back(e.target);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        CHECK(targets == shift_steps_all_tau(w, kind, all));
      }
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("single-probe shift_step classification") {
  const RootSystem* b3 = RootSystem::build("B3");
  GroupElement wo = GroupElement::longest(b3);
  GroupElement w1 = wo * el(b3, {1});
  // the footnote element: every simple conjugation fixes it or shortens it
  for (int i = 0; i < 3; ++i) {
    auto edge = shift_step(w1, i, ShiftKind::SimpleShift);
    if (edge) CHECK(edge->target == w1);
  }
  // an honest elementary cyclic probe
  GroupElement u = el(b3, {1, 2});
  auto e = shift_step(u, 0, ShiftKind::Cyclic);
  REQUIRE(e.has_value());
  CHECK(e->target == el(b3, {2, 1}));
  CHECK(e->conjugator * u * e->conjugator.inverse() == e->target);
  CHECK(!shift_step(u, 2, ShiftKind::Cyclic).has_value());  // s3 commutes partially
}

TEST_CASE("cyclic class of the identity is trivial") {
  const RootSystem* a3 = RootSystem::build("A3");
  GroupElement e = GroupElement::identity(a3);
  CHECK(shift_class(e, ShiftKind::Cyclic) == std::vector<GroupElement>{e});
  CHECK(shift_class(e, ShiftKind::Mixed) == std::vector<GroupElement>{e});
}

TEST_CASE("transporter search returns valid conjugator sequences") {
  const RootSystem* b3 = RootSystem::build("B3");
  GroupElement wo = GroupElement::longest(b3);
  GroupElement w1 = wo * el(b3, {1});
  GroupElement w2 = wo * el(b3, {2});
  CHECK(transporter_search(w1, w1, ShiftKind::Cyclic)->empty());
  auto taus = transporter_search(w1, w2, ShiftKind::Cyclic);
  REQUIRE(taus.has_value());
  GroupElement cur = w1;
  for (const auto& tau : *taus) {
    cur = tau * cur * tau.inverse();
    CHECK(cur.length() == w1.length());
  }
  CHECK(cur == w2);
}

TEST_CASE("minimal length elements share a strong class; maximal a cyclic one") {
  for (const std::string& t : {"A3", "B2"}) {
    const RootSystem* rs = RootSystem::build(t);
    auto all = enumerate_group(rs);
    ElementSet seen;
    for (const auto& w : all) {
      if (seen.count(w)) continue;
      auto cls = conjugacy_class(w);
      for (const auto& u : cls) seen.insert(u);
      int lmin = cls[0].length(), lmax = cls[0].length();
      for (const auto& u : cls) {
        lmin = std::min(lmin, u.length());
        lmax = std::max(lmax, u.length());
      }
      std::vector<GroupElement> mins, maxs;
      for (const auto& u : cls) {
        if (u.length() == lmin) mins.push_back(u);
        if (u.length() == lmax) maxs.push_back(u);
      }
      auto strong = shift_class(mins[0], ShiftKind::Strong);
      for (const auto& u : mins)
        CHECK(std::find(strong.begin(), strong.end(), u) != strong.end());
      auto cyc = shift_class(maxs[0], ShiftKind::Cyclic);
      for (const auto& u : maxs)
        CHECK(std::find(cyc.begin(), cyc.end(), u) != cyc.end());
    }
  }
}

TEST_CASE("constrained closures respect the predicate") {
  const RootSystem* a3 = RootSystem::build("A3");
  GroupElement w = el(a3, {1, 2, 1});
  auto cls = shift_class(w, ShiftKind::Mixed, [](const GroupElement& u) {
    return u.length() <= 3;
  });
  for (const auto& u : cls) CHECK(u.length() <= 3);
}
