#include "coxbraid/conjugacy.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

namespace coxbraid {

std::vector<GroupElement> enumerate_group(const RootSystem* rs, bool include_twists, size_t cap) {
  std::vector<GroupElement> out;
  ElementSet seen;
  std::deque<GroupElement> queue;
  auto push = [&](GroupElement g) {
    if (seen.insert(g).second) {
      if (seen.size() > cap) throw std::length_error("group enumeration cap exceeded");
      out.push_back(g);
      queue.push_back(std::move(g));
    }
  };
  push(GroupElement::identity(rs));
  if (include_twists)
    for (int t = 1; t < rs->num_twists(); ++t) push(GroupElement::twist_element(rs, t));
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs->rank(); ++i) push(g * GroupElement::simple(rs, i));
  }
  return out;
}

std::vector<GroupElement> conjugacy_class(const GroupElement& w, const ParabolicIndex& J) {
  const RootSystem* rs = w.rs();
  std::vector<GroupElement> out;
  ElementSet seen;
  std::deque<GroupElement> queue;
  seen.insert(w);
  out.push_back(w);
  queue.push_back(w);
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (int i : J) {
      GroupElement s = GroupElement::simple(rs, i);
      GroupElement c = s * g * s;
      if (seen.insert(c).second) {
        out.push_back(c);
        queue.push_back(std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> conjugacy_class(const GroupElement& w) {
  ParabolicIndex all(w.rs()->rank());
  for (int i = 0; i < w.rs()->rank(); ++i) all[i] = i;
  return conjugacy_class(w, all);
}

namespace {

bool in_parabolic(const GroupElement& g, const std::optional<ParabolicIndex>& J) {
  if (!J) return true;
  std::vector<char> ok(g.rs()->rank(), 0);
  for (int i : *J) ok[i] = 1;
  for (int k : g.inversion_set())
    for (int s : g.rs()->support(k))
      if (!ok[s]) return false;
  return g.twist() == 0;
}

}  // namespace

std::vector<GroupElement> left_divisors(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  // BFS over untwisted prefixes a with ell(a) + ell(a^-1 w) = ell(w);
  // a extends by a left descent of the remainder a^-1 w.
  struct Node {
    GroupElement a, rem;
  };
  std::vector<GroupElement> out;
  ElementSet seen;
  std::deque<Node> queue;
  GroupElement e = GroupElement::identity(rs);
  seen.insert(e);
  out.push_back(e);
  queue.push_back({e, w});
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs->rank(); ++i) {
      if (!n.rem.left_descent(i)) continue;
      GroupElement s = GroupElement::simple(rs, i);
      GroupElement a = n.a * s;
      if (seen.insert(a).second) {
        out.push_back(a);
        queue.push_back({a, s * n.rem});
      }
    }
  }
  return out;
}

// Untwisted right divisors: tau with ell(w tau^-1) + ell(tau) = ell(w).
static std::vector<GroupElement> right_divisors(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  struct Node {
    GroupElement tau, rem;  // w = rem * tau reduced
  };
  std::vector<GroupElement> out;
  ElementSet seen;
  std::deque<Node> queue;
  GroupElement e = GroupElement::identity(rs);
  seen.insert(e);
  out.push_back(e);
  queue.push_back({e, w});
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rs->rank(); ++i) {
      if (!n.rem.right_descent(i)) continue;
      GroupElement s = GroupElement::simple(rs, i);
      GroupElement tau = s * n.tau;
      if (seen.insert(tau).second) {
        out.push_back(tau);
        queue.push_back({tau, n.rem * s});
      }
    }
  }
  return out;
}

std::vector<ShiftEdge> elementary_steps(const GroupElement& w, int dir, bool strict,
                                        const std::optional<ParabolicIndex>& J) {
  const RootSystem* rs = w.rs();
  std::vector<ShiftEdge> edges;
  int lw = w.length();
  std::vector<int> indices;
  if (J)
    indices = *J;
  else {
    indices.resize(rs->rank());
    for (int i = 0; i < rs->rank(); ++i) indices[i] = i;
  }
  for (int i : indices) {
    GroupElement s = GroupElement::simple(rs, i);
    GroupElement c = s * w * s;
    int lc = c.length();
    bool keep = dir > 0 ? (strict ? lc > lw : lc >= lw)
                        : dir < 0 ? (strict ? lc < lw : lc <= lw)
                                  : lc == lw;
    if (keep) edges.push_back({ShiftKind::SimpleShift, s, w, std::move(c)});
  }
  return edges;
}

std::optional<ShiftEdge> shift_step(const GroupElement& w, int simple_index, ShiftKind kind) {
  const RootSystem* rs = w.rs();
  GroupElement s = GroupElement::simple(rs, simple_index);
  GroupElement target = s * w * s;
  int lw = w.length(), lt = target.length();
  int lsw = (s * w).length();
  int lws = (w * s).length();
  bool ok = false;
  switch (kind) {
    case ShiftKind::SimpleShift:
      ok = lt == lw;
      break;
    case ShiftKind::Cyclic:
      ok = lt == lw && (lsw == lw - 1 || lws == lw - 1);
      break;
    case ShiftKind::Strong:
      ok = lt == lw && (lsw == lw + 1 || lws == lw + 1);
      break;
    case ShiftKind::Mixed:
      ok = lt == lw;
      break;
  }
  if (!ok) return std::nullopt;
  return ShiftEdge{kind, s, w, target};
}

std::vector<ShiftEdge> shift_steps(const GroupElement& w, ShiftKind kind,
                                   const std::optional<ParabolicIndex>& J, bool include_loops) {
  const RootSystem* rs = w.rs();
  std::vector<ShiftEdge> edges;
  int lw = w.length();

  if (kind == ShiftKind::SimpleShift) {
    for (auto& e : elementary_steps(w, 0, false, J))
      if (!(e.target == w)) edges.push_back(std::move(e));
    return edges;
  }

  auto add = [&](ShiftKind k, const GroupElement& tau, GroupElement&& tgt) {
    edges.push_back({k, tau, w, std::move(tgt)});
  };

  if (kind == ShiftKind::Cyclic || kind == ShiftKind::Mixed) {
    // Single cyclic steps rotate a reduced decomposition w = y*tau to
    // tau*y, with tau an untwisted right divisor. Left-divisor rotations
    // w = a*y -> y*a are the same edges with tau = a^-1 w (which satisfies
    // the right-side condition), so right divisors produce every step, and
    // the conjugators also witness the braid equation tau b_w = b_w' tau.
    ElementSet produced;
    for (const GroupElement& tau : right_divisors(w)) {
      if (tau.is_identity()) continue;
      if (J && !in_parabolic(tau, J)) continue;
      GroupElement rot = tau * w * tau.inverse();
      if (rot.length() != lw) continue;
      if (rot == w && !include_loops) continue;
      if (rot == w) {
        add(ShiftKind::Cyclic, tau, std::move(rot));
        continue;
      }
      if (produced.insert(rot).second) add(ShiftKind::Cyclic, tau, std::move(rot));
    }
  }
  if (kind == ShiftKind::Strong || kind == ShiftKind::Mixed) {
    // Strong steps are the reversed cyclic steps: w' = tau w tau^-1 with
    // tau w (or w tau^-1) reduced and equal lengths, equivalently w is a
    // rotation of a reduced decomposition of w'. Enumerate by searching the
    // tau families {tau : tau w reduced} and {tau : w tau^-1 reduced}.
    ElementSet taus;
    {
      // family L: ell(tau w) = ell(tau) + ell(w); grow tau on the left.
      std::deque<GroupElement> queue;
      GroupElement e = GroupElement::identity(rs);
      taus.insert(e);
      queue.push_back(e);
      ElementSet seen_l{e};
      while (!queue.empty()) {
        GroupElement tau = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs->rank(); ++i) {
          GroupElement s = GroupElement::simple(rs, i);
          GroupElement t2 = s * tau;
          if (t2.length() != tau.length() + 1) continue;
          GroupElement t2w = t2 * w;
          if (t2w.length() != t2.length() + lw) continue;
          if (seen_l.insert(t2).second) {
            taus.insert(t2);
            queue.push_back(std::move(t2));
          }
        }
      }
    }
    {
      // family R: ell(w tau^-1) = ell(w) + ell(tau)
      std::deque<GroupElement> queue;
      GroupElement e = GroupElement::identity(rs);
      queue.push_back(e);
      ElementSet seen_r{e};
      while (!queue.empty()) {
        GroupElement tau = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < rs->rank(); ++i) {
          GroupElement s = GroupElement::simple(rs, i);
          GroupElement t2 = s * tau;  // t2^-1 = tau^-1 s
          if (t2.length() != tau.length() + 1) continue;
          GroupElement wt2 = w * t2.inverse();
          if (wt2.length() != lw + t2.length()) continue;
          if (seen_r.insert(t2).second) {
            taus.insert(t2);
            queue.push_back(std::move(t2));
          }
        }
      }
    }
    for (const GroupElement& tau : taus) {
      if (tau.is_identity()) continue;
      if (J && !in_parabolic(tau, J)) continue;
      GroupElement tgt = tau * w * tau.inverse();
      if (tgt.length() != lw) continue;
      if (tgt == w && !include_loops) continue;
      add(ShiftKind::Strong, tau, std::move(tgt));
    }
  }
  return edges;
}

std::vector<GroupElement> shift_class(const GroupElement& w, ShiftKind kind,
                                      const ElementPredicate& constraint,
                                      const std::optional<ParabolicIndex>& J) {
  std::vector<GroupElement> out;
  if (constraint && !constraint(w)) return out;
  ElementSet seen{w};
  std::deque<GroupElement> queue{w};
  out.push_back(w);
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (auto& e : shift_steps(g, kind, J)) {
      if (constraint && !constraint(e.target)) continue;
      if (seen.insert(e.target).second) {
        out.push_back(e.target);
        queue.push_back(std::move(e.target));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> elementary_closure(const GroupElement& w, int dir, bool strict,
                                             const std::optional<ParabolicIndex>& J) {
  std::vector<GroupElement> out{w};
  ElementSet seen{w};
  std::deque<GroupElement> queue{w};
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (auto& e : elementary_steps(g, dir, strict, J)) {
      if (seen.insert(e.target).second) {
        out.push_back(e.target);
        queue.push_back(std::move(e.target));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<GroupElement>> transporter_search(
    const GroupElement& w, const GroupElement& target, ShiftKind kind,
    const ElementPredicate& constraint, const std::optional<ParabolicIndex>& J) {
  if (constraint && (!constraint(w) || !constraint(target))) return std::nullopt;
  if (w == target) return std::vector<GroupElement>{};
  std::map<GroupElement, std::pair<GroupElement, GroupElement>> parent;  // node -> (prev, tau)
  ElementSet seen{w};
  std::deque<GroupElement> queue{w};
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (auto& e : shift_steps(g, kind, J)) {
      if (constraint && !constraint(e.target)) continue;
      if (!seen.insert(e.target).second) continue;
      parent.emplace(e.target, std::make_pair(g, e.conjugator));
      if (e.target == target) {
        std::vector<GroupElement> taus;
        GroupElement cur = target;
        while (!(cur == w)) {
          auto& [prev, tau] = parent.at(cur);
          taus.push_back(tau);
          cur = prev;
        }
        std::reverse(taus.begin(), taus.end());
        return taus;
      }
      queue.push_back(e.target);
    }
  }
  return std::nullopt;
}

std::vector<GroupElement> transporter_products(const GroupElement& w, ShiftKind kind,
                                               const ElementPredicate& constraint) {
  // BFS over (element, accumulated product) pairs.
  struct PairHash {
    size_t operator()(const std::pair<GroupElement, GroupElement>& p) const {
      return p.first.hash() * 1000003 ^ p.second.hash();
    }
  };
  std::unordered_set<std::pair<GroupElement, GroupElement>, PairHash> seen;
  std::deque<std::pair<GroupElement, GroupElement>> queue;
  std::vector<GroupElement> products;
  ElementSet product_set;
  GroupElement e = GroupElement::identity(w.rs());
  seen.insert({w, e});
  queue.push_back({w, e});
  while (!queue.empty()) {
    auto [g, acc] = std::move(queue.front());
    queue.pop_front();
    if (g == w && product_set.insert(acc).second) products.push_back(acc);
    for (auto& edge : shift_steps(g, kind, std::nullopt, true)) {
      if (constraint && !constraint(edge.target)) continue;
      GroupElement acc2 = edge.conjugator * acc;
      if (seen.insert({edge.target, acc2}).second) queue.push_back({edge.target, acc2});
    }
  }
  std::sort(products.begin(), products.end());
  return products;
}

std::vector<GroupElement> shift_steps_all_tau(const GroupElement& w, ShiftKind kind,
                                              const std::vector<GroupElement>& taus) {
  std::vector<GroupElement> out;
  ElementSet seen;
  int lw = w.length();
  for (const GroupElement& tau : taus) {
    if (tau.is_identity() || tau.twist() != 0) continue;
    GroupElement tgt = tau * w * tau.inverse();
    if (tgt == w || tgt.length() != lw) continue;
    int lt = tau.length();
    GroupElement tw = tau * w;
    GroupElement wti = w * tau.inverse();
    bool cyc = tw.length() == lw - lt || wti.length() == lw - lt;
    bool strong = tw.length() == lw + lt || wti.length() == lw + lt;
    bool keep = kind == ShiftKind::Cyclic     ? cyc
                : kind == ShiftKind::Strong   ? strong
                : kind == ShiftKind::Mixed    ? (cyc || strong)
                                              : false;
    if (keep && seen.insert(tgt).second) out.push_back(tgt);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxbraid
