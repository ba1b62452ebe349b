// Independent brute-force oracles used by the test suites. These stay
// deliberately naive: they re-derive expected values along different routes
// than the library code they check.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "coxbraid/braid.hpp"
#include "coxbraid/cone.hpp"
#include "coxbraid/element.hpp"

namespace oracles {

using namespace coxbraid;

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility of {f(v) > 0, g(v) >= 0, v in span(basis)}.
// Rows carry a strictness flag; eliminating a variable combines each lower
// bound with each upper bound, strict when either side is strict.
struct FMRow {
  FVec coeffs;
  bool strict;
};

inline bool fm_feasible(const ConeProblem& p) {
  const RealCyclotomicField* f = nullptr;
  for (const auto* group : {&p.subspace_basis, &p.strict, &p.weak})
    if (!group->empty()) { f = (*group)[0][0].field(); break; }
  if (!f) return p.strict.empty();

  int k = static_cast<int>(p.subspace_basis.size());
  std::vector<FMRow> rows;
  for (const auto& fn : p.strict) {
    FVec row = fvec_zero(f, k);
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      row[j] = dot(fn, p.subspace_basis[j]);
      if (!row[j].is_zero()) zero = false;
    }
    if (zero) return false;
    rows.push_back({row, true});
  }
  for (const auto& fn : p.weak) {
    FVec row = fvec_zero(f, k);
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      row[j] = dot(fn, p.subspace_basis[j]);
      if (!row[j].is_zero()) zero = false;
    }
    if (!zero) rows.push_back({row, false});
  }

  for (int var = k - 1; var >= 0; --var) {
    std::vector<FMRow> lower, upper, rest;
    for (const auto& r : rows) {
      int s = r.coeffs[var].sign();
      if (s > 0)
        lower.push_back(r);
      else if (s < 0)
        upper.push_back(r);
      else
        rest.push_back(r);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        FMRow combo;
        combo.strict = lo.strict || up.strict;
        combo.coeffs = fvec_zero(f, k);
        // lo.coeffs[var] > 0, up.coeffs[var] < 0; positive combination
        for (int j = 0; j < k; ++j)
          combo.coeffs[j] =
              lo.coeffs[var] * up.coeffs[j] - up.coeffs[var] * lo.coeffs[j];
        rest.push_back(std::move(combo));
      }
    // Rows with only a bound on one side are always satisfiable: drop them.
    rows = std::move(rest);
  }
  for (const auto& r : rows) {
    // all-zero rows: 0 > 0 is the contradiction
    bool zero = true;
    for (const auto& c : r.coeffs)
      if (!c.is_zero()) zero = false;
    if (zero && r.strict) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force minimal word length by breadth-first search over products.
inline int min_word_length(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  GroupElement target = w.untwisted_part();
  std::map<GroupElement, int> dist;
  std::deque<GroupElement> queue;
  GroupElement e = GroupElement::identity(rs);
  dist[e] = 0;
  queue.push_back(e);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    if (g == target) return dist[g];
    for (int i = 0; i < rs->rank(); ++i) {
      GroupElement h = g * GroupElement::simple(rs, i);
      if (!dist.count(h)) {
        dist[h] = dist[g] + 1;
        queue.push_back(h);
      }
    }
  }
  return -1;
}

// All reduced words of an untwisted element.
inline std::vector<std::vector<int>> reduced_words(const GroupElement& w) {
  std::vector<std::vector<int>> out;
  if (w.is_identity()) {
    out.push_back({});
    return out;
  }
  const RootSystem* rs = w.rs();
  for (int i = 0; i < rs->rank(); ++i) {
    if (!w.left_descent(i)) continue;
    for (auto rest : reduced_words(GroupElement::simple(rs, i) * w)) {
      rest.insert(rest.begin(), i + 1);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positive-braid word calculus for small ranks: the closure of a letter word
// under braid relations, and the greedy factor extracted from suffixes.
inline std::vector<std::vector<int>> braid_word_closure(const RootSystem* rs,
                                                        const std::vector<int>& word) {
  // orders m_ij of s_i s_j
  int n = rs->rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        m[i][j] = static_cast<int>(
            (GroupElement::simple(rs, i) * GroupElement::simple(rs, j)).order());
  std::set<std::vector<int>> seen{word};
  std::deque<std::vector<int>> queue{word};
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (size_t pos = 0; pos < cur.size(); ++pos) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          int len = m[i][j];
          if (pos + len > cur.size()) continue;
          bool match = true;
          for (int t = 0; t < len && match; ++t)
            if (cur[pos + t] != (t % 2 == 0 ? i + 1 : j + 1)) match = false;
          if (!match) continue;
          std::vector<int> next = cur;
          for (int t = 0; t < len; ++t) next[pos + t] = (t % 2 == 0 ? j + 1 : i + 1);
          if (seen.insert(next).second) queue.push_back(next);
        }
    }
  }
  return {seen.begin(), seen.end()};
}

// DG_1 from the word closure: the longest suffix that multiplies reducedly.
inline GroupElement dg1_oracle(const RootSystem* rs, const std::vector<int>& word) {
  GroupElement best = GroupElement::identity(rs);
  for (const auto& w : braid_word_closure(rs, word)) {
    for (size_t take = 1; take <= w.size(); ++take) {
      std::vector<int> suffix(w.end() - take, w.end());
      GroupElement g = GroupElement::from_word(rs, 0, suffix);
      if (g.length() == static_cast<int>(take) && g.length() > best.length()) best = g;
    }
  }
  return best;
}

// Full right-greedy factorisation by repeatedly peeling DG_1 off the word.
inline std::vector<GroupElement> dgn_oracle(const RootSystem* rs, std::vector<int> word) {
  std::vector<GroupElement> factors;  // rightmost first
  while (!word.empty()) {
    GroupElement head = dg1_oracle(rs, word);
    int take = head.length();
    // find an equivalent word ending with a reduced word of head
    bool found = false;
    for (const auto& w : braid_word_closure(rs, word)) {
      std::vector<int> suffix(w.end() - take, w.end());
      GroupElement g = GroupElement::from_word(rs, 0, suffix);
      if (g == head && g.length() == take) {
        factors.push_back(head);
        word.assign(w.begin(), w.end() - take);
        found = true;
        break;
      }
    }
    if (!found) break;  // cannot happen
  }
  return factors;
}

}  // namespace oracles
