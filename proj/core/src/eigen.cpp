#include "coxbraid/eigen.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace coxbraid {

EigenDecomposition eigen_decompose(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  EigenDecomposition dec;
  dec.order = w.order();
  long N = std::lcm(dec.order, rs->field()->modulus());
  dec.field = RealCyclotomicField::get(N);
  const auto* f = dec.field;
  int n = rs->rank();

  FMat m = w.matrix(N);
  FMat minv = w.inverse().matrix(N);
  int total = 0;
  for (long k = 0; 2 * k <= dec.order; ++k) {
    FieldElement c = f->cos_value(k * (N / dec.order));
    FMat a = fmat_zero(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = m[i][j] + minv[i][j];
        if (i == j) a[i][j] -= c;
      }
    FMat basis = kernel(a);
    if (basis.empty()) continue;
    total += static_cast<int>(basis.size());
    EigenComponent comp{Fraction(k, dec.order), std::move(basis)};
    if (comp.theta.num == 0)
      dec.fixed_basis = comp.basis;
    else
      for (const auto& v : comp.basis) dec.moved_basis.push_back(v);
    dec.components.push_back(std::move(comp));
  }
  assert(total == n);
  return dec;
}

FMat EigenSequence::partial_span(int i) const {
  FMat span;
  for (int j = 0; j < i; ++j)
    for (const auto& v : entries[j].basis) span.push_back(v);
  return span;
}

std::vector<int> EigenSequence::hyperplanes(int i) const {
  return subspace_hyperplanes(*rs, field, partial_span(i));
}

std::vector<int> subspace_hyperplanes(const RootSystem& rs, const RealCyclotomicField* field,
                                      const FMat& basis) {
  const Geometry& geo = rs.geometry(field->modulus());
  std::vector<int> out;
  for (int r = 0; r < rs.num_positive(); ++r) {
    bool contains = true;
    for (const auto& v : basis) {
      if (!dot(geo.root_functionals[r], v).is_zero()) { contains = false; break; }
    }
    if (contains) out.push_back(r);
  }
  return out;
}

EigenSequence merged_sequence(const EigenDecomposition& dec, const RootSystem* rs,
                              const std::vector<Fraction>& theta_set, bool increasing) {
  EigenSequence seq;
  seq.rs = rs;
  seq.field = dec.field;
  std::vector<const EigenComponent*> picked;
  for (const auto& comp : dec.components) {
    if (theta_set.empty() ||
        std::find(theta_set.begin(), theta_set.end(), comp.theta) != theta_set.end())
      picked.push_back(&comp);
  }
  // increasing ("+"): V_1 has the largest theta, so sort descending in
  // filtration order; decreasing ("-"): ascending.
  std::sort(picked.begin(), picked.end(), [&](const EigenComponent* a, const EigenComponent* b) {
    return increasing ? b->theta < a->theta : a->theta < b->theta;
  });
  for (const auto* c : picked) seq.entries.push_back({c->theta, c->basis});
  return seq;
}

bool has_regular_point_in_dominant_chamber(const RootSystem& rs, const FMat& basis) {
  if (basis.empty()) return true;  // the zero subspace: vacuous
  const auto* field = basis[0][0].field();
  const Geometry& geo = rs.geometry(field->modulus());
  ConeProblem p;
  p.ambient_dim = rs.rank();
  p.subspace_basis = basis;
  for (int r = 0; r < rs.num_positive(); ++r) {
    bool orthogonal = true;
    for (const auto& v : basis)
      if (!dot(geo.root_functionals[r], v).is_zero()) { orthogonal = false; break; }
    if (!orthogonal) p.strict.push_back(geo.root_functionals[r]);
  }
  return cone_strictly_feasible(p).feasible;
}

bool good_position(const EigenSequence& seq) {
  for (int i = 1; i <= seq.length(); ++i)
    if (!has_regular_point_in_dominant_chamber(*seq.rs, seq.partial_span(i))) return false;
  return true;
}

bool good_position_alt(const EigenSequence& seq) {
  // For each i the closure of the connected component of the dominant
  // chamber in V minus the F_{i-1}-hyperplanes must contain a regular point
  // of V_i: only the hyperplanes of H_{F_i-1} outside H_{V_i} constrain.
  const Geometry& geo = seq.rs->geometry(seq.field->modulus());
  for (int i = 1; i <= seq.length(); ++i) {
    std::vector<int> prev = seq.hyperplanes(i - 1);
    const FMat& vi = seq.entries[i - 1].basis;
    std::vector<int> in_vi = subspace_hyperplanes(*seq.rs, seq.field, vi);
    ConeProblem p;
    p.ambient_dim = seq.rs->rank();
    p.subspace_basis = vi;
    for (int r : prev) {
      if (std::find(in_vi.begin(), in_vi.end(), r) != in_vi.end()) continue;
      p.strict.push_back(geo.root_functionals[r]);
    }
    if (!cone_strictly_feasible(p).feasible) return false;
  }
  return true;
}

SequenceClass classify_sequence(const GroupElement& w, const EigenSequence& seq) {
  SequenceClass c;
  std::vector<int> h_theta = seq.theta_hyperplanes();
  RootSet fixed = fixed_root_set(w);
  bool contained = true;
  for (int r : h_theta)
    if (!fixed.count(r + 1)) { contained = false; break; }
  c.braiding = contained && good_position(seq);
  c.complete = c.braiding && h_theta.empty();
  c.anisotropic = true;
  for (const auto& e : seq.entries)
    if (e.theta.num == 0) c.anisotropic = false;
  c.increasing = c.decreasing = seq.length() >= 1;
  for (int j = 0; j + 1 < seq.length(); ++j) {
    if (!(seq.entries[j + 1].theta < seq.entries[j].theta)) c.increasing = false;
    if (!(seq.entries[j].theta < seq.entries[j + 1].theta)) c.decreasing = false;
  }
  return c;
}

bool is_quasiregular(const GroupElement& w) {
  EigenDecomposition dec = eigen_decompose(w);
  RootSet fixed = fixed_root_set(w);
  for (const auto& comp : dec.components) {
    std::vector<int> h = subspace_hyperplanes(*w.rs(), dec.field, comp.basis);
    bool inside = true;
    for (int r : h)
      if (!fixed.count(r + 1)) { inside = false; break; }
    if (inside) return true;
  }
  return false;
}

bool is_regular(const GroupElement& w) {
  EigenDecomposition dec = eigen_decompose(w);
  for (const auto& comp : dec.components)
    if (subspace_hyperplanes(*w.rs(), dec.field, comp.basis).empty()) return true;
  return false;
}

bool is_principally_quasiregular(const GroupElement& w) {
  EigenDecomposition dec = eigen_decompose(w);
  RootSet fixed = fixed_root_set(w);
  Fraction principal = dec.order == 1 ? Fraction(0, 1) : Fraction(1, dec.order);
  for (const auto& comp : dec.components) {
    if (!(comp.theta == principal)) continue;
    bool inside = true;
    for (int r : subspace_hyperplanes(*w.rs(), dec.field, comp.basis))
      if (!fixed.count(r + 1)) { inside = false; break; }
    return inside;
  }
  return false;
}

FMat moved_space(const GroupElement& w) {
  const RootSystem* rs = w.rs();
  long m0 = rs->field()->modulus();
  FMat m = w.matrix(m0);
  FMat diff = fmat_sub(fmat_identity(rs->field(), rs->rank()), m);
  // Column space of id - w; columns as coordinate vectors.
  return column_space(diff);
}

bool is_dominant(const GroupElement& w) {
  return has_regular_point_in_dominant_chamber(*w.rs(), moved_space(w));
}

std::vector<GroupElement> dominant_subset(const std::vector<GroupElement>& cls) {
  std::vector<GroupElement> out;
  for (const auto& w : cls)
    if (is_dominant(w)) out.push_back(w);
  return out;
}

namespace {
std::vector<GroupElement> length_layer(const std::vector<GroupElement>& set, bool maximal) {
  std::vector<GroupElement> out;
  if (set.empty()) return out;
  int best = set[0].length();
  for (const auto& w : set) {
    int l = w.length();
    if (maximal ? l > best : l < best) best = l;
  }
  for (const auto& w : set)
    if (w.length() == best) out.push_back(w);
  return out;
}
}  // namespace

std::vector<GroupElement> minimally_dominant(const std::vector<GroupElement>& cls) {
  return length_layer(dominant_subset(cls), false);
}

std::vector<GroupElement> maximally_dominant(const std::vector<GroupElement>& cls) {
  return length_layer(dominant_subset(cls), true);
}

Rational length_formula(const EigenSequence& seq) {
  Rational total(0);
  std::vector<int> prev = seq.hyperplanes(0);
  for (int i = 1; i <= seq.length(); ++i) {
    std::vector<int> cur = seq.hyperplanes(i);
    long removed = static_cast<long>(prev.size() - cur.size());
    total += Rational(2) * seq.entries[i - 1].theta.to_rational() * removed;
    prev = std::move(cur);
  }
  return total;
}

ThetaData theta_elements(const GroupElement& w, const EigenSequence& seq) {
  const RootSystem* rs = w.rs();
  int m = seq.length();
  ThetaData data;

  // Stabilisers of the filtration steps must be standard parabolic
  // subgroups (guaranteed in good position).
  for (int j = 0; j <= m; ++j) {
    std::vector<int> h = seq.hyperplanes(j);
    ParabolicIndex J;
    RootSet hset;
    for (int r : h) hset.insert(r + 1);
    for (int i = 0; i < rs->rank(); ++i)
      if (hset.count(i + 1)) J.push_back(i);
    for (int r : h) {
      for (int s : rs->support(r))
        if (std::find(J.begin(), J.end(), s) == J.end())
          throw std::domain_error("filtration stabiliser is not standard parabolic");
    }
    data.parabolic_longest.push_back(GroupElement::longest(rs, J));
  }
  for (int j = 0; j < m; ++j)
    data.w_primes.push_back(data.parabolic_longest[j] * data.parabolic_longest[j + 1]);

  // Rounds of removing the eigenspaces of minimal argument.
  std::vector<char> present(m, 1);
  Fraction prev_min(0, 1);
  bool first = true;
  for (int i = 0; i < m; ++i) {
    // minimal argument among present entries
    bool any = false;
    Fraction mn(0, 1);
    for (int k = 0; k < m; ++k) {
      if (!present[k]) continue;
      if (!any || seq.entries[k].theta < mn) mn = seq.entries[k].theta;
      any = true;
    }
    Fraction d = any ? (first ? mn : mn - prev_min) : Fraction(0, 1);
    data.d_primes.push_back(d);
    // vartheta_i: product of w_j' omitting w_{k-1}' for every removed V_k.
    GroupElement prod = GroupElement::identity(rs);
    for (int j = 0; j < m; ++j) {
      if (!present[j]) continue;  // V_{j+1} removed => omit w_j'
      prod = prod * data.w_primes[j];
    }
    // note: present[j] tracks V_{j+1}; omission drops w_j' exactly when
    // V_{j+1} has been removed, so multiply only the *removed* complement:
    data.varthetas.push_back(prod);
    if (any) {
      prev_min = mn;
      first = false;
      for (int k = 0; k < m; ++k)
        if (present[k] && seq.entries[k].theta == mn) present[k] = 0;
    }
  }
  return data;
}

namespace {

void ordered_subsets(const std::vector<int>& items, std::vector<std::vector<int>>& out) {
  // All nonempty subsets in all orders.
  int n = static_cast<int>(items.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(items[i]);
    std::sort(subset.begin(), subset.end());
    do {
      out.push_back(subset);
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
}

}  // namespace

std::optional<EigenSequence> find_braiding_sequence(const GroupElement& w, bool anisotropic_only) {
  EigenDecomposition dec = eigen_decompose(w);
  const RootSystem* rs = w.rs();
  RootSet fixed = fixed_root_set(w);
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(dec.components.size()); ++i) {
    if (anisotropic_only && dec.components[i].theta.num == 0) continue;
    idx.push_back(i);
  }
  std::vector<std::vector<int>> orders;
  ordered_subsets(idx, orders);
  for (const auto& order : orders) {
    EigenSequence seq;
    seq.rs = rs;
    seq.field = dec.field;
    for (int i : order) seq.entries.push_back({dec.components[i].theta, dec.components[i].basis});
    // Cheap set-level filter before the LP battery.
    std::vector<int> h_theta = seq.theta_hyperplanes();
    bool contained = true;
    for (int r : h_theta)
      if (!fixed.count(r + 1)) { contained = false; break; }
    if (!contained) continue;
    if (good_position(seq)) return seq;
  }
  return std::nullopt;
}

std::vector<EigenSequence> all_braiding_sequences(const GroupElement& w) {
  EigenDecomposition dec = eigen_decompose(w);
  const RootSystem* rs = w.rs();
  RootSet fixed = fixed_root_set(w);
  std::vector<int> idx(dec.components.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> orders;
  ordered_subsets(idx, orders);
  std::vector<EigenSequence> found;
  for (const auto& order : orders) {
    EigenSequence seq;
    seq.rs = rs;
    seq.field = dec.field;
    for (int i : order) seq.entries.push_back({dec.components[i].theta, dec.components[i].basis});
    std::vector<int> h_theta = seq.theta_hyperplanes();
    bool contained = true;
    for (int r : h_theta)
      if (!fixed.count(r + 1)) { contained = false; break; }
    if (!contained) continue;
    if (good_position(seq)) found.push_back(std::move(seq));
  }
  return found;
}

}  // namespace coxbraid
