#include "coxbraid/cone.hpp"

#include <cassert>

namespace coxbraid {

namespace {

// Dense phase-one simplex tableau over an exact ordered field.
//
// Feasibility of { A t >= rhs } with t free is rewritten with t = u - z,
// u, z >= 0, surplus s >= 0 and one artificial per row:
//   A u - A z - s + a = rhs   (rhs >= 0),
// minimising sum(a). Bland's rule guarantees termination.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const FMat& a, const std::vector<int>& rhs_one,
                  const RealCyclotomicField* f)
      : f_(f) {
    rows_ = static_cast<int>(a.size());
    int k = rows_ ? static_cast<int>(a[0].size()) : 0;
    nvars_ = 2 * k + rows_ + rows_;  // u, z, s, artificials
    art0_ = 2 * k + rows_;
    // tableau rows: [vars | rhs]
    tab_ = fmat_zero(f_, rows_, nvars_ + 1);
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < k; ++j) {
        tab_[i][j] = a[i][j];
        tab_[i][k + j] = -a[i][j];
      }
      tab_[i][2 * k + i] = -f_->one();       // surplus
      tab_[i][art0_ + i] = f_->one();        // artificial
      tab_[i][nvars_] = f_->from_rational(Rational(rhs_one[i]));
      basis_[i] = art0_ + i;
    }
    num_t_ = k;
  }

  // Runs phase one; returns true when sum of artificials reaches zero.
  bool feasible() {
    // objective row for minimising sum of artificials, expressed over the
    // current basis: obj[j] = sum over rows of tab[i][j] (for artificial
    // basis), target value = sum rhs.
    FVec obj = fvec_zero(f_, nvars_ + 1);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j <= nvars_; ++j) obj[j] += tab_[i][j];
    for (int i = 0; i < rows_; ++i) obj[basis_[i]] = f_->zero();

    for (;;) {
      // Bland: entering variable = least index with positive reduced cost.
      int enter = -1;
      for (int j = 0; j < nvars_; ++j) {
        if (j >= art0_) break;  // never re-enter artificials
        if (obj[j].sign() > 0) { enter = j; break; }
      }
      if (enter < 0) break;
      // Ratio test, ties broken by least basis index (Bland).
      int leave = -1;
      FieldElement best_num = f_->zero(), best_den = f_->one();
      for (int i = 0; i < rows_; ++i) {
        if (tab_[i][enter].sign() <= 0) continue;
        if (leave < 0) {
          leave = i; best_num = tab_[i][nvars_]; best_den = tab_[i][enter];
          continue;
        }
        FieldElement diff = tab_[i][nvars_] * best_den - best_num * tab_[i][enter];
        int s = diff.sign();
        if (s < 0 || (s == 0 && basis_[i] < basis_[leave])) {
          leave = i; best_num = tab_[i][nvars_]; best_den = tab_[i][enter];
        }
      }
      if (leave < 0) return false;  // unbounded phase-one cannot happen
      pivot(leave, enter, obj);
    }
    // Feasible iff objective value (sum of artificial basics) is zero.
    for (int i = 0; i < rows_; ++i)
      if (basis_[i] >= art0_ && tab_[i][nvars_].sign() != 0) return false;
    return true;
  }

  // Value of t after a successful run.
  FVec t_solution() const {
    FVec t = fvec_zero(f_, num_t_);
    for (int i = 0; i < rows_; ++i) {
      int b = basis_[i];
      if (b < num_t_)
        t[b] += tab_[i][nvars_];
      else if (b < 2 * num_t_)
        t[b - num_t_] -= tab_[i][nvars_];
    }
    return t;
  }

 private:
  void pivot(int leave, int enter, FVec& obj) {
    FieldElement inv = tab_[leave][enter].inverse();
    for (int j = 0; j <= nvars_; ++j) tab_[leave][j] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == leave || tab_[i][enter].is_zero()) continue;
      FieldElement c = tab_[i][enter];
      for (int j = 0; j <= nvars_; ++j) tab_[i][j] -= c * tab_[leave][j];
    }
    if (!obj[enter].is_zero()) {
      FieldElement c = obj[enter];
      for (int j = 0; j <= nvars_; ++j) obj[j] -= c * tab_[leave][j];
    }
    basis_[leave] = enter;
  }

  const RealCyclotomicField* f_;
  int rows_, nvars_, art0_, num_t_;
  FMat tab_;
  std::vector<int> basis_;
};

}  // namespace

ConeResult cone_strictly_feasible(const ConeProblem& p) {
  const RealCyclotomicField* f = nullptr;
  for (const auto* group : {&p.subspace_basis, &p.strict, &p.weak})
    if (!group->empty()) { f = (*group)[0][0].field(); break; }
  if (!f) {
    // No data at all: the zero vector works iff nothing strict is demanded.
    return {p.strict.empty(), std::nullopt};
  }

  int k = static_cast<int>(p.subspace_basis.size());
  // Reduce functionals to the span coordinates t, v = sum t_j b_j.
  FMat rows;
  std::vector<int> rhs;
  for (const auto& fn : p.strict) {
    FVec row = fvec_zero(f, k);
    bool all_zero = true;
    for (int j = 0; j < k; ++j) {
      row[j] = dot(fn, p.subspace_basis[j]);
      if (!row[j].is_zero()) all_zero = false;
    }
    if (all_zero) return {false, std::nullopt};  // f == 0 on the subspace
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  for (const auto& fn : p.weak) {
    FVec row = fvec_zero(f, k);
    bool all_zero = true;
    for (int j = 0; j < k; ++j) {
      row[j] = dot(fn, p.subspace_basis[j]);
      if (!row[j].is_zero()) all_zero = false;
    }
    if (all_zero) continue;  // 0 >= 0
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }
  if (rows.empty()) {
    // Nothing to satisfy; any point of the subspace works.
    FVec w = k > 0 ? p.subspace_basis[0] : fvec_zero(f, p.ambient_dim);
    return {true, w};
  }

  PhaseOneSimplex simplex(rows, rhs, f);
  if (!simplex.feasible()) return {false, std::nullopt};
  FVec t = simplex.t_solution();
  FVec v = fvec_zero(f, p.ambient_dim);
  for (int j = 0; j < k; ++j)
    if (!t[j].is_zero()) v = fvec_add(v, fvec_scale(p.subspace_basis[j], t[j]));

  // The witness must satisfy every constraint exactly.
  for (const auto& fn : p.strict) assert(dot(fn, v).sign() > 0);
  for (const auto& fn : p.weak) assert(dot(fn, v).sign() >= 0);
  return {true, v};
}

}  // namespace coxbraid
