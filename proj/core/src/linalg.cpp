#include "coxbraid/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace coxbraid {

FVec fvec_zero(const RealCyclotomicField* f, int n) { return FVec(n, f->zero()); }

FMat fmat_identity(const RealCyclotomicField* f, int n) {
  FMat m(n, fvec_zero(f, n));
  for (int i = 0; i < n; ++i) m[i][i] = f->one();
  return m;
}

FMat fmat_zero(const RealCyclotomicField* f, int rows, int cols) {
  return FMat(rows, fvec_zero(f, cols));
}

FVec fvec_add(const FVec& a, const FVec& b) {
  FVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

FVec fvec_sub(const FVec& a, const FVec& b) {
  FVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

FVec fvec_scale(const FVec& a, const FieldElement& c) {
  FVec r = a;
  for (auto& x : r) x *= c;
  return r;
}

bool fvec_is_zero(const FVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

FieldElement dot(const FVec& a, const FVec& b) {
  assert(a.size() == b.size() && !a.empty());
  FieldElement r = a[0].field()->zero();
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

FMat fmat_mul(const FMat& a, const FMat& b) {
  assert(!a.empty() && !b.empty() && a[0].size() == b.size());
  const RealCyclotomicField* f = a[0][0].field();
  FMat r = fmat_zero(f, static_cast<int>(a.size()), static_cast<int>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

FVec fmat_apply(const FMat& a, const FVec& v) {
  assert(!a.empty() && a[0].size() == v.size());
  FVec r = fvec_zero(v[0].field(), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      if (!a[i][j].is_zero()) r[i] += a[i][j] * v[j];
    }
  return r;
}

FMat fmat_sub(const FMat& a, const FMat& b) {
  FMat r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = fvec_sub(r[i], b[i]);
  return r;
}

FMat fmat_transpose(const FMat& a) {
  if (a.empty()) return {};
  const RealCyclotomicField* f = a[0][0].field();
  FMat r = fmat_zero(f, static_cast<int>(a[0].size()), static_cast<int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

namespace {

// Bareiss forward elimination. Returns pivot columns; m becomes upper
// echelon with exact entries (each division is exact by construction).
std::vector<int> bareiss_echelon(FMat& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const RealCyclotomicField* f = m[0][0].field();
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  FieldElement prev = f->one();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = f->zero();
    }
    prev = m[r][c];
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int rank(FMat m) { return static_cast<int>(bareiss_echelon(m).size()); }

FMat kernel(const FMat& m_in) {
  if (m_in.empty()) return {};
  FMat m = m_in;
  const RealCyclotomicField* f = m[0][0].field();
  int cols = static_cast<int>(m[0].size());
  std::vector<int> pivot_cols = bareiss_echelon(m);
  int r = static_cast<int>(pivot_cols.size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  FMat basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    FVec v = fvec_zero(f, cols);
    v[free_c] = f->one();
    // Back-substitute through the echelon rows.
    for (int i = r - 1; i >= 0; --i) {
      int pc = pivot_cols[i];
      FieldElement s = f->zero();
      for (int j = pc + 1; j < cols; ++j)
        if (!m[i][j].is_zero() && !v[j].is_zero()) s += m[i][j] * v[j];
      v[pc] = -s / m[i][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FMat column_space(const FMat& m_in) {
  if (m_in.empty()) return {};
  FMat m = m_in;
  std::vector<int> pivot_cols = bareiss_echelon(m);
  FMat basis;
  for (int c : pivot_cols) {
    FVec col;
    col.reserve(m_in.size());
    for (const auto& row : m_in) col.push_back(row[c]);
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<FVec> solve(const FMat& a, const FVec& b) {
  assert(!a.empty() && a.size() == b.size());
  const RealCyclotomicField* f = b[0].field();
  int cols = static_cast<int>(a[0].size());
  FMat aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<int> pivot_cols = bareiss_echelon(aug);
  // Inconsistent iff the augmented column is a pivot.
  for (int c : pivot_cols)
    if (c == cols) return std::nullopt;
  FVec x = fvec_zero(f, cols);
  for (int i = static_cast<int>(pivot_cols.size()) - 1; i >= 0; --i) {
    int pc = pivot_cols[i];
    FieldElement s = aug[i][cols];
    for (int j = pc + 1; j < cols; ++j)
      if (!aug[i][j].is_zero() && !x[j].is_zero()) s -= aug[i][j] * x[j];
    x[pc] = s / aug[i][pc];
  }
  return x;
}

bool in_span(const FMat& basis, const FVec& v) {
  if (fvec_is_zero(v)) return true;
  if (basis.empty()) return false;
  FMat cols = fmat_transpose(basis);
  auto sol = solve(cols, v);
  return sol.has_value();
}

}  // namespace coxbraid
