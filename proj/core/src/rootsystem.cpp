#include "coxbraid/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace coxbraid {

namespace {

std::mutex g_rs_mutex;
std::map<std::string, std::unique_ptr<RootSystem>>& rs_registry() {
  static std::map<std::string, std::unique_ptr<RootSystem>> reg;
  return reg;
}

}  // namespace

const RootSystem* RootSystem::build(const CoxeterType& t) {
  validate(t);
  std::string key = t.str();
  std::lock_guard<std::mutex> lock(g_rs_mutex);
  auto& reg = rs_registry();
  auto it = reg.find(key);
  if (it == reg.end()) {
    it = reg.emplace(key, std::unique_ptr<RootSystem>(new RootSystem(t))).first;
  }
  return it->second.get();
}

const RootSystem* RootSystem::build(const std::string& type_text) {
  return build(CoxeterType::parse(type_text));
}

RootSystem::RootSystem(const CoxeterType& t) : type_(t), rank_(t.total_rank()) {
  field_ = RealCyclotomicField::get(t.base_modulus());
  build_gram();
  close_roots();
  build_weights();
  build_twists();
}

void RootSystem::build_gram() {
  const auto* f = field_;
  gram_ = fmat_zero(f, rank_, rank_);
  auto set = [&](int i, int j, const FieldElement& v) {
    gram_[i][j] = v;
    gram_[j][i] = v;
  };
  FieldElement two = f->from_rational(Rational(2));
  FieldElement mone = f->from_rational(Rational(-1));
  int off = 0;
  for (const auto& fac : type_.factors) {
    int n = fac.rank;
    auto I = [&](int i) { return off + i; };  // 0-based within factor
    switch (fac.family) {
      case 'A':
        for (int i = 0; i < n; ++i) set(I(i), I(i), two);
        for (int i = 0; i + 1 < n; ++i) set(I(i), I(i + 1), mone);
        break;
      case 'B':  // alpha_n short
        for (int i = 0; i + 1 < n; ++i) set(I(i), I(i), two);
        set(I(n - 1), I(n - 1), f->one());
        for (int i = 0; i + 1 < n; ++i) set(I(i), I(i + 1), mone);
        break;
      case 'C':  // alpha_n long
        for (int i = 0; i + 1 < n; ++i) set(I(i), I(i), two);
        set(I(n - 1), I(n - 1), f->from_rational(Rational(4)));
        for (int i = 0; i + 2 < n; ++i) set(I(i), I(i + 1), mone);
        set(I(n - 2), I(n - 1), f->from_rational(Rational(-2)));
        break;
      case 'D':
        for (int i = 0; i < n; ++i) set(I(i), I(i), two);
        for (int i = 0; i + 1 < n - 1; ++i) set(I(i), I(i + 1), mone);
        set(I(n - 3), I(n - 1), mone);
        break;
      case 'E':
        for (int i = 0; i < n; ++i) set(I(i), I(i), two);
        set(I(0), I(2), mone);
        set(I(1), I(3), mone);
        for (int i = 2; i + 1 < n; ++i) set(I(i), I(i + 1), mone);
        break;
      case 'F':
        set(I(0), I(0), f->from_rational(Rational(4)));
        set(I(1), I(1), f->from_rational(Rational(4)));
        set(I(2), I(2), two);
        set(I(3), I(3), two);
        set(I(0), I(1), f->from_rational(Rational(-2)));
        set(I(1), I(2), f->from_rational(Rational(-2)));
        set(I(2), I(3), mone);
        break;
      case 'G':  // alpha_1 short, alpha_2 long
        set(I(0), I(0), two);
        set(I(1), I(1), f->from_rational(Rational(6)));
        set(I(0), I(1), f->from_rational(Rational(-3)));
        break;
      case 'H': {
        for (int i = 0; i < n; ++i) set(I(i), I(i), two);
        // 2cos(pi/5) = golden ratio = c5 + 1
        FieldElement phi = f->subfield_generator(5) + f->one();
        set(I(0), I(1), -phi);
        for (int i = 1; i + 1 < n; ++i) set(I(i), I(i + 1), mone);
        break;
      }
      case 'I': {
        set(I(0), I(0), two);
        set(I(1), I(1), two);
        FieldElement c = f->subfield_generator(2L * fac.m);  // 2cos(pi/m)
        set(I(0), I(1), -c);
        break;
      }
      default:
        throw std::invalid_argument("unknown family");
    }
    off += n;
  }
}

std::string RootSystem::coords_key(const FVec& v) {
  std::ostringstream os;
  for (const auto& x : v) {
    for (const auto& c : x.coeffs()) os << to_string(c) << ",";
    os << ";";
  }
  return os.str();
}

void RootSystem::close_roots() {
  const auto* f = field_;
  // Sign of the first nonzero coordinate classifies a root.
  auto root_sign = [&](const FVec& v) {
    for (const auto& x : v) {
      int s = x.sign();
      if (s != 0) return s;
    }
    return 0;
  };
  auto reflect_vec = [&](int i, const FVec& v) {
    FieldElement ip = f->zero();
    for (int j = 0; j < rank_; ++j)
      if (!v[j].is_zero()) ip += v[j] * gram_[j][i];
    FieldElement coeff = (ip + ip) / gram_[i][i];
    FVec r = v;
    r[i] -= coeff;
    return r;
  };

  std::deque<int> queue;
  for (int i = 0; i < rank_; ++i) {
    FVec alpha = fvec_zero(f, rank_);
    alpha[i] = f->one();
    pos_roots_.push_back(alpha);
    root_index_[coords_key(alpha)] = i + 1;
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      FVec img = reflect_vec(i, pos_roots_[k]);
      int s = root_sign(img);
      assert(s != 0);
      FVec pos = img;
      if (s < 0)
        for (auto& x : pos) x = -x;
      std::string key = coords_key(pos);
      if (!root_index_.count(key)) {
        int idx = static_cast<int>(pos_roots_.size());
        pos_roots_.push_back(pos);
        root_index_[key] = idx + 1;
        queue.push_back(idx);
      }
    }
  }

  int P = num_positive();
  reflection_.assign(rank_, std::vector<int>(P, 0));
  for (int i = 0; i < rank_; ++i) {
    for (int k = 0; k < P; ++k) {
      FVec img = reflect_vec(i, pos_roots_[k]);
      int s = root_sign(img);
      if (s < 0)
        for (auto& x : img) x = -x;
      auto it = root_index_.find(coords_key(img));
      assert(it != root_index_.end());
      reflection_[i][k] = s * it->second;
    }
  }

  root_norms_.reserve(P);
  supports_.reserve(P);
  for (int k = 0; k < P; ++k) {
    root_norms_.push_back(inner(pos_roots_[k], pos_roots_[k]));
    std::vector<int> sup;
    for (int j = 0; j < rank_; ++j)
      if (!pos_roots_[k][j].is_zero()) sup.push_back(j);
    supports_.push_back(std::move(sup));
  }

  // Highest root for irreducible crystallographic types: maximal height.
  bool crystallographic = true;
  for (const auto& fac : type_.factors)
    if (fac.family == 'H' || fac.family == 'I') crystallographic = false;
  if (type_.irreducible() && crystallographic) {
    int best = 0;
    for (int k = 1; k < P; ++k)
      if ((height(k) - height(best)).sign() > 0) best = k;
    highest_root_ = best;
  }
}

FieldElement RootSystem::height(int k) const {
  FieldElement h = field_->zero();
  for (const auto& x : pos_roots_[k]) h += x;
  return h;
}

FieldElement RootSystem::inner(const FVec& a, const FVec& b) const {
  FieldElement r = a[0].field()->zero();
  const FMat& g = a[0].field() == field_ ? gram_ : geometry(a[0].field()->modulus()).gram;
  for (int i = 0; i < rank_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j)
      if (!b[j].is_zero()) r += a[i] * g[i][j] * b[j];
  }
  return r;
}

void RootSystem::build_weights() {
  // (omega_i, alpha_j~) = delta_ij with alpha~ = 2 alpha/(alpha,alpha):
  // solve gram * c_i = norm_i/2 * e_i.
  weights_.clear();
  for (int i = 0; i < rank_; ++i) {
    FVec rhs = fvec_zero(field_, rank_);
    rhs[i] = gram_[i][i] / field_->from_rational(Rational(2));
    auto sol = solve(gram_, rhs);
    assert(sol.has_value());
    weights_.push_back(*sol);
  }
}

void RootSystem::build_twists() {
  // Gram-preserving permutations of simple indices, block by block
  // (factor-permuting twists are not supported).
  std::vector<std::pair<int, int>> blocks;
  int off = 0;
  for (const auto& fac : type_.factors) {
    blocks.emplace_back(off, fac.rank);
    off += fac.rank;
  }
  std::vector<std::vector<std::vector<int>>> per_block;
  for (auto [b0, n] : blocks) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> autos;
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (!(gram_[b0 + p[i]][b0 + p[j]] == gram_[b0 + i][b0 + j])) ok = false;
      if (ok) autos.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    per_block.push_back(std::move(autos));
  }
  std::vector<std::vector<int>> all{std::vector<int>{}};
  for (size_t b = 0; b < per_block.size(); ++b) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : all)
      for (const auto& blockperm : per_block[b]) {
        std::vector<int> perm = partial;
        for (int x : blockperm) perm.push_back(blocks[b].first + x);
        next.push_back(std::move(perm));
      }
    all = std::move(next);
  }
  std::sort(all.begin(), all.end());
  // identity sorts first
  for (auto& p : all) twists_.push_back(Twist{std::move(p)});

  int P = num_positive();
  twist_root_.assign(twists_.size(), std::vector<int>(P, 0));
  for (size_t t = 0; t < twists_.size(); ++t) {
    for (int k = 0; k < P; ++k) {
      FVec img = fvec_zero(field_, rank_);
      for (int j = 0; j < rank_; ++j) img[twists_[t].perm[j]] = pos_roots_[k][j];
      auto it = root_index_.find(coords_key(img));
      assert(it != root_index_.end());
      twist_root_[t][k] = it->second;
    }
  }
}

FVec RootSystem::signed_root_coords(int signed_root) const {
  FVec v = pos_roots_[std::abs(signed_root) - 1];
  if (signed_root < 0)
    for (auto& x : v) x = -x;
  return v;
}

std::optional<int> RootSystem::find_root(const FVec& coords) const {
  auto it = root_index_.find(coords_key(coords));
  if (it != root_index_.end()) return it->second;
  FVec neg = coords;
  for (auto& x : neg) x = -x;
  it = root_index_.find(coords_key(neg));
  if (it != root_index_.end()) return -it->second;
  return std::nullopt;
}

int RootSystem::reflect(int i, int signed_root) const {
  int k = std::abs(signed_root) - 1;
  int img = reflection_[i][k];
  return signed_root > 0 ? img : -img;
}

int RootSystem::twist_apply(int t, int signed_root) const {
  int k = std::abs(signed_root) - 1;
  int img = twist_root_[t][k];
  return signed_root > 0 ? img : -img;
}

int RootSystem::twist_compose(int a, int b) const {
  std::vector<int> perm(rank_);
  for (int i = 0; i < rank_; ++i) perm[i] = twists_[a].perm[twists_[b].perm[i]];
  int idx = twist_index(perm);
  assert(idx >= 0);
  return idx;
}

int RootSystem::twist_inverse(int t) const {
  std::vector<int> perm(rank_);
  for (int i = 0; i < rank_; ++i) perm[twists_[t].perm[i]] = i;
  int idx = twist_index(perm);
  assert(idx >= 0);
  return idx;
}

int RootSystem::twist_index(const std::vector<int>& perm) const {
  for (size_t t = 0; t < twists_.size(); ++t)
    if (twists_[t].perm == perm) return static_cast<int>(t);
  return -1;
}

const Geometry& RootSystem::geometry(long modulus) const {
  std::lock_guard<std::mutex> lock(geo_mutex_);
  auto it = geometry_.find(modulus);
  if (it == geometry_.end()) {
    auto geo = std::make_unique<Geometry>();
    geo->field = RealCyclotomicField::get(modulus);
    const auto* f = geo->field;
    geo->gram = fmat_zero(f, rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) geo->gram[i][j] = embed(gram_[i][j], f);
    for (const auto& root : pos_roots_) {
      FVec v = fvec_zero(f, rank_);
      for (int j = 0; j < rank_; ++j) v[j] = embed(root[j], f);
      geo->pos_roots.push_back(std::move(v));
    }
    for (const auto& root : geo->pos_roots) {
      FVec fn = fvec_zero(f, rank_);
      for (int k = 0; k < rank_; ++k)
        for (int j = 0; j < rank_; ++j)
          if (!root[j].is_zero()) fn[k] += root[j] * geo->gram[j][k];
      geo->root_functionals.push_back(std::move(fn));
    }
    it = geometry_.emplace(modulus, std::move(geo)).first;
  }
  return *it->second;
}

std::string RootSystem::root_name(int signed_root) const {
  int k = std::abs(signed_root) - 1;
  std::ostringstream os;
  if (signed_root < 0) os << "-";
  bool simple_coords = true;
  for (int j = 0; j < rank_; ++j) {
    const auto& c = pos_roots_[k][j];
    if (!c.is_zero() && !(c == field_->one())) simple_coords = false;
  }
  if (simple_coords && rank_ <= 9) {
    os << "a";
    for (int j : supports_[k]) os << (j + 1);
  } else {
    os << "r" << (k + 1);
  }
  return os.str();
}

std::optional<ParabolicIndex> standard_parabolic_set(const RootSystem& rs, const RootSet& roots) {
  // L must equal exactly the (signed) roots supported on J.
  std::set<int> J;
  for (int r : roots)
    for (int j : rs.support(std::abs(r) - 1)) J.insert(j);
  RootSet expected;
  for (int k = 0; k < rs.num_positive(); ++k) {
    bool inside = true;
    for (int j : rs.support(k))
      if (!J.count(j)) { inside = false; break; }
    if (inside) {
      expected.insert(k + 1);
      expected.insert(-(k + 1));
    }
  }
  if (expected != roots) return std::nullopt;
  return ParabolicIndex(J.begin(), J.end());
}

bool convex_root_set(const RootSystem& rs, const RootSet& roots) {
  std::vector<int> list(roots.begin(), roots.end());
  const auto* f = rs.field();
  for (size_t a = 0; a < list.size(); ++a) {
    FVec va = rs.signed_root_coords(list[a]);
    for (size_t b = a; b < list.size(); ++b) {
      FVec vb = rs.signed_root_coords(list[b]);
      FMat cols = fmat_zero(f, rs.rank(), 2);
      for (int i = 0; i < rs.rank(); ++i) {
        cols[i][0] = va[i];
        cols[i][1] = vb[i];
      }
      for (int k = 0; k < rs.num_positive(); ++k) {
        for (int sgn : {1, -1}) {
          int cand = sgn * (k + 1);
          if (roots.count(cand)) continue;
          auto sol = solve(cols, rs.signed_root_coords(cand));
          if (!sol) continue;
          // Solution must actually reproduce the root (cols can be rank 1).
          FVec chk = fvec_add(fvec_scale(va, (*sol)[0]), fvec_scale(vb, (*sol)[1]));
          if (!fvec_is_zero(fvec_sub(chk, rs.signed_root_coords(cand)))) continue;
          if ((*sol)[0].sign() > 0 && (*sol)[1].sign() > 0) return false;
        }
      }
    }
  }
  return true;
}

int dual_coxeter_number(const RootSystem& rs) {
  if (!rs.type().irreducible())
    throw std::invalid_argument("dual Coxeter number needs an irreducible type");
  // Dominant long root: maximal norm, nonnegative against every coweight
  // direction, i.e. (beta, alpha_i) >= 0 for all i.
  const FieldElement* max_norm = &rs.root_norm(0);
  for (int k = 1; k < rs.num_positive(); ++k)
    if ((rs.root_norm(k) - *max_norm).sign() > 0) max_norm = &rs.root_norm(k);
  int dominant = -1;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!(rs.root_norm(k) == *max_norm)) continue;
    bool dom = true;
    for (int i = 0; i < rs.rank() && dom; ++i) {
      FVec alpha = fvec_zero(rs.field(), rs.rank());
      alpha[i] = rs.field()->one();
      if (rs.inner(rs.root_coords(k), alpha).sign() < 0) dom = false;
    }
    if (dom) { dominant = k; break; }
  }
  assert(dominant >= 0);
  // Length of the reflection in that root = number of positive roots it
  // sends negative.
  const FVec& beta = rs.root_coords(dominant);
  const FieldElement& bnorm = rs.root_norm(dominant);
  int inversions = 0;
  for (int k = 0; k < rs.num_positive(); ++k) {
    FieldElement c = rs.inner(rs.root_coords(k), beta) / bnorm;
    FVec img = fvec_sub(rs.root_coords(k), fvec_scale(beta, c + c));
    // negative iff first nonzero coordinate is negative
    for (const auto& x : img) {
      int s = x.sign();
      if (s != 0) {
        if (s < 0) ++inversions;
        break;
      }
    }
  }
  return (inversions + 3) / 2;
}

}  // namespace coxbraid
