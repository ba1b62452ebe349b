#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxbraid/cone.hpp"
#include "coxbraid/coxtype.hpp"
#include "coxbraid/linalg.hpp"

namespace coxbraid {

// Diagram automorphism, as a permutation of simple-root indices (0-based).
// Preserves the Gram matrix by construction.
struct Twist {
  std::vector<int> perm;
  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) return false;
    return true;
  }
  bool operator==(const Twist&) const = default;
};

// Subset of simple-root indices (0-based, sorted).
using ParabolicIndex = std::vector<int>;

// Root coordinates, functionals and Gram data embedded into the field
// Q(2cos(2pi/N)) for an eigen-computation modulus N.
struct Geometry {
  const RealCyclotomicField* field = nullptr;
  FMat gram;              // rank x rank
  FMat pos_roots;         // coords of positive roots in the simple basis
  FMat root_functionals;  // row r: v -> (beta_r, v) as a dot product on coords
};

// Signed roots are encoded as nonzero ints: +(k+1) is the positive root with
// index k, -(k+1) its negative.
class RootSystem {
 public:
  // Interned; pointers stay valid for the lifetime of the process.
  static const RootSystem* build(const CoxeterType& t);
  static const RootSystem* build(const std::string& type_text);

  const CoxeterType& type() const { return type_; }
  int rank() const { return rank_; }
  const RealCyclotomicField* field() const { return field_; }
  int num_positive() const { return static_cast<int>(pos_roots_.size()); }
  int num_roots() const { return 2 * num_positive(); }

  // Coordinates in the simple-root basis; positive index k. The first
  // rank() entries are the simple roots themselves.
  const FVec& root_coords(int k) const { return pos_roots_[k]; }
  FVec signed_root_coords(int signed_root) const;
  std::optional<int> find_root(const FVec& coords) const;  // signed index

  const FMat& gram() const { return gram_; }
  FieldElement inner(const FVec& a, const FVec& b) const;
  const FieldElement& simple_norm(int i) const { return gram_[i][i]; }
  const FieldElement& root_norm(int k) const { return root_norms_[k]; }

  // Rows are the fundamental weights omega_i in simple-root coordinates.
  const FMat& fundamental_weights() const { return weights_; }
  std::optional<int> highest_root() const { return highest_root_; }

  int reflect(int i, int signed_root) const;  // action of s_i
  const std::vector<Twist>& twists() const { return twists_; }
  int num_twists() const { return static_cast<int>(twists_.size()); }
  int twist_apply(int t, int signed_root) const;
  int twist_compose(int a, int b) const;
  int twist_inverse(int t) const;
  // Index of a twist given by its simple permutation; -1 if absent.
  int twist_index(const std::vector<int>& perm) const;

  // Height of a positive root: sum of its simple coordinates (rational for
  // crystallographic types; exact field sum in general, returned as is).
  FieldElement height(int k) const;

  // Embedded geometry for modulus N (base_modulus must divide N); cached.
  const Geometry& geometry(long modulus) const;

  // Support of a signed root: simple indices with nonzero coordinate.
  const std::vector<int>& support(int k) const { return supports_[k]; }

  std::string root_name(int signed_root) const;  // e.g. "a23", "-a1"

 private:
  explicit RootSystem(const CoxeterType& t);
  void build_gram();
  void close_roots();
  void build_weights();
  void build_twists();

  CoxeterType type_;
  int rank_;
  const RealCyclotomicField* field_;
  FMat gram_;
  FMat pos_roots_;
  std::vector<FieldElement> root_norms_;
  std::vector<std::vector<int>> supports_;
  std::map<std::string, int> root_index_;  // key -> signed index
  std::vector<std::vector<int>> reflection_;  // [i][k] action of s_i on +roots
  FMat weights_;
  std::optional<int> highest_root_;
  std::vector<Twist> twists_;
  std::vector<std::vector<int>> twist_root_;  // [t][k] positive image index
  mutable std::mutex geo_mutex_;
  mutable std::map<long, std::unique_ptr<Geometry>> geometry_;

  static std::string coords_key(const FVec& v);
};

// Set of signed roots.
using RootSet = std::set<int>;

// Is L (a sign-symmetric root set) exactly the root set of a standard
// parabolic subsystem? Returns its simple-index set if so.
std::optional<ParabolicIndex> standard_parabolic_set(const RootSystem& rs, const RootSet& roots);

// Closure of L under positive combinations that land in the root system:
// true iff every root of the form c1 b1 + c2 b2 (c_i > 0, b_i in L) is in L.
bool convex_root_set(const RootSystem& rs, const RootSet& roots);

// (ell(r_beta) + 3) / 2 for the reflection r_beta in the dominant long root.
int dual_coxeter_number(const RootSystem& rs);

}  // namespace coxbraid
