#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ncop/linalg.hpp"
#include "ncop/ordinal.hpp"
#include "ncop/tree.hpp"

namespace ncop {

// A point of the brick manifold B(I). Ambient space G(I) has one coordinate per
// gap; gap g sits between positions g and g+1 of the ordinal. Spaces are keyed
// by position pairs (i, j), 0-based, over all proper intervals.
class SubspaceConfig {
 public:
  SubspaceConfig() = default;
  explicit SubspaceConfig(Ordinal ord) : ord_(std::move(ord)) {}

  const Ordinal& ordinal() const { return ord_; }
  int size() const { return ord_.size(); }
  int ambient() const { return ord_.size() > 0 ? ord_.size() - 1 : 0; }

  const Subspace& at(int i, int j) const;
  const Subspace& at(const std::string& a, const std::string& b) const;
  void set(int i, int j, Subspace s);
  const std::map<std::pair<int, int>, Subspace>& spaces() const { return spaces_; }

  // G(a, b) for positions a <= b: the coordinates of the gaps a..b-1.
  Subspace coordinate(int a, int b) const;

  // Empty string when all five defining clauses hold, else the first violation.
  std::string violation() const;
  bool valid() const { return violation().empty(); }

  bool operator==(const SubspaceConfig& o) const { return ord_ == o.ord_ && spaces_ == o.spaces_; }

  std::string serialize() const;

 private:
  Ordinal ord_;
  std::map<std::pair<int, int>, Subspace> spaces_;
};

// Coordinate map of the gap bijection: outer gap g and inner gap h of I ⊔_i J.
struct GapEmbedding {
  std::vector<int> outer, inner;
  int total = 0;
};
GapEmbedding gap_embedding(int n_outer, int position, int n_inner);

SubspaceConfig brick_compose(const SubspaceConfig& c1, const std::string& i, const SubspaceConfig& c2);
SubspaceConfig brick_compose_at(const SubspaceConfig& c1, int position, const SubspaceConfig& c2);

// The unique point of B(2) (or of B(1)), over the given labels.
SubspaceConfig unit_config(const Ordinal& ord);

// Open-stratum point of B(n): V_{k,k} spanned by e_{k-1,k} + c_k e_{k,k+1}, all c_k nonzero.
SubspaceConfig corolla_config(const Ordinal& ord, const std::vector<Q>& params);

// Point of B(n, T) built by composing corolla points along T. params supplies
// one nonzero rational per non-extremal edge (n - 2 - n_e(T) in total).
SubspaceConfig tree_config(const PlanarTree& t, const std::vector<Q>& params);
SubspaceConfig tree_config(const PlanarTree& t, const Ordinal& ord, const std::vector<Q>& params);

// Stratum-first sampling: random tree (if none given) and random nonzero parameters.
class ConfigSampler {
 public:
  explicit ConfigSampler(std::uint64_t seed) : rng_(seed) {}
  Q nonzero();
  PlanarTree tree(int n);
  SubspaceConfig sample(int n);
  SubspaceConfig sample(const PlanarTree& t);
  SubspaceConfig sample(const PlanarTree& t, const Ordinal& ord);

 private:
  std::mt19937_64 rng_;
};

PlanarTree stratum_of(const SubspaceConfig& c);
int stratum_dimension(const PlanarTree& t);

// --------------------------------------------------------------- polytopes

using IntPoint = std::vector<long>;

struct LatticePolytope {
  int dimension = 0;  // ambient lattice rank
  std::vector<IntPoint> vertices;  // sorted
  std::string json() const;
  std::string poly() const;  // one point per line
};

IntPoint loday_vertex(const PlanarTree& t);
LatticePolytope loday_polytope(int n);
LatticePolytope loday_via_minkowski(int n);
IntPoint vertex_missing_basis(const PlanarTree& t);

// For every point, searches an ordering of coordinates whose weight vector
// B^rank makes the point the unique maximiser over the set. All found means
// every point is an extreme point of the convex hull.
bool vertices_certified(const LatticePolytope& p);

struct Wall {
  int cone_a = 0, cone_b = 0;  // indices into Fan::cones
  int left = 0, right = 0;     // the wall lies on y_left = y_right (1-based gap indices)
};

struct Fan {
  int rank = 0;  // ambient rank n-1; everything is read modulo the diagonal
  std::vector<PlanarTree> trees;
  std::vector<std::vector<IntPoint>> cones;  // rays of each maximal cone
  std::vector<Wall> walls;
  std::string json() const;
};

Fan normal_fan(int n);
// Each cone is simplicial modulo the diagonal, each vertex maximises every ray
// of its own cone and no other facet normal, and every wall normal is
// orthogonal to the rays shared by its two cones.
bool fan_consistent(const Fan& f, const LatticePolytope& p);

// f_i = number of trees whose stratum has dimension i.
std::vector<long> f_vector(int n);
std::vector<long> h_vector(int n);
std::vector<long> complex_betti(int n);  // indexed by homological degree
std::vector<long> real_betti(int n);
long euler_characteristic(const std::vector<long>& betti);
long real_euler_expected(int n);

}  // namespace ncop
