#include "ncop/brick.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "ncop/zoo.hpp"

namespace ncop {

// ---------------------------------------------------------------- configs

const Subspace& SubspaceConfig::at(int i, int j) const {
  auto it = spaces_.find({i, j});
  if (it == spaces_.end()) throw std::out_of_range("no space at this interval");
  return it->second;
}

const Subspace& SubspaceConfig::at(const std::string& a, const std::string& b) const {
  return at(ord_.position(a), ord_.position(b));
}

void SubspaceConfig::set(int i, int j, Subspace s) {
  int n = size();
  if (i < 0 || j >= n || i > j || (i == 0 && j == n - 1)) throw std::out_of_range("not a proper interval");
  spaces_[{i, j}] = std::move(s);
}

Subspace SubspaceConfig::coordinate(int a, int b) const {
  std::vector<int> c;
  for (int g = a; g < b; ++g) c.push_back(g);
  return Subspace::coordinate(ambient(), c);
}

std::string SubspaceConfig::violation() const {
  int n = size();
  auto where = [&](int i, int j) { return "[" + ord_[i] + "," + ord_[j] + "]"; };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      auto it = spaces_.find({i, j});
      if (it == spaces_.end()) return "missing V" + where(i, j);
      const Subspace& v = it->second;
      if (v.ambient() != ambient()) return "wrong ambient at V" + where(i, j);
      if (v.dim() != j - i + 1) return "dimension of V" + where(i, j);
      if (i > 0 && !(i - 1 == 0 && j == n - 1) && !at(i - 1, j).contains(v)) return "V" + where(i, j) + " not in V(p(i),j)";
      if (j < n - 1 && !(i == 0 && j + 1 == n - 1) && !at(i, j + 1).contains(v)) return "V" + where(i, j) + " not in V(i,s(j))";
      if (i == 0 && v != coordinate(0, j + 1)) return "V" + where(i, j) + " is not G(min,s(j))";
      if (j == n - 1 && v != coordinate(i - 1, n - 1)) return "V" + where(i, j) + " is not G(p(i),max)";
    }
  if (static_cast<int>(spaces_.size()) != n * (n + 1) / 2 - (n > 0 ? 1 : 0)) return "spaces outside the proper intervals";
  return {};
}

std::string SubspaceConfig::serialize() const {
  std::ostringstream out;
  out << "ordinal";
  for (auto& l : ord_.labels()) out << ' ' << l;
  out << '\n';
  for (auto& [ij, s] : spaces_) {
    out << "V " << ord_[ij.first] << ' ' << ord_[ij.second] << '\n';
    for (auto& row : s.basis()) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "  ") << to_string(row[k]);
      out << '\n';
    }
  }
  return out.str();
}

GapEmbedding gap_embedding(int n_outer, int position, int n_inner) {
  GapEmbedding e;
  e.total = n_outer + n_inner - 2;
  for (int g = 0; g + 1 < n_outer; ++g) e.outer.push_back(g < position ? g : g + n_inner - 1);
  for (int h = 0; h + 1 < n_inner; ++h) e.inner.push_back(position + h);
  return e;
}

namespace {

SubspaceConfig compose_raw(const SubspaceConfig& c1, int ip, const SubspaceConfig& c2, Ordinal ord) {
  int n1 = c1.size(), n2 = c2.size();
  if (ip < 0 || ip >= n1) throw std::out_of_range("brick_compose: position out of range");
  if (auto v = c1.violation(); !v.empty()) throw std::invalid_argument("brick_compose: first input: " + v);
  if (auto v = c2.violation(); !v.empty()) throw std::invalid_argument("brick_compose: second input: " + v);
  GapEmbedding emb = gap_embedding(n1, ip, n2);
  int n = n1 + n2 - 1, dim = emb.total;
  SubspaceConfig out(std::move(ord));
  auto outer = [&](int a, int b) { return c1.at(a, b).remap(emb.outer, dim); };
  auto inner_span = [&](int a, int b) {  // G(a,b) of J, positions of J
    std::vector<int> c;
    for (int h = a; h < b; ++h) c.push_back(emb.inner[h]);
    return Subspace::coordinate(dim, c);
  };
  const Subspace all_inner = inner_span(0, n2 - 1);
  // Result position x: in I when x < ip (I position x) or x >= ip + n2 (I position x - n2 + 1).
  auto in_j = [&](int x) { return x >= ip && x < ip + n2; };
  auto ipos = [&](int x) { return x < ip ? x : x - n2 + 1; };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      Subspace v;
      if (!in_j(a) && !in_j(b)) {
        int A = ipos(a), B = ipos(b);
        if (B < ip || A > ip) v = outer(A, B);
        else v = outer(A, B) + all_inner;  // a < i < b
      } else if (in_j(a) && in_j(b)) {
        int A = a - ip, B = b - ip;
        if (A == 0 && B == n2 - 1) v = outer(ip, ip) + all_inner;
        else v = c2.at(A, B).remap(emb.inner, dim);
      } else if (in_j(b)) {  // a in I before i
        int A = ipos(a), B = b - ip;
        if (B < n2 - 1) v = outer(A, ip - 1) + inner_span(0, B + 1);
        else v = outer(A, ip) + all_inner;
      } else {  // a in J, b in I after i
        int A = a - ip, B = ipos(b);
        if (A > 0) v = outer(ip + 1, B) + inner_span(A - 1, n2 - 1);
        else v = outer(ip, B) + all_inner;
      }
      out.set(a, b, std::move(v));
    }
  return out;
}

Ordinal placeholder_ordinal(int n, const std::string& prefix) {
  std::vector<std::string> l;
  for (int k = 1; k <= n; ++k) l.push_back(prefix + std::to_string(k));
  return Ordinal(std::move(l));
}

SubspaceConfig relabel(SubspaceConfig c, const Ordinal& ord) {
  if (ord.size() != c.size()) throw std::invalid_argument("relabel: size mismatch");
  SubspaceConfig out(ord);
  for (auto& [ij, s] : c.spaces()) out.set(ij.first, ij.second, s);
  return out;
}

}  // namespace

SubspaceConfig brick_compose(const SubspaceConfig& c1, const std::string& i, const SubspaceConfig& c2) {
  int ip = c1.ordinal().position(i);
  if (ip < 0) throw std::invalid_argument("brick_compose: label not in the outer ordinal");
  return compose_raw(c1, ip, c2, ordinal_insert(c1.ordinal(), i, c2.ordinal()));
}

SubspaceConfig brick_compose_at(const SubspaceConfig& c1, int position, const SubspaceConfig& c2) {
  return compose_raw(c1, position, c2, Ordinal::canonical(c1.size() + c2.size() - 1));
}

SubspaceConfig unit_config(const Ordinal& ord) {
  if (ord.size() > 2) throw std::invalid_argument("unit_config: B(n) is a point only for n <= 2");
  SubspaceConfig c(ord);
  if (ord.size() == 2) {
    c.set(0, 0, Subspace::full(1));
    c.set(1, 1, Subspace::full(1));
  }
  return c;
}

SubspaceConfig corolla_config(const Ordinal& ord, const std::vector<Q>& params) {
  int n = ord.size();
  if (n <= 2) {
    if (!params.empty()) throw std::invalid_argument("corolla_config: too many parameters");
    return unit_config(ord);
  }
  if (static_cast<int>(params.size()) != n - 2) throw std::invalid_argument("corolla_config: need n-2 parameters");
  int dim = n - 1;
  std::vector<std::vector<Q>> line(n);  // line[k] spans V_{k,k} for interior k
  for (int k = 1; k + 1 < n; ++k) {
    if (is_zero(params[k - 1])) throw std::invalid_argument("corolla_config: parameters must be nonzero");
    line[k].assign(dim, Q(0));
    line[k][k - 1] = 1;
    line[k][k] = params[k - 1];
  }
  SubspaceConfig c(ord);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (i == 0) {
        c.set(i, j, c.coordinate(0, j + 1));
      } else if (j == n - 1) {
        c.set(i, j, c.coordinate(i - 1, n - 1));
      } else {
        DenseMat rows;
        for (int k = i; k <= j; ++k) rows.push_back(line[k]);
        c.set(i, j, Subspace(dim, std::move(rows)));
      }
    }
  return c;
}

SubspaceConfig tree_config(const PlanarTree& t, const Ordinal& ord, const std::vector<Q>& params) {
  const auto& code = t.code();
  std::size_t p = 0, used = 0;
  int fresh = 0;
  std::function<SubspaceConfig()> build = [&]() -> SubspaceConfig {
    int k = code[p++];
    if (k == 0) return unit_config(placeholder_ordinal(1, "#" + std::to_string(fresh++) + "."));
    std::vector<SubspaceConfig> kids;
    for (int c = 0; c < k; ++c) kids.push_back(build());
    if (used + (k - 2) > params.size()) throw std::invalid_argument("tree_config: not enough parameters");
    std::vector<Q> mine(params.begin() + used, params.begin() + used + (k - 2));
    used += k - 2;
    SubspaceConfig c = corolla_config(placeholder_ordinal(k, "#" + std::to_string(fresh++) + "."), mine);
    for (int c_idx = k - 1; c_idx >= 0; --c_idx) {
      if (kids[c_idx].size() == 1) continue;
      Ordinal o = placeholder_ordinal(c.size() + kids[c_idx].size() - 1, "#" + std::to_string(fresh++) + ".");
      c = compose_raw(c, c_idx, kids[c_idx], o);
    }
    return c;
  };
  SubspaceConfig c = build();
  if (used != params.size()) throw std::invalid_argument("tree_config: too many parameters");
  return relabel(std::move(c), ord);
}

SubspaceConfig tree_config(const PlanarTree& t, const std::vector<Q>& params) {
  return tree_config(t, Ordinal::canonical(t.leaves()), params);
}

Q ConfigSampler::nonzero() {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), sign(0, 1);
  Q q(num(rng_), den(rng_));
  q.canonicalize();
  return sign(rng_) ? Q(-q) : q;
}

PlanarTree ConfigSampler::tree(int n) {
  auto all = enumerate_trees(n, false);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng_)];
}

SubspaceConfig ConfigSampler::sample(int n) { return sample(tree(n)); }

SubspaceConfig ConfigSampler::sample(const PlanarTree& t) { return sample(t, Ordinal::canonical(t.leaves())); }

SubspaceConfig ConfigSampler::sample(const PlanarTree& t, const Ordinal& ord) {
  std::vector<Q> params(stratum_dimension(t));
  for (auto& q : params) q = nonzero();
  return tree_config(t, ord, params);
}

// ---------------------------------------------------------------- strata

PlanarTree stratum_of(const SubspaceConfig& c) {
  int n = c.size();
  if (n == 1) return PlanarTree::leaf();
  if (n == 2) return PlanarTree::corolla(2);
  // 0: V_{k,k} = G(k-1,k); 1: V_{k,k} = G(k,k+1); 2: neither
  auto kind = [&](int k) {
    if (k == 0) return 1;
    if (k == n - 1) return 0;
    const Subspace& v = c.at(k, k);
    if (v == Subspace::coordinate(n - 1, {k - 1})) return 0;
    if (v == Subspace::coordinate(n - 1, {k})) return 1;
    return 2;
  };
  int r = 1;
  while (kind(r) != 0) ++r;
  int l = r - 1;
  while (kind(l) == 2) --l;
  if (kind(l) != 1) throw std::logic_error("stratum_of: inconsistent configuration");
  if (l == 0 && r == n - 1) return PlanarTree::corolla(n);
  int m = r - l + 1, n1 = n - m + 1;
  GapEmbedding emb = gap_embedding(n1, l, m);
  SubspaceConfig outer(Ordinal::canonical(n1));
  auto lift = [&](int a, bool is_end) {
    if (a < l) return a;
    if (a == l) return is_end ? r : l;
    return a + m - 1;
  };
  for (int a = 0; a < n1; ++a)
    for (int b = a; b < n1; ++b) {
      if (a == 0 && b == n1 - 1) continue;
      outer.set(a, b, c.at(lift(a, false), lift(b, true)).project(emb.outer));
    }
  return graft(stratum_of(outer), l + 1, PlanarTree::corolla(m));
}

int stratum_dimension(const PlanarTree& t) { return t.leaves() - 2 - t.internal_edges(); }

// ---------------------------------------------------------------- polytopes

namespace {

template <class F>
void for_each_permutation(int d, F&& f) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

void require_binary(const PlanarTree& t, const char* what) {
  if (!t.is_binary() || t.leaves() < 2) throw std::invalid_argument(std::string(what) + ": tree must be binary");
}

}  // namespace

IntPoint loday_vertex(const PlanarTree& t) {
  require_binary(t, "loday_vertex");
  int n = t.leaves();
  IntPoint x(n - 1, 0);
  const auto& code = t.code();
  std::size_t p = 0;
  int leaf = 0;
  std::function<int()> walk = [&]() -> int {  // returns leaf count
    if (code[p++] == 0) {
      ++leaf;
      return 1;
    }
    int left = walk();
    int m = leaf;  // last leaf of the left subtree, 1-based
    int right = walk();
    x[m - 1] = static_cast<long>(left) * right;
    return left + right;
  };
  walk();
  return x;
}

LatticePolytope loday_polytope(int n) {
  if (n < 2) throw std::invalid_argument("loday_polytope: n >= 2");
  LatticePolytope p;
  p.dimension = n - 1;
  for (auto& t : enumerate_trees(n, true)) p.vertices.push_back(loday_vertex(t));
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

LatticePolytope loday_via_minkowski(int n) {
  if (n < 2) throw std::invalid_argument("loday_via_minkowski: n >= 2");
  int d = n - 1;
  std::set<IntPoint> verts;
  // A generic functional only sees the order of its coordinates; the maximiser
  // over a Minkowski sum of simplices picks the top coordinate of each interval.
  for_each_permutation(d, [&](const std::vector<int>& prio) {
    IntPoint v(d, 0);
    for (int i = 0; i < d; ++i) {
      int best = i;
      for (int j = i; j < d; ++j) {
        if (prio[j] > prio[best]) best = j;
        ++v[best];
      }
    }
    verts.insert(v);
  });
  LatticePolytope p;
  p.dimension = d;
  p.vertices.assign(verts.begin(), verts.end());
  return p;
}

IntPoint vertex_missing_basis(const PlanarTree& t) {
  require_binary(t, "vertex_missing_basis");
  int n = t.leaves();
  SubspaceConfig c = tree_config(t, {});
  IntPoint x(n - 1, 1);
  for (int l = 1; l <= n - 2; ++l)
    for (int r = l; r <= n - 2; ++r) {
      const Subspace& v = c.at(l, r);
      int found = -1;
      for (int g = l - 1; g <= r; ++g) {
        std::vector<Q> e(n - 1);
        e[g] = 1;
        if (!v.contains(e)) {
          if (found >= 0) throw std::logic_error("vertex_missing_basis: space is not a coordinate hyperplane");
          found = g;
        }
      }
      if (found < 0) throw std::logic_error("vertex_missing_basis: no missing vector");
      ++x[found];
    }
  return x;
}

bool vertices_certified(const LatticePolytope& p) {
  int d = p.dimension;
  for (std::size_t a = 0; a < p.vertices.size(); ++a) {
    bool ok = false;
    for_each_permutation(d, [&](const std::vector<int>& order) {
      if (ok) return;
      auto key = [&](const IntPoint& v) {
        IntPoint k(d);
        for (int i = 0; i < d; ++i) k[i] = v[order[i]];
        return k;
      };
      IntPoint mine = key(p.vertices[a]);
      bool top = true;
      for (std::size_t b = 0; b < p.vertices.size() && top; ++b)
        if (b != a && !(key(p.vertices[b]) < mine)) top = false;
      ok = top;
    });
    if (!ok) return false;
  }
  return true;
}

std::string LatticePolytope::json() const {
  nlohmann::json j;
  j["dimension"] = dimension;
  j["vertices"] = vertices;
  return j.dump();
}

std::string LatticePolytope::poly() const {
  std::string s;
  for (auto& v : vertices) {
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    s += '\n';
  }
  return s;
}

namespace {

IntPoint ray_of(int d, int l, int r) {  // clade [l, r] of leaves, 1-based
  IntPoint y(d, 0);
  for (int g = l; g <= r - 1; ++g) y[g - 1] = -1;
  return y;
}

long dot(const IntPoint& a, const IntPoint& b) {
  long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

std::vector<IntPoint> cone_rays(const PlanarTree& t) {
  int n = t.leaves();
  std::vector<IntPoint> rays;
  for (auto [l, r] : t.clades())
    if (!(l == 1 && r == n)) rays.push_back(ray_of(n - 1, l, r));
  std::sort(rays.begin(), rays.end());
  return rays;
}

}  // namespace

Fan normal_fan(int n) {
  if (n < 3) throw std::invalid_argument("normal_fan: n >= 3");
  Fan f;
  f.rank = n - 1;
  f.trees = enumerate_trees(n, true);
  for (auto& t : f.trees) f.cones.push_back(cone_rays(t));
  for (std::size_t a = 0; a < f.cones.size(); ++a)
    for (std::size_t b = a + 1; b < f.cones.size(); ++b) {
      std::vector<IntPoint> shared;
      std::set_intersection(f.cones[a].begin(), f.cones[a].end(), f.cones[b].begin(), f.cones[b].end(),
                            std::back_inserter(shared));
      if (static_cast<int>(shared.size()) != n - 3) continue;
      IntPoint diff = loday_vertex(f.trees[a]);
      IntPoint pb = loday_vertex(f.trees[b]);
      std::vector<int> nz;
      for (int k = 0; k < n - 1; ++k) {
        diff[k] -= pb[k];
        if (diff[k] != 0) nz.push_back(k);
      }
      if (nz.size() != 2 || diff[nz[0]] != -diff[nz[1]]) throw std::logic_error("normal_fan: edge is not a root direction");
      f.walls.push_back({static_cast<int>(a), static_cast<int>(b), nz[0] + 1, nz[1] + 1});
    }
  return f;
}

bool fan_consistent(const Fan& f, const LatticePolytope& p) {
  int d = f.rank, n = d + 1;
  std::vector<IntPoint> normals;
  for (int l = 1; l <= n; ++l)
    for (int r = l + 1; r <= n; ++r)
      if (!(l == 1 && r == n)) normals.push_back(ray_of(d, l, r));
  for (std::size_t c = 0; c < f.cones.size(); ++c) {
    const auto& rays = f.cones[c];
    if (static_cast<int>(rays.size()) != d - 1) return false;
    DenseMat m;
    for (auto& r : rays) m.emplace_back(r.begin(), r.end());
    m.push_back(std::vector<Q>(d, Q(1)));
    if (rank(m) != d) return false;  // simplicial modulo the diagonal
    IntPoint v = loday_vertex(f.trees[c]);
    if (!std::binary_search(p.vertices.begin(), p.vertices.end(), v)) return false;
    for (auto& y : normals) {
      long best = v.empty() ? 0 : dot(p.vertices[0], y);
      for (auto& q : p.vertices) best = std::max(best, dot(q, y));
      bool in_cone = std::binary_search(rays.begin(), rays.end(), y);
      if (in_cone != (dot(v, y) == best)) return false;
    }
  }
  for (auto& w : f.walls) {
    IntPoint nrm(d, 0);
    nrm[w.left - 1] = 1;
    nrm[w.right - 1] = -1;
    const auto &A = f.cones[w.cone_a], &B = f.cones[w.cone_b];
    int side_a = 0, side_b = 0;
    for (auto& r : A) {
      long s = dot(r, nrm);
      if (std::binary_search(B.begin(), B.end(), r)) {
        if (s != 0) return false;
      } else {
        side_a = s > 0 ? 1 : (s < 0 ? -1 : 0);
      }
    }
    for (auto& r : B)
      if (!std::binary_search(A.begin(), A.end(), r)) {
        long s = dot(r, nrm);
        side_b = s > 0 ? 1 : (s < 0 ? -1 : 0);
      }
    if (side_a == 0 || side_a != -side_b) return false;
  }
  return true;
}

std::string Fan::json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["modulo"] = "diagonal";
  nlohmann::json cs = nlohmann::json::array();
  for (std::size_t c = 0; c < cones.size(); ++c) cs.push_back({{"tree", trees[c].to_string()}, {"rays", cones[c]}});
  j["cones"] = cs;
  nlohmann::json ws = nlohmann::json::array();
  for (auto& w : walls)
    ws.push_back({{"cones", {w.cone_a, w.cone_b}}, {"equation", "y" + std::to_string(w.left) + " = y" + std::to_string(w.right)}});
  j["walls"] = ws;
  return j.dump();
}

// ---------------------------------------------------------------- Betti numbers

std::vector<long> f_vector(int n) {
  if (n < 2) throw std::invalid_argument("f_vector: n >= 2");
  std::vector<long> f(n - 1, 0);
  for (auto& t : enumerate_trees(n, false)) ++f[stratum_dimension(t)];
  return f;
}

std::vector<long> h_vector(int n) {
  auto f = f_vector(n);
  int d = static_cast<int>(f.size()) - 1;
  std::vector<long> h(d + 1, 0);
  for (int i = 0; i <= d; ++i)  // f_i (t-1)^i
    for (int k = 0; k <= i; ++k) h[k] += f[i] * binomial(i, k) * (((i - k) & 1) ? -1 : 1);
  return h;
}

std::vector<long> complex_betti(int n) {
  auto h = h_vector(n);
  std::vector<long> b(2 * (h.size() - 1) + 1, 0);
  for (std::size_t k = 0; k < h.size(); ++k) b[2 * k] = h[k];
  return b;
}

std::vector<long> real_betti(int n) {
  if (n < 2) throw std::invalid_argument("real_betti: n >= 2");
  int top = (n - 1) / 2;
  std::vector<long> b(top + 1);
  b[0] = 1;
  for (int i = 1; i <= top; ++i) b[i] = binomial(n - 1, i) - binomial(n - 1, i - 1);
  return b;
}

long euler_characteristic(const std::vector<long>& betti) {
  long e = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) e += (i & 1) ? -betti[i] : betti[i];
  return e;
}

long real_euler_expected(int n) {
  if (n % 2) return 0;
  int k = n / 2 - 1;
  return (k & 1 ? -1 : 1) * catalan(k);
}

}  // namespace ncop
