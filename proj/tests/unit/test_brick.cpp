#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "ncop/brick.hpp"
#include "ncop/zoo.hpp"

using namespace ncop;

TEST_CASE("the two points of B(3) coming from B(2)") {
  auto u = unit_config(Ordinal::canonical(2));
  CHECK(u.valid());
  auto l = brick_compose_at(u, 0, u), r = brick_compose_at(u, 1, u);
  CHECK(l.valid());
  CHECK(r.valid());
  // V_{2,2} is G(1,2) for the left comb and G(2,3) for the right comb
  CHECK(l.at(1, 1) == l.coordinate(0, 1));
  CHECK(r.at(1, 1) == r.coordinate(1, 2));
  CHECK(stratum_of(l) == parse_tree("((1,2),3)"));
  CHECK(stratum_of(r) == parse_tree("(1,(2,3))"));
  CHECK_THROWS(brick_compose(u, "1", u));
  auto ab = unit_config(Ordinal({"a", "b"})), cd = unit_config(Ordinal({"c", "d"}));
  auto x = brick_compose(ab, "a", cd);
  CHECK(x.ordinal() == Ordinal({"c", "d", "b"}));
  CHECK(x.at(1, 1) == x.coordinate(0, 1));
}

TEST_CASE("open stratum points") {
  auto c = corolla_config(Ordinal::canonical(4), {Q(2), Q(-3)});
  CHECK(c.valid());
  CHECK(stratum_of(c) == PlanarTree::corolla(4));
  CHECK_THROWS(corolla_config(Ordinal::canonical(4), {Q(0), Q(1)}));
}

TEST_CASE("sampled points lie in their strata") {
  ConfigSampler s(17);
  for (int n = 2; n <= 6; ++n)
    for (auto& t : enumerate_trees(n, false)) {
      auto c = s.sample(t);
      CAPTURE(t.to_string());
      CHECK(c.valid());
      CHECK(stratum_of(c) == t);
      CHECK(stratum_dimension(t) == n - 2 - t.internal_edges());
    }
}

TEST_CASE("a broken configuration is rejected") {
  ConfigSampler s(1);
  auto c = s.sample(PlanarTree::corolla(4));
  c.set(1, 1, c.coordinate(0, 3));  // a plane where a line belongs
  CHECK_FALSE(c.valid());
}

TEST_CASE("f and h vectors") {
  CHECK(f_vector(4) == std::vector<long>{5, 5, 1});
  CHECK(h_vector(4) == std::vector<long>{1, 3, 1});
  for (int n = 2; n <= 7; ++n) {
    auto h = h_vector(n);
    CHECK(std::accumulate(h.begin(), h.end(), 0L) == catalan(n - 1));
    auto rev = h;
    std::reverse(rev.begin(), rev.end());
    CHECK(h == rev);
    for (int k = 0; k + 2 <= n; ++k) CHECK(h[k] == narayana(n, k));
  }
}

TEST_CASE("real Betti numbers") {
  CHECK(real_betti(4) == std::vector<long>{1, 2});
  CHECK(euler_characteristic(real_betti(4)) == -1);
  CHECK(real_betti(5) == std::vector<long>{1, 3, 2});
  CHECK(euler_characteristic(real_betti(5)) == 0);
  for (int n = 2; n <= 9; ++n) {
    long e = euler_characteristic(real_betti(n));
    CHECK(e == real_euler_expected(n));
    if (n % 2) CHECK(e == 0);
    else CHECK(e == ((n / 2 - 1) % 2 ? -1 : 1) * catalan(n / 2 - 1));
  }
}

TEST_CASE("Loday polytopes") {
  CHECK(loday_polytope(2).vertices == std::vector<IntPoint>{{1}});
  CHECK(loday_polytope(3).vertices == std::vector<IntPoint>{{1, 2}, {2, 1}});
  CHECK(vertex_missing_basis(parse_tree("((1,2),3)")) == IntPoint{1, 2});
  CHECK(vertex_missing_basis(parse_tree("(1,(2,3))")) == IntPoint{2, 1});
  for (int n = 2; n <= 6; ++n) {
    auto p = loday_polytope(n);
    CHECK(p.vertices.size() == static_cast<std::size_t>(catalan(n - 1)));
    CHECK(p.vertices == loday_via_minkowski(n).vertices);
    CHECK(vertices_certified(p));
    for (auto& t : enumerate_trees(n, true)) {
      auto v = loday_vertex(t);
      CHECK(v == vertex_missing_basis(t));
      CHECK(std::accumulate(v.begin(), v.end(), 0L) == binomial(n, 2));
    }
  }
}

TEST_CASE("an interior point is not certified as a vertex") {
  auto p = loday_polytope(4);
  // doubled vertices plus the sum of two of them, which is a midpoint
  LatticePolytope q = p;
  for (auto& v : q.vertices)
    for (auto& x : v) x *= 2;
  IntPoint m2 = p.vertices[0];
  for (std::size_t k = 0; k < m2.size(); ++k) m2[k] += p.vertices[1][k];
  q.vertices.push_back(m2);
  std::sort(q.vertices.begin(), q.vertices.end());
  CHECK_FALSE(vertices_certified(q));
}

TEST_CASE("normal fans") {
  auto f3 = normal_fan(3);
  REQUIRE(f3.walls.size() == 1);
  CHECK(f3.walls[0].left == 1);
  CHECK(f3.walls[0].right == 2);

  auto f4 = normal_fan(4);
  CHECK(f4.cones.size() == 5);
  CHECK(f4.walls.size() == 5);
  CHECK(fan_consistent(f4, loday_polytope(4)));
  for (int n = 3; n <= 5; ++n) CHECK(fan_consistent(normal_fan(n), loday_polytope(n)));
}
