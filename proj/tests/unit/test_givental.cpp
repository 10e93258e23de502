#include "doctest.h"
#include "ncop/givental.hpp"
#include "ncop/weyl.hpp"

using namespace ncop;

TEST_CASE("associative families satisfy the hypercommutative relations") {
  Algebra M2 = matrix_algebra(2);
  CHECK_FALSE(hypercom_witness(M2.space, associative_family(M2), 5));
  TensorAlgebraTrunc T({0, 1}, 5);
  CHECK_FALSE(hypercom_witness(T.space(), associative_family(T.algebra()), 5));
  // a nonzero ternary operation breaks them
  OpFamily bad = associative_family(M2);
  bad[3] = M2.power(3);
  CHECK(hypercom_witness(M2.space, bad, 4));
}

TEST_CASE("tau0 in arity two is the second Borjeson product") {
  OpSampler rng(2);
  Algebra M2 = matrix_algebra(2);
  auto nu = associative_family(M2);
  auto r = rng.unary(M2.space, 0, 0.5);
  auto tau = givental_tau0(M2.space, r, nu, 4);
  CHECK(tau.at(2) == borjeson(M2, r, 2));
  for (int n = 3; n <= 4; ++n) CHECK(tau.at(n).is_zero());
}

TEST_CASE("recursion against direct evaluation") {
  OpSampler rng(11);
  Algebra M2 = matrix_algebra(2);
  TensorAlgebraTrunc T({0, 1}, 5);
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &T.algebra()}) {
    auto nu = associative_family(*A);
    for (int d : {0, 1}) {
      auto r = rng.unary(A->space, d, 0.3);
      for (int k = 0; k <= 2; ++k) {
        auto tau = givental_tau(A->space, r, nu, k, 4);
        for (int n = 2; n <= 4; ++n) {
          CAPTURE(k);
          CAPTURE(n);
          auto dir = givental_direct(*A, r, k, n);
          CHECK(tau.at(n) == dir);
          if (n == k + 2) CHECK(dir == borjeson(*A, r, n));
          else CHECK(dir.is_zero());
        }
      }
    }
  }
}

TEST_CASE("a vanishing family stays vanishing") {
  Algebra M2 = matrix_algebra(2);
  auto nu = associative_family(M2);
  OpFamily zero{{2, MultilinearOp(2, 0)}, {3, MultilinearOp(3, 0)}, {4, MultilinearOp(4, 0)}};
  auto next = givental_step(M2.space, zero, nu, 4);
  for (auto& [n, op] : next) CHECK(op.is_zero());
}

TEST_CASE("the k = 0 action is a Lie anti-homomorphism") {
  OpSampler rng(13);
  Algebra M2 = matrix_algebra(2);
  auto nu = associative_family(M2);
  for (int it = 0; it < 5; ++it) {
    auto r1 = rng.unary(M2.space, 0, 0.5), r2 = rng.unary(M2.space, 0, 0.5);
    auto d12 = k0_action(M2.space, r1, k0_action(M2.space, r2, nu, 3), 3);
    auto d21 = k0_action(M2.space, r2, k0_action(M2.space, r1, nu, 3), 3);
    auto br = k0_action(M2.space, commutator(M2.space, r2, r1), nu, 3);
    for (int n = 2; n <= 3; ++n) CHECK(d12.at(n) - d21.at(n) == br.at(n));
  }
}

TEST_CASE("families that break the relations are refused") {
  OpSampler rng(1);
  Algebra M2 = matrix_algebra(2);
  OpFamily bad = associative_family(M2);
  bad[3] = M2.power(3);
  CHECK_THROWS(givental_tau0(M2.space, rng.unary(M2.space, 0, 0.5), bad, 4));
}

TEST_CASE("preservation of the associative structure") {
  OpSampler rng(31);
  Algebra P = truncated_polynomial(4, 0);
  // Euler derivation x^k -> k x^k
  MultilinearOp euler(1, 0);
  for (int b = 0; b < P.space.dim(); ++b) euler.add({b}, b, Q(b + 1));
  auto keep = preserves_associative(P, {euler});
  CHECK(keep.preserved);
  CHECK(preserves_associative_direct(P, {euler}, 5).preserved);

  TensorAlgebraTrunc V({0, 1}, 5);
  Symbol s2;
  do s2 = random_symbol(V, 2, 0, rng);
  while (s2.map.is_zero());
  auto d2 = rho(V, s2);
  // order 2 in z^1 is allowed, in z^0 it is not
  CHECK(preserves_associative(V.algebra(), {MultilinearOp(1, 0), d2}).preserved);
  auto bad = preserves_associative(V.algebra(), {d2});
  CHECK_FALSE(bad.preserved);
  REQUIRE(bad.witness);
  CHECK(bad.witness->index == 0);
  auto direct = preserves_associative_direct(V.algebra(), {d2}, 5);
  CHECK_FALSE(direct.preserved);
  CHECK(direct.witness->index == 0);
}

TEST_CASE("unital fixtures have small order") {
  OpSampler rng(37);
  for (const Algebra& a : {matrix_algebra(2), upper_triangular(2)})
    for (int d : {0, 1})
      for (int it = 0; it < 5; ++it) {
        auto o = nc_order(a, rng.unary(a.space, d, 0.5), 5);
        if (o.resolved) CHECK(o.order <= 2);
      }
}

TEST_CASE("Weyl partial compositions") {
  WeylContext ctx{{0, 0}};
  TensorMap f, g;
  f.add({0}, {1}, 1);  // a -> b
  g.add({1}, {0}, 2);  // b -> a
  // k = p = s = 1 is the plain composite
  TensorMap fg;
  fg.add({1}, {1}, 2);
  CHECK(weyl_partial(ctx, f, g, 1) == fg);
  CHECK(weyl_partial(ctx, f, g, 2).is_zero());

  TensorMap h;
  h.add({0, 0}, {1}, 1);
  CHECK(weyl_partial(ctx, h, g, 3).is_zero());
  CHECK_FALSE(weyl_partial(ctx, h, g, 1).is_zero());
}

TEST_CASE("Weyl bracket satisfies the Jacobi identity") {
  std::mt19937_64 rng(5);
  for (auto degs : {std::vector<int>{0, 0}, std::vector<int>{0, 1}}) {
    WeylContext ctx{degs};
    for (int t = 0; t < 4; ++t) {
      int df = degs[1] ? t % 2 : 0, dg = degs[1] ? (t / 2) % 2 : 0;
      auto f = random_tensor_map(ctx, 2, df, rng, 0.2), g = random_tensor_map(ctx, 3, dg, rng, 0.1),
           h = random_tensor_map(ctx, 2, 0, rng, 0.2);
      CHECK(weyl_jacobiator1(ctx, f, g, h).is_zero());
      for (auto& j : weyl_jacobiator(ctx, f, g, h, 3)) CHECK(j.is_zero());
    }
  }
}
