#include "doctest.h"
#include "ncop/borjeson.hpp"

using namespace ncop;

TEST_CASE("recursive and closed Borjeson products agree") {
  OpSampler rng(7);
  Algebra M2 = matrix_algebra(2);
  TensorAlgebraTrunc T({1, 0}, 5);
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &T.algebra()})
    for (int d : {0, 1}) {
      auto D = rng.unary(A->space, d, 0.3);
      for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(borjeson(*A, D, n) == borjeson_closed(*A, D, n));
      }
    }
}

TEST_CASE("low Borjeson products") {
  Algebra M2 = matrix_algebra(2);
  auto id = identity_op(M2.space);
  CHECK(borjeson(M2, id, 1) == id);
  CHECK(borjeson(M2, id, 2) == M2.m * Q(-1));
  auto o = nc_order(M2, id, 5);
  CHECK(o.resolved);
  CHECK(o.order == 2);
  CHECK(o.to_string() == "2");
}

TEST_CASE("derivations have order at most one") {
  Algebra M2 = matrix_algebra(2);
  // inner derivation [e12, -]
  Vec a{{1, 1}};
  MultilinearOp ad(1, 0);
  for (int b = 0; b < M2.space.dim(); ++b) {
    Vec e{{b, 1}}, v;
    axpy(v, 1, M2.mul(a, e));
    axpy(v, -1, M2.mul(e, a));
    ad.add({b}, v);
  }
  auto o = nc_order(M2, ad, 5);
  CHECK(o.resolved);
  CHECK(o.order <= 1);
  CHECK(borjeson(M2, ad, 2).is_zero());
}

TEST_CASE("commutator formula") {
  OpSampler rng(19);
  Algebra M2 = matrix_algebra(2);
  TensorAlgebraTrunc T({1, 0}, 5);
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &T.algebra()})
    for (int d1 : {0, 1})
      for (int d2 : {0, 1}) {
        auto D1 = rng.unary(A->space, d1, 0.3), D2 = rng.unary(A->space, d2, 0.3);
        for (auto& c : commutator_check(*A, D1, D2, 4)) {
          CAPTURE(c.name);
          CAPTURE(c.detail);
          CHECK(c.ok);
        }
      }
}

TEST_CASE("symbols give operators of the matching order") {
  OpSampler rng(23);
  TensorAlgebraTrunc V({0, 1}, 4);
  for (int k = 1; k <= 3; ++k)
    for (int d : {0, 1}) {
      Symbol f;
      do f = random_symbol(V, k, d, rng);
      while (f.map.is_zero());
      auto D = rho(V, f);
      auto o = nc_order(V.algebra(), D, 4);
      CAPTURE(k);
      CHECK(o.resolved);
      CHECK(o.order == k);
      auto dec = diffop_decompose(V, D);
      REQUIRE(dec.size() == 1);
      CHECK(dec[0].length == k);
      CHECK(dec[0].map == f.map);
      CHECK_FALSE(expansion_witness(V.algebra(), D, k, 4));
      if (k > 1) CHECK(expansion_witness(V.algebra(), D, k - 1, 4));
    }
}

TEST_CASE("commutators lower the filtration") {
  OpSampler rng(29);
  TensorAlgebraTrunc V({0, 1}, 4);
  for (int k : {1, 2})
    for (int l : {1, 2}) {
      auto D1 = rho(V, random_symbol(V, k, 0, rng)), D2 = rho(V, random_symbol(V, l, 1, rng));
      auto o = nc_order(V.algebra(), commutator(V.space(), D1, D2), 4);
      CHECK(o.resolved);
      CHECK(o.order <= k + l - 1);
    }
}

TEST_CASE("bar constructions are associative ncBV algebras") {
  auto T2 = upper_triangular(2);
  auto bar = bar_construction(T2, 4);
  CHECK(borjeson(bar.tensor.algebra(), bar.deltas[1], 3).is_zero());
  for (auto& c : assoc_ncbv_check(bar.tensor.algebra(), bar.deltas, 3)) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  auto fx = a_infinity_fixture();
  auto ab = bar_construction(fx.algebra, fx.ms, 4);
  for (auto& c : assoc_ncbv_check(ab.tensor.algebra(), ab.deltas, 3)) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  auto o = nc_order(ab.tensor.algebra(), ab.deltas[2], 4);
  CHECK(o.resolved);
  CHECK(o.order == 3);
  CHECK(ab.deltas[2].degree() == 3);
}
