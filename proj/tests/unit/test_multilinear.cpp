#include "doctest.h"
#include "ncop/multilinear.hpp"

using namespace ncop;

TEST_CASE("fixture algebras are associative") {
  CHECK(matrix_algebra(2).associative());
  CHECK(upper_triangular(2).associative());
  CHECK(upper_triangular(2).space.dim() == 3);
  CHECK(truncated_polynomial(4, 0).associative());
  CHECK(truncated_polynomial(3, 1).associative());
  TensorAlgebraTrunc t({0, 1}, 4);
  CHECK(t.algebra().associative());
  CHECK(t.space().dim() == 2 + 4 + 8 + 16);
  CHECK(t.index({0, 1, 1}) >= 0);
  CHECK(t.index({0, 1, 1, 0, 0}) == -1);
}

TEST_CASE("a non-associative product is caught") {
  Algebra a = algebra_from_json(R"({"name":"bad","degrees":[0,0],"product":[[0,0,1,"1"],[1,0,0,"1"]]})");
  auto w = a.associativity_witness();
  REQUIRE(w);
  CHECK(w->size() == 3);
}

TEST_CASE("matrix units multiply as expected") {
  Algebra m = matrix_algebra(2);
  // e11 e12 = e12 and e12 e11 = 0, with the basis e11, e12, e21, e22
  Vec e11{{0, 1}}, e12{{1, 1}};
  CHECK(m.mul(e11, e12) == e12);
  CHECK(m.mul(e12, e11).empty());
}

TEST_CASE("json round trip and errors") {
  for (const Algebra& a : {matrix_algebra(2), upper_triangular(2), truncated_polynomial(3, 1)}) {
    Algebra b = algebra_from_json(algebra_to_json(a));
    CHECK(b.m == a.m);
    CHECK(b.space.degrees == a.space.degrees);
  }
  CHECK_THROWS(algebra_from_json("{"));
  CHECK_THROWS(algebra_from_json(R"({"degrees":[0],"product":[[0,0,3,"1"]]})"));
  CHECK_THROWS(algebra_from_json(R"({"degrees":[0,1],"product":[[1,1,0,"1"]]})"));  // wrong degree
}

TEST_CASE("composition of multilinear maps") {
  Algebra a = truncated_polynomial(3, 1);
  const GradedSpace& s = a.space;
  // m o_1 m == m o_2 m for an associative product
  CHECK(compose(s, a.m, 1, a.m) == compose(s, a.m, 2, a.m));
  CHECK(compose(s, a.m, 1, a.m) == a.power(3));
  auto id = identity_op(s);
  CHECK(compose(s, a.m, 1, id) == a.m);
  CHECK(after(s, id, id) == id);

  OpSampler rng(4);
  for (int it = 0; it < 20; ++it) {
    auto f = rng.unary(s, it % 2, 0.5), g = rng.unary(s, (it / 2) % 2, 0.5);
    CHECK_FALSE(f.inhomogeneity(s));
    Q sign = (f.degree() * g.degree()) % 2 ? Q(-1) : Q(1);
    CHECK(commutator(s, f, g) == commutator(s, g, f) * Q(-sign));
  }
}
