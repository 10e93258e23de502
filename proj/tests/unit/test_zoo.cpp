#include "doctest.h"
#include "json.hpp"
#include "ncop/zoo.hpp"

using namespace ncop;

TEST_CASE("presentations in the zoo") {
  for (auto& name : zoo_names()) {
    auto p = presentation_of(name, 5);
    CAPTURE(name);
    CHECK_FALSE(p.alphabet.empty());
  }
  CHECK(presentation_of("ncGerst").relations.size() == 4);
  CHECK(presentation_of("2ncGerst").relations.size() == 5);
  CHECK(presentation_of("As").homogeneity() == Homogeneity::Quadratic);
  CHECK(presentation_of("ncBV3").homogeneity() == Homogeneity::QuadraticLinear);
  CHECK(presentation_of("ncBV2").homogeneity() == Homogeneity::General);
  CHECK_THROWS(named_operad("nope"));

  auto asm_ = as_m({{"m", 0}, {"b", 1}});
  auto g = presentation_of("ncGerst");
  for (int n = 3; n <= 4; ++n) CHECK(same_span(relation_space(asm_, n), relation_space(g, n)));
}

TEST_CASE("lambda operations inside ncGerst") {
  Alphabet a = presentation_of("ncGerst").alphabet;
  Element m(generator_monomial(a, kGerstM)), b(generator_monomial(a, kGerstB));
  CHECK(expand_lambda(2) == b);
  CHECK(expand_lambda(3) == compose(m, 1, b) + compose(m, 2, b));
  CHECK(right_comb(2, kGerstM, a) == compose(m, 2, m));

  const int cap = 6;
  auto grav = presentation_of("ncGrav", cap);
  auto G = named_operad("ncGerst", cap);
  auto gb = complete(G.presentation, G.preferred_order, cap);
  auto img = lambda_images(cap);
  for (auto& r : grav.relations) CHECK(gb.reduce(apply_morphism(r, img)).is_zero());
}

TEST_CASE("D1 and H1 on ncGerst") {
  for (int n : {2, 3, 4, 5}) {
    auto r = d1_h1_check(n);
    CAPTURE(n);
    CHECK(r.ok());
    CHECK(r.basis_size == (1 << (n - 1)));
    CHECK(r.rank_d1 == (1 << (n - 2)));
    CHECK(r.dim_ker_d1 == (1 << (n - 2)));
  }
  CHECK_THROWS(d1_h1_check(1));
}

TEST_CASE("hypercommutative generating function") {
  auto hc = named_operad("ncHyperCom", 7);
  auto gb = complete(hc.presentation, hc.preferred_order, 7);
  std::map<int, std::map<int, long>> dims;
  for (int n = 2; n <= 7; ++n) dims[n] = hilbert(gb, n);
  CHECK(hypercom_functional_equation(dims, 6));
  dims[5][2] += 1;
  CHECK_FALSE(hypercom_functional_equation(dims, 6));
}

TEST_CASE("the two ncBV presentations have the same dimensions") {
  auto a = presentation_of("ncBV2"), b = presentation_of("ncBV3");
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(component_dimension_bruteforce(a, n, 2 * n - 1) == component_dimension_bruteforce(b, n, 2 * n - 1));
  }
}

TEST_CASE("dimension certificates") {
  auto c = certify_dimensions("ncGerst", 5);
  CHECK(c.ok);
  for (auto& r : c.rows) CHECK(r.agree());
  auto j = nlohmann::json::parse(c.json());
  CHECK(j["name"] == "ncGerst");
  CHECK(certify_dimensions("ncGrav", 5).ok);
  CHECK(certify_dimensions("2ncGerst", 5).ok);
}

TEST_CASE("counting helpers") {
  CHECK(catalan(4) == 14);
  CHECK(narayana(4, 1) == 3);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
  for (int n = 2; n <= 9; ++n) {
    long s = 0;
    for (int k = 0; k <= n - 2; ++k) s += narayana(n, k);
    CHECK(s == catalan(n - 1));
  }
}
