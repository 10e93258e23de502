#include <random>

#include "doctest.h"
#include "ncop/groebner.hpp"
#include "ncop/zoo.hpp"

using namespace ncop;

namespace {

const Alphabet kMixed{{"m", 2, 0}, {"b", 2, 1}, {"t", 3, 1}, {"u", 3, 2}};

Element gen(const Alphabet& a, const std::string& name) { return Element(generator_monomial(a, find_generator(a, name))); }

// Random combination of monomials with at most two vertices.
Element random_element(std::mt19937_64& rng, int arity_hint) {
  std::uniform_int_distribution<int> g(0, static_cast<int>(kMixed.size()) - 1), c(-3, 3), coin(0, 1);
  Element e;
  int terms = 1 + static_cast<int>(rng() % 2);
  // keep the element homogeneous: fix the first term's degree
  int want = -1;
  for (int t = 0; t < 8 && static_cast<int>(e.size()) < terms; ++t) {
    Monomial m = generator_monomial(kMixed, g(rng));
    if (coin(rng) && arity_hint > 0) {
      auto [s, mm] = compose(m, 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves(m))),
                             generator_monomial(kMixed, g(rng)));
      m = mm;
    }
    if (want < 0) want = degree(m);
    if (degree(m) != want) continue;
    Q k = c(rng);
    if (is_zero(k)) k = 1;
    e.add(m, k);
  }
  return e;
}

// Split into homogeneous arity pieces so composition indices make sense.
std::vector<Element> by_arity(const Element& e) {
  std::map<int, Element> parts;
  for (auto& [m, c] : e.terms()) parts[leaves(m)].add(m, c);
  std::vector<Element> out;
  for (auto& [n, p] : parts) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("binary compositions of a degree-zero generator") {
  Alphabet as{{"m", 2, 0}};
  auto [s1, l] = compose(generator_monomial(as, 0), 1, generator_monomial(as, 0));
  auto [s2, r] = compose(generator_monomial(as, 0), 2, generator_monomial(as, 0));
  CHECK(s1 == 1);
  CHECK(s2 == 1);
  CHECK(l != r);
  CHECK(shape(l) == parse_tree("((1,2),3)"));
  CHECK(shape(r) == parse_tree("(1,(2,3))"));
}

TEST_CASE("b o1 b + b o2 b vanishes in ncGerst") {
  NamedOperad g = named_operad("ncGerst");
  GroebnerBasis gb = complete(g.presentation, g.preferred_order, 5);
  const Alphabet& a = g.presentation.alphabet;
  Element b = gen(a, "b");
  CHECK(gb.reduce(compose(b, 1, b) + compose(b, 2, b)).is_zero());
  CHECK_FALSE(gb.reduce(compose(b, 1, b) - compose(b, 2, b)).is_zero());
}

TEST_CASE("Koszul sign of passing an odd vertex") {
  Alphabet a{{"b", 2, 1}};
  Monomial b = generator_monomial(a, 0);
  auto [s1, x] = compose(b, 1, b);  // inserted left of nothing odd
  auto [s2, y] = compose(b, 2, b);
  CHECK(s1 * s2 == 1);
  // (b o2 b) o1 b: the new vertex sits before the odd vertex in preorder
  auto [s3, z] = compose(y, 1, b);
  auto [s4, w] = compose(x, 3, b);
  CHECK(z == w);
  CHECK(s2 * s3 == -s1 * s4);
}

TEST_CASE("operad axioms with signs on random elements") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int it = 0; it < 600; ++it) {
    for (auto& a : by_arity(random_element(rng, 1)))
      for (auto& b : by_arity(random_element(rng, 1)))
        for (auto& c : by_arity(random_element(rng, 1))) {
          int p = a.arity(), q = b.arity(), r = c.arity();
          if (p + q + r - 2 > 5) continue;
          for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j) {
              CHECK(compose(compose(a, i, b), i + j - 1, c) == compose(a, i, compose(b, j, c)));
              ++checked;
            }
          Q sign = ((b.degree() * c.degree()) % 2) ? Q(-1) : Q(1);
          for (int i = 1; i <= p; ++i)
            for (int k = i + 1; k <= p; ++k) {
              CHECK(compose(compose(a, i, b), k + q - 1, c) == compose(compose(a, k, c), i, b) * sign);
              ++checked;
            }
        }
  }
  CHECK(checked > 500);
}

TEST_CASE("degree and arity are additive") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    Element a = random_element(rng, 1), b = random_element(rng, 1);
    for (auto& x : by_arity(a))
      for (auto& y : by_arity(b)) {
        Element z = compose(x, 1, y);
        if (z.is_zero()) continue;
        CHECK(z.degree() == x.degree() + y.degree());
        CHECK(z.arity() == x.arity() + y.arity() - 1);
      }
  }
}

TEST_CASE("path sequences") {
  Presentation grav = presentation_of("ncGrav", 4);
  const Alphabet& a = grav.alphabet;
  int l2 = find_generator(a, "lambda2"), l3 = find_generator(a, "lambda3");
  auto ps = path_sequence(generator_monomial(a, l3));
  CHECK(ps == std::vector<std::vector<int>>{{l3}, {l3}, {l3}});

  Alphabet as{{"m", 2, 0}};
  auto comb = compose(generator_monomial(as, 0), 1, generator_monomial(as, 0)).second;
  CHECK(path_sequence(comb) == std::vector<std::vector<int>>{{0, 0}, {0, 0}, {0}});

  // the comb of lambda_2 has 2-weight 0 and comes before the lambda_3 corolla
  NamedOperad g = named_operad("ncGrav", 4);
  auto lcomb = compose(generator_monomial(a, l2), 1, generator_monomial(a, l2)).second;
  CHECK(compare(g.preferred_order, lcomb, generator_monomial(a, l3)) == Cmp::LT);
  CHECK(compare(g.preferred_order, lcomb, lcomb) == Cmp::EQ);
}

TEST_CASE("leading terms of the gravity relations") {
  const int cap = 6;
  NamedOperad g = named_operad("ncGrav", cap);
  const Alphabet& a = g.presentation.alphabet;
  GroebnerBasis gb(a, g.preferred_order, cap);
  auto lam = [&](int k) { return generator_monomial(a, find_generator(a, "lambda" + std::to_string(k))); };
  int checked = 0;
  for (int n = 4; n <= cap; ++n)
    for (int k = 3; k < n; ++k)
      for (int r = 1; r <= n - k + 1; ++r) {
        Element e;
        for (int j = r; j <= r + k - 2; ++j) e += Element(compose(lam(n - 1), j, lam(2)).second);
        Monomial want = compose(lam(n - k + 1), r, lam(k)).second;
        e -= Element(want);
        CHECK(gb.leading(e) == want);
        ++checked;
      }
  CHECK(checked == 2 + 5 + 9);
}

TEST_CASE("monomial orders are admissible") {
  std::mt19937_64 rng(9);
  Alphabet a{{"m", 2, 0}, {"b", 2, 1}, {"t", 3, 0}};
  std::vector<MonomialOrder> orders{{OrderKind::PathLex, {0, 1, 2}, {}, false},
                                    {OrderKind::DegreePathLex, {2, 1, 0}, {}, false},
                                    {OrderKind::WeightFirstPathLex, {1, 0, 2}, {0, 1, 1}, false},
                                    {OrderKind::WeightFirstPathLex, {1, 0, 2}, {0, 1, 1}, true}};
  MonomialEnumerator en(a);
  for (auto& o : orders)
    for (int n = 3; n <= 4; ++n) {
      std::vector<Monomial> ms;
      for (int d = 0; d <= 3; ++d)
        for (auto& m : en.get(n, d))
          if (vertices(m) <= 3) ms.push_back(m);
      for (int it = 0; it < 200; ++it) {
        const Monomial& x = ms[rng() % ms.size()];
        const Monomial& y = ms[rng() % ms.size()];
        if (degree(x) != degree(y)) continue;
        int c = o.compare(x, y);
        CHECK(o.compare(y, x) == -c);
        if (c == 0) {
          CHECK(x == y);
          continue;
        }
        for (int g = 0; g < static_cast<int>(a.size()); ++g) {
          Monomial z = generator_monomial(a, g);
          for (int i = 1; i <= n; ++i)
            CHECK(o.compare(compose(x, i, z).second, compose(y, i, z).second) == c);
          for (int i = 1; i <= leaves(z); ++i)
            CHECK(o.compare(compose(z, i, x).second, compose(z, i, y).second) == c);
        }
      }
    }
}

TEST_CASE("operadic suspension") {
  Alphabet as{{"m", 2, 0}};
  // S lowers the degree of an arity-k generator by k - 1
  CHECK(suspend_alphabet(as, 1)[0].degree == -1);
  Alphabet as1 = suspend_alphabet(as, -1);
  CHECK(as1[0].degree == 1);
  CHECK(as1[0].degree == named_operad("ncGerst").presentation.alphabet[kGerstB].degree);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    Element e = random_element(rng, 1);
    CHECK(operadic_suspension(operadic_suspension(e, 1), -1) == e);
    CHECK(operadic_suspension(operadic_suspension(e, -1), 1) == e);
  }
  // S respects composition
  for (int it = 0; it < 50; ++it)
    for (auto& x : by_arity(random_element(rng, 1)))
      for (auto& y : by_arity(random_element(rng, 1)))
        for (int i = 1; i <= x.arity(); ++i) {
          Element lhs = operadic_suspension(compose(x, i, y), 1);
          Element rhs = compose(operadic_suspension(x, 1), i, operadic_suspension(y, 1));
          CHECK((lhs == rhs || lhs == rhs * Q(-1)));
        }
}

TEST_CASE("text round trip") {
  Presentation p = presentation_of("ncGerst");
  for (auto& r : p.relations) CHECK(parse_element(to_string(r, p.alphabet), p.alphabet) == r);
  CHECK_THROWS(parse_monomial("q(_,_)", p.alphabet));
}
