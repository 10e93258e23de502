#include <algorithm>
#include <set>

#include "doctest.h"
#include "ncop/ordinal.hpp"
#include "ncop/tree.hpp"

using namespace ncop;

namespace {

Ordinal ord(std::vector<std::string> v) { return Ordinal(std::move(v)); }

Ordinal labelled(const std::string& base, int n) {
  std::vector<std::string> v;
  for (int k = 1; k <= n; ++k) v.push_back(base + std::to_string(k));
  return Ordinal(v);
}

}  // namespace

TEST_CASE("gap sets") {
  auto g = gap_set(Ordinal::canonical(3));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == GapPair{"1", "2"});
  CHECK(g[1] == GapPair{"2", "3"});
  CHECK(gap_set(ord({"a"})).empty());
  for (int n = 1; n <= 8; ++n) CHECK(gap_set(Ordinal::canonical(n)).size() == static_cast<std::size_t>(n - 1));
}

TEST_CASE("ordinal insertion") {
  CHECK(ordinal_insert(Ordinal::canonical(3), "2", ord({"a", "b"})) == ord({"1", "a", "b", "3"}));
  CHECK(ordinal_insert(ord({"1"}), "1", ord({"x", "y", "z"})) == ord({"x", "y", "z"}));
  auto r = ordinal_insert(Ordinal::canonical(6), "3", ord({"7", "8", "9", "10"}));
  CHECK(r == ord({"1", "2", "7", "8", "9", "10", "4", "5", "6"}));
  CHECK(r.size() == 9);
  CHECK_THROWS(ordinal_insert(Ordinal::canonical(3), "q", ord({"a"})));
}

TEST_CASE("gap bijection boundary rule") {
  auto b = gap_bijection(Ordinal::canonical(3), "2", ord({"a", "b"}));
  CHECK(b.image_outer({"1", "2"}) == GapPair{"1", "a"});
  CHECK(b.image_outer({"2", "3"}) == GapPair{"b", "3"});
  CHECK(b.image_inner({"a", "b"}) == GapPair{"a", "b"});

  // no predecessor: only the (i, s(i)) gap moves
  auto m = gap_bijection(Ordinal::canonical(3), "1", ord({"a", "b"}));
  CHECK(m.image_outer({"1", "2"}) == GapPair{"b", "2"});
  CHECK(m.image_outer({"2", "3"}) == GapPair{"2", "3"});
}

TEST_CASE("gap bijection is a bijection for all small ordinals") {
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; q <= 6; ++q) {
      Ordinal I = labelled("i", p), J = labelled("j", q);
      for (int k = 0; k < p; ++k) {
        auto b = gap_bijection(I, I[k], J);
        Ordinal U = ordinal_insert(I, I[k], J);
        auto gaps = gap_set(U);
        REQUIRE(gap_set(I).size() + gap_set(J).size() == gaps.size());
        std::set<GapPair> image;
        for (auto& [s, t] : b.from_outer) image.insert(t);
        for (auto& [s, t] : b.from_inner) image.insert(t);
        CHECK(image == std::set<GapPair>(gaps.begin(), gaps.end()));
        for (auto& g : gaps) {
          auto [inner, pre] = b.preimage(g);
          CHECK((inner ? b.image_inner(pre) : b.image_outer(pre)) == g);
        }
        // inner gaps keep their order; outer gaps keep theirs
        auto pos = [&](const GapPair& g) { return std::find(gaps.begin(), gaps.end(), g) - gaps.begin(); };
        for (std::size_t x = 1; x < b.from_outer.size(); ++x)
          CHECK(pos(b.from_outer[x - 1].second) < pos(b.from_outer[x].second));
        for (std::size_t x = 1; x < b.from_inner.size(); ++x)
          CHECK(pos(b.from_inner[x - 1].second) < pos(b.from_inner[x].second));
      }
    }
}

TEST_CASE("tree enumeration counts") {
  CHECK(enumerate_trees(3, true).size() == 2);
  CHECK(enumerate_trees(4, false).size() == 11);
  CHECK(enumerate_trees(5, true).size() == 14);
  // faces of the associahedron: 1, 3, 11, 45, 197
  const std::size_t faces[] = {1, 3, 11, 45, 197};
  for (int n = 2; n <= 6; ++n) CHECK(enumerate_trees(n, false).size() == faces[n - 2]);

  auto all = enumerate_trees(4, false);
  CHECK(std::is_sorted(all.begin(), all.end()));
  int corollas = 0, one_edge = 0, binary = 0;
  for (auto& t : all) {
    if (t.internal_edges() == 0) ++corollas;
    else if (t.is_binary()) ++binary;
    else if (t.internal_edges() == 1) ++one_edge;
  }
  CHECK(corollas == 1);
  CHECK(one_edge == 5);
  CHECK(binary == 5);
}

TEST_CASE("serialization round trip") {
  for (int n = 1; n <= 6; ++n)
    for (auto& t : enumerate_trees(n, false)) {
      CHECK(parse_tree(t.to_string()) == t);
      CHECK(t.leaves() == n);
    }
  CHECK(PlanarTree::corolla(3).serialize() == "3 0 0 0");
}

TEST_CASE("grafting and contraction") {
  auto c2 = PlanarTree::corolla(2);
  CHECK(graft(c2, 1, c2) == parse_tree("((1,2),3)"));
  CHECK(graft(c2, 2, c2) == parse_tree("(1,(2,3))"));
  for (auto& t : enumerate_trees(3, true)) {
    auto cs = contractions(t);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0] == PlanarTree::corolla(3));
  }
  CHECK(one_edge_tree(4, 2, 3) == parse_tree("(1,(2,3),4)"));
  CHECK_THROWS(one_edge_tree(4, 1, 4));
}

TEST_CASE("refinement poset on four leaves") {
  auto all = enumerate_trees(4, false);
  int maximal = 0, minimal = 0;
  for (auto& s : all) {
    bool refined_by_other = false, refines_other = false;
    for (auto& t : all) {
      if (s == t) continue;
      if (contracts_to(t, s)) refined_by_other = true;
      if (contracts_to(s, t)) refines_other = true;
    }
    // binary trees refine everything and are refined by nothing
    if (!refined_by_other) ++maximal;
    if (!refines_other) ++minimal;
  }
  CHECK(all.size() == 11);
  CHECK(maximal == 5);
  CHECK(minimal == 1);
}

TEST_CASE("grafting satisfies the operad axioms") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        if (a + b + c - 2 > 6) continue;
        for (auto& t1 : enumerate_trees(a, false))
          for (auto& t2 : enumerate_trees(b, false))
            for (auto& t3 : enumerate_trees(c, false)) {
              for (int i = 1; i <= a; ++i)
                for (int j = 1; j <= b; ++j)
                  CHECK(graft(graft(t1, i, t2), i + j - 1, t3) == graft(t1, i, graft(t2, j, t3)));
              for (int i = 1; i <= a; ++i)
                for (int k = i + 1; k <= a; ++k)
                  CHECK(graft(graft(t1, k, t3), i, t2) == graft(graft(t1, i, t2), k + b - 1, t3));
            }
      }
}
