#include "doctest.h"
#include "ncop/intersection.hpp"
#include "ncop/zoo.hpp"

using namespace ncop;

namespace {

std::vector<TrrOptions> all_variants(int n) {
  std::vector<TrrOptions> out;
  for (auto rule : {InteriorRule::Left, InteriorRule::Right})
    for (int p = 1; p < std::max(2, n); ++p)
      for (bool pr : {false, true}) out.push_back({rule, p, pr});
  return out;
}

}  // namespace

TEST_CASE("small correlators") {
  CHECK(correlator_closed({0, {0, 0}}) == 1);
  CHECK(correlator_closed({1, {0, 0, 0}}) == 1);
  CHECK(correlator_closed({0, {0, 1, 0}}) == 1);
  CHECK(correlator_closed({0, {1, 0, 0}}) == 0);
  CHECK(correlator_closed({0, {0, 0, 1}}) == 0);
  CHECK(correlator_closed({0, {0, 2, 0, 0}}) == 0);
  CHECK(correlator_closed({0, {0, 1, 1, 0}}) == 1);
  CHECK(correlator_closed({2, {0, 0, 0, 0}}) == 1);
  CHECK(correlator_trr({0, {0, 1, 0}}) == 1);
  CHECK(correlator_trr({1, {0, 0, 0}}) == 1);
  CHECK(CorrelatorIndex{1, {0, 0, 0}}.to_string() == "<tau_1 tau_0 tau_0 tau_0>");
}

TEST_CASE("generating polynomial") {
  // (t0 + t2)(t0 + t3) with exponent vectors over t0..t4
  Polynomial want{{{2, 0, 0, 0, 0}, 1}, {{1, 0, 1, 0, 0}, 1}, {{1, 0, 0, 1, 0}, 1}, {{0, 0, 1, 1, 0}, 1}};
  CHECK(generating_polynomial(4) == want);
  for (int n = 2; n <= 8; ++n) {
    auto p = generating_polynomial(n);
    CHECK(p.size() == (std::size_t{1} << (n - 2)));
    for (auto& [e, c] : p) CHECK(c == 1);
  }
}

TEST_CASE("recursion agrees with the closed form in every variant") {
  for (int n = 2; n <= 8; ++n) {
    auto idx = correlator_indices(n);
    for (auto& i : idx) {
      CHECK(i.total() == n - 2);
      long c = correlator_closed(i);
      CHECK((c == 0 || c == 1));
      for (auto& o : all_variants(n)) CHECK(correlator_trr(i, o) == c);
    }
  }
}

TEST_CASE("index enumeration and dimension filter") {
  // compositions of n - 2 into n + 1 nonnegative parts
  for (int n = 2; n <= 7; ++n) CHECK(static_cast<long>(correlator_indices(n).size()) == binomial(2 * n - 2, n));
  CHECK(correlator_closed({0, {0, 0, 0}}) == 0);
  CHECK(correlator_trr({0, {0, 0, 0}}) == 0);
  CHECK(correlator_closed({3, {0, 0, 0}}) == 0);
  CHECK_THROWS(correlator_closed({0, {}}));
}
