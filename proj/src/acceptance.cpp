#include "ncop/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <set>
#include <sstream>

#include "ncop/borjeson.hpp"
#include "ncop/brick.hpp"
#include "ncop/givental.hpp"
#include "ncop/intersection.hpp"
#include "ncop/zoo.hpp"

namespace ncop {

namespace {

// Counts checks and keeps the first failure.
struct Tally {
  long checks = 0;
  bool ok = true;
  std::string first;

  template <class F>
  bool expect(bool cond, F&& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      first = what();
    }
    return cond;
  }
};

std::string str(long x) { return std::to_string(x); }

// ------------------------------------------------------------- 1. dimensions

void dimension_tables(Tally& t, std::ostringstream& os, const AcceptanceOptions&) {
  const long catalan_row[] = {1, 2, 5, 14, 42, 132};
  struct Job {
    std::string name;
    int n_max;
    std::function<std::optional<long>(int n, int d, bool total)> literal;
  };
  std::vector<Job> jobs{
      {"ncHyperCom", 7,
       [&](int n, int d, bool total) -> std::optional<long> {
         if (total) return catalan_row[n - 2];
         if (d % 2) return 0;
         return narayana(n, d / 2);
       }},
      {"ncGrav", 7,
       [](int n, int, bool total) -> std::optional<long> {
         if (total) return 1L << (n - 2);
         return std::nullopt;
       }},
      {"ncGerst", 6,
       [](int n, int d, bool total) -> std::optional<long> {
         if (total) return 1L << (n - 1);
         return binomial(n - 1, d);
       }},
      {"qncBV", 4,
       [](int n, int, bool total) -> std::optional<long> {
         if (total) return 1L << (2 * n - 1);
         return std::nullopt;
       }},
  };
  for (auto& job : jobs) {
    Certificate c = certify_dimensions(job.name, job.n_max);
    t.expect(c.ok, [&] { return job.name + ": " + c.first_failure; });
    std::set<int> totals;
    for (auto& row : c.rows) {
      auto where = [&] {
        return job.name + " arity " + str(row.arity) + (row.total ? " total" : " degree " + str(row.degree));
      };
      t.expect(row.agree(), [&] {
        return where() + ": groebner " + str(row.groebner) + " brute " + str(row.brute) + " closed " + str(row.closed);
      });
      if (auto want = job.literal(row.arity, row.degree, row.total))
        t.expect(row.groebner == *want, [&] { return where() + ": " + str(row.groebner) + " != " + str(*want); });
      if (row.total) totals.insert(row.arity);
    }
    t.expect(static_cast<int>(totals.size()) == job.n_max - 1, [&] { return job.name + ": missing arities"; });
    os << job.name << " n<=" << job.n_max << " ";
  }
}

// ------------------------------------------------------------- 2. Groebner

void groebner_certificates(Tally& t, std::ostringstream& os, const AcceptanceOptions&) {
  const int cap = 7;
  NamedOperad grav = named_operad("ncGrav", cap);
  GroebnerBasis g = complete(grav.presentation, grav.preferred_order, cap);
  t.expect(g.complete_up_to_cap(), [] { return std::string("ncGrav completion did not finish"); });
  t.expect(g.additions() == 0, [&] { return "ncGrav needed " + str(g.additions()) + " new rules"; });

  NamedOperad hc = named_operad("ncHyperCom", cap);
  GroebnerBasis h = complete(hc.presentation, hc.preferred_order, cap);
  const Alphabet& a = hc.presentation.alphabet;
  std::set<Monomial> leads, expected;
  for (auto& r : h.rules()) leads.insert(r.lead);
  Monomial nu2 = generator_monomial(a, find_generator(a, "nu2"));
  for (int j = 2; j + 1 <= cap; ++j)
    for (int p = 2; p <= j; ++p)
      expected.insert(compose(generator_monomial(a, find_generator(a, "nu" + str(j))), p, nu2).second);
  t.expect(h.complete_up_to_cap(), [] { return std::string("ncHyperCom completion did not finish"); });
  for (auto& m : expected)
    t.expect(leads.count(m) > 0, [&] { return "ncHyperCom: expected lead " + to_string(m, a) + " missing"; });
  for (auto& m : leads)
    t.expect(expected.count(m) > 0, [&] { return "ncHyperCom: unexpected lead " + to_string(m, a); });
  os << "ncGrav rules " << g.rules().size() << ", additions " << g.additions() << "; ncHyperCom leads "
     << leads.size() << " ";
}

// ------------------------------------------------------------- 3. Koszul

void koszul_certificate(Tally& t, std::ostringstream& os, const AcceptanceOptions&) {
  const int cap = 6;
  Presentation hc = presentation_of("ncHyperCom", cap);
  Presentation sgrav = suspend(presentation_of("ncGrav", cap), 1);
  Presentation hc_dual = koszul_dual(hc), sgrav_dual = koszul_dual(sgrav);
  for (int n = 3; n <= cap; ++n) {
    DenseMat rh = relation_space(hc, n), rg = relation_space(sgrav, n);
    long free_dim = binomial(n, 2) - 1;
    t.expect(static_cast<long>(quadratic_monomials(hc.alphabet, n).size()) == free_dim,
             [&] { return "arity " + str(n) + ": quadratic part has wrong size"; });
    t.expect(static_cast<long>(rh.size()) == n - 2,
             [&] { return "arity " + str(n) + ": ncHyperCom relations " + str(rh.size()); });
    t.expect(static_cast<long>(rg.size()) == free_dim - (n - 2),
             [&] { return "arity " + str(n) + ": SncGrav relations " + str(rg.size()); });
    t.expect(same_span(relation_space(sgrav_dual, n), rh),
             [&] { return "arity " + str(n) + ": annihilator of SncGrav differs from ncHyperCom"; });
    t.expect(same_span(relation_space(hc_dual, n), rg),
             [&] { return "arity " + str(n) + ": annihilator of ncHyperCom differs from SncGrav"; });
  }
  os << "arities 3.." << cap << " ";
}

// ------------------------------------------------------------- 4. correlators

void correlators(Tally& t, std::ostringstream& os, const AcceptanceOptions& opt) {
  int n_max = opt.thorough ? 8 : 7;
  // root and two leaves
  CorrelatorIndex three{0, {0, 0}};
  t.expect(correlator_closed(three) == 1, [] { return std::string("<tau0^3> != 1"); });
  t.expect(correlator_trr(three) == 1, [] { return std::string("TRR <tau0^3> != 1"); });
  long total = 0;
  for (int n = 2; n <= n_max; ++n) {
    long nonzero = 0;
    for (auto& idx : correlator_indices(n)) {
      long c = correlator_closed(idx), r = correlator_trr(idx);
      ++total;
      t.expect(c == r, [&] { return idx.to_string() + ": closed " + str(c) + " TRR " + str(r); });
      t.expect(c == 0 || c == 1, [&] { return idx.to_string() + " = " + str(c); });
      if (idx.ds.front() > 0 || idx.ds.back() > 0)
        t.expect(c == 0, [&] { return idx.to_string() + " should vanish"; });
      nonzero += c != 0;
    }
    t.expect(nonzero >= (1L << (n - 2)), [&] { return "arity " + str(n) + ": only " + str(nonzero) + " nonzero"; });
  }
  os << total << " indices, n<=" << n_max << " ";
}

// ------------------------------------------------------------- 5. polytope

using Clades = std::vector<std::pair<int, int>>;

// Clades of a not in b, and of b not in a.
std::pair<Clades, Clades> differing(const PlanarTree& a, const PlanarTree& b) {
  Clades ca = a.clades(), cb = b.clades(), only_a, only_b;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  std::set_difference(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(only_a));
  std::set_difference(cb.begin(), cb.end(), ca.begin(), ca.end(), std::back_inserter(only_b));
  return {only_a, only_b};
}

void polytope_fan(Tally& t, std::ostringstream& os, const AcceptanceOptions&) {
  const long catalan_row[] = {1, 2, 5, 14, 42, 132};
  for (int n = 2; n <= 7; ++n) {
    auto trees = enumerate_trees(n, true);
    LatticePolytope lp = loday_polytope(n), mk = loday_via_minkowski(n);
    t.expect(lp.vertices == mk.vertices, [&] { return "n=" + str(n) + ": Minkowski vertices differ"; });
    for (auto& tr : trees)
      t.expect(vertex_missing_basis(tr) == loday_vertex(tr),
               [&] { return "n=" + str(n) + ": missing-basis vertex differs at " + tr.to_string(); });
    t.expect(static_cast<long>(lp.vertices.size()) == catalan_row[n - 2],
             [&] { return "n=" + str(n) + ": " + str(lp.vertices.size()) + " vertices"; });
    for (auto& v : lp.vertices) {
      long s = 0;
      for (long x : v) s += x;
      t.expect(s == binomial(n, 2), [&] { return "n=" + str(n) + ": coordinate sum " + str(s); });
    }
    t.expect(vertices_certified(lp), [&] { return "n=" + str(n) + ": a point is not extreme"; });
    auto h = h_vector(n), cb = complex_betti(n);
    std::vector<long> nar;
    for (int k = 0; k <= n - 2; ++k) nar.push_back(narayana(n, k));
    t.expect(h == nar, [&] { return "n=" + str(n) + ": h-vector is not Narayana"; });
    // complex Betti numbers live in even degrees
    std::vector<long> even;
    for (std::size_t i = 0; i < cb.size(); ++i) {
      if (i % 2 == 0) even.push_back(cb[i]);
      else t.expect(cb[i] == 0, [&] { return "n=" + str(n) + ": odd complex Betti number"; });
    }
    t.expect(h == even, [&] { return "n=" + str(n) + ": h-vector differs from complex Betti numbers"; });
  }
  for (int n = 3; n <= 5; ++n) {
    Fan f = normal_fan(n);
    t.expect(fan_consistent(f, loday_polytope(n)), [&] { return "n=" + str(n) + ": fan inconsistent"; });
    // each pair of trees related by one rotation shares exactly one wall
    long rotations = 0;
    for (std::size_t a = 0; a < f.trees.size(); ++a)
      for (std::size_t b = a + 1; b < f.trees.size(); ++b) {
        if (differing(f.trees[a], f.trees[b]).first.size() == 1) ++rotations;
      }
    t.expect(static_cast<long>(f.walls.size()) == rotations,
             [&] { return "n=" + str(n) + ": " + str(f.walls.size()) + " walls, " + str(rotations) + " rotations"; });
    if (n < 4) continue;
    for (auto& w : f.walls) {
      auto [only_a, only_b] = differing(f.trees[w.cone_a], f.trees[w.cone_b]);
      auto where = [&] { return f.trees[w.cone_a].to_string() + " | " + f.trees[w.cone_b].to_string(); };
      if (!t.expect(only_a.size() == 1 && only_b.size() == 1, [&] { return "wall between non-adjacent " + where(); }))
        continue;
      // the contracted tree has a ternary vertex with centre j..k: one side
      // holds the clade left+centre, the other centre+right
      auto left = only_a[0], right = only_b[0];
      if (right.first < left.first) std::swap(left, right);
      int j = right.first, k = left.second;
      std::pair<int, int> want{j - 1, k}, got{std::min(w.left, w.right), std::max(w.left, w.right)};
      t.expect(want == got, [&] {
        return where() + ": wall y" + str(got.first) + "=y" + str(got.second) + ", expected y" + str(want.first) +
               "=y" + str(want.second);
      });
    }
  }
  os << "n<=7 vertices, walls n=4,5 ";
}

// ------------------------------------------------------------- 6. bricks

Ordinal labelled(const std::string& base, int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(base + str(i));
  return Ordinal(v);
}

void brick_axioms(Tally& t, std::ostringstream& os, const AcceptanceOptions& opt) {
  ConfigSampler s(opt.seed);
  const int samples = opt.thorough ? 300 : 100;
  std::mt19937_64 rng(opt.seed + 1);
  auto slot = [&](int n) { return 1 + static_cast<int>(rng() % static_cast<unsigned>(n)); };
  int profiles = 0;
  for (int p = 2; p <= 7; ++p)
    for (int q = 2; p + q <= 9; ++q)
      for (int r = 2; p + q + r - 2 <= 7; ++r) {
        ++profiles;
        for (int it = 0; it < samples; ++it) {
          auto a = s.sample(s.tree(p), labelled("a", p));
          auto b = s.sample(s.tree(q), labelled("b", q));
          auto c = s.sample(s.tree(r), labelled("c", r));
          // sequential: a ∘_i (b ∘_j c) = (a ∘_i b) ∘_j c
          std::string i = "a" + str(slot(p)), j = "b" + str(slot(q));
          auto l = brick_compose(a, i, brick_compose(b, j, c));
          auto rr = brick_compose(brick_compose(a, i, b), j, c);
          auto where = [&](const char* kind) {
            return std::string(kind) + " (" + str(p) + "," + str(q) + "," + str(r) + ") at " + i + "," + j;
          };
          t.expect(l == rr, [&] { return where("sequential"); });
          t.expect(l.valid(), [&] { return where("sequential") + ": " + l.violation(); });
          // parallel: (a ∘_i b) ∘_k c = (a ∘_k c) ∘_i b for i != k
          int ii = slot(p), kk = slot(p - 1);
          if (kk >= ii) ++kk;
          i = "a" + str(ii);
          j = "a" + str(kk);
          auto pl = brick_compose(brick_compose(a, i, b), j, c);
          auto pr = brick_compose(brick_compose(a, j, c), i, b);
          t.expect(pl == pr, [&] { return where("parallel"); });
          t.expect(pl.valid(), [&] { return where("parallel") + ": " + pl.violation(); });
        }
      }
  // strata of one-edge composites
  long one_edge = 0;
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; p + q - 1 <= 7; ++q)
      for (int i = 1; i <= p; ++i) {
        ++one_edge;
        auto a = s.sample(PlanarTree::corolla(p)), b = s.sample(PlanarTree::corolla(q));
        PlanarTree got = stratum_of(brick_compose_at(a, i - 1, b));
        PlanarTree want = graft(PlanarTree::corolla(p), i, PlanarTree::corolla(q));
        t.expect(got == want, [&] {
          return "stratum of corolla(" + str(p) + ") o_" + str(i) + " corolla(" + str(q) + ") is " + got.to_string();
        });
        t.expect(want == one_edge_tree(p + q - 1, i, i + q - 1), [&] { return "one-edge tree mismatch"; });
      }
  // and on arbitrary strata
  for (int n = 2; n <= 4; ++n)
    for (int m = 2; n + m - 1 <= 6; ++m)
      for (auto& t1 : enumerate_trees(n, false))
        for (auto& t2 : enumerate_trees(m, false))
          for (int i = 1; i <= n; ++i) {
            PlanarTree got = stratum_of(brick_compose_at(s.sample(t1), i - 1, s.sample(t2)));
            t.expect(got == graft(t1, i, t2), [&] {
              return "stratum of " + t1.to_string() + " o_" + str(i) + " " + t2.to_string() + " is " + got.to_string();
            });
          }
  os << profiles << " profiles x " << samples << " triples, " << one_edge << " one-edge composites ";
}

// ------------------------------------------------------------- 7. Borjeson

void borjeson_suite(Tally& t, std::ostringstream& os, const AcceptanceOptions& opt) {
  OpSampler rng(opt.seed);
  Algebra M2 = matrix_algebra(2), T2 = upper_triangular(2);
  TensorAlgebraTrunc TV({1, 0}, 5), TO({1}, 6);
  Algebra P = truncated_polynomial(4, 1);
  int reps = opt.thorough ? 3 : 1;
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &T2, &TV.algebra(), &TO.algebra(), &P})
    for (int d : {0, 1})
      for (int rep = 0; rep < reps; ++rep) {
        auto D = rng.unary(A->space, d, 0.4);
        for (int n = 1; n <= 6; ++n)
          t.expect(borjeson(*A, D, n) == borjeson_closed(*A, D, n), [&] {
            return A->name + ": recursive and closed b_" + str(n) + " differ (degree " + str(d) + ")";
          });
      }
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &TV.algebra()})
    for (int d1 : {0, 1})
      for (int d2 : {0, 1})
        for (int rep = 0; rep < reps; ++rep) {
          auto D1 = rng.unary(A->space, d1, 0.4), D2 = rng.unary(A->space, d2, 0.4);
          for (auto& c : commutator_check(*A, D1, D2, 5))
            t.expect(c.ok, [&] { return A->name + " commutator " + c.name + ": " + c.detail; });
        }
  TensorAlgebraTrunc V({0, 1}, 4);
  auto nonzero_symbol = [&](int k, int d) {
    Symbol f = random_symbol(V, k, d, rng);
    while (f.map.is_zero()) f = random_symbol(V, k, d, rng);
    return f;
  };
  for (int k = 1; k <= 3; ++k)
    for (int d : {0, 1}) {
      Symbol f = nonzero_symbol(k, d);
      MultilinearOp D = rho(V, f);
      auto dec = diffop_decompose(V, D);
      t.expect(dec.size() == 1 && dec[0].length == k && dec[0].map == f.map,
               [&] { return "symbol of length " + str(k) + " does not round-trip"; });
      OrderReport o = nc_order(V.algebra(), D, 4);
      t.expect(o.resolved && o.order == k, [&] { return "rho(length " + str(k) + ") has order " + o.to_string(); });
    }
  for (int d : {0, 1}) {
    std::vector<Symbol> fs;
    for (int k = 1; k <= 3; ++k) fs.push_back(nonzero_symbol(k, d));
    auto dec = diffop_decompose(V, rho(V, fs));
    bool same = dec.size() == fs.size();
    for (std::size_t i = 0; same && i < fs.size(); ++i) same = dec[i].length == fs[i].length && dec[i].map == fs[i].map;
    t.expect(same, [&] { return "mixed symbol sum does not round-trip (degree " + str(d) + ")"; });
  }
  BarConstruction bar = bar_construction(T2, 4);
  t.expect(T2.space.dim() == 3 && T2.associative(), [] { return std::string("fixture is not a 3-dim associative algebra"); });
  t.expect(borjeson(bar.tensor.algebra(), bar.deltas[1], 3).is_zero(),
           [] { return std::string("b_3 of the bar differential is nonzero"); });
  for (auto& c : assoc_ncbv_check(bar.tensor.algebra(), bar.deltas, 3))
    t.expect(c.ok, [&] { return "bar check " + c.name + ": " + c.detail; });
  os << "5 algebras, n<=6 closed form, n<=5 commutators ";
}

// ------------------------------------------------------------- 8. Givental

MultilinearOp inner_derivation(const Algebra& a, const Vec& x) {
  MultilinearOp d(1, 0);
  for (int b = 0; b < a.space.dim(); ++b) {
    Vec e{{b, Q(1)}};
    Vec v = a.mul(x, e);
    axpy(v, Q(-1), a.mul(e, x));
    d.add(Tuple{b}, v);
  }
  return d;
}

// x^k -> k x^k on truncated polynomials.
MultilinearOp euler_derivation(const Algebra& a) {
  MultilinearOp d(1, 0);
  for (int b = 0; b < a.space.dim(); ++b) d.add(Tuple{b}, b, Q(b + 1));
  return d;
}

void givental_suite(Tally& t, std::ostringstream& os, const AcceptanceOptions& opt) {
  OpSampler rng(opt.seed);
  Algebra M2 = matrix_algebra(2), T2 = upper_triangular(2), P = truncated_polynomial(4, 0);
  TensorAlgebraTrunc TV({0, 1}, 5);
  const int cap = 5;

  Vec x;
  for (int b = 0; b < M2.space.dim(); ++b) add_to(x, b, rng.coefficient());
  std::vector<std::pair<const Algebra*, MultilinearOp>> derivations{
      {&M2, inner_derivation(M2, x)},
      {&P, euler_derivation(P)},
      {&TV.algebra(), rho(TV, random_symbol(TV, 1, 0, rng))},
      {&TV.algebra(), rho(TV, random_symbol(TV, 1, 1, rng))},
  };
  for (auto& [A, r] : derivations) {
    t.expect(nc_order(*A, r, 4).order <= 1, [&] { return A->name + ": fixture is not a derivation"; });
    auto tau = givental_tau0(A->space, r, associative_family(*A), cap);
    for (auto& [n, op] : tau) t.expect(op.is_zero(), [&] { return A->name + ": tau0_" + str(n) + " != 0"; });
  }

  int k_max = opt.thorough ? 2 : 1;
  for (const Algebra* A : std::initializer_list<const Algebra*>{&M2, &T2, &TV.algebra()})
    for (int d : {0, 1}) {
      auto r = rng.unary(A->space, d, 0.4);
      auto nu = associative_family(*A);
      for (int k = 0; k <= k_max; ++k) {
        auto tau = givental_tau(A->space, r, nu, k, 4);
        for (int n = 2; n <= 4; ++n)
          t.expect(tau.at(n) == givental_direct(*A, r, k, n), [&] {
            return A->name + ": recursion and direct tau^(" + str(k) + ")_" + str(n) + " differ (degree " + str(d) + ")";
          });
      }
    }

  struct Case {
    std::string name;
    const Algebra* alg;
    EndoSeries r;
  };
  BarConstruction bar = bar_construction(T2, 4);
  MultilinearOp zero(1, 0);
  std::vector<Case> cases{
      {"M2 inner derivation", &M2, {inner_derivation(M2, x)}},
      {"M2 random r0", &M2, {rng.unary(M2.space, 0, 0.5)}},
      {"Q[x]/x^5 Euler derivation", &P, {euler_derivation(P)}},
      {"Q[x]/x^5 random r0, r1", &P, {rng.unary(P.space, 0, 0.5), rng.unary(P.space, 0, 0.5)}},
      {"T(V) rho(3-symbol) as r1", &TV.algebra(), {MultilinearOp(1, 0), rho(TV, random_symbol(TV, 3, 0, rng))}},
      {"T(V) orders 1,2,3", &TV.algebra(),
       {rho(TV, random_symbol(TV, 1, 0, rng)), rho(TV, random_symbol(TV, 2, 0, rng)),
        rho(TV, random_symbol(TV, 3, 0, rng))}},
      {"bar(T2) r1 = Delta_1", &bar.tensor.algebra(), {zero, bar.deltas[1]}},
  };
  std::set<std::string> algebras;
  int preserved = 0, failing = 0;
  for (auto& c : cases) {
    PreservationReport a = preserves_associative(*c.alg, c.r);
    PreservationReport b = preserves_associative_direct(*c.alg, c.r, cap);
    algebras.insert(c.alg->name);
    (a.preserved ? preserved : failing)++;
    t.expect(a.preserved == b.preserved, [&] {
      return c.name + ": criterion says " + a.to_string(c.alg->space) + ", direct says " + b.to_string(c.alg->space);
    });
    if (!a.preserved && !b.preserved)
      t.expect(a.witness->index == b.witness->index, [&] { return c.name + ": witnesses at different l"; });
  }
  t.expect(algebras.size() >= 3, [] { return std::string("fewer than 3 algebras"); });
  t.expect(preserved > 0 && failing > 0, [] { return std::string("need both preserving and failing cases"); });
  os << cases.size() << " preservation cases (" << preserved << " preserved, " << failing << " not) ";
}

// ------------------------------------------------------------- 9. real bricks

void real_betti_suite(Tally& t, std::ostringstream& os, const AcceptanceOptions&) {
  Certificate c = certify_dimensions("2ncGerst", 6);
  t.expect(c.ok, [&] { return "2ncGerst: " + c.first_failure; });
  for (int n = 2; n <= 6; ++n) {
    auto betti = real_betti(n);
    long total = 0;
    for (long b : betti) total += b;
    std::map<int, long> seen;
    for (auto& row : c.rows) {
      if (row.arity != n) continue;
      if (row.total) {
        t.expect(row.groebner == total && row.brute == total,
                 [&] { return "arity " + str(n) + ": total " + str(row.groebner) + " vs Betti " + str(total); });
      } else {
        seen[row.degree] = row.groebner;
        long want = row.degree >= 0 && row.degree < static_cast<int>(betti.size()) ? betti[row.degree] : 0;
        t.expect(row.groebner == want && row.brute == want, [&] {
          return "arity " + str(n) + " degree " + str(row.degree) + ": " + str(row.groebner) + " vs Betti " + str(want);
        });
      }
    }
    for (int i = 0; i < static_cast<int>(betti.size()); ++i)
      if (betti[i]) t.expect(seen.count(i) > 0, [&] { return "arity " + str(n) + ": degree " + str(i) + " missing"; });
  }
  for (int n = 2; n <= 8; ++n) {
    long e = euler_characteristic(real_betti(n)), want = real_euler_expected(n);
    t.expect(e == want, [&] { return "n=" + str(n) + ": Euler " + str(e) + " expected " + str(want); });
  }
  os << "n<=6 Betti, n<=8 Euler ";
}

struct Criterion {
  const char* title;
  void (*run)(Tally&, std::ostringstream&, const AcceptanceOptions&);
};

const Criterion kCriteria[] = {
    {"dimension tables", dimension_tables},
    {"Groebner certificates", groebner_certificates},
    {"Koszul duality ncHyperCom / SncGrav", koszul_certificate},
    {"correlators: closed form = TRR", correlators},
    {"Loday polytope and normal fan", polytope_fan},
    {"brick operad axioms", brick_axioms},
    {"Borjeson products", borjeson_suite},
    {"Givental action", givental_suite},
    {"real bricks and 2ncGerst", real_betti_suite},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

std::string criterion_title(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no criterion " + std::to_string(id));
  return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  auto start = std::chrono::steady_clock::now();
  Tally t;
  std::ostringstream os;
  try {
    kCriteria[id - 1].run(t, os, opt);
  } catch (const std::exception& e) {
    t.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = t.ok;
  r.checks = t.checks;
  std::string summary = os.str();
  if (!summary.empty() && summary.back() == ' ') summary.pop_back();
  r.detail = t.ok ? summary : t.first;
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    out.push_back(run_criterion(id, opt));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << r.checks << " checks, " << r.seconds
     << "s): " << r.detail;
  return os.str();
}

}  // namespace ncop
