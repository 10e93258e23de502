#include "ncop/groebner.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ncop {

// ---------------------------------------------------------------- presentation

Homogeneity Presentation::homogeneity() const {
  bool quad = true, ql = true;
  for (auto& r : relations) {
    bool has2 = false;
    for (auto& [m, c] : r.terms()) {
      int v = vertices(m);
      if (v != 2) quad = false;
      if (v == 2) has2 = true;
      if (v > 2) ql = false;
    }
    if (!has2) ql = false;
  }
  if (quad) return Homogeneity::Quadratic;
  if (ql) return Homogeneity::QuadraticLinear;
  return Homogeneity::General;
}

void Presentation::canonicalize() {
  std::vector<Element> out;
  std::set<std::map<Monomial, Q>> seen;
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    Element monic = r * (1 / r.terms().begin()->second);
    if (seen.insert(monic.terms()).second) out.push_back(r);
  }
  relations.swap(out);
}

// ---------------------------------------------------------------- rewriting

namespace {

using KeyedMonomial = std::pair<std::vector<long>, Monomial>;

struct KeyedLess {
  bool reversed = false;
  bool operator()(const KeyedMonomial& a, const KeyedMonomial& b) const {
    int c;
    if (a.first != b.first) c = a.first < b.first ? -1 : 1;
    else if (a.second != b.second) c = a.second < b.second ? -1 : 1;
    else c = 0;
    return reversed ? c > 0 : c < 0;
  }
};

using Work = std::map<KeyedMonomial, Q, KeyedLess>;

void work_add(Work& w, const MonomialOrder& o, const Monomial& m, const Q& c) {
  if (is_zero(c)) return;
  KeyedMonomial k{o.key(m), m};
  auto [it, fresh] = w.try_emplace(std::move(k), c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) w.erase(it);
  }
}

}  // namespace

Monomial GroebnerBasis::leading(const Element& e) const {
  if (e.is_zero()) throw std::invalid_argument("leading term of zero");
  const Monomial* best = nullptr;
  for (auto& [m, c] : e.terms())
    if (!best || order_.compare(m, *best) > 0) best = &m;
  return *best;
}

const Rule* GroebnerBasis::find_divisor(const Monomial& m, Occurrence& occ) const {
  for (std::size_t s = 0; s < m.size(); ++s) {
    auto it = by_root_.find(m[s]);
    if (it == by_root_.end()) continue;
    for (int r : it->second) {
      occ = Occurrence{};
      if (match_at(rules_[r].lead, m, s, occ)) return &rules_[r];
    }
  }
  return nullptr;
}

bool GroebnerBasis::is_normal(const Monomial& m) const {
  Occurrence occ;
  return find_divisor(m, occ) == nullptr;
}

Element GroebnerBasis::reduce(const Element& e) const {
  if (cap_ > 0 && e.arity() > cap_)
    throw std::domain_error("reduce: arity " + std::to_string(e.arity()) + " above cap " + std::to_string(cap_));
  Work w(KeyedLess{order_.reversed});
  for (auto& [m, c] : e.terms()) work_add(w, order_, m, c);
  Element out;
  while (!w.empty()) {
    auto it = std::prev(w.end());
    Monomial m = it->first.second;
    Q c = it->second;
    w.erase(it);
    Occurrence occ;
    const Rule* r = find_divisor(m, occ);
    if (!r) {
      out.add(m, c);
      continue;
    }
    Factorization f = factor(r->lead, m, occ);
    for (auto& [t, tc] : r->tail.terms()) {
      auto [s, y] = substitute(f.context, t);
      work_add(w, order_, y, c * tc * (f.sign * s));
    }
  }
  return out;
}

Element reduce(const Element& e, const GroebnerBasis& g) { return g.reduce(e); }

void GroebnerBasis::reindex() {
  by_root_.clear();
  for (std::size_t r = 0; r < rules_.size(); ++r) by_root_[rules_[r].lead[0]].push_back(static_cast<int>(r));
}

static Rule make_rule(const GroebnerBasis& g, const Element& e) {
  Rule r;
  r.lead = g.leading(e);
  Q lc = e.coeff(r.lead);
  Element rest = e - Element(r.lead, lc);
  r.tail = rest * (-1 / lc);
  return r;
}

bool GroebnerBasis::add_relation(const Element& rel) {
  Element r = reduce(rel);
  if (r.is_zero()) return false;
  rules_.push_back(make_rule(*this, r));
  reindex();
  interreduce();
  return true;
}

void GroebnerBasis::interreduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rules_.size() && !changed; ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        if (i == j || !divides(rules_[j].lead, rules_[i].lead)) continue;
        Element rel = rules_[i].relation();
        rules_.erase(rules_.begin() + static_cast<long>(i));
        reindex();
        Element red = reduce(rel);
        if (!red.is_zero()) {
          rules_.push_back(make_rule(*this, red));
          reindex();
        }
        changed = true;
        break;
      }
    }
  }
  for (auto& r : rules_) {
    Element t = reduce(r.tail);
    r.tail = std::move(t);
  }
  std::sort(rules_.begin(), rules_.end(), [&](const Rule& a, const Rule& b) {
    int la = leaves(a.lead), lb = leaves(b.lead);
    if (la != lb) return la < lb;
    return order_.compare(a.lead, b.lead) < 0;
  });
  reindex();
}

namespace {

bool merge_sub(const Monomial& A, std::size_t pa, const Monomial& B, std::size_t pb, Monomial& out, std::size_t& ea,
               std::size_t& eb) {
  if (A[pa] != B[pb]) return false;
  out.push_back(A[pa]);
  std::size_t qa = pa + 1, qb = pb + 1;
  for (int j = 0; j < A[pa].arity; ++j) {
    if (A[qa].gen == Node::kLeaf) {
      std::size_t e = subtree_end(B, qb);
      out.insert(out.end(), B.begin() + static_cast<long>(qb), B.begin() + static_cast<long>(e));
      ++qa;
      qb = e;
    } else if (B[qb].gen == Node::kLeaf) {
      std::size_t e = subtree_end(A, qa);
      out.insert(out.end(), A.begin() + static_cast<long>(qa), A.begin() + static_cast<long>(e));
      qa = e;
      ++qb;
    } else {
      std::size_t na, nb;
      if (!merge_sub(A, qa, B, qb, out, na, nb)) return false;
      qa = na;
      qb = nb;
    }
  }
  ea = qa;
  eb = qb;
  return true;
}

// Smallest monomial containing A, with the root of B placed at vertex x of A.
std::optional<Monomial> merge_at(const Monomial& A, std::size_t x, const Monomial& B) {
  if (A[x].gen == Node::kLeaf) return std::nullopt;
  Monomial out(A.begin(), A.begin() + static_cast<long>(x));
  std::size_t ea, eb;
  if (!merge_sub(A, x, B, 0, out, ea, eb)) return std::nullopt;
  out.insert(out.end(), A.begin() + static_cast<long>(ea), A.end());
  return out;
}

bool covers(const Monomial& m, const Occurrence& a, const Occurrence& b) {
  std::set<std::size_t> sa(a.positions.begin(), a.positions.end());
  bool meet = false;
  std::set<std::size_t> all = sa;
  for (auto p : b.positions) {
    if (sa.count(p)) meet = true;
    all.insert(p);
  }
  return meet && static_cast<int>(all.size()) == vertices(m);
}

}  // namespace

GroebnerBasis complete(const Presentation& p, const MonomialOrder& o, int cap) {
  GroebnerBasis g(p.alphabet, o, cap);
  for (auto& r : p.relations)
    if (!r.is_zero() && r.arity() <= cap) g.add_relation(r);

  std::set<std::tuple<Monomial, Monomial, Monomial>> processed;
  while (true) {
    struct Cand {
      Monomial m, l1, l2;
    };
    std::vector<Cand> cands;
    for (auto& r1 : g.rules_)
      for (auto& r2 : g.rules_)
        for (std::size_t x = 0; x < r1.lead.size(); ++x) {
          auto m = merge_at(r1.lead, x, r2.lead);
          if (!m || leaves(*m) > cap) continue;
          if (processed.count({*m, r1.lead, r2.lead})) continue;
          cands.push_back({*m, r1.lead, r2.lead});
        }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      int la = leaves(a.m), lb = leaves(b.m);
      if (la != lb) return la < lb;
      int c = o.compare(a.m, b.m);
      if (c != 0) return c < 0;
      return std::tie(a.l1, a.l2) < std::tie(b.l1, b.l2);
    });
    for (auto& c : cands) {
      if (!processed.insert({c.m, c.l1, c.l2}).second) continue;
      auto rule_with = [&](const Monomial& lead) -> const Rule* {
        for (auto& r : g.rules_)
          if (r.lead == lead) return &r;
        return nullptr;
      };
      const Rule* r1 = rule_with(c.l1);
      const Rule* r2 = rule_with(c.l2);
      if (!r1 || !r2) continue;
      std::vector<Element> found;
      auto o1s = occurrences(r1->lead, c.m);
      auto o2s = occurrences(r2->lead, c.m);
      for (auto& o1 : o1s)
        for (auto& o2 : o2s) {
          if (r1 == r2 && o1.root == o2.root) continue;
          if (!covers(c.m, o1, o2)) continue;
          Factorization f1 = factor(r1->lead, c.m, o1);
          Factorization f2 = factor(r2->lead, c.m, o2);
          Element s = substitute(f1.context, r1->tail) * Q(f1.sign) - substitute(f2.context, r2->tail) * Q(f2.sign);
          found.push_back(std::move(s));
        }
      for (auto& s : found)
        if (g.add_relation(s)) ++g.additions_;
    }
  }
  g.complete_ = true;
  return g;
}

// ---------------------------------------------------------------- normal forms

std::vector<Monomial> normal_monomials(const GroebnerBasis& g, int n, int max_vertices) {
  if (g.arity_cap() > 0 && n > g.arity_cap()) throw std::domain_error("normal_monomials: arity above cap");
  if (!g.complete_up_to_cap()) throw std::logic_error("normal_monomials: basis not completed");
  const Alphabet& a = g.alphabet();
  std::set<Monomial> layer{leaf_monomial()};
  std::vector<Monomial> out;
  for (int v = 0; !layer.empty(); ++v) {
    if (v > max_vertices) throw ResourceError("normal_monomials: vertex guard exceeded (infinite normal set?)");
    for (auto& m : layer)
      if (leaves(m) == n) out.push_back(m);
    std::set<Monomial> next;
    for (auto& m : layer) {
      int ar = leaves(m);
      for (std::size_t p = 0; p < m.size(); ++p) {
        if (m[p].gen != Node::kLeaf) continue;
        for (std::size_t gi = 0; gi < a.size(); ++gi) {
          if (ar + a[gi].arity - 1 > n) continue;
          Monomial cand(m.begin(), m.begin() + static_cast<long>(p));
          Monomial gm = generator_monomial(a, static_cast<int>(gi));
          cand.insert(cand.end(), gm.begin(), gm.end());
          cand.insert(cand.end(), m.begin() + static_cast<long>(p) + 1, m.end());
          if (!next.count(cand) && g.is_normal(cand)) next.insert(std::move(cand));
        }
      }
    }
    layer.swap(next);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) { return g.order().compare(x, y) < 0; });
  return out;
}

std::map<int, long> hilbert(const GroebnerBasis& g, int n) {
  std::map<int, long> h;
  for (auto& m : normal_monomials(g, n)) ++h[degree(m)];
  return h;
}

// ---------------------------------------------------------------- enumeration

MonomialEnumerator::MonomialEnumerator(const Alphabet& a, std::size_t guard) : alphabet_(a), guard_(guard) {
  for (auto& g : a) {
    if (g.arity == 1 && g.degree <= 0)
      throw ResourceError("unary generator " + g.name + " of nonpositive degree: components are infinite");
    if (g.arity >= 2) min_nonunary_ = std::min(min_nonunary_, g.degree);
  }
}

int MonomialEnumerator::low(int n, bool hole, int, int hd) const {
  return (n - 1) * min_nonunary_ + (hole ? std::min(0, hd) : 0);
}

const std::vector<Monomial>& MonomialEnumerator::get(int n, int d) { return rec(n, d, false, 0, 0); }

const std::vector<Monomial>& MonomialEnumerator::contexts(int n, int d, int ha, int hd) { return rec(n, d, true, ha, hd); }

const std::vector<Monomial>& MonomialEnumerator::rec(int n, int d, bool hole, int ha, int hd) {
  auto key = std::make_tuple(n, d, hole, hole ? ha : 0, hole ? hd : 0);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  memo_[key];  // placeholder keeps references stable for recursion on other keys
  std::vector<Monomial> res;
  if (n == 1 && d == 0 && !hole) res.push_back(leaf_monomial());
  if (n >= 1 && d >= low(n, hole, ha, hd)) {
    struct Choice {
      Node node;
      bool is_hole;
    };
    std::vector<Choice> heads;
    for (std::size_t g = 0; g < alphabet_.size(); ++g)
      heads.push_back({Node{static_cast<int>(g), alphabet_[g].arity, alphabet_[g].degree}, false});
    if (hole) heads.push_back({Node{Node::kHole, ha, hd}, true});
    for (auto& h : heads) {
      int a = h.node.arity;
      if (a > n) continue;
      if (a == 1 && !h.is_hole && h.node.degree <= 0) continue;
      int rest = d - h.node.degree;
      bool pending = hole && !h.is_hole;
      std::vector<const std::vector<Monomial>*> parts(a);
      std::function<void(int, int, int, bool)> pick = [&](int j, int nleft, int dleft, bool hleft) {
        if (j == a) {
          if (nleft != 0 || dleft != 0 || hleft) return;
          // cartesian product
          std::vector<std::size_t> idx(a, 0);
          for (auto* p : parts)
            if (p->empty()) return;
          while (true) {
            Monomial m{h.node};
            for (int c = 0; c < a; ++c) m.insert(m.end(), (*parts[c])[idx[c]].begin(), (*parts[c])[idx[c]].end());
            res.push_back(std::move(m));
            if ((total_ += 1) > guard_) throw ResourceError("monomial enumeration guard exceeded");
            int c = a - 1;
            while (c >= 0 && ++idx[c] == parts[c]->size()) idx[c--] = 0;
            if (c < 0) break;
          }
          return;
        }
        int kids_after = a - j - 1;
        for (int nj = 1; nj <= nleft - kids_after; ++nj) {
          for (int hj = 0; hj <= (hleft ? 1 : 0); ++hj) {
            if (j == a - 1 && hleft && !hj) continue;
            bool hl = hleft && !hj;
            int lo = low(nj, hj, ha, hd);
            int hi = dleft - (kids_after > 0 ? low(nleft - nj, hl, ha, hd) - 0 : 0);
            if (kids_after == 0) lo = hi = dleft;
            for (int dj = lo; dj <= hi; ++dj) {
              parts[j] = &rec(nj, dj, hj, ha, hd);
              if (parts[j]->empty()) continue;
              pick(j + 1, nleft - nj, dleft - dj, hl);
            }
          }
        }
      };
      pick(0, n, rest, pending);
    }
  }
  auto& slot = memo_[key];
  slot = std::move(res);
  return slot;
}

// ---------------------------------------------------------------- brute force

namespace {

MonomialOrder oracle_order() { return MonomialOrder{OrderKind::DegreePathLex, {}, {}, false}; }

struct Slice {
  std::vector<Monomial> monos;
  std::map<Monomial, int> index;
};

Slice make_slice(const std::vector<Monomial>& ms) {
  Slice s;
  MonomialOrder o = oracle_order();
  std::vector<std::pair<std::vector<long>, Monomial>> keyed;
  for (auto& m : ms) keyed.emplace_back(o.key(m), m);
  std::sort(keyed.begin(), keyed.end());
  for (auto& [k, m] : keyed) {
    s.index.emplace(m, static_cast<int>(s.monos.size()));
    s.monos.push_back(m);
  }
  return s;
}

SparseVec to_sparse(const Element& e, const Slice& s) {
  SparseVec v;
  for (auto& [m, c] : e.terms()) {
    auto it = s.index.find(m);
    if (it == s.index.end()) throw std::logic_error("element leaves its slice");
    v.emplace_back(it->second, c);
  }
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return v;
}

void fill_ideal(const Presentation& p, MonomialEnumerator& en, int n, int d, const Slice& s, Echelon& ech,
                const std::function<bool(const Monomial&)>& filter = {}) {
  for (auto& r : p.relations) {
    if (r.is_zero()) continue;
    int k = r.arity(), e = r.degree();
    if (k > n) continue;
    for (auto& ctx : en.contexts(n, d, k, e)) {
      Element img = substitute(ctx, r);
      if (img.is_zero()) continue;
      if (filter && !filter(img.terms().begin()->first)) continue;
      ech.insert(to_sparse(img, s));
    }
  }
}

}  // namespace

std::map<int, long> component_dimension_bruteforce(const Presentation& p, int n, int max_degree, int min_degree,
                                                   std::size_t guard) {
  MonomialEnumerator en(p.alphabet, guard);
  std::map<int, long> dims;
  for (int d = min_degree; d <= max_degree; ++d) {
    const auto& ms = en.get(n, d);
    if (ms.empty()) continue;
    Slice s = make_slice(ms);
    Echelon ech;
    fill_ideal(p, en, n, d, s, ech);
    long dim = static_cast<long>(s.monos.size()) - static_cast<long>(ech.rank());
    if (dim) dims[d] = dim;
  }
  return dims;
}

SliceDims slice_dimension(const Presentation& p, int n, int d, const std::function<bool(const Monomial&)>& filter,
                          std::size_t guard) {
  MonomialEnumerator en(p.alphabet, guard);
  std::vector<Monomial> ms;
  for (auto& m : en.get(n, d))
    if (!filter || filter(m)) ms.push_back(m);
  Slice s = make_slice(ms);
  Echelon ech;
  fill_ideal(p, en, n, d, s, ech, filter);
  SliceDims r;
  r.free = static_cast<long>(ms.size());
  r.ideal = static_cast<long>(ech.rank());
  r.quotient = r.free - r.ideal;
  return r;
}

bool in_ideal_bruteforce(const Presentation& p, const Element& e, std::size_t guard) {
  if (e.is_zero()) return true;
  int n = e.arity(), d = e.degree();
  MonomialEnumerator en(p.alphabet, guard);
  Slice s = make_slice(en.get(n, d));
  Echelon ech;
  fill_ideal(p, en, n, d, s, ech);
  return ech.contains(to_sparse(e, s));
}

// ---------------------------------------------------------------- Koszul duality

std::vector<Monomial> quadratic_monomials(const Alphabet& a, int n) {
  std::vector<Monomial> out;
  for (std::size_t g1 = 0; g1 < a.size(); ++g1)
    for (std::size_t g2 = 0; g2 < a.size(); ++g2) {
      if (a[g1].arity + a[g2].arity - 1 != n) continue;
      for (int i = 1; i <= a[g1].arity; ++i)
        out.push_back(compose(generator_monomial(a, static_cast<int>(g1)), i,
                              generator_monomial(a, static_cast<int>(g2))).second);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Identifies a two-vertex monomial independently of the degrees it carries.
std::vector<std::pair<int, int>> shape_key(const Monomial& m) {
  std::vector<std::pair<int, int>> k;
  for (auto& n : m) k.emplace_back(n.gen, n.arity);
  return k;
}

DenseMat rows_over(const std::vector<Element>& rels, const std::vector<Monomial>& basis) {
  std::map<std::vector<std::pair<int, int>>, int> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[shape_key(basis[k])] = static_cast<int>(k);
  DenseMat rows;
  for (auto& r : rels) {
    std::vector<Q> row(basis.size());
    for (auto& [m, c] : r.terms()) {
      auto it = idx.find(shape_key(m));
      if (it == idx.end()) throw std::invalid_argument("relation is not quadratic");
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DenseMat relation_space(const Presentation& p, int n) {
  std::vector<Element> rels;
  for (auto& r : p.relations)
    if (!r.is_zero() && r.arity() == n) rels.push_back(r);
  DenseMat rows = rows_over(rels, quadratic_monomials(p.alphabet, n));
  rref(rows);
  return rows;
}

bool same_span(DenseMat a, DenseMat b) {
  rref(a);
  rref(b);
  return a == b;
}

Presentation suspend(const Presentation& p, int power) {
  Presentation q{(power == 1 ? "S" : "S^" + std::to_string(power)) + p.name, suspend_alphabet(p.alphabet, power), {}};
  for (auto& r : p.relations) q.relations.push_back(operadic_suspension(r, power));
  return q;
}

namespace {

// Slot (1-based) and arity of the non-root vertex of a two-vertex monomial.
std::pair<int, int> inner_slot(const Monomial& m) {
  std::size_t q = 1;
  for (int ch = 0; ch < m[0].arity; ++ch) {
    if (m[q].gen != Node::kLeaf) return {ch + 1, m[q].arity};
    q = subtree_end(m, q);
  }
  throw std::invalid_argument("monomial has a single vertex");
}

}  // namespace

Presentation koszul_dual(const Presentation& p) {
  if (p.homogeneity() != Homogeneity::Quadratic) throw std::invalid_argument("koszul_dual needs a quadratic presentation");
  Presentation d;
  d.name = p.name + "^!";
  d.alphabet = p.alphabet;
  int maxar = 1;
  for (auto& g : d.alphabet) {
    g.degree = g.arity - 2 - g.degree;
    maxar = std::max(maxar, g.arity);
  }
  for (int n = 1; n <= 2 * maxar - 1; ++n) {
    auto basis = quadratic_monomials(p.alphabet, n);
    if (basis.empty()) continue;
    std::vector<Element> signed_rels;
    for (auto& r : p.relations) {
      if (r.is_zero() || r.arity() != n) continue;
      // <x o_i y, x' o_i y'> = (-1)^{(b-1)(i-1) + b}, b = arity(y)
      Element signed_;
      for (auto& [m, c] : r.terms()) {
        auto [i, b] = inner_slot(m);
        signed_.add(m, (((b - 1) * (i - 1) + b) & 1) ? Q(-c) : c);
      }
      signed_rels.push_back(std::move(signed_));
    }
    DenseMat rows = rows_over(signed_rels, basis);
    auto null = rows.empty() ? DenseMat{} : nullspace(rows, static_cast<int>(basis.size()));
    if (rows.empty())
      for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<Q> v(basis.size());
        v[k] = 1;
        null.push_back(std::move(v));
      }
    rref(null);
    auto dual_basis = quadratic_monomials(d.alphabet, n);
    for (auto& v : null) {
      Element e;
      for (std::size_t k = 0; k < v.size(); ++k) e.add(dual_basis[k], v[k]);
      d.relations.push_back(std::move(e));
    }
  }
  return d;
}

// ---------------------------------------------------------------- composite dims

namespace {

using Poly = std::map<int, long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [da, ca] : a)
    for (auto& [db, cb] : b) r[da + db] += ca * cb;
  return r;
}

void accumulate(Poly& into, const Poly& p) {
  for (auto& [d, c] : p) into[d] += c;
}

}  // namespace

DimTable composite_dims(const DimTable& p, const DimTable& q, int cap) {
  auto at = [](const DimTable& t, int n) -> Poly {
    auto it = t.find(n);
    return it == t.end() ? Poly{} : it->second;
  };
  // qpow[k][m]: arity-m part of Q^{⊗k} summed over compositions
  std::vector<std::vector<Poly>> qpow(cap + 1, std::vector<Poly>(cap + 1));
  qpow[0][0] = Poly{{0, 1}};
  for (int k = 1; k <= cap; ++k)
    for (int m = 1; m <= cap; ++m)
      for (int last = 1; last <= m; ++last) accumulate(qpow[k][m], mul(qpow[k - 1][m - last], at(q, last)));
  DimTable out;
  for (int n = 1; n <= cap; ++n) {
    Poly tot;
    for (int k = 1; k <= n; ++k) accumulate(tot, mul(at(p, k), qpow[k][n]));
    for (auto it = tot.begin(); it != tot.end();) it = it->second == 0 ? tot.erase(it) : std::next(it);
    out[n] = tot;
  }
  return out;
}

DistributiveReport distributive_law_check(const DimTable& pq, const DimTable& p, const DimTable& q, int cap) {
  DistributiveReport rep;
  DimTable comp = composite_dims(p, q, cap);
  for (int n = 1; n <= cap; ++n) {
    auto lhs = pq.count(n) ? pq.at(n) : Poly{};
    auto rhs = comp[n];
    std::set<int> degs;
    for (auto& [d, c] : lhs) degs.insert(d);
    for (auto& [d, c] : rhs) degs.insert(d);
    for (int d : degs) {
      DimRow r{n, d, lhs.count(d) ? lhs[d] : 0, rhs.count(d) ? rhs[d] : 0};
      if (r.lhs != r.rhs) rep.ok = false;
      rep.rows.push_back(r);
    }
  }
  return rep;
}

DimTable bruteforce_table(const Presentation& p, int cap, const std::function<int(int)>& max_degree,
                          const std::function<int(int)>& min_degree) {
  DimTable t;
  for (int n = 1; n <= cap; ++n) t[n] = component_dimension_bruteforce(p, n, max_degree(n), min_degree ? min_degree(n) : 0);
  return t;
}

DistributiveReport distributive_law_check(const Presentation& pq, const Presentation& p, const Presentation& q,
                                          int cap, const std::function<int(int)>& max_degree,
                                          const std::function<int(int)>& min_degree) {
  return distributive_law_check(bruteforce_table(pq, cap, max_degree, min_degree),
                                bruteforce_table(p, cap, max_degree, min_degree),
                                bruteforce_table(q, cap, max_degree, min_degree), cap);
}

// ---------------------------------------------------------------- text formats

std::string serialize(const Presentation& p) {
  std::ostringstream os;
  os << "name " << p.name << "\n";
  for (auto& g : p.alphabet) os << "gen " << g.name << " " << g.arity << " " << g.degree << "\n";
  for (auto& r : p.relations) os << "rel " << to_string(r, p.alphabet) << "\n";
  return os.str();
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto sp = line.find(' ');
    std::string tag = line.substr(0, sp), rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (tag == "name") {
      p.name = rest;
    } else if (tag == "gen") {
      std::istringstream ls(rest);
      Generator g;
      if (!(ls >> g.name >> g.arity >> g.degree) || g.arity < 1) throw std::invalid_argument("bad gen line: " + line);
      p.alphabet.push_back(g);
    } else if (tag == "rel") {
      p.relations.push_back(parse_element(rest, p.alphabet));
    } else {
      throw std::invalid_argument("unknown presentation line: " + line);
    }
  }
  return p;
}

std::string serialize(const GroebnerBasis& g) {
  std::ostringstream os;
  for (auto& r : g.rules()) os << to_string(r.relation(), g.alphabet()) << "\n";
  return os.str();
}

std::string hilbert_json(const DimTable& t) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto& [n, row] : t) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (auto& [d, c] : row) r[std::to_string(d)] = c;
    j[std::to_string(n)] = r;
  }
  return j.dump();
}

}  // namespace ncop
