#include "ncop/borjeson.hpp"

#include <sstream>
#include <stdexcept>

namespace ncop {

namespace {

bool odd(int x) { return (x & 1) != 0; }

void require_associative(const Algebra& a) {
  if (auto t = a.associativity_witness()) {
    std::ostringstream os;
    os << "product is not associative at (" << a.space.label((*t)[0]) << ", " << a.space.label((*t)[1]) << ", "
       << a.space.label((*t)[2]) << ")";
    throw std::invalid_argument(os.str());
  }
}

// prefix * x * suffix where either side may be empty.
Vec sandwich(const Algebra& a, const Tuple& t, std::size_t pre_end, const Vec& x, std::size_t suf_begin) {
  Vec r = x;
  if (pre_end > 0 && !r.empty()) r = a.mul(a.product(t, 0, pre_end), r);
  if (suf_begin < t.size() && !r.empty()) r = a.mul(r, a.product(t, suf_begin, t.size()));
  return r;
}

}  // namespace

MultilinearOp borjeson(const Algebra& a, const MultilinearOp& D, int n) {
  if (n < 1) throw std::invalid_argument("borjeson: n >= 1");
  require_associative(a);
  const GradedSpace& s = a.space;
  if (n == 1) return D;
  MultilinearOp Dm = compose(s, D, 1, a.m);
  if (n == 2) return Dm - compose(s, a.m, 1, D) - compose(s, a.m, 2, D);
  MultilinearOp b = compose(s, Dm, 2, a.m) - compose(s, a.m, 1, Dm) - compose(s, a.m, 2, Dm) +
                    compose(s, a.m, 2, compose(s, a.m, 1, D));
  for (int k = 4; k <= n; ++k) b = compose(s, b, 2, a.m);
  return b;
}

MultilinearOp borjeson_closed(const Algebra& a, const MultilinearOp& D, int n) {
  if (n < 1) throw std::invalid_argument("borjeson: n >= 1");
  require_associative(a);
  const GradedSpace& s = a.space;
  MultilinearOp r(n, D.degree());
  for (auto& t : domain(s, n)) {
    if (n == 1) {
      r.add(t, D.at(t), 1);
      continue;
    }
    Q sg = odd(D.degree()) && odd(s.degrees[t[0]]) ? Q(-1) : Q(1);
    Vec v = image(D, a.product(t, 0, n));
    axpy(v, -1, sandwich(a, t, 0, image(D, a.product(t, 0, n - 1)), n - 1));
    axpy(v, -sg, sandwich(a, t, 1, image(D, a.product(t, 1, n)), n));
    if (n >= 3) axpy(v, sg, sandwich(a, t, 1, image(D, a.product(t, 1, n - 1)), n - 1));
    r.add(t, v, 1);
  }
  return r;
}

std::string Witness::to_string(const GradedSpace& s) const {
  std::ostringstream os;
  os << "(" << index << "; ";
  for (std::size_t k = 0; k < tuple.size(); ++k) os << (k ? "," : "") << s.label(tuple[k]);
  os << ") -> " << ncop::to_string(value, s);
  return os.str();
}

std::optional<Witness> first_nonzero(const MultilinearOp& f, int index) {
  if (f.is_zero()) return std::nullopt;
  auto& [t, v] = *f.entries().begin();
  return Witness{index, t, v};
}

std::string OrderReport::to_string() const {
  return resolved ? std::to_string(order) : ">=" + std::to_string(cap);
}

OrderReport nc_order(const Algebra& a, const MultilinearOp& D, int cap) {
  int c = cap;
  if (a.space.max_weight >= 0 && !a.space.weights.empty()) c = std::min(c, a.space.max_weight);
  OrderReport rep;
  rep.cap = c;
  std::vector<bool> zero;
  for (int n = 1; n <= c; ++n) zero.push_back(borjeson(a, D, n).is_zero());
  for (int l = 0; l < c; ++l) {
    bool all = true;
    for (int k = l; k < c; ++k) all = all && zero[k];
    if (all) {
      rep.resolved = true;
      rep.order = l;
      return rep;
    }
  }
  rep.order = c;
  return rep;
}

MultilinearOp commutator_rhs(const Algebra& a, const MultilinearOp& D1, const MultilinearOp& D2, int n) {
  const GradedSpace& s = a.space;
  std::vector<MultilinearOp> b1{MultilinearOp()}, b2{MultilinearOp()};
  for (int k = 1; k <= n; ++k) b1.push_back(borjeson(a, D1, k)), b2.push_back(borjeson(a, D2, k));
  bool neg = odd(D1.degree()) && odd(D2.degree());
  MultilinearOp r(n, D1.degree() + D2.degree());
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= n - k; ++i) {
      int outer = n - k + 1;
      r += compose(s, b1[outer], i + 1, b2[k]);
      MultilinearOp back = compose(s, b2[outer], i + 1, b1[k]);
      if (neg) r += back;
      else r -= back;
    }
  return r;
}

std::vector<Check> commutator_check(const Algebra& a, const MultilinearOp& D1, const MultilinearOp& D2, int n_max) {
  std::vector<Check> out;
  MultilinearOp br = commutator(a.space, D1, D2);
  for (int n = 1; n <= n_max; ++n) {
    MultilinearOp diff = borjeson(a, br, n) - commutator_rhs(a, D1, D2, n);
    Check c{"commutator b_" + std::to_string(n), diff.is_zero(), ""};
    if (auto w = first_nonzero(diff, n)) c.detail = w->to_string(a.space);
    out.push_back(c);
  }
  return out;
}

MultilinearOp rho(const TensorAlgebraTrunc& t, const Symbol& f) {
  const GradedSpace& s = t.space();
  MultilinearOp r(1, f.map.degree());
  int k = f.length;
  for (int b = 0; b < s.dim(); ++b) {
    const auto& w = t.word(b);
    int L = static_cast<int>(w.size());
    int pre_deg = 0;
    for (int i = 0; i + k <= L; ++i) {
      if (i > 0) pre_deg += s.degrees[t.index({w[i - 1]})];
      std::vector<int> mid(w.begin() + i, w.begin() + i + k);
      Vec val = f.map.at({t.index(mid)});
      bool neg = odd(f.map.degree()) && odd(pre_deg);
      for (auto& [o, c] : val) {
        std::vector<int> nw(w.begin(), w.begin() + i);
        nw.insert(nw.end(), t.word(o).begin(), t.word(o).end());
        nw.insert(nw.end(), w.begin() + i + k, w.end());
        int idx = t.index(nw);
        if (idx >= 0) r.add({b}, idx, neg ? Q(-c) : c);
      }
    }
  }
  return r;
}

MultilinearOp rho(const TensorAlgebraTrunc& t, const std::vector<Symbol>& fs) {
  MultilinearOp r(1, fs.empty() ? 0 : fs.front().map.degree());
  for (auto& f : fs) r += rho(t, f);
  return r;
}

std::vector<Symbol> diffop_decompose(const TensorAlgebraTrunc& t, const MultilinearOp& D) {
  OrderReport ord = nc_order(t.algebra(), D, t.N());
  if (!ord.resolved)
    throw std::domain_error("order " + ord.to_string() + " is not resolved at truncation " + std::to_string(t.N()));
  std::vector<Symbol> out;
  MultilinearOp cur = D;
  for (int j = 1; j <= t.N() && !cur.is_zero(); ++j) {
    Symbol f{j, MultilinearOp(1, D.degree())};
    for (auto& [tu, v] : cur.entries())
      if (t.length(tu[0]) == j) f.map.add(tu, v, 1);
    if (f.map.is_zero()) continue;
    if (j > ord.order) throw std::logic_error("symbol of length " + std::to_string(j) + " above the order");
    cur -= rho(t, f);
    out.push_back(std::move(f));
  }
  if (!cur.is_zero()) throw std::logic_error("peeling left a nonzero remainder");
  return out;
}

Symbol random_symbol(const TensorAlgebraTrunc& t, int k, int degree, OpSampler& rng, double density) {
  const GradedSpace& s = t.space();
  Symbol f{k, MultilinearOp(1, degree)};
  std::bernoulli_distribution keep(density);
  for (int x : t.words_of_length(k))
    for (int y = 0; y < s.dim(); ++y)
      if (t.length(y) <= k && s.degrees[y] == s.degrees[x] + degree && keep(rng.rng())) f.map.add({x}, y, rng.coefficient());
  return f;
}

std::optional<Witness> expansion_witness(const Algebra& a, const MultilinearOp& D, int l, int n) {
  if (l < 1 || n < l + 1) throw std::invalid_argument("expansion needs 1 <= l < n");
  const GradedSpace& s = a.space;
  for (auto& t : domain(s, n)) {
    Vec v = image(D, a.product(t, 0, n));
    int pre = 0;
    for (int k = 1; k <= n - l + 1; ++k) {
      if (k > 1) pre += s.degrees[t[k - 2]];
      Q sg = odd(D.degree()) && odd(pre) ? Q(-1) : Q(1);
      axpy(v, -sg, sandwich(a, t, k - 1, image(D, a.product(t, k - 1, k + l - 1)), k + l - 1));
      if (k >= 2 && l >= 2) axpy(v, sg, sandwich(a, t, k - 1, image(D, a.product(t, k - 1, k + l - 2)), k + l - 2));
    }
    if (!v.empty()) return Witness{l, t, v};
  }
  return std::nullopt;
}

BarConstruction bar_construction(const Algebra& a, const std::vector<MultilinearOp>& ms, int N) {
  std::vector<int> gdeg;
  for (int d : a.space.degrees) gdeg.push_back(d - 1);
  std::vector<std::string> names;
  for (int b = 0; b < a.space.dim(); ++b) names.push_back("[" + a.space.label(b) + "]");
  BarConstruction bar{TensorAlgebraTrunc(gdeg, N, names), {}};
  const TensorAlgebraTrunc& t = bar.tensor;
  int top = static_cast<int>(ms.size()) - 1;
  for (int k = 1; k <= std::max(top, 2); ++k) {
    Symbol f{k, MultilinearOp(1, 2 * k - 3)};
    if (k >= 2 && k <= top && k <= N) {
      if (ms[k].arity() != k || ms[k].degree() != k - 2) throw std::invalid_argument("m_k must have arity k and degree k-2");
      for (auto& [tu, v] : ms[k].entries()) {
        // s^{⊗k} passing the suspensions over the desuspended inputs
        int eps = 0;
        for (int j = 0; j < k; ++j) eps += (k - 1 - j) * (a.space.degrees[tu[j]] - 1);
        int in = t.index(tu);
        for (auto& [o, c] : v) f.map.add({in}, t.index({o}), odd(eps) ? Q(-c) : c);
      }
    }
    bar.deltas.push_back(rho(t, f));
  }
  return bar;
}

BarConstruction bar_construction(const Algebra& a, int N) {
  require_associative(a);
  return bar_construction(a, {MultilinearOp(), MultilinearOp(1, -1), a.m}, N);
}

AInfinityFixture a_infinity_fixture() {
  AInfinityFixture f;
  Algebra& a = f.algebra;
  a.name = "Ainf";
  a.space.degrees = {0, 1, 0, 0};
  a.space.labels = {"x", "y", "u", "w"};
  a.m = MultilinearOp(2, 0);
  a.m.add({2, 2}, 3, 1);
  MultilinearOp m3(3, 1);
  m3.add({0, 0, 0}, 1, 1);
  f.ms = {MultilinearOp(), MultilinearOp(1, -1), a.m, m3};
  return f;
}

std::vector<Check> assoc_ncbv_check(const Algebra& a, const std::vector<MultilinearOp>& deltas, int cap) {
  require_associative(a);
  const GradedSpace& s = a.space;
  std::vector<Check> out;
  auto delta = [&](int l) { return l < static_cast<int>(deltas.size()) ? deltas[l] : MultilinearOp(1, 2 * l - 1); };
  for (int l = 0; l <= cap; ++l) {
    MultilinearOp d = delta(l);
    if (d.degree() != 2 * l - 1) {
      out.push_back({"degree Delta_" + std::to_string(l), false,
                     "expected " + std::to_string(2 * l - 1) + ", got " + std::to_string(d.degree())});
      continue;
    }
    MultilinearOp b = borjeson(a, d, l + 2);
    Check c{"order Delta_" + std::to_string(l) + " <= " + std::to_string(l + 1), b.is_zero(), ""};
    if (auto w = first_nonzero(b, l + 2)) c.detail = w->to_string(s);
    out.push_back(c);
    MultilinearOp sq(1, 2 * l - 2);
    for (int i = 0; i <= l; ++i) sq += after(s, delta(i), delta(l - i));
    Check q{"sum Delta_i Delta_j, i+j=" + std::to_string(l), sq.is_zero(), ""};
    if (auto w = first_nonzero(sq, l)) q.detail = w->to_string(s);
    out.push_back(q);
  }
  return out;
}

}  // namespace ncop
