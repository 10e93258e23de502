#include "ncop/multilinear.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace ncop {

std::map<int, int> GradedSpace::dims() const {
  std::map<int, int> r;
  for (int d : degrees) ++r[d];
  return r;
}

std::string GradedSpace::label(int b) const {
  if (b < static_cast<int>(labels.size())) return labels[b];
  return "e" + std::to_string(b);
}

GradedSpace GradedSpace::plain(const std::vector<int>& degrees) {
  GradedSpace s;
  s.degrees = degrees;
  return s;
}

void add_to(Vec& v, int b, const Q& c) {
  if (is_zero(c)) return;
  auto [it, fresh] = v.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  }
}

void axpy(Vec& y, const Q& a, const Vec& x) {
  if (is_zero(a)) return;
  for (auto& [b, c] : x) add_to(y, b, a * c);
}

std::string to_string(const Vec& v, const GradedSpace& s) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [b, c] : v) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Q a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << s.label(b);
  }
  return os.str();
}

Vec MultilinearOp::at(const Tuple& t) const {
  auto it = entries_.find(t);
  return it == entries_.end() ? Vec{} : it->second;
}

void MultilinearOp::add(const Tuple& t, int out, const Q& c) {
  if (ncop::is_zero(c)) return;
  Vec& v = entries_[t];
  add_to(v, out, c);
  if (v.empty()) entries_.erase(t);
}

void MultilinearOp::add(const Tuple& t, const Vec& x, const Q& c) {
  if (ncop::is_zero(c) || x.empty()) return;
  Vec& v = entries_[t];
  axpy(v, c, x);
  if (v.empty()) entries_.erase(t);
}

MultilinearOp& MultilinearOp::operator+=(const MultilinearOp& o) {
  for (auto& [t, v] : o.entries_) add(t, v, 1);
  return *this;
}

MultilinearOp& MultilinearOp::operator-=(const MultilinearOp& o) {
  for (auto& [t, v] : o.entries_) add(t, v, -1);
  return *this;
}

MultilinearOp MultilinearOp::operator*(const Q& c) const {
  MultilinearOp r(arity_, degree_);
  if (ncop::is_zero(c)) return r;
  for (auto& [t, v] : entries_) r.add(t, v, c);
  return r;
}

std::optional<Tuple> MultilinearOp::inhomogeneity(const GradedSpace& s) const {
  for (auto& [t, v] : entries_) {
    int d = tuple_degree(s, t) + degree_;
    for (auto& [b, c] : v)
      if (s.degrees[b] != d) return t;
  }
  return std::nullopt;
}

void MultilinearOp::restrict_to(const GradedSpace& s) {
  if (s.max_weight < 0) return;
  for (auto it = entries_.begin(); it != entries_.end();)
    it = tuple_weight(s, it->first) > s.max_weight ? entries_.erase(it) : std::next(it);
}

int tuple_degree(const GradedSpace& s, const Tuple& t, std::size_t from, std::size_t to) {
  int d = 0;
  for (std::size_t k = from; k < std::min(to, t.size()); ++k) d += s.degrees[t[k]];
  return d;
}

int tuple_weight(const GradedSpace& s, const Tuple& t) {
  int w = 0;
  for (int b : t) w += s.weight(b);
  return w;
}

namespace {

void enumerate(const GradedSpace& s, int n, Tuple& cur, int w, std::vector<Tuple>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int b = 0; b < s.dim(); ++b) {
    int nw = w + s.weight(b);
    // every remaining factor has weight >= 1 in tensor algebras, 0 otherwise
    int rest = s.weights.empty() ? 0 : n - static_cast<int>(cur.size()) - 1;
    if (s.max_weight >= 0 && nw + rest > s.max_weight) continue;
    cur.push_back(b);
    enumerate(s, n, cur, nw, out);
    cur.pop_back();
  }
}

bool odd(int x) { return (x & 1) != 0; }

}  // namespace

std::vector<Tuple> domain(const GradedSpace& s, int n) {
  std::vector<Tuple> out;
  Tuple cur;
  enumerate(s, n, cur, 0, out);
  return out;
}

MultilinearOp identity_op(const GradedSpace& s) {
  MultilinearOp r(1, 0);
  for (int b = 0; b < s.dim(); ++b) r.add({b}, b, 1);
  return r;
}

MultilinearOp compose(const GradedSpace& s, const MultilinearOp& f, int i, const MultilinearOp& g) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("compose: slot out of range");
  MultilinearOp r(f.arity() + g.arity() - 1, f.degree() + g.degree());
  std::unordered_map<int, std::vector<const std::pair<const Tuple, Vec>*>> by_slot;
  for (auto& e : f.entries()) by_slot[e.first[i - 1]].push_back(&e);
  for (auto& [tg, og] : g.entries())
    for (auto& [b, c] : og) {
      auto it = by_slot.find(b);
      if (it == by_slot.end()) continue;
      for (auto* e : it->second) {
        const Tuple& tf = e->first;
        Tuple t(tf.begin(), tf.begin() + (i - 1));
        t.insert(t.end(), tg.begin(), tg.end());
        t.insert(t.end(), tf.begin() + i, tf.end());
        if (s.max_weight >= 0 && tuple_weight(s, t) > s.max_weight) continue;
        bool neg = odd(g.degree()) && odd(tuple_degree(s, tf, 0, i - 1));
        r.add(t, e->second, neg ? Q(-c) : c);
      }
    }
  return r;
}

MultilinearOp after(const GradedSpace& s, const MultilinearOp& f, const MultilinearOp& g) {
  return compose(s, f, 1, g);
}

MultilinearOp commutator(const GradedSpace& s, const MultilinearOp& f, const MultilinearOp& g) {
  MultilinearOp fg = after(s, f, g), gf = after(s, g, f);
  return odd(f.degree()) && odd(g.degree()) ? fg + gf : fg - gf;
}

Vec image(const MultilinearOp& f, const Vec& x) {
  Vec r;
  for (auto& [b, c] : x) axpy(r, c, f.at({b}));
  return r;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  Vec r;
  for (auto& [i, ci] : a)
    for (auto& [j, cj] : b) axpy(r, ci * cj, m.at({i, j}));
  return r;
}

Vec Algebra::product(const Tuple& t, std::size_t from, std::size_t to) const {
  if (from >= to) throw std::invalid_argument("empty product in a non-unital algebra");
  Vec r{{t[from], Q(1)}};
  for (std::size_t k = from + 1; k < to && !r.empty(); ++k) r = mul(r, Vec{{t[k], Q(1)}});
  return r;
}

MultilinearOp Algebra::power(int n) const {
  if (n == 1) return identity_op(space);
  MultilinearOp r = m;
  for (int k = 3; k <= n; ++k) r = compose(space, m, 1, r);
  return r;
}

std::optional<Tuple> Algebra::associativity_witness() const {
  for (auto& t : domain(space, 3)) {
    Vec a{{t[0], Q(1)}}, b{{t[1], Q(1)}}, c{{t[2], Q(1)}};
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return t;
  }
  return std::nullopt;
}

Algebra algebra_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Algebra a;
  a.name = j.value("name", "A");
  a.space.degrees = j.at("degrees").get<std::vector<int>>();
  if (j.contains("labels")) a.space.labels = j["labels"].get<std::vector<std::string>>();
  a.m = MultilinearOp(2, 0);
  int d = a.space.dim();
  for (auto& row : j.at("product")) {
    int x = row.at(0), y = row.at(1), z = row.at(2);
    if (x < 0 || y < 0 || z < 0 || x >= d || y >= d || z >= d) throw std::invalid_argument("product index out of range");
    Q c = row.size() > 3 ? (row[3].is_string() ? parse_rational(row[3].get<std::string>()) : Q(row[3].get<long>())) : Q(1);
    a.m.add({x, y}, z, c);
  }
  if (auto t = a.m.inhomogeneity(a.space)) throw std::invalid_argument("product is not of degree 0");
  return a;
}

std::string algebra_to_json(const Algebra& a) {
  nlohmann::json j;
  j["name"] = a.name;
  j["degrees"] = a.space.degrees;
  if (!a.space.labels.empty()) j["labels"] = a.space.labels;
  auto rows = nlohmann::json::array();
  for (auto& [t, v] : a.m.entries())
    for (auto& [b, c] : v) rows.push_back({t[0], t[1], b, c.get_str()});
  j["product"] = rows;
  return j.dump();
}

Algebra matrix_algebra(int n) {
  Algebra a;
  a.name = "M" + std::to_string(n);
  a.space.degrees.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.space.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  a.m = MultilinearOp(2, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a.m.add({i * n + j, j * n + k}, i * n + k, 1);
  return a;
}

Algebra upper_triangular(int n) {
  Algebra a;
  a.name = "T" + std::to_string(n);
  std::map<std::pair<int, int>, int> id;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      id[{i, j}] = a.space.dim();
      a.space.degrees.push_back(0);
      a.space.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  a.m = MultilinearOp(2, 0);
  for (auto& [p, x] : id)
    for (auto& [q, y] : id)
      if (p.second == q.first) a.m.add({x, y}, id.at({p.first, q.second}), 1);
  return a;
}

Algebra zero_algebra(const GradedSpace& s) {
  Algebra a;
  a.name = "zero";
  a.space = s;
  a.m = MultilinearOp(2, 0);
  return a;
}

Algebra truncated_polynomial(int n, int deg) {
  Algebra a;
  a.name = "x^" + std::to_string(n + 1) + "=0";
  for (int k = 1; k <= n; ++k) {
    a.space.degrees.push_back(k * deg);
    a.space.labels.push_back("x" + std::to_string(k));
  }
  a.m = MultilinearOp(2, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) a.m.add({i - 1, j - 1}, i + j - 1, 1);
  return a;
}

TensorAlgebraTrunc::TensorAlgebraTrunc(std::vector<int> generator_degrees, int N, std::vector<std::string> names)
    : gen_deg_(std::move(generator_degrees)), N_(N) {
  if (N < 1 || gen_deg_.empty()) throw std::invalid_argument("tensor algebra needs N >= 1 and a generator");
  if (names.empty())
    for (int g = 0; g < rank(); ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= N; ++len) {
    std::vector<std::vector<int>> next;
    for (auto& w : layer)
      for (int g = 0; g < rank(); ++g) {
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    for (auto& w : next) {
      index_[w] = static_cast<int>(words_.size());
      words_.push_back(w);
      int d = 0;
      std::string lab;
      for (int g : w) d += gen_deg_[g], lab += names[g];
      space_.degrees.push_back(d);
      space_.labels.push_back(lab);
      space_.weights.push_back(len);
    }
    layer = std::move(next);
  }
  space_.max_weight = N;
  alg_.name = "T(V)/" + std::to_string(N);
  alg_.space = space_;
  alg_.m = MultilinearOp(2, 0);
  for (int x = 0; x < space_.dim(); ++x)
    for (int y = 0; y < space_.dim(); ++y) {
      if (length(x) + length(y) > N) continue;
      auto w = words_[x];
      w.insert(w.end(), words_[y].begin(), words_[y].end());
      alg_.m.add({x, y}, index_.at(w), 1);
    }
}

int TensorAlgebraTrunc::index(const std::vector<int>& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> TensorAlgebraTrunc::words_of_length(int k) const {
  std::vector<int> r;
  for (int b = 0; b < space_.dim(); ++b)
    if (length(b) == k) r.push_back(b);
  return r;
}

Q OpSampler::coefficient(int lo, int hi) {
  return Q(std::uniform_int_distribution<int>(lo, hi)(rng_));
}

MultilinearOp OpSampler::unary(const GradedSpace& s, int degree, double density) {
  MultilinearOp r(1, degree);
  std::bernoulli_distribution keep(density);
  for (int x = 0; x < s.dim(); ++x)
    for (int y = 0; y < s.dim(); ++y)
      if (s.degrees[y] == s.degrees[x] + degree && s.weight(y) <= s.weight(x) && keep(rng_)) r.add({x}, y, coefficient());
  return r;
}

namespace {

MultilinearOp eval_at(const GradedSpace& s, const Monomial& m, std::size_t& p, const OpFamily& ops) {
  const Node& n = m[p++];
  if (n.gen == Node::kLeaf) return identity_op(s);
  auto it = ops.find(n.arity);
  MultilinearOp cur = it == ops.end() ? MultilinearOp(n.arity, n.degree) : it->second;
  int slot = 1;
  for (int c = 0; c < n.arity; ++c) {
    if (m[p].gen == Node::kLeaf) {
      ++p;
      ++slot;
      continue;
    }
    MultilinearOp child = eval_at(s, m, p, ops);
    int a = child.arity();
    cur = compose(s, cur, slot, child);
    slot += a;
  }
  return cur;
}

}  // namespace

MultilinearOp evaluate(const GradedSpace& s, const Monomial& m, const OpFamily& ops) {
  std::size_t p = 0;
  return eval_at(s, m, p, ops);
}

MultilinearOp evaluate(const GradedSpace& s, const Element& e, const OpFamily& ops) {
  MultilinearOp r;
  bool first = true;
  for (auto& [m, c] : e.terms()) {
    MultilinearOp t = evaluate(s, m, ops) * c;
    if (first) r = MultilinearOp(t.arity(), t.degree()), first = false;
    r += t;
  }
  return r;
}

}  // namespace ncop
