#include "ncop/free_operad.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncop {

int find_generator(const Alphabet& a, const std::string& name) {
  for (std::size_t g = 0; g < a.size(); ++g)
    if (a[g].name == name) return static_cast<int>(g);
  return -1;
}

Monomial leaf_monomial() { return {Node{}}; }

Monomial generator_monomial(const Alphabet& a, int g) {
  const Generator& gen = a.at(g);
  Monomial m{Node{g, gen.arity, gen.degree}};
  m.insert(m.end(), gen.arity, Node{});
  return m;
}

Monomial hole_monomial(int arity, int degree) {
  Monomial m{Node{Node::kHole, arity, degree}};
  m.insert(m.end(), arity, Node{});
  return m;
}

int leaves(const Monomial& m) {
  return static_cast<int>(std::count_if(m.begin(), m.end(), [](const Node& n) { return n.gen == Node::kLeaf; }));
}

int degree(const Monomial& m) {
  int d = 0;
  for (auto& n : m) d += n.degree;
  return d;
}

int vertices(const Monomial& m) { return static_cast<int>(m.size()) - leaves(m); }

std::size_t subtree_end(const Monomial& m, std::size_t p) {
  int need = 1;
  while (need > 0) {
    need += m.at(p).arity - 1;
    ++p;
  }
  return p;
}

PlanarTree shape(const Monomial& m) {
  std::vector<int> code;
  for (auto& n : m) code.push_back(n.arity);
  return PlanarTree(std::move(code));
}

static std::size_t leaf_position(const Monomial& a, int i) {
  int seen = 0;
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a[p].gen == Node::kLeaf && ++seen == i) return p;
  throw std::out_of_range("composition slot out of range");
}

std::pair<int, Monomial> compose(const Monomial& a, int i, const Monomial& b) {
  std::size_t p = leaf_position(a, i);
  int after = 0;
  for (std::size_t q = p + 1; q < a.size(); ++q) after += a[q].degree;
  int sign = ((degree(b) * after) & 1) ? -1 : 1;
  Monomial r(a.begin(), a.begin() + static_cast<long>(p));
  r.insert(r.end(), b.begin(), b.end());
  r.insert(r.end(), a.begin() + static_cast<long>(p) + 1, a.end());
  return {sign, std::move(r)};
}

bool match_at(const Monomial& pat, const Monomial& m, std::size_t start, Occurrence& occ) {
  std::size_t q = start;
  for (std::size_t p = 0; p < pat.size(); ++p) {
    if (q >= m.size()) return false;
    if (pat[p].gen == Node::kLeaf) {
      std::size_t e = subtree_end(m, q);
      occ.inputs.emplace_back(q, e);
      q = e;
    } else {
      if (pat[p] != m[q]) return false;
      occ.positions.push_back(q);
      ++q;
    }
  }
  occ.root = start;
  return true;
}

namespace {

// Sum of pattern vertex degrees after each pattern leaf (preorder).
std::vector<int> degrees_after_leaves(const Monomial& pat) {
  std::vector<int> out;
  int total = degree(pat), seen = 0;
  for (auto& n : pat) {
    seen += n.degree;
    if (n.gen == Node::kLeaf) out.push_back(total - seen);
  }
  return out;
}

}  // namespace

std::vector<Occurrence> occurrences(const Monomial& pattern, const Monomial& m) {
  std::vector<Occurrence> out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] != pattern[0]) continue;
    Occurrence occ;
    if (match_at(pattern, m, s, occ)) out.push_back(std::move(occ));
  }
  return out;
}

bool divides(const Monomial& pattern, const Monomial& m) {
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] != pattern[0]) continue;
    Occurrence occ;
    if (match_at(pattern, m, s, occ)) return true;
  }
  return false;
}

// The sign of ctx{x} is that of composing the hole inputs into x from the
// right; only the part depending on x is kept, constant factors cancel in
// every use (ideal spans and rewriting m -> sign*ctx{tail}).
static int context_sign(const std::vector<int>& input_degrees, const Monomial& x) {
  auto after = degrees_after_leaves(x);
  int e = 0;
  for (std::size_t j = 0; j < after.size(); ++j) e += input_degrees[j] * after[j];
  return (e & 1) ? -1 : 1;
}

Factorization factor(const Monomial& pattern, const Monomial& m, const Occurrence& occ) {
  Factorization f;
  int k = leaves(pattern);
  f.context.assign(m.begin(), m.begin() + static_cast<long>(occ.root));
  f.context.push_back(Node{Node::kHole, k, degree(pattern)});
  std::vector<int> input_degrees;
  for (auto& [s, e] : occ.inputs) {
    Monomial sub(m.begin() + static_cast<long>(s), m.begin() + static_cast<long>(e));
    input_degrees.push_back(degree(sub));
    f.context.insert(f.context.end(), sub.begin(), sub.end());
  }
  std::size_t end = subtree_end(m, occ.root);
  f.context.insert(f.context.end(), m.begin() + static_cast<long>(end), m.end());
  f.sign = context_sign(input_degrees, pattern);
  return f;
}

std::pair<int, Monomial> substitute(const Monomial& context, const Monomial& x) {
  std::size_t h = 0;
  while (h < context.size() && context[h].gen != Node::kHole) ++h;
  if (h == context.size()) throw std::invalid_argument("context without hole");
  if (context[h].arity != leaves(x)) throw std::invalid_argument("hole arity mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> inputs;
  std::size_t q = h + 1;
  std::vector<int> input_degrees;
  for (int j = 0; j < context[h].arity; ++j) {
    std::size_t e = subtree_end(context, q);
    inputs.emplace_back(q, e);
    int d = 0;
    for (std::size_t t = q; t < e; ++t) d += context[t].degree;
    input_degrees.push_back(d);
    q = e;
  }
  Monomial r(context.begin(), context.begin() + static_cast<long>(h));
  int leaf = 0;
  for (auto& n : x) {
    if (n.gen == Node::kLeaf) {
      auto [s, e] = inputs[leaf++];
      r.insert(r.end(), context.begin() + static_cast<long>(s), context.begin() + static_cast<long>(e));
    } else {
      r.push_back(n);
    }
  }
  r.insert(r.end(), context.begin() + static_cast<long>(q), context.end());
  return {context_sign(input_degrees, x), std::move(r)};
}

std::vector<std::vector<int>> path_sequence(const Monomial& m) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  std::vector<int> remaining;  // children left to visit per vertex on the current path
  for (auto& n : m) {
    if (n.gen == Node::kLeaf) {
      out.push_back(word);
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        word.pop_back();
      }
    } else {
      word.push_back(n.gen);
      remaining.push_back(n.arity);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Element

void Element::add(const Monomial& m, const Q& c) {
  if (ncop::is_zero(c)) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (ncop::is_zero(it->second)) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Element Element::operator*(const Q& c) const {
  Element r;
  if (ncop::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Q Element::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

int Element::arity() const { return terms_.empty() ? -1 : leaves(terms_.begin()->first); }

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = ncop::degree(terms_.begin()->first);
  for (auto& [m, c] : terms_)
    if (ncop::degree(m) != d) return false;
  return true;
}

int Element::degree() const {
  if (terms_.empty()) return 0;
  if (!is_homogeneous()) throw std::logic_error("element is not degree-homogeneous");
  return ncop::degree(terms_.begin()->first);
}

Element compose(const Element& a, int i, const Element& b) {
  Element r;
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      auto [s, m] = compose(ma, i, mb);
      r.add(m, s * ca * cb);
    }
  return r;
}

Element substitute(const Monomial& context, const Element& x) {
  Element r;
  for (auto& [m, c] : x.terms()) {
    auto [s, y] = substitute(context, m);
    r.add(y, s * c);
  }
  return r;
}

namespace {

struct Split {
  Monomial root;                  // generator corolla
  std::vector<Monomial> children;  // subtrees at its inputs
};

Split split_root(const Monomial& m) {
  Split s;
  s.root.push_back(m[0]);
  s.root.insert(s.root.end(), m[0].arity, Node{});
  std::size_t q = 1;
  for (int j = 0; j < m[0].arity; ++j) {
    std::size_t e = subtree_end(m, q);
    s.children.emplace_back(m.begin() + static_cast<long>(q), m.begin() + static_cast<long>(e));
    q = e;
  }
  return s;
}

}  // namespace

Element apply_morphism(const Monomial& m, const std::vector<Element>& images) {
  if (m[0].gen == Node::kLeaf) return Element(m);
  Split s = split_root(m);
  Monomial acc = s.root;
  int sign = 1;
  Element img = images.at(m[0].gen);
  for (int i = static_cast<int>(s.children.size()); i >= 1; --i) {
    const Monomial& c = s.children[i - 1];
    if (c.size() == 1) continue;
    auto [sg, next] = compose(acc, i, c);
    sign *= sg;
    acc = std::move(next);
    img = compose(img, i, apply_morphism(c, images));
  }
  // acc == m and the chain of compositions equals sign * m
  return img * Q(sign);
}

Element apply_morphism(const Element& e, const std::vector<Element>& images) {
  Element r;
  for (auto& [m, c] : e.terms()) r += apply_morphism(m, images) * c;
  return r;
}

// ---------------------------------------------------------------- orders

std::vector<long> MonomialOrder::key(const Monomial& m) const {
  std::vector<long> k;
  if (kind == OrderKind::WeightFirstPathLex) {
    long w = 0;
    for (auto& n : m)
      if (n.gen >= 0) w += n.gen < static_cast<int>(weights.size()) ? weights[n.gen] : 1;
    k.push_back(w);
  } else if (kind == OrderKind::DegreePathLex) {
    k.push_back(vertices(m));
  }
  auto rank = [&](int g) -> long {
    for (std::size_t r = 0; r < precedence.size(); ++r)
      if (precedence[r] == g) return static_cast<long>(precedence.size() - r) + 1;
    return g == Node::kHole ? 0 : 1;
  };
  for (auto& w : path_sequence(m)) {
    k.push_back(static_cast<long>(w.size()));
    for (int g : w) k.push_back(rank(g));
  }
  return k;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (leaves(a) != leaves(b)) throw std::invalid_argument("compare: arity mismatch");
  if (a == b) return 0;
  auto ka = key(a), kb = key(b);
  int c = ka < kb ? -1 : (kb < ka ? 1 : 0);
  if (c == 0) c = a < b ? -1 : 1;  // only reachable for unlisted generators sharing a rank
  return reversed ? -c : c;
}

Cmp compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  int c = o.compare(a, b);
  return c < 0 ? Cmp::LT : (c > 0 ? Cmp::GT : Cmp::EQ);
}

// ---------------------------------------------------------------- suspension

Alphabet suspend_alphabet(const Alphabet& a, int power) {
  Alphabet r = a;
  for (auto& g : r) g.degree -= power * (g.arity - 1);
  return r;
}

Monomial suspend_monomial_shape(const Monomial& m, int power) {
  Monomial r = m;
  for (auto& n : r)
    if (n.gen != Node::kLeaf) n.degree -= power * (n.arity - 1);
  return r;
}

// S(M) = sign * M^s. Built from the decomposition M = (...(g o_a C_a)...) o_1 C_1
// and S(x o_i y) = (-1)^{|x|(b-1)+(b-1)(i-1)} Sx o_i Sy, b = arity(y).
static int suspension_sign(const Monomial& m) {
  if (m[0].gen == Node::kLeaf) return 1;
  Split s = split_root(m);
  Monomial acc = s.root;
  Monomial acc_s = suspend_monomial_shape(acc, 1);
  int sign = 1;
  for (int i = static_cast<int>(s.children.size()); i >= 1; --i) {
    const Monomial& c = s.children[i - 1];
    if (c.size() == 1) continue;
    int b = leaves(c);
    int eps = ((degree(acc) * (b - 1) + (b - 1) * (i - 1)) & 1) ? -1 : 1;
    auto [s1, next] = compose(acc, i, c);
    auto [s2, next_s] = compose(acc_s, i, suspend_monomial_shape(c, 1));
    sign *= eps * s1 * s2 * suspension_sign(c);
    acc = std::move(next);
    acc_s = std::move(next_s);
  }
  return sign;
}

Element operadic_suspension(const Element& e, int power) {
  if (power != 1 && power != -1) throw std::invalid_argument("suspension power must be +1 or -1");
  Element r;
  for (auto& [m, c] : e.terms()) {
    if (power == 1) {
      r.add(suspend_monomial_shape(m, 1), c * suspension_sign(m));
    } else {
      Monomial d = suspend_monomial_shape(m, -1);
      r.add(d, c * suspension_sign(d));
    }
  }
  return r;
}

// ---------------------------------------------------------------- text

std::string to_string(const Monomial& m, const Alphabet& a) {
  std::string s;
  std::size_t p = 0;
  auto rec = [&](auto& self) -> void {
    const Node& n = m[p++];
    if (n.gen == Node::kLeaf) {
      s += '_';
      return;
    }
    s += n.gen == Node::kHole ? std::string("?") : a.at(n.gen).name;
    s += '(';
    for (int j = 0; j < n.arity; ++j) {
      if (j) s += ',';
      self(self);
    }
    s += ')';
  };
  rec(rec);
  return s;
}

std::string to_string(const Element& e, const Alphabet& a) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : e.terms()) {
    if (first) {
      s += c.get_str();
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
      s += Q(abs(c)).get_str();
    }
    s += " * " + to_string(m, a);
    first = false;
  }
  return s;
}

namespace {

struct Parser {
  const std::string& t;
  const Alphabet& a;
  std::size_t p = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("element text: " + why + " at offset " + std::to_string(p));
  }
  void ws() {
    while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < t.size() && t[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  void monomial(Monomial& out) {
    ws();
    if (eat('_')) {
      out.push_back(Node{});
      return;
    }
    std::size_t s = p;
    while (p < t.size() && (std::isalnum(static_cast<unsigned char>(t[p])) || t[p] == '_')) ++p;
    if (s == p) fail("expected generator name");
    std::string name = t.substr(s, p - s);
    int g = find_generator(a, name);
    if (g < 0) fail("unknown generator " + name);
    out.push_back(Node{g, a[g].arity, a[g].degree});
    if (!eat('(')) fail("expected (");
    for (int j = 0; j < a[g].arity; ++j) {
      if (j && !eat(',')) fail("expected ,");
      monomial(out);
    }
    if (!eat(')')) fail("expected ) after " + std::to_string(a[g].arity) + " inputs of " + name);
  }
  Q coefficient() {
    ws();
    std::size_t s = p;
    while (p < t.size() && (std::isdigit(static_cast<unsigned char>(t[p])) || t[p] == '/')) ++p;
    if (s == p) fail("expected coefficient");
    return parse_rational(t.substr(s, p - s));
  }
};

}  // namespace

Monomial parse_monomial(const std::string& text, const Alphabet& a) {
  Parser ps{text, a};
  Monomial m;
  ps.monomial(m);
  ps.ws();
  if (ps.p != text.size()) ps.fail("trailing characters");
  return m;
}

Element parse_element(const std::string& text, const Alphabet& a) {
  Parser ps{text, a};
  Element e;
  ps.ws();
  if (ps.p < text.size() && text[ps.p] == '0') {
    std::size_t save = ps.p++;
    ps.ws();
    if (ps.p == text.size()) return e;
    ps.p = save;
  }
  bool first = true;
  while (true) {
    ps.ws();
    if (ps.p == text.size()) {
      if (first) ps.fail("empty element");
      break;
    }
    int sign = 1;
    if (ps.eat('-')) sign = -1;
    else if (!ps.eat('+') && !first) ps.fail("expected + or -");
    Q c = ps.coefficient() * sign;
    if (!ps.eat('*')) ps.fail("expected *");
    Monomial m;
    ps.monomial(m);
    e.add(m, c);
    first = false;
  }
  return e;
}

}  // namespace ncop
