#include "ncop/zoo.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ncop {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

long narayana(int n, int k) {
  if (n < 2) return 0;
  return binomial(n - 1, k) * binomial(n - 1, k + 1) / (n - 1);
}

namespace {

Monomial gm(const Alphabet& a, const std::string& name) {
  int g = find_generator(a, name);
  if (g < 0) throw std::logic_error("missing generator " + name);
  return generator_monomial(a, g);
}

// x o_i y for generator names, as a one-term element
Element q2(const Alphabet& a, const std::string& x, int i, const std::string& y, Q c = 1) {
  auto [s, m] = compose(gm(a, x), i, gm(a, y));
  return Element(m, c * s);
}

Element el(const Alphabet& a, const std::string& x) { return Element(gm(a, x)); }

Presentation make_as() {
  Presentation p{"As", {{"m", 2, 0}}, {}};
  p.relations.push_back(q2(p.alphabet, "m", 1, "m") - q2(p.alphabet, "m", 2, "m"));
  return p;
}

Presentation make_gerst() {
  Presentation p = as_m({{"m", 0}, {"b", 1}});
  p.name = "ncGerst";
  return p;
}

void add_delta_relations(Presentation& p, bool linear) {
  const Alphabet& a = p.alphabet;
  p.relations.push_back(q2(a, "Delta", 1, "Delta"));
  Element act = q2(a, "Delta", 1, "m") - q2(a, "m", 1, "Delta") - q2(a, "m", 2, "Delta");
  if (linear) act -= el(a, "b");
  p.relations.push_back(act);
  p.relations.push_back(q2(a, "Delta", 1, "b") + q2(a, "b", 1, "Delta") + q2(a, "b", 2, "Delta"));
}

Presentation make_bv3(bool linear) {
  Presentation p = make_gerst();
  p.name = linear ? "ncBV3" : "qncBV";
  p.alphabet.push_back({"Delta", 1, 1});
  // rebuild so that monomials carry the extended alphabet ids (m=0, b=1 unchanged)
  add_delta_relations(p, linear);
  return p;
}

Presentation make_bv2() {
  Presentation p{"ncBV2", {{"m", 2, 0}, {"Delta", 1, 1}}, {}};
  const Alphabet& a = p.alphabet;
  Element m(gm(a, "m")), D(gm(a, "Delta"));
  p.relations.push_back(compose(D, 1, D));
  p.relations.push_back(compose(m, 1, m) - compose(m, 2, m));
  Element Dm = compose(D, 1, m);
  Element four = compose(D, 1, compose(m, 2, m)) - compose(m, 1, Dm) - compose(m, 2, Dm) + compose(m, 2, compose(m, 1, D));
  p.relations.push_back(four);
  return p;
}

std::string idx_name(const std::string& base, int k) { return base + std::to_string(k); }

Presentation make_grav(int cap) {
  Presentation p{"ncGrav", {}, {}};
  for (int k = 2; k <= cap; ++k) p.alphabet.push_back({idx_name("lambda", k), k, 1});
  const Alphabet& a = p.alphabet;
  auto L = [&](int k) { return idx_name("lambda", k); };
  for (int n = 3; n <= cap; ++n) {
    for (int k = 3; k < n; ++k)
      for (int r = 1; r <= n - k + 1; ++r) {
        Element e;
        for (int j = r; j <= r + k - 2; ++j) e += q2(a, L(n - 1), j, L(2));
        e -= q2(a, L(n - k + 1), r, L(k));
        p.relations.push_back(e);
      }
    Element e;
    for (int j = 1; j <= n - 1; ++j) e += q2(a, L(n - 1), j, L(2));
    p.relations.push_back(e);
  }
  return p;
}

Presentation make_hypercom(int cap) {
  Presentation p{"ncHyperCom", {}, {}};
  for (int k = 2; k <= cap; ++k) p.alphabet.push_back({idx_name("nu", k), k, 2 * k - 4});
  const Alphabet& a = p.alphabet;
  auto N = [&](int k) { return idx_name("nu", k); };
  for (int n = 3; n <= cap; ++n)
    for (int i = 2; i <= n - 1; ++i) {
      Element e;
      for (int j = 2; j <= i; ++j) e += q2(a, N(n - j + 1), i - j + 1, N(j));
      for (int k = 2; k <= n - i + 1; ++k) e -= q2(a, N(n - k + 1), i, N(k));
      p.relations.push_back(e);
    }
  return p;
}

Presentation make_tas(int k) {
  Presentation p{idx_name("tAs", k), {{"alpha", k, 0}}, {}};
  for (int i = 1; i < k; ++i) p.relations.push_back(q2(p.alphabet, "alpha", i, "alpha") - q2(p.alphabet, "alpha", k, "alpha"));
  return p;
}

Presentation make_pas(int k) {
  Presentation p{idx_name("pAs", k), {{"alpha", k, k - 2}}, {}};
  Element e;
  for (int i = 1; i <= k; ++i) e += q2(p.alphabet, "alpha", i, "alpha", ((k - 1) * (i - 1)) % 2 ? -1 : 1);
  p.relations.push_back(e);
  return p;
}

Presentation make_2gerst() {
  Presentation p{"2ncGerst", {{"m", 2, 0}, {"c", 3, 1}}, {}};
  const Alphabet& a = p.alphabet;
  p.relations.push_back(q2(a, "m", 1, "m") - q2(a, "m", 2, "m"));
  p.relations.push_back(q2(a, "c", 1, "m") - q2(a, "m", 2, "c"));
  p.relations.push_back(q2(a, "c", 2, "m"));
  p.relations.push_back(q2(a, "c", 3, "m") - q2(a, "m", 1, "c"));
  p.relations.push_back(q2(a, "c", 1, "c") + q2(a, "c", 2, "c") + q2(a, "c", 3, "c"));
  return p;
}

Presentation make_d() {
  Presentation p{"D", {{"Delta", 1, 1}}, {}};
  p.relations.push_back(q2(p.alphabet, "Delta", 1, "Delta"));
  return p;
}

using Dims = std::optional<std::map<int, long>>;

}  // namespace

Presentation as_m(const std::vector<std::pair<std::string, int>>& basis) {
  Presentation p{"As_M", {}, {}};
  for (auto& [n, d] : basis) p.alphabet.push_back({n, 2, d});
  for (auto& [x, dx] : basis)
    for (auto& [y, dy] : basis)
      p.relations.push_back(q2(p.alphabet, x, 1, y) - q2(p.alphabet, y, 2, x, ((dx * dy) & 1) ? -1 : 1));
  return p;
}

std::vector<std::string> zoo_names() {
  return {"As", "As_M", "ncGerst", "ncBV3", "ncBV2", "qncBV", "ncGrav", "ncHyperCom", "tAs3", "pAs3", "2ncGerst", "D"};
}

NamedOperad named_operad(const std::string& name, int cap) {
  NamedOperad o;
  o.name = name;
  o.min_degree = [](int) { return 0; };
  auto zero_above = [](int) { return 0; };
  if (name == "As") {
    o.presentation = make_as();
    o.preferred_order = {OrderKind::PathLex, {0}, {}, false};
    o.expected_dims = [](int) -> Dims { return std::map<int, long>{{0, 1}}; };
    o.max_degree = zero_above;
  } else if (name == "As_M" || name == "ncGerst") {
    o.presentation = name == "ncGerst" ? make_gerst() : as_m({{"m", 0}, {"b", 1}});
    o.preferred_order = {OrderKind::PathLex, {1, 0}, {}, false};
    o.expected_dims = [](int n) -> Dims {
      std::map<int, long> d;
      for (int k = 0; k <= n - 1; ++k) d[k] = binomial(n - 1, k);
      return d;
    };
    o.max_degree = [](int n) { return n - 1; };
  } else if (name == "qncBV" || name == "ncBV3") {
    o.presentation = make_bv3(name == "ncBV3");
    o.preferred_order = {OrderKind::PathLex, {2, 1, 0}, {}, false};
    o.expected_dims = [](int n) -> Dims {
      std::map<int, long> d;
      for (int k = 0; k <= 2 * n - 1; ++k) d[k] = binomial(2 * n - 1, k);
      return d;
    };
    o.max_degree = [](int n) { return 2 * n - 1; };
  } else if (name == "ncBV2") {
    o.presentation = make_bv2();
    o.preferred_order = {OrderKind::PathLex, {1, 0}, {}, false};
    o.expected_dims = [](int n) -> Dims {
      std::map<int, long> d;
      for (int k = 0; k <= 2 * n - 1; ++k) d[k] = binomial(2 * n - 1, k);
      return d;
    };
    o.max_degree = [](int n) { return 2 * n - 1; };
  } else if (name == "ncGrav") {
    o.presentation = make_grav(cap);
    std::vector<int> prec, w;
    for (int k = 2; k <= cap; ++k) {
      prec.push_back(k - 2);
      w.push_back(k == 2 ? 0 : 1);
    }
    o.preferred_order = {OrderKind::WeightFirstPathLex, prec, w, false};
    o.expected_dims = [](int) -> Dims { return std::nullopt; };
    o.expected_total = [](int n) -> std::optional<long> { return n >= 2 ? (1L << (n - 2)) : 1L; };
    o.max_degree = [](int n) { return n - 1; };
  } else if (name == "ncHyperCom") {
    o.presentation = make_hypercom(cap);
    std::vector<int> prec, w;
    for (int k = 2; k <= cap; ++k) {
      prec.push_back(k - 2);
      w.push_back(k == 2 ? 0 : 1);
    }
    o.preferred_order = {OrderKind::WeightFirstPathLex, prec, w, true};
    o.expected_dims = [](int n) -> Dims {
      std::map<int, long> d;
      for (int k = 0; k <= n - 2; ++k) d[2 * k] = narayana(n, k);
      return d;
    };
    o.expected_total = [](int n) -> std::optional<long> { return catalan(n - 1); };
    o.max_degree = [](int n) { return 2 * (n - 2); };
  } else if (name.rfind("tAs", 0) == 0 || name.rfind("pAs", 0) == 0) {
    int k = std::stoi(name.substr(3));
    if (k < 2) throw std::invalid_argument("tAs/pAs need k >= 2");
    bool t = name[0] == 't';
    o.presentation = t ? make_tas(k) : make_pas(k);
    o.preferred_order = {OrderKind::PathLex, {0}, {}, false};
    if (t)
      o.expected_dims = [k](int n) -> Dims {
        if ((n - 1) % (k - 1)) return std::map<int, long>{};
        return std::map<int, long>{{0, 1}};
      };
    else
      o.expected_dims = [](int) -> Dims { return std::nullopt; };
    o.max_degree = [k, t](int n) { return t ? 0 : (n - 1) / (k - 1) * (k - 2); };
  } else if (name == "2ncGerst") {
    o.presentation = make_2gerst();
    o.preferred_order = {OrderKind::PathLex, {1, 0}, {}, false};
    o.expected_dims = [](int n) -> Dims {
      std::map<int, long> d{{0, 1}};
      for (int i = 1; 2 * i <= n - 1; ++i) d[i] = binomial(n - 1, i) - binomial(n - 1, i - 1);
      return d;
    };
    o.max_degree = [](int n) { return (n - 1) / 2; };
  } else if (name == "D") {
    o.presentation = make_d();
    o.preferred_order = {OrderKind::PathLex, {0}, {}, false};
    o.expected_dims = [](int n) -> Dims {
      if (n == 1) return std::map<int, long>{{0, 1}, {1, 1}};
      return std::map<int, long>{};
    };
    o.max_degree = [](int n) { return n == 1 ? 3 : 0; };
  } else {
    throw std::invalid_argument("unknown operad: " + name);
  }
  o.presentation.name = name;
  return o;
}

Presentation presentation_of(const std::string& name, int cap) { return named_operad(name, cap).presentation; }

Element right_comb(int k, int m_id, const Alphabet& a) {
  Element r(leaf_monomial());
  Element m(generator_monomial(a, m_id));
  for (int j = 0; j < k; ++j) r = compose(m, 2, r);
  return r;
}

Element expand_lambda(int k) {
  if (k < 2) throw std::invalid_argument("expand_lambda needs k >= 2");
  Alphabet a = make_gerst().alphabet;
  Element comb = right_comb(k - 2, kGerstM, a);
  Element b(generator_monomial(a, kGerstB));
  Element r;
  for (int i = 1; i <= k - 1; ++i) r += compose(comb, i, b);
  return r;
}

std::vector<Element> lambda_images(int cap) {
  std::vector<Element> out;
  for (int k = 2; k <= cap; ++k) out.push_back(expand_lambda(k));
  return out;
}

// ---------------------------------------------------------------- D1 / H1

namespace {

// Derivation replacing generator `from` by `to` at one vertex at a time,
// with the Koszul sign of the vertices met before it in preorder.
Element swap_derivation(const Monomial& m, int from, int to, const Alphabet& a) {
  Element r;
  int before = 0;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (m[p].gen == from) {
      Monomial x = m;
      x[p] = Node{to, a[to].arity, a[to].degree};
      r.add(x, (before & 1) ? -1 : 1);
    }
    before += m[p].degree;
  }
  return r;
}

}  // namespace

bool D1H1Report::ok() const {
  return anticommutator_ok && square_zero && rank_d1 == dim_ker_d1 && dim_ker_d1 == (1 << (n - 2)) &&
         lambda_span == dim_ker_d1 && lambda_in_kernel;
}

D1H1Report d1_h1_check(int n) {
  if (n < 2 || n > 9) throw std::domain_error("d1_h1_check: arity out of range");
  NamedOperad G = named_operad("ncGerst");
  const Alphabet& a = G.presentation.alphabet;
  GroebnerBasis gb = complete(G.presentation, G.preferred_order, n);
  auto basis = normal_monomials(gb, n);
  std::map<Monomial, int> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k]] = static_cast<int>(k);
  int N = static_cast<int>(basis.size());
  auto vec = [&](const Element& e) {
    std::vector<Q> v(N);
    Element red = gb.reduce(e);
    for (auto& [m, c] : red.terms()) v[idx.at(m)] = c;
    return v;
  };
  DenseMat D(N, std::vector<Q>(N)), H(N, std::vector<Q>(N));
  for (int c = 0; c < N; ++c) {
    auto dv = vec(swap_derivation(basis[c], kGerstM, kGerstB, a));
    auto hv = vec(swap_derivation(basis[c], kGerstB, kGerstM, a));
    for (int r = 0; r < N; ++r) {
      D[r][c] = dv[r];
      H[r][c] = hv[r];
    }
  }
  auto mul = [&](const DenseMat& x, const DenseMat& y) {
    DenseMat z(N, std::vector<Q>(N));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        if (is_zero(x[i][k])) continue;
        for (int j = 0; j < N; ++j) z[i][j] += x[i][k] * y[k][j];
      }
    return z;
  };
  D1H1Report rep;
  rep.n = n;
  rep.basis_size = N;
  auto DH = mul(D, H), HD = mul(H, D), DD = mul(D, D);
  rep.anticommutator_ok = true;
  rep.square_zero = true;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (DH[i][j] + HD[i][j] != (i == j ? Q(n - 1) : Q(0))) rep.anticommutator_ok = false;
      if (!is_zero(DD[i][j])) rep.square_zero = false;
    }
  rep.rank_d1 = rank(D);
  rep.dim_ker_d1 = N - rep.rank_d1;

  NamedOperad grav = named_operad("ncGrav", n);
  GroebnerBasis ggb = complete(grav.presentation, grav.preferred_order, n);
  auto images = lambda_images(n);
  DenseMat span;
  rep.lambda_in_kernel = true;
  for (auto& m : normal_monomials(ggb, n)) {
    auto v = vec(apply_morphism(m, images));
    for (int i = 0; i < N; ++i) {
      Q s = 0;
      for (int k = 0; k < N; ++k) s += D[i][k] * v[k];
      if (!is_zero(s)) rep.lambda_in_kernel = false;
    }
    span.push_back(std::move(v));
  }
  rep.lambda_span = rank(span);
  return rep;
}

// ---------------------------------------------------------------- certificates

std::string Certificate::json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["range"] = {n_min, n_max};
  j["status"] = ok ? "PASS" : "FAIL";
  nlohmann::ordered_json t = nlohmann::ordered_json::array();
  for (auto& r : rows)
    t.push_back({{"arity", r.arity},
                 {"degree", r.total ? nlohmann::ordered_json("total") : nlohmann::ordered_json(r.degree)},
                 {"groebner", r.groebner},
                 {"brute", r.brute},
                 {"closed", r.closed}});
  j["tables"] = t;
  if (!ok) j["first_failure"] = first_failure;
  return j.dump();
}

Certificate certify_dimensions(const std::string& name, int n_max, int n_min) {
  NamedOperad o = named_operad(name, n_max);
  Certificate c;
  c.name = name;
  c.n_min = n_min;
  c.n_max = n_max;
  const Presentation* gbp = &o.presentation;
  NamedOperad homog;
  if (name == "ncBV3" || name == "ncBV2") {
    // the quadratic analogue carries the Groebner side
    homog = named_operad("qncBV", n_max);
    gbp = &homog.presentation;
  }
  MonomialOrder order = gbp == &o.presentation ? o.preferred_order : homog.preferred_order;
  GroebnerBasis gb = complete(*gbp, order, n_max);
  for (int n = n_min; n <= n_max; ++n) {
    auto g = hilbert(gb, n);
    auto b = component_dimension_bruteforce(o.presentation, n, o.max_degree(n), o.min_degree(n));
    auto e = o.expected_dims(n);
    std::set<int> degs;
    for (auto& [d, v] : g) degs.insert(d);
    for (auto& [d, v] : b) degs.insert(d);
    if (e)
      for (auto& [d, v] : *e)
        if (v) degs.insert(d);
    auto note = [&](const CertRow& r) {
      c.rows.push_back(r);
      if (!r.agree() && c.ok) {
        c.ok = false;
        std::ostringstream os;
        os << "n=" << n << " degree=" << (r.total ? std::string("total") : std::to_string(r.degree))
           << " groebner=" << r.groebner << " brute=" << r.brute << " closed=" << r.closed;
        c.first_failure = os.str();
      }
    };
    CertRow tot{n, 0, true, 0, 0, 0};
    for (int d : degs) {
      CertRow r{n, d, false, g.count(d) ? g[d] : 0, b.count(d) ? b[d] : 0, 0};
      r.closed = e ? (e->count(d) ? e->at(d) : 0) : r.brute;
      tot.groebner += r.groebner;
      tot.brute += r.brute;
      tot.closed += r.closed;
      note(r);
    }
    if (o.expected_total) {
      if (auto t = o.expected_total(n)) tot.closed = *t;
    }
    note(tot);
  }
  return c;
}

bool hypercom_functional_equation(const std::map<int, std::map<int, long>>& dims, int zmax) {
  // polynomials in (z, q) as map<(zpow, qpow), coeff>
  using P = std::map<std::pair<int, int>, long>;
  P f{{{1, 0}, 1}};
  for (auto& [n, row] : dims)
    if (n >= 2 && n <= zmax)
      for (auto& [d, c] : row) f[{n, d}] += c;
  auto mul = [&](const P& x, const P& y) {
    P r;
    for (auto& [kx, cx] : x)
      for (auto& [ky, cy] : y)
        if (kx.first + ky.first <= zmax) r[{kx.first + ky.first, kx.second + ky.second}] += cx * cy;
    return r;
  };
  P lhs;
  for (auto& [k, c] : mul(f, f)) lhs[{k.first, k.second + 2}] += c;
  P fac{{{0, 0}, 1}, {{1, 0}, -1}, {{1, 2}, 1}};
  for (auto& [k, c] : mul(f, fac)) lhs[k] -= c;
  lhs[{1, 0}] += 1;
  for (auto& [k, c] : lhs)
    if (k.first <= zmax && c != 0) return false;
  return true;
}

}  // namespace ncop
