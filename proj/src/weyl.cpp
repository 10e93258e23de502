#include "ncop/weyl.hpp"

#include <sstream>

namespace ncop {

namespace {

bool odd(int x) { return (x & 1) != 0; }

Word cat(std::initializer_list<std::pair<const Word*, std::pair<std::size_t, std::size_t>>> parts) {
  Word r;
  for (auto& [w, range] : parts) r.insert(r.end(), w->begin() + range.first, w->begin() + range.second);
  return r;
}

bool same(const Word& a, std::size_t ab, const Word& b, std::size_t bb, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t)
    if (a[ab + t] != b[bb + t]) return false;
  return true;
}

void put(const WeylContext& ctx, TensorMap& r, const Word& in, const Word& out, const Q& c) {
  if (ctx.max_len >= 0 && (static_cast<int>(in.size()) > ctx.max_len || static_cast<int>(out.size()) > ctx.max_len)) {
    ++ctx.dropped;
    return;
  }
  r.add(in, out, c);
}

}  // namespace

void TensorMap::add(const Word& in, const Word& out, const Q& c) {
  if (ncop::is_zero(c)) return;
  auto& row = rows[in];
  auto [it, fresh] = row.emplace(out, c);
  if (!fresh) {
    it->second += c;
    if (ncop::is_zero(it->second)) row.erase(it);
  }
  if (row.empty()) rows.erase(in);
}

TensorMap& TensorMap::operator+=(const TensorMap& o) {
  for (auto& [in, row] : o.rows)
    for (auto& [out, c] : row) add(in, out, c);
  return *this;
}

TensorMap& TensorMap::operator-=(const TensorMap& o) {
  for (auto& [in, row] : o.rows)
    for (auto& [out, c] : row) add(in, out, -c);
  return *this;
}

TensorMap TensorMap::operator*(const Q& c) const {
  TensorMap r;
  r.degree = degree;
  for (auto& [in, row] : rows)
    for (auto& [out, x] : row) r.add(in, out, x * c);
  return r;
}

std::string TensorMap::to_string(const std::vector<std::string>& names) const {
  auto word = [&](const Word& w) {
    std::string s;
    for (int g : w) s += g < static_cast<int>(names.size()) ? names[g] : std::string(1, static_cast<char>('a' + g));
    return s;
  };
  std::ostringstream os;
  for (auto& [in, row] : rows) {
    os << word(in) << " ->";
    for (auto& [out, c] : row) os << " " << c.get_str() << "*" << word(out);
    os << "\n";
  }
  return os.str();
}

int WeylContext::degree(const Word& w, std::size_t from, std::size_t to) const {
  int d = 0;
  for (std::size_t k = from; k < std::min(to, w.size()); ++k) d += gen_degrees[w[k]];
  return d;
}

TensorMap weyl_partial(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, int k) {
  TensorMap r;
  r.degree = f.degree + g.degree;
  for (auto& [gin, grow] : g.rows)
    for (auto& [gout, cg] : grow) {
      std::size_t s = gout.size();
      for (auto& [fin, frow] : f.rows) {
        std::size_t p = fin.size();
        std::size_t K = static_cast<std::size_t>(k);
        if (K > std::min(p, s)) continue;
        for (auto& [fout, cf] : frow) {
          Q c = cf * cg;
          if (K == p && K == s) {
            if (fin == gout) put(ctx, r, gin, fout, c);
          } else if (K == p) {
            // f applied inside the output of g
            for (std::size_t i = 0; i + p <= s; ++i)
              if (same(gout, i, fin, 0, p)) {
                Word out = cat({{&gout, {0, i}}, {&fout, {0, fout.size()}}, {&gout, {i + p, s}}});
                bool neg = odd(f.degree) && odd(ctx.degree(gout, 0, i));
                put(ctx, r, gin, out, neg ? Q(-c) : c);
              }
          } else if (K == s) {
            // g feeds a stretch of the inputs of f
            for (std::size_t i = 0; i + s <= p; ++i)
              if (same(fin, i, gout, 0, s)) {
                Word in = cat({{&fin, {0, i}}, {&gin, {0, gin.size()}}, {&fin, {i + s, p}}});
                bool neg = odd(g.degree) && odd(ctx.degree(fin, 0, i));
                put(ctx, r, in, fout, neg ? Q(-c) : c);
              }
          } else {
            // (f ⊗ id^{s-k}) ∘ (id^{p-k} ⊗ g)
            if (same(fin, p - K, gout, 0, K)) {
              Word in = cat({{&fin, {0, p - K}}, {&gin, {0, gin.size()}}});
              Word out = cat({{&fout, {0, fout.size()}}, {&gout, {K, s}}});
              bool neg = odd(g.degree) && odd(ctx.degree(fin, 0, p - K));
              put(ctx, r, in, out, neg ? Q(-c) : c);
            }
            // (id^{s-k} ⊗ f) ∘ (g ⊗ id^{p-k})
            if (same(gout, s - K, fin, 0, K)) {
              Word in = cat({{&gin, {0, gin.size()}}, {&fin, {K, p}}});
              Word out = cat({{&gout, {0, s - K}}, {&fout, {0, fout.size()}}});
              bool neg = odd(f.degree) && odd(ctx.degree(gout, 0, s - K));
              put(ctx, r, in, out, neg ? Q(-c) : c);
            }
          }
        }
      }
    }
  return r;
}

WeylSeries weyl_star(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, int hbar_order) {
  return weyl_star(ctx, WeylSeries{f}, WeylSeries{g}, hbar_order);
}

WeylSeries weyl_star(const WeylContext& ctx, const WeylSeries& f, const WeylSeries& g, int hbar_order) {
  int deg = (f.empty() ? 0 : f[0].degree) + (g.empty() ? 0 : g[0].degree);
  WeylSeries r(hbar_order + 1);
  for (auto& t : r) t.degree = deg;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      for (int k = 1; static_cast<int>(a + b) + k <= hbar_order; ++k) {
        if (f[a].is_zero() || g[b].is_zero()) continue;
        r[a + b + k] += weyl_partial(ctx, f[a], g[b], k);
      }
  return r;
}

WeylSeries weyl_bracket(const WeylContext& ctx, const WeylSeries& f, const WeylSeries& g, int hbar_order) {
  WeylSeries fg = weyl_star(ctx, f, g, hbar_order), gf = weyl_star(ctx, g, f, hbar_order);
  bool both_odd = odd(f.empty() ? 0 : f[0].degree) && odd(g.empty() ? 0 : g[0].degree);
  for (std::size_t i = 0; i < fg.size(); ++i) {
    if (both_odd) fg[i] += gf[i];
    else fg[i] -= gf[i];
  }
  return fg;
}

WeylSeries weyl_jacobiator(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, const TensorMap& h,
                           int hbar_order) {
  auto sign = [](int a, int b) { return odd(a) && odd(b) ? Q(-1) : Q(1); };
  WeylSeries F{f}, G{g}, H{h};
  WeylSeries a = weyl_bracket(ctx, weyl_bracket(ctx, F, G, hbar_order), H, hbar_order);
  WeylSeries b = weyl_bracket(ctx, weyl_bracket(ctx, G, H, hbar_order), F, hbar_order);
  WeylSeries c = weyl_bracket(ctx, weyl_bracket(ctx, H, F, hbar_order), G, hbar_order);
  Q sb = sign(f.degree, g.degree + h.degree), sc = sign(h.degree, f.degree + g.degree);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += b[i] * sb;
    a[i] += c[i] * sc;
  }
  return a;
}

TensorMap weyl_jacobiator1(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, const TensorMap& h) {
  auto br = [&](const TensorMap& x, const TensorMap& y) {
    TensorMap r = weyl_partial(ctx, x, y, 1);
    TensorMap back = weyl_partial(ctx, y, x, 1);
    if (odd(x.degree) && odd(y.degree)) r += back;
    else r -= back;
    return r;
  };
  auto sign = [](int a, int b) { return odd(a) && odd(b) ? Q(-1) : Q(1); };
  TensorMap j = br(br(f, g), h);
  j += br(br(g, h), f) * sign(f.degree, g.degree + h.degree);
  j += br(br(h, f), g) * sign(h.degree, f.degree + g.degree);
  return j;
}

TensorMap random_tensor_map(const WeylContext& ctx, int max_len, int degree, std::mt19937_64& rng, double density) {
  TensorMap r;
  r.degree = degree;
  std::vector<Word> words;
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (auto& w : layer)
      for (int g = 0; g < ctx.rank(); ++g) {
        Word v = w;
        v.push_back(g);
        next.push_back(v);
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (auto& in : words)
    for (auto& out : words)
      if (ctx.degree(out) == ctx.degree(in) + degree && keep(rng)) r.add(in, out, Q(coef(rng)));
  return r;
}

}  // namespace ncop
