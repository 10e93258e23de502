#include "ncop/intersection.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ncop {

int CorrelatorIndex::total() const { return d0 + std::accumulate(ds.begin(), ds.end(), 0); }

std::string CorrelatorIndex::to_string() const {
  std::string s = "<tau_" + std::to_string(d0);
  for (int d : ds) s += " tau_" + std::to_string(d);
  return s + ">";
}

long correlator_closed(const CorrelatorIndex& idx) {
  int n = idx.n();
  if (n < 2) throw std::invalid_argument("correlator: arity must be at least 2");
  if (idx.d0 < 0 || std::any_of(idx.ds.begin(), idx.ds.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("correlator: negative exponent");
  if (idx.total() != n - 2) return 0;
  if (idx.ds.front() != 0 || idx.ds.back() != 0) return 0;
  for (int i = 1; i + 1 < n; ++i)
    if (idx.ds[i] > 1) return 0;
  return 1;
}

namespace {

std::mutex memo_mutex;
std::map<std::pair<CorrelatorIndex, TrrOptions>, long> memo;

// <tau_d0 d_1..d_{l-1} tau_0 d_{m+1}..d_n>: inputs l..m (1-based) collapsed.
CorrelatorIndex collapse(const CorrelatorIndex& x, int l, int m) {
  CorrelatorIndex o{x.d0, {}};
  for (int k = 1; k < l; ++k) o.ds.push_back(x.ds[k - 1]);
  o.ds.push_back(0);
  for (int k = m + 1; k <= x.n(); ++k) o.ds.push_back(x.ds[k - 1]);
  return o;
}

CorrelatorIndex slice(const CorrelatorIndex& x, int l, int m) {
  CorrelatorIndex o{0, {}};
  for (int k = l; k <= m; ++k) o.ds.push_back(x.ds[k - 1]);
  return o;
}

long trr(const CorrelatorIndex& idx, const TrrOptions& opt);

long product(const CorrelatorIndex& outer, const CorrelatorIndex& inner, const TrrOptions& opt) {
  long a = trr(inner, opt);
  return a == 0 ? 0 : a * trr(outer, opt);
}

long root_rule(const CorrelatorIndex& idx, const TrrOptions& opt) {
  int n = idx.n();
  int i = std::clamp(opt.root_point, 1, n - 1);
  CorrelatorIndex x = idx;
  --x.d0;
  long s = 0;
  for (int l = 1; l <= i; ++l)
    for (int m = i + 1; m <= n; ++m)
      if (m - l < n - 1) s += product(collapse(x, l, m), slice(x, l, m), opt);
  return s;
}

long trr(const CorrelatorIndex& idx, const TrrOptions& opt) {
  int n = idx.n();
  if (n < 2) throw std::invalid_argument("correlator: arity must be at least 2");
  if (idx.total() != n - 2) return 0;
  if (n == 2) return 1;  // <tau_0 tau_0 tau_0>
  {
    std::lock_guard<std::mutex> g(memo_mutex);
    auto it = memo.find({idx, opt});
    if (it != memo.end()) return it->second;
  }
  long value = 0;
  // psi_1 and psi_n: the relations at the extreme inputs have empty sums
  if (idx.ds.front() > 0 || idx.ds.back() > 0) {
    value = 0;
  } else {
    int i = 0;
    for (int k = 2; k <= n - 1 && !i; ++k)
      if (idx.ds[k - 1] > 0) i = k;
    if (idx.d0 > 0 && (opt.prefer_root || !i)) {
      value = root_rule(idx, opt);
    } else {
      CorrelatorIndex x = idx;
      --x.ds[i - 1];
      if (opt.interior == InteriorRule::Left) {
        for (int l = 1; l <= i - 1; ++l) value += product(collapse(x, l, i), slice(x, l, i), opt);
      } else {
        for (int l = i + 1; l <= n; ++l) value += product(collapse(x, i, l), slice(x, i, l), opt);
      }
    }
  }
  std::lock_guard<std::mutex> g(memo_mutex);
  memo.emplace(std::make_pair(idx, opt), value);
  return value;
}

}  // namespace

long correlator_trr(const CorrelatorIndex& idx, TrrOptions opt) {
  if (idx.d0 < 0 || std::any_of(idx.ds.begin(), idx.ds.end(), [](int d) { return d < 0; }))
    throw std::invalid_argument("correlator: negative exponent");
  return trr(idx, opt);
}

Polynomial generating_polynomial(int n) {
  if (n < 2) throw std::invalid_argument("generating_polynomial: n >= 2");
  Polynomial p{{std::vector<int>(n + 1, 0), 1}};
  for (int j = 2; j <= n - 1; ++j) {  // times (t_0 + t_j)
    Polynomial q;
    for (auto& [e, c] : p) {
      auto a = e, b = e;
      ++a[0];
      ++b[j];
      q[a] += c;
      q[b] += c;
    }
    p = std::move(q);
  }
  return p;
}

std::string to_string(const Polynomial& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto& [e, c] = *it;
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    long a = c < 0 ? -c : c;
    if (mono.empty()) s += std::to_string(a);
    else s += (a == 1 ? "" : std::to_string(a) + "*") + mono;
  }
  return s.empty() ? "0" : s;
}

std::vector<CorrelatorIndex> correlator_indices(int n) {
  if (n < 2) throw std::invalid_argument("correlator_indices: n >= 2");
  std::vector<CorrelatorIndex> out;
  std::vector<int> e(n + 1, 0);
  int target = n - 2;
  auto rec = [&](auto& self, int pos, int left) -> void {
    if (pos == n) {
      e[pos] = left;
      out.push_back({e[0], std::vector<int>(e.begin() + 1, e.end())});
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, target);
  return out;
}

}  // namespace ncop
