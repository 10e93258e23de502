#include "ncop/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace ncop {

namespace {

// Returns position just past the subtree starting at p.
std::size_t subtree_end(const std::vector<int>& c, std::size_t p) {
  int need = 1;
  while (need > 0) {
    if (p >= c.size()) throw std::invalid_argument("truncated tree code");
    need += c[p] - 1;
    ++p;
  }
  return p;
}

}  // namespace

PlanarTree::PlanarTree(std::vector<int> code) : code_(std::move(code)) {
  if (code_.empty() || subtree_end(code_, 0) != code_.size())
    throw std::invalid_argument("malformed tree code");
  for (int k : code_)
    if (k == 1 || k < 0) throw std::invalid_argument("tree vertices need at least two inputs");
}

PlanarTree PlanarTree::corolla(int n) {
  if (n < 1) throw std::invalid_argument("corolla needs n >= 1");
  if (n == 1) return leaf();
  std::vector<int> c(n + 1, 0);
  c[0] = n;
  return PlanarTree(std::move(c));
}

int PlanarTree::leaves() const { return static_cast<int>(std::count(code_.begin(), code_.end(), 0)); }

int PlanarTree::internal_vertices() const { return static_cast<int>(code_.size()) - leaves(); }

bool PlanarTree::is_binary() const {
  return std::all_of(code_.begin(), code_.end(), [](int k) { return k == 0 || k == 2; });
}

std::vector<std::pair<int, int>> PlanarTree::clades() const {
  std::vector<std::pair<int, int>> out;
  int leaf = 0;
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t p) -> std::size_t {
    if (code_[p] == 0) {
      ++leaf;
      return p + 1;
    }
    std::size_t slot = out.size();
    out.emplace_back(leaf + 1, 0);
    std::size_t q = p + 1;
    for (int k = 0; k < code_[p]; ++k) q = walk(q);
    out[slot].second = leaf;
    return q;
  };
  walk(0);
  return out;
}

std::string PlanarTree::serialize() const {
  std::string s;
  for (std::size_t k = 0; k < code_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(code_[k]);
  }
  return s;
}

std::string PlanarTree::to_string() const {
  std::string s;
  int leaf = 0;
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t p) -> std::size_t {
    if (code_[p] == 0) {
      s += std::to_string(++leaf);
      return p + 1;
    }
    s += '(';
    std::size_t q = p + 1;
    for (int k = 0; k < code_[p]; ++k) {
      if (k) s += ',';
      q = walk(q);
    }
    s += ')';
    return q;
  };
  walk(0);
  return s;
}

PlanarTree parse_tree(const std::string& text) {
  std::size_t pos = 0;
  int leaf = 0;
  std::vector<int> code;
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("tree text: ") + why + " at " + std::to_string(pos));
  };
  std::function<void()> node = [&]() {
    if (pos >= text.size()) fail("unexpected end");
    if (text[pos] == '(') {
      ++pos;
      std::size_t slot = code.size();
      code.push_back(0);
      int kids = 0;
      while (true) {
        node();
        ++kids;
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        fail("expected , or )");
      }
      if (kids < 2) fail("vertex with fewer than two inputs");
      code[slot] = kids;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected leaf label");
      if (std::stoi(text.substr(start, pos - start)) != ++leaf) fail("leaf labels must be 1..n in order");
      code.push_back(0);
    }
  };
  node();
  if (pos != text.size()) fail("trailing characters");
  return PlanarTree(std::move(code));
}

std::vector<PlanarTree> enumerate_trees(int n, bool binary_only) {
  if (n < 1) throw std::invalid_argument("enumerate_trees needs n >= 1");
  std::map<int, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(int)> codes = [&](int m) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> res;
    if (m == 1) {
      res.push_back({0});
    } else {
      int kmax = binary_only ? 2 : m;
      for (int k = 2; k <= kmax; ++k) {
        // compositions of m into k positive parts, children in order
        std::vector<int> parts(k, 1);
        std::function<void(int, int)> split = [&](int idx, int left) {
          if (idx == k - 1) {
            parts[idx] = left;
            std::vector<std::vector<int>> acc{{k}};
            for (int c = 0; c < k; ++c) {
              std::vector<std::vector<int>> next;
              for (auto& a : acc)
                for (auto& sub : codes(parts[c])) {
                  auto b = a;
                  b.insert(b.end(), sub.begin(), sub.end());
                  next.push_back(std::move(b));
                }
              acc.swap(next);
            }
            res.insert(res.end(), acc.begin(), acc.end());
            return;
          }
          for (int p = 1; p <= left - (k - 1 - idx); ++p) {
            parts[idx] = p;
            split(idx + 1, left - p);
          }
        };
        split(0, m);
      }
    }
    std::sort(res.begin(), res.end());
    return memo[m] = std::move(res);
  };
  std::vector<PlanarTree> out;
  for (auto& c : codes(n)) out.emplace_back(c);
  return out;
}

PlanarTree graft(const PlanarTree& t1, int i, const PlanarTree& t2) {
  if (i < 1 || i > t1.leaves()) throw std::out_of_range("graft: leaf index out of range");
  std::vector<int> c;
  int leaf = 0;
  for (int k : t1.code()) {
    if (k == 0 && ++leaf == i) {
      c.insert(c.end(), t2.code().begin(), t2.code().end());
    } else {
      c.push_back(k);
    }
  }
  return PlanarTree(std::move(c));
}

std::vector<PlanarTree> contractions(const PlanarTree& t) {
  const auto& c = t.code();
  // parent of each position in preorder
  std::vector<int> parent(c.size(), -1);
  std::vector<std::pair<int, int>> stack;  // (position, remaining children)
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (!stack.empty()) {
      parent[p] = stack.back().first;
      if (--stack.back().second == 0) stack.pop_back();
    }
    if (c[p] > 0) stack.emplace_back(static_cast<int>(p), c[p]);
    while (!stack.empty() && stack.back().second == 0) stack.pop_back();
  }
  std::set<PlanarTree> out;
  for (std::size_t p = 1; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    std::vector<int> d = c;
    d[parent[p]] += c[p] - 1;
    d.erase(d.begin() + static_cast<long>(p));
    out.insert(PlanarTree(std::move(d)));
  }
  return {out.begin(), out.end()};
}

bool contracts_to(const PlanarTree& s, const PlanarTree& t) {
  if (s == t) return true;
  if (s.leaves() != t.leaves() || s.internal_vertices() <= t.internal_vertices()) return false;
  for (auto& u : contractions(s))
    if (contracts_to(u, t)) return true;
  return false;
}

PlanarTree one_edge_tree(int n, int l, int r) {
  if (l < 1 || r > n || r - l + 1 < 2 || r - l + 1 >= n) throw std::invalid_argument("one_edge_tree: bad interval");
  return graft(PlanarTree::corolla(n - (r - l)), l, PlanarTree::corolla(r - l + 1));
}

}  // namespace ncop
