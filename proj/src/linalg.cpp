#include "ncop/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncop {

Q parse_rational(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  Q q;
  if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(s));
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

void axpy(SparseVec& y, const Q& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Q v = y[i].second + a * x[j].second;
      if (!is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

SparseVec scaled(const SparseVec& x, const Q& a) {
  SparseVec r;
  if (is_zero(a)) return r;
  r.reserve(x.size());
  for (auto& [c, v] : x) r.emplace_back(c, a * v);
  return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
  // Only the head is eliminated repeatedly; entries below the head that
  // have pivots are cleared as the head walks down.
  SparseVec done;
  while (!v.empty()) {
    auto it = pivots_.find(v.back().first);
    if (it == pivots_.end()) {
      done.push_back(std::move(v.back()));
      v.pop_back();
      continue;
    }
    Q c = -v.back().second;
    axpy(v, c, it->second);
  }
  std::reverse(done.begin(), done.end());
  return done;
}

bool Echelon::insert(SparseVec row) {
  while (!row.empty()) {
    auto it = pivots_.find(row.back().first);
    if (it == pivots_.end()) {
      Q inv = 1 / row.back().second;
      if (inv != 1)
        for (auto& e : row) e.second *= inv;
      int c = row.back().first;
      pivots_.emplace(c, std::move(row));
      return true;
    }
    Q c = -row.back().second;
    axpy(row, c, it->second);
  }
  return false;
}

std::vector<int> rref(DenseMat& m) {
  std::vector<int> piv;
  if (m.empty()) return piv;
  int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m[i][c])) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Q inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Q f = m[i][c];
      for (int k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

int rank(DenseMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Q>> nullspace(DenseMat m, int ncols) {
  auto piv = rref(m);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Q>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(ncols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(int dim, DenseMat rows) : dim_(dim), rows_(std::move(rows)) {
  for (auto& r : rows_)
    if (static_cast<int>(r.size()) != dim_) throw std::invalid_argument("row length mismatch");
  rref(rows_);
}

Subspace Subspace::coordinate(int dim, const std::vector<int>& coords) {
  DenseMat rows;
  for (int c : coords) {
    std::vector<Q> v(dim);
    v.at(c) = 1;
    rows.push_back(std::move(v));
  }
  return Subspace(dim, std::move(rows));
}

Subspace Subspace::full(int dim) {
  std::vector<int> all(dim);
  for (int i = 0; i < dim; ++i) all[i] = i;
  return coordinate(dim, all);
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("ambient mismatch");
  DenseMat rows = rows_;
  rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
  return Subspace(dim_, std::move(rows));
}

bool Subspace::contains(const std::vector<Q>& v) const {
  DenseMat rows = rows_;
  rows.push_back(v);
  return rank(std::move(rows)) == dim();
}

bool Subspace::contains(const Subspace& o) const { return (*this + o).dim() == dim(); }

Subspace Subspace::remap(const std::vector<int>& target, int newdim) const {
  DenseMat rows;
  for (auto& r : rows_) {
    std::vector<Q> v(newdim);
    for (int k = 0; k < dim_; ++k) v.at(target[k]) = r[k];
    rows.push_back(std::move(v));
  }
  return Subspace(newdim, std::move(rows));
}

Subspace Subspace::project(const std::vector<int>& src) const {
  DenseMat rows;
  int nd = static_cast<int>(src.size());
  for (auto& r : rows_) {
    std::vector<Q> v(nd);
    for (int k = 0; k < nd; ++k) v[k] = r[src[k]];
    rows.push_back(std::move(v));
  }
  return Subspace(nd, std::move(rows));
}

}  // namespace ncop
