#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncop/rational.hpp"

namespace ncop {

// Sorted by column, no zero entries.
using SparseVec = std::vector<std::pair<int, Q>>;

void axpy(SparseVec& y, const Q& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Q& a);

// Incremental row echelon form; the pivot of a row is its largest column.
class Echelon {
 public:
  // Returns true when the row was independent of the previous ones.
  bool insert(SparseVec row);
  // Reduces v against the stored rows; zero result means v lies in the span.
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return pivots_.size(); }
  const std::map<int, SparseVec>& rows() const { return pivots_; }

 private:
  std::map<int, SparseVec> pivots_;  // pivot column -> row with leading coefficient 1
};

using DenseMat = std::vector<std::vector<Q>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(DenseMat& m);
int rank(DenseMat m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Q>> nullspace(DenseMat m, int ncols);

// A subspace of Q^dim stored by its reduced row echelon basis, so that
// equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int dim) : dim_(dim) {}
  Subspace(int dim, DenseMat rows);

  static Subspace coordinate(int dim, const std::vector<int>& coords);
  static Subspace full(int dim);

  int ambient() const { return dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const DenseMat& basis() const { return rows_; }

  Subspace operator+(const Subspace& o) const;
  bool contains(const std::vector<Q>& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return dim_ == o.dim_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Image under the coordinate map sending coordinate k to target[k] in Q^newdim.
  Subspace remap(const std::vector<int>& target, int newdim) const;
  // Projection onto the coordinates listed in src; src[k] becomes coordinate k.
  Subspace project(const std::vector<int>& src) const;

 private:
  int dim_ = 0;
  DenseMat rows_;
};

}  // namespace ncop
