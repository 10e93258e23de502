#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ncop/rational.hpp"

namespace ncop {

using Word = std::vector<int>;

// Word-to-word map T̄(V) -> T̂(V): input word -> output word -> coefficient.
// Every piece Hom(V^{⊗p}, V^{⊗q}) is kept, without truncation unless asked.
struct TensorMap {
  int degree = 0;
  std::map<Word, std::map<Word, Q>> rows;

  void add(const Word& in, const Word& out, const Q& c);
  bool is_zero() const { return rows.empty(); }
  TensorMap& operator+=(const TensorMap& o);
  TensorMap& operator-=(const TensorMap& o);
  TensorMap operator*(const Q& c) const;
  bool operator==(const TensorMap& o) const { return rows == o.rows; }
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

struct WeylContext {
  std::vector<int> gen_degrees;  // degrees of a basis of V
  int max_len = -1;              // pieces with a longer input or output are dropped; -1 keeps all
  mutable long dropped = 0;      // count of dropped entries
  int rank() const { return static_cast<int>(gen_degrees.size()); }
  int degree(const Word& w, std::size_t from = 0, std::size_t to = SIZE_MAX) const;
};

// f ∘^{(k)} g. The case k = p = s, absent from the four-case list, is read as
// the plain composite f ∘ g (the two one-sided cases agree there).
TensorMap weyl_partial(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, int k);

// Power series in hbar, index = exponent.
using WeylSeries = std::vector<TensorMap>;

// sum_{k=1}^{order} (f ∘^{(k)} g) hbar^k.
WeylSeries weyl_star(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, int hbar_order);
WeylSeries weyl_star(const WeylContext& ctx, const WeylSeries& f, const WeylSeries& g, int hbar_order);
WeylSeries weyl_bracket(const WeylContext& ctx, const WeylSeries& f, const WeylSeries& g, int hbar_order);
// Graded Jacobiator of the star commutator, truncated at hbar_order.
WeylSeries weyl_jacobiator(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, const TensorMap& h,
                           int hbar_order);
// Jacobiator of the hbar^1 bracket f ∘^{(1)} g - ± g ∘^{(1)} f alone.
TensorMap weyl_jacobiator1(const WeylContext& ctx, const TensorMap& f, const TensorMap& g, const TensorMap& h);

// Random homogeneous map with pieces V^{⊗p} -> V^{⊗q}, 1 <= p, q <= max_len.
TensorMap random_tensor_map(const WeylContext& ctx, int max_len, int degree, std::mt19937_64& rng,
                            double density = 0.3);

}  // namespace ncop
