#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncop/free_operad.hpp"
#include "ncop/rational.hpp"

namespace ncop {

// Finite basis with a degree per vector. Tensor algebras also carry a word
// length (weight) per basis vector; identities are then only checked on input
// tuples of total weight <= max_weight, where every intermediate product is
// an honest product of the untruncated algebra.
struct GradedSpace {
  std::vector<int> degrees;
  std::vector<std::string> labels;
  std::vector<int> weights;  // empty: all zero
  int max_weight = -1;       // -1: no restriction

  int dim() const { return static_cast<int>(degrees.size()); }
  int weight(int b) const { return weights.empty() ? 0 : weights[b]; }
  std::map<int, int> dims() const;  // degree -> multiplicity
  std::string label(int b) const;

  static GradedSpace plain(const std::vector<int>& degrees);
};

using Vec = std::map<int, Q>;  // basis index -> coefficient, no zeros
void add_to(Vec& v, int b, const Q& c);
void axpy(Vec& y, const Q& a, const Vec& x);
std::string to_string(const Vec& v, const GradedSpace& s);

using Tuple = std::vector<int>;

// A^{⊗n} -> A, stored by its nonzero values on basis tuples.
class MultilinearOp {
 public:
  MultilinearOp() = default;
  MultilinearOp(int arity, int degree) : arity_(arity), degree_(degree) {}

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::map<Tuple, Vec>& entries() const { return entries_; }
  Vec at(const Tuple& t) const;
  void add(const Tuple& t, int out, const Q& c);
  void add(const Tuple& t, const Vec& v, const Q& c = 1);
  bool is_zero() const { return entries_.empty(); }

  MultilinearOp& operator+=(const MultilinearOp& o);
  MultilinearOp& operator-=(const MultilinearOp& o);
  MultilinearOp operator+(const MultilinearOp& o) const { MultilinearOp r = *this; r += o; return r; }
  MultilinearOp operator-(const MultilinearOp& o) const { MultilinearOp r = *this; r -= o; return r; }
  MultilinearOp operator*(const Q& c) const;
  bool operator==(const MultilinearOp& o) const { return arity_ == o.arity_ && entries_ == o.entries_; }

  // First entry violating degree homogeneity, if any.
  std::optional<Tuple> inhomogeneity(const GradedSpace& s) const;
  // Drops entries outside the checked domain of s.
  void restrict_to(const GradedSpace& s);

 private:
  int arity_ = 1, degree_ = 0;
  std::map<Tuple, Vec> entries_;
};

int tuple_degree(const GradedSpace& s, const Tuple& t, std::size_t from = 0, std::size_t to = SIZE_MAX);
int tuple_weight(const GradedSpace& s, const Tuple& t);
// All basis tuples of length n inside the checked domain, in lex order.
std::vector<Tuple> domain(const GradedSpace& s, int n);

MultilinearOp identity_op(const GradedSpace& s);
// f ∘_i g (1-based) with the Koszul sign of passing g over the first i-1 inputs.
MultilinearOp compose(const GradedSpace& s, const MultilinearOp& f, int i, const MultilinearOp& g);
// Composite of unary maps: (f g)(x) = f(g(x)).
MultilinearOp after(const GradedSpace& s, const MultilinearOp& f, const MultilinearOp& g);
// Graded commutator f g - (-1)^{|f||g|} g f of unary maps.
MultilinearOp commutator(const GradedSpace& s, const MultilinearOp& f, const MultilinearOp& g);
Vec image(const MultilinearOp& f, const Vec& x);

struct Algebra {
  std::string name;
  GradedSpace space;
  MultilinearOp m;  // arity 2, degree 0

  Vec mul(const Vec& a, const Vec& b) const;
  // Product of the factors t[from..to), left to right; empty range is not allowed.
  Vec product(const Tuple& t, std::size_t from, std::size_t to) const;
  // Iterated product m^{(n-1)} as an n-ary operation.
  MultilinearOp power(int n) const;
  std::optional<Tuple> associativity_witness() const;
  bool associative() const { return !associativity_witness(); }
};

// JSON fixture: {"name": ..., "degrees": [...], "labels": [...],
//                "product": [[i, j, k, "c"], ...]} meaning e_i e_j += c e_k.
Algebra algebra_from_json(const std::string& text);
std::string algebra_to_json(const Algebra& a);

Algebra matrix_algebra(int n);          // M_n(Q), degree 0
Algebra upper_triangular(int n);        // upper triangular n x n matrices
Algebra zero_algebra(const GradedSpace& s);
Algebra truncated_polynomial(int n, int deg);  // x, ..., x^n with x^{n+1} = 0, |x| = deg

// Non-unital tensor algebra on V, words of length 1..N, checked on inputs of
// total length <= N. Concatenation has no sign.
class TensorAlgebraTrunc {
 public:
  TensorAlgebraTrunc(std::vector<int> generator_degrees, int N, std::vector<std::string> names = {});

  int N() const { return N_; }
  int rank() const { return static_cast<int>(gen_deg_.size()); }
  const GradedSpace& space() const { return space_; }
  const Algebra& algebra() const { return alg_; }
  const std::vector<int>& word(int b) const { return words_[b]; }
  int length(int b) const { return static_cast<int>(words_[b].size()); }
  // -1 when the word is longer than N.
  int index(const std::vector<int>& w) const;
  std::vector<int> words_of_length(int k) const;

 private:
  std::vector<int> gen_deg_;
  int N_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, int> index_;
  GradedSpace space_;
  Algebra alg_;
};

// Random homogeneous unary map with small integer entries. On tensor algebras
// outputs never outgrow the input word, so the checked domain is preserved.
class OpSampler {
 public:
  explicit OpSampler(std::uint64_t seed) : rng_(seed) {}
  Q coefficient(int lo = -2, int hi = 2);
  MultilinearOp unary(const GradedSpace& s, int degree, double density = 0.5);
  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Family of operations indexed by arity.
using OpFamily = std::map<int, MultilinearOp>;

// Image of a free-operad element under generator -> operation (matched by arity).
MultilinearOp evaluate(const GradedSpace& s, const Monomial& m, const OpFamily& ops);
MultilinearOp evaluate(const GradedSpace& s, const Element& e, const OpFamily& ops);

}  // namespace ncop
