#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncop/multilinear.hpp"

namespace ncop {

// b_n^D by the recursion b_n = b_{n-1} ∘_2 m (n >= 4).
MultilinearOp borjeson(const Algebra& a, const MultilinearOp& D, int n);
// b_n^D evaluated on every tuple of the checked domain through
// D(a1..an) - D(a1..a_{n-1})a_n - ±a1 D(a2..an) + ±a1 D(a2..a_{n-1})a_n.
MultilinearOp borjeson_closed(const Algebra& a, const MultilinearOp& D, int n);

// First nonzero value, as "(l, tuple)" data.
struct Witness {
  int index = 0;
  Tuple tuple;
  Vec value;
  std::string to_string(const GradedSpace& s) const;
};
std::optional<Witness> first_nonzero(const MultilinearOp& f, int index);

struct OrderReport {
  bool resolved = false;
  int order = 0;  // least l with b_{l+1} = 0 and all later ones up to cap; cap when unresolved
  int cap = 0;
  std::string to_string() const;  // "2" or ">=5"
};
// On a tensor algebra truncated at N, b_n for n > N has an empty domain, so
// the cap is lowered to N.
OrderReport nc_order(const Algebra& a, const MultilinearOp& D, int cap);

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

// b_n^{[D1,D2]} against the double sum over b^{D1}_{i+j+1} ∘_{i+1} b^{D2}_k.
MultilinearOp commutator_rhs(const Algebra& a, const MultilinearOp& D1, const MultilinearOp& D2, int n);
std::vector<Check> commutator_check(const Algebra& a, const MultilinearOp& D1, const MultilinearOp& D2, int n_max);

// A symbol V^{⊗k} -> T̄(V): a unary map supported on words of length k.
struct Symbol {
  int length = 1;
  MultilinearOp map;
};
MultilinearOp rho(const TensorAlgebraTrunc& t, const Symbol& f);
MultilinearOp rho(const TensorAlgebraTrunc& t, const std::vector<Symbol>& fs);
// Peels symbols of lengths 1, 2, ... off D; throws when the order of D is not
// resolved below the truncation length.
std::vector<Symbol> diffop_decompose(const TensorAlgebraTrunc& t, const MultilinearOp& D);
// Random symbol of the given degree; outputs have length between 1 and k so
// that rho(f) maps the checked domain into itself.
Symbol random_symbol(const TensorAlgebraTrunc& t, int k, int degree, OpSampler& rng, double density = 0.5);

// D(a1..an) against the two-sum expansion through values on at most l factors.
std::optional<Witness> expansion_witness(const Algebra& a, const MultilinearOp& D, int l, int n);

// Bar construction on s^{-1}A of an A∞-algebra with operations m_k (m_1 = 0):
// Delta_{k-1} = rho(s^{-1} m_k s^{⊗k}) has degree 2k - 3.
struct BarConstruction {
  TensorAlgebraTrunc tensor;
  std::vector<MultilinearOp> deltas;  // Delta_0, Delta_1, ...
};
// ms[k] is the operation m_k on A (index 0 and 1 ignored); degrees of m_k are k-2.
BarConstruction bar_construction(const Algebra& a, const std::vector<MultilinearOp>& ms, int N);
BarConstruction bar_construction(const Algebra& a, int N);
// x, y, u, w with m_3(x,x,x) = y, m_2(u,u) = w and nothing else.
struct AInfinityFixture {
  Algebra algebra;
  std::vector<MultilinearOp> ms;
};
AInfinityFixture a_infinity_fixture();

std::vector<Check> assoc_ncbv_check(const Algebra& a, const std::vector<MultilinearOp>& deltas, int cap);

}  // namespace ncop
