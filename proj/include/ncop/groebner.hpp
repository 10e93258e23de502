#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ncop/free_operad.hpp"
#include "ncop/linalg.hpp"

namespace ncop {

// Raised when a computation would exceed a configured size guard.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Homogeneity { Quadratic, QuadraticLinear, General };

struct Presentation {
  std::string name;
  Alphabet alphabet;
  std::vector<Element> relations;

  Homogeneity homogeneity() const;
  // Drops zero relations and duplicates (up to scaling).
  void canonicalize();
};

struct Rule {
  Monomial lead;
  Element tail;  // lead == tail modulo the ideal; every tail monomial is smaller
  Element relation() const { return Element(lead) - tail; }
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Alphabet a, MonomialOrder o, int cap) : alphabet_(std::move(a)), order_(std::move(o)), cap_(cap) {}

  const Alphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  int arity_cap() const { return cap_; }
  bool complete_up_to_cap() const { return complete_; }
  const std::vector<Rule>& rules() const { return rules_; }
  // Rules created by S-polynomials (as opposed to the interreduced input).
  int additions() const { return additions_; }

  Element reduce(const Element& e) const;
  bool is_normal(const Monomial& m) const;
  Monomial leading(const Element& e) const;

  // Adds a relation after reducing it; returns false when it reduced to zero.
  bool add_relation(const Element& rel);

 private:
  friend GroebnerBasis complete(const Presentation&, const MonomialOrder&, int);
  void interreduce();
  void reindex();
  const Rule* find_divisor(const Monomial& m, Occurrence& occ) const;

  Alphabet alphabet_;
  MonomialOrder order_;
  int cap_ = 0;
  bool complete_ = false;
  int additions_ = 0;
  std::vector<Rule> rules_;
  std::map<Node, std::vector<int>> by_root_;
};

Element reduce(const Element& e, const GroebnerBasis& g);
GroebnerBasis complete(const Presentation& p, const MonomialOrder& o, int cap);

// Normal monomials of arity n; throws ResourceError past max_vertices.
std::vector<Monomial> normal_monomials(const GroebnerBasis& g, int n, int max_vertices = 64);
std::map<int, long> hilbert(const GroebnerBasis& g, int n);

// All monomials of arity n and degree d over the alphabet, optionally with
// one extra hole vertex of the given arity/degree.
class MonomialEnumerator {
 public:
  explicit MonomialEnumerator(const Alphabet& a, std::size_t guard = 2'000'000);
  const std::vector<Monomial>& get(int n, int d);
  const std::vector<Monomial>& contexts(int n, int d, int hole_arity, int hole_degree);

 private:
  const std::vector<Monomial>& rec(int n, int d, bool hole, int ha, int hd);
  int low(int n, bool hole, int ha, int hd) const;

  Alphabet alphabet_;
  std::size_t guard_;
  std::size_t total_ = 0;
  int min_nonunary_ = 0;
  std::map<std::tuple<int, int, bool, int, int>, std::vector<Monomial>> memo_;
};

// Independent oracle: dimension of T(V)(n)/(R)(n) per degree by exact ranks.
std::map<int, long> component_dimension_bruteforce(const Presentation& p, int n, int max_degree, int min_degree = 0,
                                                   std::size_t guard = 400'000);
struct SliceDims {
  long free = 0, ideal = 0, quotient = 0;
};
// One (arity, degree) slice, optionally restricted to the monomials accepted
// by the filter (relations must be homogeneous for the filtered grading).
SliceDims slice_dimension(const Presentation& p, int n, int d,
                          const std::function<bool(const Monomial&)>& filter = {}, std::size_t guard = 400'000);
// Membership of an element in the ideal generated by the relations.
bool in_ideal_bruteforce(const Presentation& p, const Element& e, std::size_t guard = 400'000);

// Koszul dual of a quadratic presentation: arity k, degree d goes to degree
// k-2-d; relations are the annihilator of p's relations under the pairing
// <x o_i y, x' o_i y'> = (-1)^{(b-1)(i-1) + b}, b = arity(y). The pairing does
// not see degrees, so the construction is an involution.
Presentation koszul_dual(const Presentation& p);
// Operadic suspension of every generator and relation.
Presentation suspend(const Presentation& p, int power);

// Two-vertex monomials of arity n in canonical order.
std::vector<Monomial> quadratic_monomials(const Alphabet& a, int n);
// Relation space in arity n as rows over quadratic_monomials, in reduced form.
DenseMat relation_space(const Presentation& p, int n);
bool same_span(DenseMat a, DenseMat b);

struct DimRow {
  int arity = 0, degree = 0;
  long lhs = 0, rhs = 0;
};

struct DistributiveReport {
  bool ok = true;
  std::vector<DimRow> rows;  // lhs = dim pq, rhs = dim (P o Q)
};

// Graded dimension table: arity -> degree -> dim.
using DimTable = std::map<int, std::map<int, long>>;
DimTable composite_dims(const DimTable& p, const DimTable& q, int cap);
DistributiveReport distributive_law_check(const DimTable& pq, const DimTable& p, const DimTable& q, int cap);
// Brute-force tables for the three presentations, degrees up to max_degree(n).
DimTable bruteforce_table(const Presentation& p, int cap, const std::function<int(int)>& max_degree,
                          const std::function<int(int)>& min_degree = {});
DistributiveReport distributive_law_check(const Presentation& pq, const Presentation& p, const Presentation& q,
                                          int cap, const std::function<int(int)>& max_degree,
                                          const std::function<int(int)>& min_degree = {});

std::string serialize(const Presentation& p);
Presentation parse_presentation(const std::string& text);
std::string serialize(const GroebnerBasis& g);
std::string hilbert_json(const DimTable& t);

}  // namespace ncop
