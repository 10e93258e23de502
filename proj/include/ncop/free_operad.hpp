#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncop/rational.hpp"
#include "ncop/tree.hpp"

namespace ncop {

struct Generator {
  std::string name;
  int arity = 2;
  int degree = 0;
};

using Alphabet = std::vector<Generator>;

int find_generator(const Alphabet& a, const std::string& name);  // -1 when absent

// One vertex of a tree monomial in preorder. Leaves have gen == kLeaf; a
// context carries exactly one vertex with gen == kHole.
struct Node {
  static constexpr int kLeaf = -1;
  static constexpr int kHole = -2;
  int gen = kLeaf;
  int arity = 0;
  int degree = 0;
  auto operator<=>(const Node&) const = default;
};

using Monomial = std::vector<Node>;

Monomial leaf_monomial();
Monomial generator_monomial(const Alphabet& a, int g);
Monomial hole_monomial(int arity, int degree);

int leaves(const Monomial& m);
int degree(const Monomial& m);
int vertices(const Monomial& m);  // non-leaf nodes
std::size_t subtree_end(const Monomial& m, std::size_t p);
PlanarTree shape(const Monomial& m);  // unary vertices are not allowed here

// Infinitesimal composition of monomials with the Koszul sign.
std::pair<int, Monomial> compose(const Monomial& a, int i, const Monomial& b);

// Occurrence of a pattern (connected decorated subtree, leaves matching
// whole subtrees) inside a monomial.
struct Occurrence {
  std::size_t root = 0;                // position of the pattern root in the monomial
  std::vector<std::size_t> positions;  // monomial position of every pattern node
  std::vector<std::pair<std::size_t, std::size_t>> inputs;  // subtrees at pattern leaves
};
std::vector<Occurrence> occurrences(const Monomial& pattern, const Monomial& m);
bool divides(const Monomial& pattern, const Monomial& m);
bool match_at(const Monomial& pattern, const Monomial& m, std::size_t start, Occurrence& occ);

// Context with a hole standing for the occurrence; m = sign * ctx{pattern}.
struct Factorization {
  Monomial context;
  int sign = 1;
};
Factorization factor(const Monomial& pattern, const Monomial& m, const Occurrence& occ);
// ctx{x}: substitute x (same arity as the hole) into the context.
std::pair<int, Monomial> substitute(const Monomial& context, const Monomial& x);

// Root-to-leaf generator words, one per leaf in planar order.
std::vector<std::vector<int>> path_sequence(const Monomial& m);

class Element {
 public:
  Element() = default;
  explicit Element(const Monomial& m, Q c = 1) { add(m, c); }

  void add(const Monomial& m, const Q& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const { Element r = *this; r += o; return r; }
  Element operator-(const Element& o) const { Element r = *this; r -= o; return r; }
  Element operator*(const Q& c) const;
  Element operator-() const { return *this * Q(-1); }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Monomial, Q>& terms() const { return terms_; }
  Q coeff(const Monomial& m) const;
  int arity() const;  // -1 for zero
  // Degree when homogeneous; throws otherwise.
  int degree() const;
  bool is_homogeneous() const;

 private:
  std::map<Monomial, Q> terms_;
};

Element compose(const Element& a, int i, const Element& b);
Element substitute(const Monomial& context, const Element& x);

// Image under the morphism of free operads given on generators.
Element apply_morphism(const Monomial& m, const std::vector<Element>& images);
Element apply_morphism(const Element& e, const std::vector<Element>& images);

enum class OrderKind { PathLex, DegreePathLex, WeightFirstPathLex };

// Total admissible order on monomials of equal arity. The comparison key
// concatenates, per leaf, the length of the root-to-leaf word followed by
// generator ranks; weight-first and degree variants prepend a global weight.
struct MonomialOrder {
  OrderKind kind = OrderKind::PathLex;
  std::vector<int> precedence;  // generator ids, first = largest; unlisted ids rank below
  std::vector<int> weights;     // per generator id, used by WeightFirstPathLex
  bool reversed = false;

  std::vector<long> key(const Monomial& m) const;
  int compare(const Monomial& a, const Monomial& b) const;  // -1, 0, 1
};

enum class Cmp { LT, EQ, GT };
Cmp compare(const MonomialOrder& o, const Monomial& a, const Monomial& b);

// Operadic suspension: generator of arity k and degree d goes to degree
// d - power*(k-1). The alphabet is mapped generator by generator (same ids).
Alphabet suspend_alphabet(const Alphabet& a, int power);
Monomial suspend_monomial_shape(const Monomial& m, int power);
Element operadic_suspension(const Element& e, int power);

// Text grammar: sums of "coeff * gen(child,...)", leaves written "_".
std::string to_string(const Monomial& m, const Alphabet& a);
std::string to_string(const Element& e, const Alphabet& a);
Monomial parse_monomial(const std::string& text, const Alphabet& a);
Element parse_element(const std::string& text, const Alphabet& a);

}  // namespace ncop
