#pragma once

#include <string>
#include <vector>

namespace ncop {

// Rooted planar tree, stored as the preorder list of child counts (0 = leaf).
// Internal vertices have at least two children. This list is the canonical
// serialization and its lexicographic order is the enumeration order.
class PlanarTree {
 public:
  PlanarTree() : code_{0} {}
  explicit PlanarTree(std::vector<int> code);
  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree corolla(int n);

  const std::vector<int>& code() const { return code_; }
  int leaves() const;
  int internal_vertices() const;
  int internal_edges() const { return internal_vertices() > 0 ? internal_vertices() - 1 : 0; }
  bool is_binary() const;

  // Leaf interval [first,last] (1-based) below each internal vertex, in preorder.
  std::vector<std::pair<int, int>> clades() const;

  std::string serialize() const;  // "3 0 0 0"
  std::string to_string() const;  // "((1,2),3)"

  auto operator<=>(const PlanarTree&) const = default;

 private:
  std::vector<int> code_;
};

PlanarTree parse_tree(const std::string& text);  // nested parentheses form

std::vector<PlanarTree> enumerate_trees(int n, bool binary_only);
PlanarTree graft(const PlanarTree& t1, int i, const PlanarTree& t2);
std::vector<PlanarTree> contractions(const PlanarTree& t);
// True when t can be obtained from s by contracting internal edges (s <= t).
bool contracts_to(const PlanarTree& s, const PlanarTree& t);

// Tree with exactly one internal edge whose upper vertex carries leaves l..r.
PlanarTree one_edge_tree(int n, int l, int r);

}  // namespace ncop
