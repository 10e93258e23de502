#pragma once

#include <map>
#include <string>
#include <vector>

namespace ncop {

// Exponents of psi_0 (the root) and psi_1..psi_n on the brick manifold B(n).
struct CorrelatorIndex {
  int d0 = 0;
  std::vector<int> ds;
  int n() const { return static_cast<int>(ds.size()); }
  int total() const;
  auto operator<=>(const CorrelatorIndex&) const = default;
  std::string to_string() const;  // <tau_1 tau_0 tau_0 tau_0>
};

long correlator_closed(const CorrelatorIndex& idx);

enum class InteriorRule { Left, Right };

struct TrrOptions {
  InteriorRule interior = InteriorRule::Left;
  int root_point = 1;  // the i of the root relation, clamped to 1..n-1
  bool prefer_root = false;  // unfold psi_0 before interior powers
  auto operator<=>(const TrrOptions&) const = default;
};

long correlator_trr(const CorrelatorIndex& idx, TrrOptions opt = {});

// Exponent vector (t_0, ..., t_n) -> coefficient.
using Polynomial = std::map<std::vector<int>, long>;
Polynomial generating_polynomial(int n);
std::string to_string(const Polynomial& p);

// All indices of arity n with total degree n-2.
std::vector<CorrelatorIndex> correlator_indices(int n);

}  // namespace ncop
