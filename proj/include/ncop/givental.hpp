#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncop/borjeson.hpp"
#include "ncop/multilinear.hpp"

namespace ncop {

// r(z) = sum r_l z^l; z has degree 2, so r_l z^l has degree |r_l| + 2l.
using EndoSeries = std::vector<MultilinearOp>;

// nu_2 = m and nu_k = 0 for k > 2.
OpFamily associative_family(const Algebra& a);

// Evaluates the ncHyperCom relations on nu up to the given arity; the first
// nonzero relation is returned as a witness.
std::optional<Witness> hypercom_witness(const GradedSpace& s, const OpFamily& nu, int arity_cap);

// tau^{(0)}_n = r ∘_1 nu_n - sum_m nu_n ∘_m r, for 2 <= n <= cap.
OpFamily givental_tau0(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int cap, bool check = true);

// One step of the recursion, one term per (interval size s, slot j):
// tau'_n = sum (s-1)/(n-1) tau_{n-s+1} ∘_j nu_s - (n-s)/(n-1) nu_{n-s+1} ∘_j tau_s.
OpFamily givental_step(const GradedSpace& s, const OpFamily& tau, const OpFamily& nu, int cap);
OpFamily givental_tau(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int k, int cap);

// tau^{(k)}_n read off the action of r z^k on the ncCohFT of an associative
// algebra (every class in degree 0), with psi integrals supplied by the
// correlator closed form.
MultilinearOp givental_direct(const Algebra& a, const MultilinearOp& r, int k, int n);

// Infinitesimal action of r at k = 0 on any family: nu_n ∘ r - r ∘ nu_n.
OpFamily k0_action(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int cap);

struct PreservationReport {
  bool preserved = true;
  std::optional<Witness> witness;  // index = l, tuple of b_{l+2}^{r_l}
  std::string to_string(const GradedSpace& s) const;
};
// Each r_l must have noncommutative order at most l+1.
PreservationReport preserves_associative(const Algebra& a, const EndoSeries& r);
// Vanishing of tau^{(l)}_n (direct evaluation) for 3 <= n <= cap and every l.
PreservationReport preserves_associative_direct(const Algebra& a, const EndoSeries& r, int cap);

}  // namespace ncop
