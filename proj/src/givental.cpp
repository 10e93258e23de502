#include "ncop/givental.hpp"

#include <sstream>
#include <stdexcept>

#include "ncop/intersection.hpp"
#include "ncop/zoo.hpp"

namespace ncop {

OpFamily associative_family(const Algebra& a) { return {{2, a.m}}; }

std::optional<Witness> hypercom_witness(const GradedSpace& s, const OpFamily& nu, int arity_cap) {
  Presentation p = presentation_of("ncHyperCom", arity_cap);
  for (auto& rel : p.relations) {
    if (rel.is_zero() || rel.arity() > arity_cap) continue;
    MultilinearOp v = evaluate(s, rel, nu);
    if (auto w = first_nonzero(v, rel.arity())) return w;
  }
  return std::nullopt;
}

namespace {

const MultilinearOp* find(const OpFamily& f, int n) {
  auto it = f.find(n);
  return it == f.end() || it->second.is_zero() ? nullptr : &it->second;
}

}  // namespace

OpFamily givental_tau0(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int cap, bool check) {
  if (check)
    if (auto w = hypercom_witness(s, nu, std::min(cap, 4)))
      throw std::invalid_argument("family violates the ncHyperCom relations at " + w->to_string(s));
  OpFamily tau;
  for (int n = 2; n <= cap; ++n) {
    MultilinearOp t(n, r.degree() + 2 * (n - 2));
    if (const MultilinearOp* v = find(nu, n)) {
      t += compose(s, r, 1, *v);
      for (int m = 1; m <= n; ++m) t -= compose(s, *v, m, r);
    }
    tau[n] = t;
  }
  return tau;
}

OpFamily givental_step(const GradedSpace& s, const OpFamily& tau, const OpFamily& nu, int cap) {
  OpFamily out;
  for (int n = 2; n <= cap; ++n) {
    // degree of tau^{(k)}_n is |r| + 2(n-2) - 2k
    int base = tau.count(2) ? tau.at(2).degree() - 2 : 0;
    MultilinearOp t(n, base + 2 * (n - 2));
    for (int sz = 2; sz <= n - 1; ++sz) {
      Q a(sz - 1, n - 1), b(n - sz, n - 1);
      a.canonicalize(), b.canonicalize();
      const MultilinearOp* t_out = find(tau, n - sz + 1);
      const MultilinearOp* v_in = find(nu, sz);
      const MultilinearOp* v_out = find(nu, n - sz + 1);
      const MultilinearOp* t_in = find(tau, sz);
      for (int j = 1; j <= n - sz + 1; ++j) {
        if (t_out && v_in) t += compose(s, *t_out, j, *v_in) * a;
        if (v_out && t_in) t -= compose(s, *v_out, j, *t_in) * b;
      }
    }
    out[n] = t;
  }
  return out;
}

OpFamily givental_tau(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int k, int cap) {
  OpFamily tau = givental_tau0(s, r, nu, cap);
  for (int i = 0; i < k; ++i) tau = givental_step(s, tau, nu, cap);
  return tau;
}

MultilinearOp givental_direct(const Algebra& a, const MultilinearOp& r, int k, int n) {
  const GradedSpace& s = a.space;
  auto corr = [](int d0, int n, int slot, int d) {
    CorrelatorIndex idx{d0, std::vector<int>(n, 0)};
    if (slot > 0) idx.ds[slot - 1] = d;
    return correlator_closed(idx);
  };
  MultilinearOp value(n, r.degree() + 2 * (n - 2 - k));
  Q sk = (k % 2 == 0) ? Q(-1) : Q(1);  // (-1)^{k-1}
  if (long c = corr(k, n, 0, 0)) value += compose(s, r, 1, a.power(n)) * (sk * c);
  for (int m = 1; m <= n; ++m)
    if (long c = corr(0, n, m, k)) value += compose(s, a.power(n), m, r) * Q(c);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n && q - p < n - 1; ++q)
      for (int i = 0; i <= k - 1; ++i) {
        int j = k - 1 - i;
        long c = corr(0, n - q + p, p, j) * corr(i, q - p + 1, 0, 0);
        if (!c) continue;
        MultilinearOp inner = compose(s, r, 1, a.power(q - p + 1));
        value += compose(s, a.power(n - q + p), p, inner) * Q((i % 2 == 0) ? -c : c);
      }
  return value * sk;
}

OpFamily k0_action(const GradedSpace& s, const MultilinearOp& r, const OpFamily& nu, int cap) {
  OpFamily t = givental_tau0(s, r, nu, cap, false);
  for (auto& [n, op] : t) op = op * Q(-1);
  return t;
}

std::string PreservationReport::to_string(const GradedSpace& s) const {
  if (preserved) return "preserved";
  return "not preserved, witness " + (witness ? witness->to_string(s) : std::string("?"));
}

PreservationReport preserves_associative(const Algebra& a, const EndoSeries& r) {
  PreservationReport rep;
  for (int l = 0; l < static_cast<int>(r.size()); ++l) {
    if (r[l].is_zero()) continue;
    if (auto w = first_nonzero(borjeson(a, r[l], l + 2), l)) {
      rep.preserved = false;
      rep.witness = w;
      return rep;
    }
  }
  return rep;
}

PreservationReport preserves_associative_direct(const Algebra& a, const EndoSeries& r, int cap) {
  PreservationReport rep;
  for (int l = 0; l < static_cast<int>(r.size()); ++l) {
    if (r[l].is_zero()) continue;
    for (int n = 2; n <= cap; ++n)
      if (auto w = first_nonzero(givental_direct(a, r[l], l, n), l)) {
        rep.preserved = false;
        rep.witness = w;
        return rep;
      }
  }
  return rep;
}

}  // namespace ncop
