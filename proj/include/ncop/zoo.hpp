#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncop/groebner.hpp"

namespace ncop {

struct NamedOperad {
  std::string name;
  Presentation presentation;
  MonomialOrder preferred_order;
  // Closed-form graded dimension of arity n, when known.
  std::function<std::optional<std::map<int, long>>(int)> expected_dims;
  // Closed-form total dimension of arity n, when only the total is known.
  std::function<std::optional<long>(int)> expected_total;
  // Largest homological degree worth scanning in arity n (for the oracle).
  std::function<int(int)> max_degree;
  std::function<int(int)> min_degree;
};

// Names: As, As_M, ncGerst, ncBV3, ncBV2, qncBV, ncGrav, ncHyperCom,
// tAs<k>, pAs<k>, 2ncGerst, D. Families with one generator per arity
// (ncGrav, ncHyperCom) are truncated at arity_cap.
NamedOperad named_operad(const std::string& name, int arity_cap = 7);
Presentation presentation_of(const std::string& name, int arity_cap = 7);
std::vector<std::string> zoo_names();

// As_M for a finite graded basis: generators (name, degree), all binary.
Presentation as_m(const std::vector<std::pair<std::string, int>>& basis);

// Generator ids inside the ncGerst alphabet.
constexpr int kGerstM = 0;
constexpr int kGerstB = 1;

// m^{(k)}: right comb of k copies of m (k = 0 gives the identity).
Element right_comb(int k, int m_id, const Alphabet& a);
Element expand_lambda(int k);  // over the ncGerst alphabet

// Images of lambda_2..lambda_cap for apply_morphism on ncGrav monomials.
std::vector<Element> lambda_images(int cap);

struct D1H1Report {
  int n = 0;
  int basis_size = 0;
  bool anticommutator_ok = false;  // D1 H1 + H1 D1 = (n-1) id
  bool square_zero = false;        // D1^2 = 0
  int rank_d1 = 0;
  int dim_ker_d1 = 0;
  int lambda_span = 0;          // dimension of the span of lambda-monomial images
  bool lambda_in_kernel = false;
  bool ok() const;
};
D1H1Report d1_h1_check(int n);

struct CertRow {
  int arity = 0, degree = 0;
  bool total = false;  // row sums all degrees of the arity
  long groebner = 0, brute = 0, closed = 0;
  bool agree() const { return groebner == brute && brute == closed; }
};

struct Certificate {
  std::string name;
  int n_min = 0, n_max = 0;
  bool ok = true;
  std::string first_failure;
  std::vector<CertRow> rows;
  std::string json() const;
};

// Groebner, brute-force and closed-form dimensions, triple-wise compared.
Certificate certify_dimensions(const std::string& name, int n_max, int n_min = 2);

// Coefficients of q^2 f^2 - f (1 - z + z q^2) + z for the series
// f = sum_n sum_k dim ncHyperCom(n)_{2k} q^{2k} z^{n-1}... truncated at z^zmax.
bool hypercom_functional_equation(const std::map<int, std::map<int, long>>& dims, int zmax);

long binomial(int n, int k);
long catalan(int n);
long narayana(int n, int k);  // (1/(n-1)) C(n-1,k) C(n-1,k+1)

}  // namespace ncop
