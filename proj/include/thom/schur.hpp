#pragma once

#include <map>
#include <string>
#include <vector>

#include "thom/mpoly.hpp"
#include "thom/partitions.hpp"
#include "thom/ratfn.hpp"

namespace thom {

// Expansion in the basis of quotient-variable Schur determinants Delta_lambda.
struct SchurExpansion {
  std::map<Partition, Rat> coeffs;  // ascending lexicographic, no zeros

  MPoly to_poly() const;
  bool nonneg_integer() const;
  std::string to_string() const;  // e.g. "Δ_{1,1} + 2Δ_{2}"

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

// e_0..e_|xs| of the alphabet.
std::vector<MPoly> elementary_symmetric(const WeightSet& xs);

// det(c_{lambda_i + j - i}), c_0 = 1, c_{<0} = 0.
MPoly delta_quotient(const Partition& lambda);

// det(sigma_{lambda_i + j - i}(xs)) with elementary sigma, sigma_{>|xs|} = 0.
// Equals the Schur polynomial of the conjugate partition in xs; in
// particular it vanishes exactly when lambda_1 > |xs|.
MPoly delta_alphabet(const Partition& lambda, const WeightSet& xs);

// Raw index sequences straighten to 0 or +-Delta of a true partition.
MPoly delta_quotient_seq(const std::vector<int>& seq);
MPoly delta_alphabet_seq(const std::vector<int>& seq, const WeightSet& xs);

// Inverse of delta_quotient on each graded piece (deg c_i = i).
SchurExpansion schur_expand(const MPoly& p);

// c_0..c_kmax of the formal difference of bundles with Chern roots
// betas (numerator) and alphas (denominator):
// sum c_k t^k = prod(1 + t*beta) / prod(1 + t*alpha).
std::vector<MPoly> chern_series_coeffs(const WeightSet& alphas,
                                       const WeightSet& betas, int kmax);

// Checks det-identity: Delta_{p^n+lambda, mu} evaluated at the difference
// alphabet equals res(B_p|A_n) * Delta_mu(B_p) * (-1)^{|lambda|} *
// Delta_{conj(lambda)}(A_n).
bool factorization_identity(int n, int p, const Partition& lambda,
                            const Partition& mu);

// Checks Delta_mu(x_1..x_m) = sum_{|H|=s} Delta_{(s^{m-s},mu)}(x_H) /
// res(x_H | x_complement) for mu_1 <= s <= m.
bool gustafson_milne_identity(int m, int s, const Partition& mu,
                              const WeightSet& alphabet);

}  // namespace thom
