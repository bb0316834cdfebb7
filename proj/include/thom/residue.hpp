#pragma once

#include <array>
#include <map>
#include <vector>

#include "thom/engine.hpp"

namespace thom {

// Rational generating function scale * numerator(z) / prod_a omega_a with
// omega_a = z_{i_a} + z_{j_a} - z_{s_a}, i <= j < s. Every factor has a
// dominant variable z_s in the expansion region |z_1| << ... << |z_mu|.
struct GeneratingFunction {
  int mu = 0;
  Rat scale = 1;
  MPoly numerator = MPoly::constant(1);
  std::vector<std::array<int, 3>> denominator;

  // catalog entries satisfy degree() == gamma - binom(mu+1, 2)
  int degree() const {
    return numerator.degree() - static_cast<int>(denominator.size());
  }
  FactoredRat to_factored() const;
};

// Laurent data in the expansion region: z-exponent vector -> coefficient.
struct LaurentSlice {
  int truncation = 0;  // exponent vectors with an entry below -truncation
                       // were discarded
  std::map<std::vector<int>, MPoly> terms;
};

// prefactor * k as a Laurent series in the expansion region, each 1/omega
// unrolled geometrically against its dominant variable; keeps exponent
// vectors with every entry >= -truncation.
LaurentSlice laurent_expand(const GeneratingFunction& k, const MPoly& prefactor,
                            int truncation);

// c_0/z_j^0 + c_1/z_j^1 + ... + c_truncation/z_j^truncation as a slice in
// mu variables.
LaurentSlice d_series(int j, int mu, int truncation);

// Residue of k * dis_mu * prod_i z_i^l D_i at the simultaneous coefficient
// of prod z_i^(-1): a polynomial in c-variables with at most mu factors per
// term, of degree mu*l + gamma when k has the catalog degree. The free
// orientation of the residue is fixed by making the coefficient of the
// lexicographically largest Schur summand positive.
MPoly iterated_residue(const GeneratingFunction& k, int l);

// Generating functions for the powers of the maximal ideal and for the
// symmetric-square family; mu is r resp. m + 1.
GeneratingFunction kq_sigma(int r);
GeneratingFunction kq_phi(int m, int r);

// The shipped catalog: A_1..A_3, Sigma^2..Sigma^4, I_{2,2}, I_{2,3},
// III_{2,3}, III_{2,4}, III_{3,3}, Sigma^{2,1}, and the Phi family with
// mu <= 4. Representatives are not canonical: distinct functions can
// generate the same series.
std::map<AlgebraId, GeneratingFunction> kq_catalog();

// iterated_residue against the quotient form of the localization pipeline
// (table-driven, or the closed formula for the symmetric-square family)
// for every offset l <= l_max.
bool residue_vs_localization(const AlgebraId& q, int l_max,
                             const EulerTable& table);

// Asym_mu(k_Q) = +- dis_mu / e(Q, M_mu^2)|_{a_i := z_i}, cross-multiplied
// exactly; the M^2 row is reciprocity-completed when the table lacks it.
bool asym_consistency(const AlgebraId& q, const EulerTable& table);

}  // namespace thom
