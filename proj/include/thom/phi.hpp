#pragma once

#include <vector>

#include "thom/engine.hpp"

namespace thom {

// Coefficient ((I)) of the symmetric-square Segre series, indexed by a
// strictly decreasing sequence of nonnegative integers. Sequences outside
// that pattern count as 0; the empty sequence counts as 1. Defined by
//   r*((I)) - 2*sum_k ((..., i_k - 1, ...)) = 0          if i_r > 0,
//                                           = ((i_1..i_{r-1})) if i_r = 0,
// memoized; the value is always a nonnegative integer.
Rat segre_coeff(const std::vector<int>& I);

// Expands 1/prod_{i<=j}(1 - a_i - a_j) in n variables as a power series and
// compares it, degree by degree through degree_bound, with
// sum_I ((I)) * Delta_{conj(I - rho_{n-1})}(a) over strictly decreasing
// length-n sequences I. Small n only.
bool segre_series_check(int n, int degree_bound);

// Root form of the second-order-osculating degeneracy class for target
// corank r, summed over the fixed lines of the projectivized symmetric
// square: res(B_p|A_n) * sum_{i<=j} [E_ij]/e_ij * [X]|_ij with
// [E_ij] = res(B_p|{a_i+a_j}), e_ij the tangent weights at the fixed line,
// and [X]|_ij = 2^r Delta_{rho_r}(a_1-(a_i+a_j)/2, ..., a_n-(a_i+a_j)/2).
// Certified to collapse to a polynomial.
RootForm phi_tp_localized(int n, int r, int p);

// Quotient form of the same class, corank parameters (m, s = m - r), as an
// explicit nonnegative combination sum_I ((I)) * Delta_{I'} with
// I' = (l+1+i_1, ..., l+s+i_s, (l+m)^(m-s), l+m+1-s-|I|), formally summed
// over all strictly decreasing I >= 0; straightening removes the strays.
QuotientForm phi_tp_schur(int m, int s, int l);

// (m+1)l + binom(m+1,2) + binom(r+1,2) + 1.
int phi_codim(int m, int r, int l);

// Lowers the (n, n-1) member at offset l down its whole quotient chain,
// l+1 steps of length n+1, and compares with 2^(n-1) Delta_{(n-1)^n}: the
// degeneracy class of the degree-2 Veronese cone.
bool veronese_check(int n, int l);

}  // namespace thom
