#pragma once

#include <map>
#include <string>
#include <vector>

#include "thom/algebra.hpp"
#include "thom/euler.hpp"
#include "thom/ideals.hpp"
#include "thom/schur.hpp"

namespace thom {

// Thom polynomial for germs (C^n,0) -> (C^p,0) in the Chern roots
// alpha_1..alpha_n (source) and beta_1..beta_p (target).
struct RootForm {
  int n = 0, p = 0;
  MPoly poly;

  int codim() const { return poly.is_zero() ? 0 : poly.degree(); }
};

// Stable form at offset l = p - n: expansion in the Delta basis of the
// quotient variables c_1, c_2, ... All partitions share weight codim().
struct QuotientForm {
  int l = 0;
  SchurExpansion expansion;

  int codim() const;
  MPoly to_poly() const { return expansion.to_poly(); }

  friend bool operator==(const QuotientForm&, const QuotientForm&) = default;
};

// Thom series: coefficients of the width-mu d-monomials, valid for every
// offset l at once under d_i = c_{i+l+1}. Keys are descending index vectors
// with exactly mu entries (d_0 factors written out); each key sums to
// degree = gamma - mu. Terms whose largest index exceeds truncation are not
// stored.
struct ThomSeries {
  int mu = 0;
  int degree = 0;
  int truncation = 0;
  std::map<std::vector<int>, Rat> terms;

  std::string to_string() const;
};

// Fixed-point localization: sums res(beta_1..beta_p | W_{Q_I}) / e(Q,I) over
// the codimension-mu monomial ideals in n variables, one symmetrized orbit
// per canonical class; classes needing more than n variables or carrying an
// infinite Euler class contribute nothing. The sum is certified polynomial.
// Requires p >= n >= 1.
RootForm localize_tp(const AlgebraId& q, int n, int p, const EulerTable& table);

// Substitutes each beta_i by the weight of f's i-th coordinate monomial;
// the alphas stay. f must have exactly tp.p coordinates on tp.n variables.
MPoly restrict_tp(const RootForm& tp, const MonomialGerm& f);

// res(W_f | quotient_weights(ideal_of(f))) / restrict_tp(tp, f); a vanishing
// restriction marks a fixed point outside the closure and yields the
// infinite class.
FactoredRat euler_via_interpolation(const RootForm& tp, const MonomialGerm& f);

// Builds a fresh Euler table for q from one known stable Thom polynomial at
// offset l0: every canonical class on fewer than mu variables is probed with
// a monomial germ made of its minimal generators, padded to n + l0
// coordinates by repeating the highest-degree generator. The M^2 class is
// left to reciprocity. Requires l0 large enough that every class fits.
EulerTable extrapolate_table(const AlgebraId& q, const QuotientForm& known_tp);

// Substitutes the quotient variables c_k by the degree-k coefficients of
// prod(1 + beta_i t) / prod(1 + alpha_j t).
MPoly rho(int n, int p, const MPoly& h);

// Inverts rho on the graded piece of tp's degree: returns the unique
// c-polynomial h with rho(h) = tp, as a Delta expansion at l = p - n.
// Requires codim < (n+1)(p+1), the bound below which rho is injective.
// Throws NotSupersymmetric when no such h exists.
QuotientForm to_quotient(const RootForm& tp);

// True iff tp is symmetric in the alphas, symmetric in the betas, and
// becomes independent of t under alpha_n = beta_p = t. Exactly the
// polynomials with this property lie in the image of rho.
bool supersymmetry_check(const RootForm& tp);

// Width-m lowering: pads every c-monomial with c_0 factors to length m,
// then shifts each index down by one (c_0 survives as 1, c_{-1} kills the
// term). Throws when a monomial has more than m factors.
MPoly lower(const MPoly& h, int m);

// Lowering on the stable form: drops the offset by one.
QuotientForm lower_form(const QuotientForm& f, int m);

// Assembles the d-monomial coefficients with largest index <= index_bound
// from localization runs at offsets 0..l*+1, verifying along the way that
// each consecutive pair is related by width-mu lowering.
ThomSeries thom_series(const AlgebraId& q, const EulerTable& table,
                       int index_bound);

// Delta_{(n+l)^n}, the stable Thom polynomial of the corank-n locus.
QuotientForm porteous(int n, int l);

// Root form of the class of germs whose ideal lies in the d-th power of the
// maximal ideal: res(beta_1..beta_p | all weights of degree 1..d-1).
// Requires p large enough for the degree-d power germ to exist.
RootForm sigma_power_tp(int n, int d, int p);

// Root form of the subgrassmannian cycle: the corank-n base times the sum
// over d-element sets S of degree-(k+1) weights of [E_S]/e_S. Certified
// polynomial. Requires d < dim Sym^{k+1}; the base needs p >= that dim.
RootForm subgrassmannian_tp(int n, int k, int d, int p);

// tp_{I_{a,b}}(0) from tp_{III_{a,b}}(1) by one width-(a+b-2) lowering.
QuotientForm iab_from_iiiab(const QuotientForm& tp_iii_at_1, int a, int b);

}  // namespace thom
