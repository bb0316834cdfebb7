#pragma once

#include <set>
#include <string>
#include <vector>

#include "thom/mpoly.hpp"
#include "thom/ratfn.hpp"

namespace thom {

// Exponent vector of a monomial; length equals the ambient variable count.
using Expo = std::vector<int>;

int expo_degree(const Expo& e);

// Finite-codimension monomial ideal, stored by its staircase: the standard
// monomials of degree >= 1 outside the ideal. Divisor-closed by invariant.
struct MonomialIdeal {
  int n = 0;
  std::set<Expo> complement;  // each exponent vector has length n

  int codim() const { return static_cast<int>(complement.size()); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n != b.n ? a.n < b.n : a.complement < b.complement;
  }
};

// Validates divisor closure and vector lengths.
MonomialIdeal make_ideal(int n, std::set<Expo> complement);

// Monomial map germ (C^n,0) -> (C^p,0): p coordinate monomials, repeats
// allowed, each of degree >= 1.
struct MonomialGerm {
  int n = 0;
  std::vector<Expo> coords;  // one per target coordinate

  int p() const { return static_cast<int>(coords.size()); }
};

// All codimension-m monomial ideals in n variables, deterministic order.
std::vector<MonomialIdeal> enumerate_ideals(int n, int m);

struct CanonicalRep {
  MonomialIdeal ideal;      // on its minimal variable set, lex-least form
  int n_min = 0;            // number of variables actually used
  int stabilizer_order = 1; // |{sigma in S_{n_min} : sigma(I) = I}|
};

// One representative per variable-permutation orbit of codimension-m ideals,
// on the minimal variable count, ordered by (n_min, complement).
std::vector<CanonicalRep> canonical_representatives(int m);

// Positive quotient weights: {sum a_j alpha_j : x^a in complement}.
WeightSet quotient_weights(const MonomialIdeal& I);

// Weights of the coordinate monomials of a germ.
WeightSet germ_weights(const MonomialGerm& f);

// The monomial ideal generated by the germ's coordinates; throws
// ValidationError when the codimension is infinite.
MonomialIdeal ideal_of(const MonomialGerm& f);

// Same staircase, one more ambient variable (the ideal gains x_{n+1}).
MonomialIdeal descendant(const MonomialIdeal& I);

// res(alpha_{n+1} | quotient_weights(I)), expanded.
MPoly suspension_factor(const MonomialIdeal& I);
FactoredRat suspension_factor_factored(const MonomialIdeal& I);

// The unique minimal monomial generating set, descending-lex order.
std::vector<Expo> min_generators(const MonomialIdeal& I);

// |{sigma in S_n : sigma(complement) = complement}|.
int stabilizer_order(const MonomialIdeal& I);

// Relabels variable j as perm[j] (0-based); the Euler class transports the
// same way, alpha_{j+1} -> alpha_{perm[j]+1}.
MonomialIdeal permuted_ideal(const MonomialIdeal& I,
                             const std::vector<int>& perm);

// Restriction to the variables that actually appear, in their original order.
MonomialIdeal compact_support(const MonomialIdeal& I);

// Text forms: "(x^2,xy,y^3)"; variables x,y,z,u for n <= 4, x1..x9 beyond.
MonomialIdeal parse_ideal(const std::string& s);
std::string ideal_str(const MonomialIdeal& I);
MonomialGerm parse_germ(const std::string& s, int n = -1);
std::string germ_str(const MonomialGerm& f);

}  // namespace thom
