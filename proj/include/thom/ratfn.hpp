#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thom/mpoly.hpp"

namespace thom {

// A multiset of linear forms (weights of a torus representation).
using WeightSet = std::vector<MPoly>;

// prod_{s in S, t in T} (s - t); empty product is 1.
MPoly resultant(const WeightSet& S, const WeightSet& T);

// A rational function kept as scale * prod(nfac^e) / prod(dfac^e) with
// primitive factors, or the formal value "infinity" (used by Euler tables:
// 1/inf contributes 0 to localization sums).
struct FactoredRat {
  bool inf = false;
  Rat scale = 0;
  std::vector<std::pair<MPoly, int>> nfac;
  std::vector<std::pair<MPoly, int>> dfac;

  static FactoredRat infinite();
  static FactoredRat from_scalar(const Rat& c);
  static FactoredRat from_poly(const MPoly& p);
  // prod (s - t) as a factored value.
  static FactoredRat resultant_factored(const WeightSet& S, const WeightSet& T);

  bool is_zero() const { return !inf && scale == 0; }

  FactoredRat mul(const FactoredRat& o) const;
  FactoredRat div(const FactoredRat& o) const;
  FactoredRat add(const FactoredRat& o) const;  // both sides must be expandable
  FactoredRat neg() const;
  FactoredRat pow(int e) const;  // negative e flips

  // scale * prod nfac; requires dfac empty.
  MPoly expand() const;
  // Numerator/denominator as expanded polynomials (den == 1 when dfac empty).
  MPoly expand_num() const;
  MPoly expand_den() const;

  // Exact evaluation; throws InfiniteClass when inf, MathError on vanishing
  // denominator factor.
  Rat eval(const std::map<VarId, Rat>& a) const;

  // Degree of a quotient of homogeneous factors.
  int degree() const;

  // Substitute variables (used for orbit transport of table entries).
  FactoredRat subst(const std::map<VarId, MPoly>& a) const;

  std::string to_string() const;

  // Merge a primitive factor into the numerator/denominator list, then
  // strike common factors. Building blocks for engine code.
  void push_nfac(const MPoly& p, int e);
  void push_dfac(const MPoly& p, int e);
  void cancel();
};

// Rational function with expanded numerator and factored denominator;
// the workhorse for localization sums that must collapse to polynomials.
class RatFn {
 public:
  RatFn() = default;

  static RatFn zero() { return RatFn(); }
  static RatFn from_poly(MPoly p);
  static RatFn from_factored(const FactoredRat& f);

  bool is_infinite() const { return inf_; }
  bool is_zero() const { return !inf_ && num_.is_zero(); }

  const MPoly& num() const { return num_; }
  const std::map<MPoly, int, PolyLess>& den() const { return den_; }

  RatFn add(const RatFn& o) const;
  RatFn sub(const RatFn& o) const;
  RatFn neg() const;
  RatFn mul_poly(const MPoly& p) const;
  RatFn mul_factored(const FactoredRat& f) const;
  RatFn div_factored(const FactoredRat& f) const;
  RatFn scaled(const Rat& c) const;

  // Move denominator factors that divide the numerator into it.
  void reduce();

  bool is_polynomial() const;  // after reduce: den empty
  MPoly as_poly() const;       // throws MathError if not a polynomial

  bool equals(const RatFn& o) const;

  Rat eval(const std::map<VarId, Rat>& a) const;

  // Denominator factors as a FactoredRat (for reciprocals): 1/this.
  FactoredRat reciprocal_factored() const;

  // num / prod(den-factor^mult), reduced. Factors need not be primitive.
  static RatFn from_num_den(MPoly num, const std::vector<std::pair<MPoly, int>>& den);

  // Rename variables by permutation of one namespace: i -> perm[i-1].
  RatFn permuted(VarNS ns, const std::vector<int>& perm) const;

  std::string to_string() const;

 private:
  bool inf_ = false;
  MPoly num_;
  std::map<MPoly, int, PolyLess> den_;

  void mul_den_factor(const MPoly& prim, int e);
};

// Balanced pairwise sum with cancellation at each merge.
RatFn ratfn_sum_tree(std::vector<RatFn> items);

// (1/stab) * sum over all permutations of a_1..a_n (or the given namespace).
RatFn symmetrize(const RatFn& f, int n, int stabilizer_order,
                 VarNS ns = VarNS::Alpha);

// Same sum for a factored input, assembled over the orbit-lcm denominator:
// that multiset is permutation-invariant, so every summand's numerator is a
// signed permutation of one fixed polynomial. Far cheaper than pairwise
// merging when the orbit is large.
RatFn symmetrize_factored(const FactoredRat& f, int n, int stabilizer_order,
                          VarNS ns = VarNS::Alpha);

// sum over permutations of z_1..z_mu with sign.
RatFn asymmetrize(const RatFn& f, int mu, VarNS ns = VarNS::Z);

MPoly permute_poly(const MPoly& p, VarNS ns, const std::vector<int>& perm);

}  // namespace thom
