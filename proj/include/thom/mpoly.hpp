#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thom/errors.hpp"
#include "thom/rational.hpp"
#include "thom/varid.hpp"

namespace thom {

// Exponent list sorted by VarId; every stored exponent is > 0.
struct Monomial {
  std::vector<std::pair<VarId, int>> f;

  int degree() const;
  int exp_of(VarId v) const;
  bool is_one() const { return f.empty(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mono_make(std::initializer_list<std::pair<VarId, int>> fs);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);

// Graded order: total degree decides; ties fall to the earliest variable
// (VarId order) with differing exponent, larger exponent wins.
// Returns <0 if a < b, 0 if equal, >0 if a > b.
int mono_cmp(const Monomial& a, const Monomial& b);

std::string mono_str(const Monomial& m);

// Exact multivariate polynomial over Q. Terms are kept sorted with the
// leading (largest) monomial first.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;

  static MPoly zero() { return MPoly(); }
  static MPoly constant(const Rat& c);
  static MPoly var(VarId v);
  static MPoly term(Monomial m, Rat c);
  // Takes any term list, normalizes (sorts, merges, drops zeros).
  static MPoly from_terms(std::vector<Term> ts);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Zero poly has no leading term.
  const Term& leading() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree() const;  // total degree; -1 for zero
  bool is_homogeneous() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly scaled(const Rat& c) const;
  // this * (c * m), preserving sortedness.
  MPoly shift_scaled(const Monomial& m, const Rat& c) const;
  MPoly pow(int e) const;

  std::set<VarId> vars() const;
  int max_exp(VarId v) const;
  // Terms whose v-exponent is exactly k, with v struck out.
  MPoly coeff_in_var(VarId v, int k) const;

  MPoly subst(const std::map<VarId, MPoly>& a) const;
  MPoly eval_partial(const std::map<VarId, Rat>& a) const;
  // Every variable must be assigned.
  Rat eval(const std::map<VarId, Rat>& a) const;

  // poly == scale * primitive, primitive has coprime integer coefficients
  // and positive leading coefficient. Zero poly: {0, zero}.
  std::pair<Rat, MPoly> primitive() const;

  // Quotient of an exact division; throws NotDivisible otherwise.
  MPoly exact_div(const MPoly& d) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;

  static MPoly merge_add(const MPoly& a, const MPoly& b);
};

MPoly operator*(const Rat& c, const MPoly& p);

// Ordering usable as std::map key (degree, then termwise).
bool poly_less(const MPoly& a, const MPoly& b);
struct PolyLess {
  bool operator()(const MPoly& a, const MPoly& b) const { return poly_less(a, b); }
};

// Balanced pairwise sum; cheaper than folding left for many addends.
MPoly sum_tree(std::vector<MPoly> items);

}  // namespace thom
