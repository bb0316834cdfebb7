#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "thom/mpoly.hpp"

using namespace thom;

namespace {

MPoly A(unsigned i) { return MPoly::var(alpha(i)); }
MPoly B(unsigned i) { return MPoly::var(beta(i)); }

// Reference polynomial on a dense exponent cube, for cross-checking the
// sparse arithmetic against naive convolution.
using Dense = std::map<std::vector<int>, Rat>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r[m] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

Dense to_dense(const MPoly& p, const std::vector<VarId>& vs) {
  Dense r;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) e[i] = m.exp_of(vs[i]);
    r[e] = c;
  }
  return r;
}

MPoly random_poly(std::mt19937& rng, const std::vector<VarId>& vs, int nterms,
                  int maxexp) {
  std::uniform_int_distribution<int> de(0, maxexp), dc(-6, 6);
  std::vector<MPoly::Term> ts;
  for (int i = 0; i < nterms; ++i) {
    Monomial m;
    for (VarId v : vs) {
      int e = de(rng);
      if (e) m.f.emplace_back(v, e);
    }
    std::sort(m.f.begin(), m.f.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    ts.emplace_back(std::move(m), Rat(dc(rng)));
  }
  return MPoly::from_terms(std::move(ts));
}

}  // namespace

TEST_CASE("monomial order is graded and total") {
  Monomial one;
  Monomial a1 = mono_make({{alpha(1), 1}});
  Monomial a2 = mono_make({{alpha(2), 1}});
  Monomial a1a2 = mono_make({{alpha(1), 1}, {alpha(2), 1}});
  Monomial a2sq = mono_make({{alpha(2), 2}});
  CHECK(mono_cmp(a1, one) > 0);
  CHECK(mono_cmp(a1, a2) > 0);
  CHECK(mono_cmp(a1a2, a2sq) > 0);
  CHECK(mono_cmp(a2sq, a1) > 0);  // degree wins
  CHECK(mono_cmp(a1a2, a1a2) == 0);
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(20240817);
  std::vector<VarId> vs = {alpha(1), alpha(2), beta(1)};
  for (int trial = 0; trial < 25; ++trial) {
    MPoly p = random_poly(rng, vs, 6, 3);
    MPoly q = random_poly(rng, vs, 6, 3);
    MPoly r = random_poly(rng, vs, 4, 3);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p - p == MPoly::zero());
    CHECK(dense_mul(to_dense(p, vs), to_dense(q, vs)) == to_dense(p * q, vs));
  }
}

TEST_CASE("binomial expansion") {
  MPoly p = (A(1) + A(2)).pow(3);
  MPoly expect = A(1).pow(3) + Rat(3) * A(1).pow(2) * A(2) +
                 Rat(3) * A(1) * A(2).pow(2) + A(2).pow(3);
  CHECK(p == expect);
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 3);
}

TEST_CASE("substitution and evaluation") {
  MPoly p = A(1) * A(1) - B(1) * A(2) + MPoly::constant(rat(1, 2));
  std::map<VarId, MPoly> sub{{alpha(1), A(2) + B(1)}};
  MPoly q = p.subst(sub);
  std::map<VarId, Rat> pt{{alpha(1), rat(3)}, {alpha(2), rat(-2)}, {beta(1), rat(5)}};
  std::map<VarId, Rat> pt2{{alpha(2), rat(-2)}, {beta(1), rat(5)}};
  // q(a2,b1) == p(a2+b1, a2, b1)
  Rat lhs = q.eval(pt2);
  std::map<VarId, Rat> pt3{{alpha(1), rat(-2) + rat(5)}, {alpha(2), rat(-2)}, {beta(1), rat(5)}};
  CHECK(lhs == p.eval(pt3));
  CHECK(p.eval(pt) == rat(9) - rat(5) * rat(-2) + rat(1, 2));
}

TEST_CASE("coeff_in_var extracts polynomial coefficients") {
  MPoly p = B(1).pow(2) * A(1) + B(1) * (A(2) + A(1)) + A(2).pow(2);
  CHECK(p.coeff_in_var(beta(1), 2) == A(1));
  CHECK(p.coeff_in_var(beta(1), 1) == A(2) + A(1));
  CHECK(p.coeff_in_var(beta(1), 0) == A(2).pow(2));
  CHECK(p.coeff_in_var(beta(1), 3) == MPoly::zero());
  CHECK(p.max_exp(beta(1)) == 2);
}

TEST_CASE("primitive normalization") {
  MPoly p = rat(-4, 6) * A(1) + rat(2, 9) * A(2);
  auto [scale, prim] = p.primitive();
  CHECK(scale * prim == p);
  CHECK(prim.leading().second > 0);
  // -2/3 a1 + 2/9 a2 = -2/9 * (3 a1 - a2)
  CHECK(prim == Rat(3) * A(1) - A(2));
  CHECK(scale == rat(-2, 9));
}

TEST_CASE("exact division") {
  MPoly d = A(1) - Rat(2) * A(2);
  MPoly q = (A(1) + A(2)).pow(2) * B(1) + MPoly::constant(3);
  MPoly n = d * q;
  CHECK(n.exact_div(d) == q);
  CHECK_THROWS_AS((n + MPoly::constant(1)).exact_div(d), NotDivisible);
  CHECK_THROWS_AS((n + A(1)).exact_div(d), NotDivisible);

  // Dividing a dense product back out, factor by factor, in both orders.
  std::vector<MPoly> fs = {A(1) - Rat(2) * A(2), A(2) + A(3),
                           Rat(3) * A(1) - A(3), A(1) + A(2) - A(3),
                           A(1) - A(2) - A(3)};
  MPoly prod = MPoly::constant(rat(7, 5));
  for (const MPoly& f : fs) prod *= f.pow(2);
  MPoly rest = prod;
  for (const MPoly& f : fs) rest = rest.exact_div(f);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) rest = rest.exact_div(*it);
  CHECK(rest == MPoly::constant(rat(7, 5)));
  CHECK_THROWS_AS(prod.exact_div(A(1) - A(2)), NotDivisible);
}

TEST_CASE("string form is deterministic and readable") {
  MPoly p = A(1).pow(2) - Rat(2) * A(1) * A(2) + MPoly::constant(rat(1, 3));
  CHECK(p.to_string() == "a1^2 - 2*a1*a2 + 1/3");
  CHECK(MPoly::zero().to_string() == "0");
  CHECK((-A(1)).to_string() == "-a1");
}

TEST_CASE("sum_tree equals sequential sum") {
  std::mt19937 rng(7);
  std::vector<VarId> vs = {alpha(1), beta(1)};
  std::vector<MPoly> items;
  MPoly seq;
  for (int i = 0; i < 17; ++i) {
    MPoly p = random_poly(rng, vs, 4, 4);
    seq += p;
    items.push_back(p);
  }
  CHECK(sum_tree(items) == seq);
}
