#include "thom/phi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "thom/partitions.hpp"

namespace thom {

namespace {

bool segre_pattern(const std::vector<int>& I) {
  for (size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 0) return false;
    if (k + 1 < I.size() && I[k] <= I[k + 1]) return false;
  }
  return true;
}

std::string seq_str(const std::vector<int>& I) {
  std::string s = "(";
  for (size_t k = 0; k < I.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(I[k]);
  }
  return s + ")";
}

WeightSet alpha_vars(int n) {
  WeightSet w;
  for (int i = 1; i <= n; ++i) w.push_back(MPoly::var(alpha(i)));
  return w;
}

WeightSet beta_vars(int p) {
  WeightSet w;
  for (int i = 1; i <= p; ++i) w.push_back(MPoly::var(beta(i)));
  return w;
}

// Truncates to total degree <= bound.
MPoly truncate(const MPoly& p, int bound) {
  std::vector<std::pair<Monomial, Rat>> kept;
  for (const auto& [m, c] : p.terms())
    if (m.degree() <= bound) kept.emplace_back(m, c);
  return MPoly::from_terms(std::move(kept));
}

// Enumerates strictly decreasing nonnegative sequences of length s with
// entry sum at most bound.
template <typename F>
void each_segre_index(int s, int bound, F&& visit) {
  std::vector<int> cur(s);
  auto rec = [&](auto&& self, int k, int prev, int rem) -> void {
    if (k == s) {
      visit(cur);
      return;
    }
    int tail = s - 1 - k;
    int mintail = tail * (tail - 1) / 2;
    int hi = std::min(prev - 1, rem - mintail);
    for (int v = tail; v <= hi; ++v) {
      cur[k] = v;
      self(self, k + 1, v, rem - v);
    }
  };
  rec(rec, 0, bound + 1, bound);
}

}  // namespace

Rat segre_coeff(const std::vector<int>& I) {
  if (!segre_pattern(I)) return 0;
  if (I.empty()) return 1;
  static std::map<std::vector<int>, Rat> cache;
  auto it = cache.find(I);
  if (it != cache.end()) return it->second;
  int r = static_cast<int>(I.size());
  Rat acc = 0;
  for (int k = 0; k < r; ++k) {
    std::vector<int> J = I;
    --J[k];
    acc += segre_coeff(J);
  }
  acc *= 2;
  if (I.back() == 0) acc += segre_coeff({I.begin(), I.end() - 1});
  Rat v = acc / r;
  if (v.get_den() != 1 || v < 0)
    throw MathError("segre_coeff: recursion left the nonnegative integers at " +
                    seq_str(I));
  cache[I] = v;
  return v;
}

bool segre_series_check(int n, int degree_bound) {
  if (n < 1 || n > 4 || degree_bound < 0)
    throw ValidationError("segre_series_check: need 1 <= n <= 4 and a "
                          "nonnegative degree bound");
  WeightSet a = alpha_vars(n);

  MPoly lhs = MPoly::constant(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      MPoly w = MPoly::var(alpha(i)) + MPoly::var(alpha(j));
      MPoly geom = MPoly::constant(1), pw = MPoly::constant(1);
      for (int k = 1; k <= degree_bound; ++k) {
        pw = pw * w;
        geom = geom + pw;
      }
      lhs = truncate(lhs * geom, degree_bound);
    }

  Partition rho = staircase(n - 1);
  MPoly rhs = MPoly::zero();
  each_segre_index(n, degree_bound + weight(rho), [&](const std::vector<int>& I) {
    std::vector<int> mu(n);
    for (int k = 0; k < n; ++k) mu[k] = I[k] - part_get(rho, k + 1);
    rhs = rhs + segre_coeff(I) *
                    delta_alphabet(conjugate(normalize_partition(mu)), a);
  });

  return lhs == rhs;
}

RootForm phi_tp_localized(int n, int r, int p) {
  if (n < 1 || r < 0 || r >= n || p < n)
    throw ValidationError("phi_tp_localized: need 0 <= r < n <= p");

  std::vector<MPoly> wsum;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      wsum.push_back(MPoly::var(alpha(i)) + MPoly::var(alpha(j)));

  WeightSet betas = beta_vars(p);
  Rat half(1, 2);
  half.canonicalize();
  Rat two_r = 1;
  for (int t = 0; t < r; ++t) two_r *= 2;

  std::vector<RatFn> terms;
  size_t idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j, ++idx) {
      const MPoly& w = wsum[idx];
      // tangent weights of the fixed line inside the symmetric square
      WeightSet others;
      for (size_t t = 0; t < wsum.size(); ++t)
        if (t != idx) others.push_back(wsum[t]);
      // degeneracy class of the quadric cone, restricted to this line
      WeightSet xs;
      for (int t = 1; t <= n; ++t)
        xs.push_back(MPoly::var(alpha(t)) - half * w);
      MPoly x_cls = two_r * delta_alphabet(staircase(r), xs);
      if (x_cls.is_zero()) continue;

      FactoredRat term = FactoredRat::resultant_factored(betas, {w}).div(
          FactoredRat::resultant_factored(others, {w}));
      auto [sc, prim] = x_cls.primitive();
      term.scale *= sc;
      if (!prim.is_constant()) term.push_nfac(prim, 1);
      terms.push_back(RatFn::from_factored(term));
    }

  RatFn sum = ratfn_sum_tree(std::move(terms));
  FactoredRat base =
      FactoredRat::resultant_factored(betas, alpha_vars(n));
  return RootForm{n, p, sum.mul_factored(base).as_poly()};
}

QuotientForm phi_tp_schur(int m, int s, int l) {
  if (s < 1 || s > m || l < 0)
    throw ValidationError("phi_tp_schur: need 1 <= s <= m, l >= 0");
  SchurExpansion e;
  // beyond this the trailing entry of I' is negative and the term vanishes
  int bound = l + m + 1 - s;
  each_segre_index(s, bound, [&](const std::vector<int>& I) {
    int wI = std::accumulate(I.begin(), I.end(), 0);
    std::vector<int> seq;
    seq.reserve(m + 1);
    for (int j = 1; j <= s; ++j) seq.push_back(l + j + I[j - 1]);
    for (int t = 0; t < m - s; ++t) seq.push_back(l + m);
    seq.push_back(l + m + 1 - s - wI);
    auto st = straighten(seq);
    if (!st) return;
    e.coeffs[st->second] += st->first * segre_coeff(I);
  });
  for (auto it = e.coeffs.begin(); it != e.coeffs.end();)
    it = it->second == 0 ? e.coeffs.erase(it) : std::next(it);
  return QuotientForm{l, std::move(e)};
}

int phi_codim(int m, int r, int l) {
  if (m < 1 || r < 0 || r >= m || l < 0)
    throw ValidationError("phi_codim: need 0 <= r < m, l >= 0");
  return (m + 1) * l + m * (m + 1) / 2 + r * (r + 1) / 2 + 1;
}

bool veronese_check(int n, int l) {
  if (n < 1 || l < 0)
    throw ValidationError("veronese_check: need n >= 1, l >= 0");
  QuotientForm f = phi_tp_schur(n, 1, l);
  for (int t = 0; t <= l; ++t) f = lower_form(f, n + 1);
  Rat lead = 1;
  for (int t = 1; t < n; ++t) lead *= 2;
  SchurExpansion want;
  want.coeffs[normalize_partition(std::vector<int>(n, n - 1))] = lead;
  return f.expansion == want;
}

}  // namespace thom
