#include "thom/residue.hpp"

#include <algorithm>
#include <utility>

#include "thom/errors.hpp"
#include "thom/phi.hpp"

namespace thom {

namespace {

using Key = std::vector<int>;

void check_factor(const std::array<int, 3>& f, int mu) {
  if (f[0] < 1 || f[0] > f[1] || f[1] >= f[2] || f[2] > mu)
    throw ValidationError("denominator factor without a dominant variable");
}

// Factors ordered by dominant index; a variable is then never raised after
// its own dominant block, which keeps every geometric expansion finite.
std::vector<std::array<int, 3>> sorted_factors(const GeneratingFunction& k) {
  for (const auto& f : k.denominator) check_factor(f, k.mu);
  auto fac = k.denominator;
  std::stable_sort(fac.begin(), fac.end(),
                   [](const auto& x, const auto& y) { return x[2] < y[2]; });
  return fac;
}

// z-exponent vector of a monomial on z_1..z_mu.
Key key_of(const Monomial& m, int mu) {
  Key e(static_cast<std::size_t>(mu), 0);
  for (const auto& [v, k] : m.f) {
    if (var_ns(v) != VarNS::Z || static_cast<int>(var_index(v)) > mu ||
        var_index(v) < 1)
      throw ValidationError("expected a polynomial in z_1..z_mu");
    e[var_index(v) - 1] = k;
  }
  return e;
}

MPoly dis_poly(int mu) {
  MPoly d = MPoly::constant(1);
  for (int i = 1; i <= mu; ++i)
    for (int j = i + 1; j <= mu; ++j)
      d *= MPoly::var(zvar(i)) - MPoly::var(zvar(j));
  return d;
}

Rat binom_rat(int n, int k) {
  Rat b = 1;
  for (int t = 1; t <= k; ++t) {
    b *= n - k + t;
    b /= t;
  }
  return b;
}

// capr[t][v]: most the factor chain t.. can raise exponent v, given that a
// dominant exponent never starts above dmax[s] and never usefully drops
// further than slack below zero.
std::vector<std::vector<int>> raise_caps(
    const std::vector<std::array<int, 3>>& fac, const std::vector<int>& dmax,
    int mu, int slack) {
  const int na = static_cast<int>(fac.size());
  std::vector<std::vector<int>> capr(na + 1, std::vector<int>(mu + 1, 0));
  for (int t = na - 1; t >= 0; --t) {
    capr[t] = capr[t + 1];
    const int i = fac[t][0], j = fac[t][1], s = fac[t][2];
    const int maxdrop = std::max(0, dmax[s] + slack + capr[t + 1][s]);
    capr[t][i] += maxdrop;
    if (j != i) capr[t][j] += maxdrop;
  }
  return capr;
}

void strip_zeros(std::map<Key, Rat>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second == 0 ? m.erase(it) : std::next(it);
}

}  // namespace

FactoredRat GeneratingFunction::to_factored() const {
  FactoredRat f = FactoredRat::from_poly(numerator);
  if (f.is_zero()) return f;
  f.scale *= scale;
  for (const auto& fct : denominator) {
    check_factor(fct, mu);
    f.push_dfac(MPoly::var(zvar(fct[0])) + MPoly::var(zvar(fct[1])) -
                    MPoly::var(zvar(fct[2])),
                1);
  }
  f.cancel();
  return f;
}

LaurentSlice laurent_expand(const GeneratingFunction& k, const MPoly& prefactor,
                            int truncation) {
  if (k.mu < 1 || truncation < 0)
    throw ValidationError("laurent_expand: bad arguments");
  const auto fac = sorted_factors(k);

  std::map<Key, Rat> cur;
  const MPoly num = k.numerator * prefactor;
  for (const auto& [m, c] : num.terms()) cur[key_of(m, k.mu)] += c * k.scale;
  strip_zeros(cur);

  // Intermediate floors sit deeper than the requested window by the most a
  // later factor can raise the entry back, so the final slice is exactly the
  // full expansion restricted to the window.
  std::vector<int> dmax(k.mu + 1, 0);
  for (int v = 1; v <= k.mu; ++v)
    dmax[v] = std::max(0, num.max_exp(zvar(v)));
  const auto capr = raise_caps(fac, dmax, k.mu, truncation - 1);
  const auto keep = [&](const Key& e, int t) {
    for (int v = 1; v <= k.mu; ++v)
      if (e[v - 1] < -truncation - capr[t][v]) return false;
    return true;
  };

  // 1/(z_i + z_j - z_s) = -sum_{t>=0} (z_i + z_j)^t / z_s^{t+1}; the floor
  // on the dominant exponent bounds every expansion.
  for (int a = 0; a < static_cast<int>(fac.size()); ++a) {
    const int i = fac[a][0], j = fac[a][1], s = fac[a][2];
    const int lo = -truncation - capr[a + 1][s];
    std::map<Key, Rat> next;
    for (const auto& [e, c] : cur) {
      if (i == j) {
        Rat p2 = 1;
        for (int t = 0; e[s - 1] - t - 1 >= lo; ++t) {
          Key e2 = e;
          e2[i - 1] += t;
          e2[s - 1] -= t + 1;
          if (keep(e2, a + 1)) next[e2] -= c * p2;
          p2 *= 2;
        }
      } else {
        for (int t1 = 0; e[s - 1] - t1 - 1 >= lo; ++t1)
          for (int t2 = 0; e[s - 1] - t1 - t2 - 1 >= lo; ++t2) {
            Key e2 = e;
            e2[i - 1] += t1;
            e2[j - 1] += t2;
            e2[s - 1] -= t1 + t2 + 1;
            if (keep(e2, a + 1)) next[e2] -= c * binom_rat(t1 + t2, t1);
          }
      }
    }
    strip_zeros(next);
    cur = std::move(next);
  }

  LaurentSlice out;
  out.truncation = truncation;
  for (const auto& [e, c] : cur) out.terms.emplace(e, MPoly::constant(c));
  return out;
}

LaurentSlice d_series(int j, int mu, int truncation) {
  if (j < 1 || j > mu || truncation < 0)
    throw ValidationError("d_series: bad arguments");
  LaurentSlice out;
  out.truncation = truncation;
  for (int k = 0; k <= truncation; ++k) {
    Key e(static_cast<std::size_t>(mu), 0);
    e[j - 1] = -k;
    out.terms.emplace(e, k == 0 ? MPoly::constant(1) : MPoly::var(cvar(k)));
  }
  return out;
}

MPoly iterated_residue(const GeneratingFunction& k, int l) {
  if (k.mu < 1 || l < 0)
    throw ValidationError("iterated_residue: bad arguments");
  const int mu = k.mu;
  const auto fac = sorted_factors(k);
  const int na = static_cast<int>(fac.size());

  // The factors D_i never enter the slice: extracting the coefficient of
  // prod z_i^(-1) from (...) * prod D_i picks c_{e_i + 1} from the slice key
  // e, with c_0 = 1 and negative indices killing the term.
  Monomial zl;
  if (l > 0)
    for (int i = 1; i <= mu; ++i) zl.f.emplace_back(zvar(i), l);
  const MPoly num = (k.numerator * dis_poly(mu)).shift_scaled(zl, k.scale);
  if (num.is_zero()) return MPoly::zero();

  // Upper bound on any final exponent: c-indices e_i + 1 sum to the output
  // degree, so each one is at most deg(num) - na + mu.
  const int cap_hi = num.degree() - na + mu - 1;
  if (cap_hi < -1) return MPoly::zero();

  std::vector<int> dmax(mu + 1, 0);
  for (int v = 1; v <= mu; ++v) dmax[v] = std::max(0, num.max_exp(zvar(v)));

  // domrem[t][v]: v is still dominant somewhere in t..end.
  const auto capr = raise_caps(fac, dmax, mu, 1);
  std::vector<std::vector<char>> domrem(na + 1,
                                        std::vector<char>(mu + 1, 0));
  for (int t = na - 1; t >= 0; --t) {
    domrem[t] = domrem[t + 1];
    domrem[t][fac[t][2]] = 1;
  }

  const auto keep = [&](const Key& e, int t) {
    for (int v = 1; v <= mu; ++v) {
      if (e[v - 1] < -1 - capr[t][v]) return false;
      if (!domrem[t][v] && e[v - 1] > cap_hi) return false;
    }
    return true;
  };

  std::map<Key, Rat> cur;
  for (const auto& [m, c] : num.terms()) {
    Key e = key_of(m, mu);
    if (keep(e, 0)) cur[e] += c;
  }
  strip_zeros(cur);

  for (int t = 0; t < na; ++t) {
    const int i = fac[t][0], j = fac[t][1], s = fac[t][2];
    std::map<Key, Rat> next;
    for (const auto& [e, c] : cur) {
      const int kdrop = e[s - 1] + 1 + capr[t + 1][s];
      if (kdrop < 0) continue;
      if (i == j) {
        const int kmax = std::min(kdrop, cap_hi - e[i - 1]);
        Rat p2 = 1;
        for (int kk = 0; kk <= kmax; ++kk) {
          Key e2 = e;
          e2[i - 1] += kk;
          e2[s - 1] -= kk + 1;
          if (keep(e2, t + 1)) next[e2] -= c * p2;
          p2 *= 2;
        }
      } else {
        const int k1max = std::min(kdrop, cap_hi - e[i - 1]);
        for (int k1 = 0; k1 <= k1max; ++k1) {
          const int k2max = std::min(kdrop - k1, cap_hi - e[j - 1]);
          for (int k2 = 0; k2 <= k2max; ++k2) {
            Key e2 = e;
            e2[i - 1] += k1;
            e2[j - 1] += k2;
            e2[s - 1] -= k1 + k2 + 1;
            if (keep(e2, t + 1)) next[e2] -= c * binom_rat(k1 + k2, k1);
          }
        }
      }
    }
    strip_zeros(next);
    cur = std::move(next);
  }

  std::vector<MPoly::Term> terms;
  for (const auto& [e, c] : cur) {
    std::map<int, int> mult;
    bool dead = false;
    for (int v = 0; v < mu; ++v) {
      const int idx = e[v] + 1;
      if (idx < 0) {
        dead = true;
        break;
      }
      if (idx > 0) ++mult[idx];
    }
    if (dead) continue;
    Monomial m;
    for (const auto& [idx, rep] : mult) m.f.emplace_back(cvar(idx), rep);
    terms.emplace_back(std::move(m), c);
  }
  MPoly out = MPoly::from_terms(std::move(terms));
  if (out.is_zero()) return out;

  // The residue is defined up to orientation; normalize so the largest
  // Schur summand has positive sign.
  const SchurExpansion se = schur_expand(out);
  if (se.coeffs.rbegin()->second < 0) out = out.scaled(-1);
  return out;
}

GeneratingFunction kq_sigma(int r) {
  if (r < 1) throw ValidationError("kq_sigma: r must be positive");
  GeneratingFunction g;
  g.mu = r;
  Monomial m;
  for (int i = 1; i < r; ++i) m.f.emplace_back(zvar(i), i);
  g.numerator = MPoly::term(std::move(m), 1);
  return g;
}

GeneratingFunction kq_phi(int m, int r) {
  if (r < 0 || m <= r) throw ValidationError("kq_phi: need 0 <= r < m");
  const int w = m - r;  // corank-one width of the member
  GeneratingFunction g;
  g.mu = m + 1;
  for (int t = 1; t < w; ++t) g.scale /= 2;
  Monomial mono;
  for (int i = 1; i < r; ++i) mono.f.emplace_back(zvar(w + 1 + i), i);
  g.numerator = MPoly::term(std::move(mono), 1);
  g.denominator.push_back({1, 1, w + 1});
  for (int i = 1; i < w; ++i) g.denominator.push_back({i, i + 1, w + 1});
  return g;
}

std::map<AlgebraId, GeneratingFunction> kq_catalog() {
  const auto tri = [](int i, int j, int s) { return std::array<int, 3>{i, j, s}; };
  const auto gf = [](int mu, Rat scale,
                     std::vector<std::array<int, 3>> den) {
    GeneratingFunction g;
    g.mu = mu;
    g.scale = std::move(scale);
    g.denominator = std::move(den);
    return g;
  };

  std::map<AlgebraId, GeneratingFunction> m;
  m.emplace(algebra_a(1), gf(1, 1, {}));
  m.emplace(algebra_a(2), gf(2, 1, {tri(1, 1, 2)}));
  m.emplace(algebra_a(3), gf(3, 1, {tri(1, 1, 2), tri(1, 1, 3), tri(1, 2, 3)}));
  m.emplace(algebra_sigma(2), kq_sigma(2));
  m.emplace(algebra_sigma(3), kq_sigma(3));
  m.emplace(algebra_sigma(4), kq_sigma(4));
  m.emplace(algebra_iab(2, 2), gf(3, Rat(1, 2), {tri(1, 1, 3), tri(1, 2, 3)}));
  m.emplace(algebra_iab(2, 3),
            gf(4, 1,
               {tri(1, 1, 4), tri(2, 2, 3), tri(2, 2, 4), tri(1, 2, 4),
                tri(2, 3, 4)}));
  m.emplace(algebra_iiiab(2, 3), gf(3, 1, {tri(1, 1, 3)}));
  m.emplace(algebra_iiiab(2, 4),
            gf(4, 1,
               {tri(1, 1, 2), tri(1, 2, 3), tri(1, 1, 4), tri(1, 2, 4)}));
  m.emplace(algebra_iiiab(3, 3),
            gf(4, Rat(1, 4),
               {tri(1, 1, 3), tri(1, 2, 3), tri(1, 1, 4), tri(1, 2, 4)}));
  m.emplace(algebra_sigma21(),
            gf(4, 1, {tri(1, 1, 3), tri(1, 2, 3), tri(1, 1, 4)}));
  for (int mm = 1; mm <= 3; ++mm)
    for (int r = 0; r < mm; ++r) m.emplace(algebra_phi(mm, r), kq_phi(mm, r));
  return m;
}

bool residue_vs_localization(const AlgebraId& q, int l_max,
                             const EulerTable& table) {
  if (l_max < 0) throw ValidationError("residue_vs_localization: bad l_max");
  const auto cat = kq_catalog();
  const auto it = cat.find(q);
  if (it == cat.end())
    throw ValidationError("no generating function for " + q.str());
  for (int l = 0; l <= l_max; ++l) {
    const MPoly res = iterated_residue(it->second, l);
    MPoly ref;
    if (q.family == AlgebraFamily::Phi) {
      ref = phi_tp_schur(q.a, q.a - q.b, l).to_poly();
    } else {
      const int n =
          q.family == AlgebraFamily::Sigma ? q.mu() : std::max(1, q.mu() - 1);
      ref = to_quotient(localize_tp(q, n, n + l, table)).to_poly();
    }
    if (!(res == ref)) return false;
  }
  return true;
}

bool asym_consistency(const AlgebraId& q, const EulerTable& table) {
  const auto cat = kq_catalog();
  const auto it = cat.find(q);
  if (it == cat.end())
    throw ValidationError("no generating function for " + q.str());
  const int mu = q.mu();

  FactoredRat e;
  if (q.family == AlgebraFamily::Sigma) {
    e = FactoredRat::from_scalar(1);
  } else if (q.family == AlgebraFamily::Phi) {
    throw ValidationError("asym consistency needs tabulated Euler data for " +
                          q.str());
  } else if (const EulerEntry* row = table.find(q, m2_ideal(mu))) {
    e = row->value;
  } else {
    EulerTable completed = table;
    e = complete_by_reciprocity(completed, q);
  }
  if (e.inf || e.is_zero()) return false;

  std::map<VarId, MPoly> sub;
  for (int i = 1; i <= mu; ++i) sub.emplace(alpha(i), MPoly::var(zvar(i)));
  FactoredRat dis = FactoredRat::from_scalar(1);
  for (int i = 1; i <= mu; ++i)
    for (int j = i + 1; j <= mu; ++j)
      dis.push_nfac(MPoly::var(zvar(i)) - MPoly::var(zvar(j)), 1);

  const RatFn lhs =
      asymmetrize(RatFn::from_factored(it->second.to_factored()), mu);
  const RatFn rhs = RatFn::from_factored(dis.div(e.subst(sub)));
  return lhs.equals(rhs) || lhs.equals(rhs.neg());
}

}  // namespace thom
