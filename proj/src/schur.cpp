#include "thom/schur.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace thom {

namespace {

// Determinant by expansion along rows, memoized on the set of unused
// columns. Division-free; fine for the sizes in scope (L <= ~12).
MPoly det_by_minors(int L, const std::function<MPoly(int, int)>& entry) {
  if (L == 0) return MPoly::constant(1);
  std::unordered_map<unsigned, MPoly> memo;
  std::function<const MPoly&(unsigned)> det = [&](unsigned mask) -> const MPoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int row = L - __builtin_popcount(mask);
    MPoly d;
    int pos = 0;
    for (int j = 0; j < L; ++j) {
      if (!(mask & (1u << j))) continue;
      MPoly e = entry(row, j);
      if (!e.is_zero()) {
        MPoly sub = det(mask & ~(1u << j));
        MPoly prod = e * sub;
        if (pos % 2 == 0)
          d += prod;
        else
          d -= prod;
      }
      ++pos;
    }
    return memo.emplace(mask, std::move(d)).first->second;
  };
  memo.emplace(0u, MPoly::constant(1));
  unsigned full = (L >= 32) ? ~0u : ((1u << L) - 1);
  return det(full);
}

MPoly c_entry(int k) {
  if (k < 0) return MPoly::zero();
  if (k == 0) return MPoly::constant(1);
  return MPoly::var(cvar(k));
}

}  // namespace

std::vector<MPoly> elementary_symmetric(const WeightSet& xs) {
  std::vector<MPoly> e(xs.size() + 1);
  e[0] = MPoly::constant(1);
  std::size_t used = 0;
  for (const MPoly& x : xs) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return e;
}

MPoly delta_quotient(const Partition& lambda) {
  static std::map<Partition, MPoly> cache;
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  const int L = static_cast<int>(lambda.size());
  MPoly d = det_by_minors(
      L, [&](int i, int j) { return c_entry(lambda[i] + j - i); });
  cache.emplace(lambda, d);
  return d;
}

MPoly delta_alphabet(const Partition& lambda, const WeightSet& xs) {
  const int t = static_cast<int>(xs.size());
  std::vector<MPoly> sig = elementary_symmetric(xs);
  const int L = static_cast<int>(lambda.size());
  return det_by_minors(L, [&](int i, int j) {
    int k = lambda[i] + j - i;
    if (k < 0 || k > t) return MPoly::zero();
    return sig[k];
  });
}

MPoly delta_quotient_seq(const std::vector<int>& seq) {
  auto st = straighten(seq);
  if (!st) return MPoly::zero();
  MPoly d = delta_quotient(st->second);
  return st->first < 0 ? -d : d;
}

MPoly delta_alphabet_seq(const std::vector<int>& seq, const WeightSet& xs) {
  auto st = straighten(seq);
  if (!st) return MPoly::zero();
  MPoly d = delta_alphabet(st->second, xs);
  return st->first < 0 ? -d : d;
}

namespace {
Partition partition_of_c_monomial(const Monomial& m) {
  Partition p;
  for (auto it = m.f.rbegin(); it != m.f.rend(); ++it) {
    const auto& [v, e] = *it;
    if (var_ns(v) != VarNS::C)
      throw ValidationError("schur_expand: non-quotient variable " +
                            var_name(v));
    for (int r = 0; r < e; ++r) p.push_back(var_index(v));
  }
  return p;
}

// (weight, lex) order used to pick the next peeling target.
bool peel_before(const Partition& a, const Partition& b) {
  int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}
}  // namespace

SchurExpansion schur_expand(const MPoly& p) {
  SchurExpansion out;
  MPoly rest = p;
  while (!rest.is_zero()) {
    bool have = false;
    Partition best;
    Rat coeff;
    for (const auto& [m, c] : rest.terms()) {
      Partition cand = partition_of_c_monomial(m);
      if (!have || peel_before(cand, best)) {
        have = true;
        best = std::move(cand);
        coeff = c;
      }
    }
    rest -= coeff * delta_quotient(best);
    out.coeffs[best] += coeff;
    if (out.coeffs[best] == 0) out.coeffs.erase(best);
  }
  return out;
}

MPoly SchurExpansion::to_poly() const {
  std::vector<MPoly> parts;
  parts.reserve(coeffs.size());
  for (const auto& [lam, c] : coeffs) parts.push_back(c * delta_quotient(lam));
  return sum_tree(std::move(parts));
}

bool SchurExpansion::nonneg_integer() const {
  for (const auto& [lam, c] : coeffs)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

std::string SchurExpansion::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string coef;
    if (mag != 1 || lam.empty()) {
      if (mag.get_den() == 1)
        coef = mag.get_str();
      else
        coef = "(" + mag.get_str() + ")";
    }
    if (lam.empty()) {
      os << (coef.empty() ? "1" : coef);
    } else {
      os << coef << "Δ_{" << partition_str(lam) << "}";
    }
  }
  return os.str();
}

std::vector<MPoly> chern_series_coeffs(const WeightSet& alphas,
                                       const WeightSet& betas, int kmax) {
  std::vector<MPoly> N = elementary_symmetric(betas);
  std::vector<MPoly> D = elementary_symmetric(alphas);
  std::vector<MPoly> c(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    MPoly v = k < static_cast<int>(N.size()) ? N[k] : MPoly::zero();
    for (int j = 1; j <= k && j < static_cast<int>(D.size()); ++j)
      v -= D[j] * c[k - j];
    c[k] = std::move(v);
  }
  return c;
}

bool factorization_identity(int n, int p, const Partition& lambda,
                            const Partition& mu) {
  if (static_cast<int>(lambda.size()) > n)
    throw ValidationError("factorization_identity: length(lambda) > n");
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(p + part_get(lambda, i));
  for (int m : mu) parts.push_back(m);
  Partition big;
  try {
    big = normalize_partition(std::move(parts));
  } catch (const ValidationError&) {
    throw ValidationError(
        "factorization_identity: (p^n+lambda, mu) is not a partition");
  }

  WeightSet A, B;
  for (int i = 1; i <= n; ++i) A.push_back(MPoly::var(alpha(i)));
  for (int i = 1; i <= p; ++i) B.push_back(MPoly::var(beta(i)));

  int kmax = big.empty() ? 0 : big[0] + static_cast<int>(big.size()) - 1;
  std::vector<MPoly> cs = chern_series_coeffs(A, B, kmax);
  std::map<VarId, MPoly> sub;
  for (int k = 1; k <= kmax; ++k) sub[cvar(k)] = cs[k];
  MPoly lhs = delta_quotient(big).subst(sub);

  MPoly rhs = resultant(B, A) * delta_alphabet(mu, B) *
              delta_alphabet(conjugate(lambda), A);
  if (weight(lambda) % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool gustafson_milne_identity(int m, int s, const Partition& mu,
                              const WeightSet& alphabet) {
  if (static_cast<int>(alphabet.size()) != m)
    throw ValidationError("gustafson_milne_identity: |alphabet| != m");
  if (!(part_get(mu, 1) <= s && s <= m))
    throw ValidationError("gustafson_milne_identity: need mu_1 <= s <= m");

  Partition shifted;
  for (int i = 0; i < m - s; ++i) shifted.push_back(s);
  for (int part : mu) shifted.push_back(part);
  shifted = normalize_partition(std::move(shifted));

  std::vector<RatFn> terms;
  for (unsigned H = 0; H < (1u << m); ++H) {
    if (__builtin_popcount(H) != s) continue;
    WeightSet xs, rest;
    for (int i = 0; i < m; ++i)
      (H & (1u << i) ? xs : rest).push_back(alphabet[i]);
    RatFn t = RatFn::from_poly(delta_alphabet(shifted, xs));
    t = t.div_factored(FactoredRat::resultant_factored(xs, rest));
    terms.push_back(std::move(t));
  }
  RatFn rhs = ratfn_sum_tree(std::move(terms));
  return rhs.equals(RatFn::from_poly(delta_alphabet(mu, alphabet)));
}

}  // namespace thom
