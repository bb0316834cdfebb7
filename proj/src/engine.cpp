#include "thom/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "thom/partitions.hpp"

namespace thom {

namespace {

WeightSet root_vars(VarNS ns, int count) {
  WeightSet w;
  w.reserve(count);
  for (int i = 1; i <= count; ++i) w.push_back(MPoly::var(make_var(ns, i)));
  return w;
}

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All weights sum a_i * alpha_i with |a| = deg, in n variables.
void append_weights_of_degree(int n, int deg, WeightSet& out) {
  std::vector<int> a(n, 0);
  a[0] = deg;
  for (;;) {
    MPoly w;
    for (int i = 0; i < n; ++i)
      if (a[i]) w += Rat(a[i]) * MPoly::var(alpha(i + 1));
    out.push_back(std::move(w));
    // next composition of deg into n parts
    int i = n - 2;
    while (i >= 0 && a[i] == 0) --i;
    if (i < 0) break;
    --a[i];
    int rest = 1;
    for (int j = i + 1; j < n; ++j) {
      rest += a[j];
      a[j] = 0;
    }
    a[i + 1] = rest;
  }
}

}  // namespace

int QuotientForm::codim() const {
  return expansion.coeffs.empty() ? 0 : weight(expansion.coeffs.begin()->first);
}

std::string ThomSeries::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << rat_str(mag);
    for (auto it = key.rbegin(); it != key.rend();) {
      auto run = it;
      while (run != key.rend() && *run == *it) ++run;
      os << "d_";
      if (*it < 0) os << "{" << *it << "}";
      else os << *it;
      if (run - it > 1) os << "^" << (run - it);
      it = run;
    }
  }
  return os.str();
}

RootForm localize_tp(const AlgebraId& q, int n, int p,
                     const EulerTable& table) {
  if (n < 1 || p < n) throw ValidationError("localize_tp: need p >= n >= 1");
  if (q.family == AlgebraFamily::Phi)
    throw MathError("Phi Euler data is not table-driven");
  if (q.family != AlgebraFamily::Sigma && !table.covers(q))
    throw MathError("Euler table does not cover " + q.str());
  std::vector<RatFn> parts;
  for (const CanonicalRep& rep : canonical_representatives(q.mu())) {
    if (rep.n_min > n) continue;
    MonomialIdeal emb = rep.ideal;
    while (emb.n < n) emb = descendant(emb);
    FactoredRat e = lookup(table, q, emb);
    if (e.inf) continue;
    FactoredRat term =
        FactoredRat::resultant_factored(root_vars(VarNS::Beta, p),
                                        quotient_weights(emb))
            .div(e);
    parts.push_back(symmetrize_factored(term, n, stabilizer_order(emb)));
  }
  RatFn sum = ratfn_sum_tree(std::move(parts));
  return RootForm{n, p, sum.as_poly()};
}

MPoly restrict_tp(const RootForm& tp, const MonomialGerm& f) {
  if (f.n != tp.n || f.p() != tp.p)
    throw ValidationError("restrict_tp: germ is (" + std::to_string(f.n) +
                          "," + std::to_string(f.p()) +
                          "), polynomial wants (" + std::to_string(tp.n) +
                          "," + std::to_string(tp.p) + ")");
  WeightSet w = germ_weights(f);
  std::map<VarId, MPoly> m;
  for (int i = 0; i < tp.p; ++i) m[beta(i + 1)] = w[i];
  return tp.poly.subst(m);
}

FactoredRat euler_via_interpolation(const RootForm& tp, const MonomialGerm& f) {
  MPoly restricted = restrict_tp(tp, f);
  if (restricted.is_zero()) return FactoredRat::infinite();
  FactoredRat e = FactoredRat::resultant_factored(
      germ_weights(f), quotient_weights(ideal_of(f)));
  auto [s, g] = restricted.primitive();
  e.scale /= s;
  if (!g.is_constant()) e.push_dfac(g, 1);
  return e;
}

EulerTable extrapolate_table(const AlgebraId& q, const QuotientForm& known_tp) {
  int mu = q.mu();
  int l0 = known_tp.l;
  long long need = binom(mu - 1, 2);
  if (l0 < need)
    throw ValidationError("extrapolate_table: offset " + std::to_string(l0) +
                          " cannot host every class of " + q.str() +
                          "; need at least " + std::to_string(need));
  MPoly h = known_tp.to_poly();
  EulerTable out;
  std::ostringstream rows;
  rows << "# extrapolated from tp_" << q.str() << "(" << l0 << ")\n";
  for (const CanonicalRep& rep : canonical_representatives(mu)) {
    if (rep.n_min >= mu) continue;  // the M^2 class comes from reciprocity
    int n = rep.n_min, p = n + l0;
    std::vector<Expo> gens = min_generators(rep.ideal);
    if (static_cast<int>(gens.size()) > p)
      throw ValidationError("extrapolate_table: " + std::to_string(gens.size()) +
                            " generators do not fit in " + std::to_string(p) +
                            " coordinates");
    Expo pad = gens.front();
    int pad_deg = 0;
    for (const Expo& g : gens) {
      int d = 0;
      for (int e : g) d += e;
      if (d >= pad_deg) {
        pad_deg = d;
        pad = g;
      }
    }
    while (static_cast<int>(gens.size()) < p) gens.push_back(pad);
    MonomialGerm f{n, std::move(gens)};
    RootForm tp{n, p, rho(n, p, h)};
    FactoredRat e = euler_via_interpolation(tp, f);
    if (!e.inf && e.degree() != mu * n - q.gamma())
      throw MathError("extrapolated class for " + q.str() +
                      " has degree " + std::to_string(e.degree()) +
                      ", expected " + std::to_string(mu * n - q.gamma()));
    EulerEntry entry{e, Provenance::Extrapolated, e.to_string()};
    rows << q.str() << " | n=" << n << " class | " << entry.raw << "\n";
    out.entries.emplace(std::make_pair(q, rep.ideal), std::move(entry));
  }
  out.raw_text = rows.str();
  return out;
}

MPoly rho(int n, int p, const MPoly& h) {
  if (n < 0 || p < 0) throw ValidationError("rho: negative arity");
  int kmax = 0;
  for (VarId v : h.vars()) {
    if (var_ns(v) != VarNS::C)
      throw ValidationError("rho: input must be a polynomial in c variables");
    kmax = std::max(kmax, static_cast<int>(var_index(v)));
  }
  std::vector<MPoly> cs = chern_series_coeffs(root_vars(VarNS::Alpha, n),
                                              root_vars(VarNS::Beta, p), kmax);
  std::map<int, std::vector<MPoly>> pows;
  std::vector<MPoly> parts;
  parts.reserve(h.size());
  for (const auto& [m, coeff] : h.terms()) {
    MPoly t = MPoly::constant(coeff);
    for (auto [v, e] : m.f) {
      int k = var_index(v);
      auto& pw = pows[k];
      if (pw.empty()) pw.push_back(MPoly::constant(1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * cs[k]);
      t *= pw[e];
    }
    parts.push_back(std::move(t));
  }
  return sum_tree(std::move(parts));
}

bool supersymmetry_check(const RootForm& tp) {
  if (tp.n < 1 || tp.p < 1)
    throw ValidationError("supersymmetry_check: need n, p >= 1");
  auto swapped = [&](VarNS ns, int count, int i) {
    std::vector<int> perm(count);
    for (int j = 0; j < count; ++j) perm[j] = j + 1;
    std::swap(perm[i - 1], perm[i]);
    return permute_poly(tp.poly, ns, perm);
  };
  for (int i = 1; i < tp.n; ++i)
    if (!(swapped(VarNS::Alpha, tp.n, i) == tp.poly)) return false;
  for (int i = 1; i < tp.p; ++i)
    if (!(swapped(VarNS::Beta, tp.p, i) == tp.poly)) return false;
  std::map<VarId, MPoly> m;
  m[alpha(tp.n)] = MPoly::var(tvar());
  m[beta(tp.p)] = MPoly::var(tvar());
  return tp.poly.subst(m).max_exp(tvar()) == 0;
}

// ---------------------------------------------------------------------------
// to_quotient: solve for the c-polynomial through exact evaluation points.
// The candidate basis is every c-monomial of the input's degree; below the
// kernel bound their point-evaluation functions are linearly independent, so
// a full-rank point system pins the one possible solution, and an exact
// residual check over Q certifies it.

namespace {

constexpr std::uint64_t kSolvePrimes[] = {
    2305843009213693951ull,  // 2^61 - 1
    1000000007ull, 998244353ull, 2147483647ull};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

std::uint64_t mod_u64(const mpz_class& z, std::uint64_t p) {
  std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), p);
  return r;
}

// c_0..c_kmax of prod(1 + b_j t) / prod(1 + a_i t) at integer root values.
std::vector<mpz_class> chern_coeffs_at(const std::vector<long>& av,
                                       const std::vector<long>& bv, int kmax) {
  std::vector<mpz_class> c(kmax + 1);
  c[0] = 1;
  for (long b : bv)
    for (int k = kmax; k >= 1; --k) c[k] += b * c[k - 1];
  for (long a : av)
    for (int k = 1; k <= kmax; ++k) c[k] -= a * c[k - 1];
  return c;
}

// Exact value of f at alpha_i = av[i-1], beta_j = bv[j-1].
Rat eval_root_poly(const MPoly& f, const std::vector<long>& av,
                   const std::vector<long>& bv) {
  int deg = std::max(0, f.degree());
  auto powers = [&](long v) {
    std::vector<mpz_class> t(deg + 1);
    t[0] = 1;
    for (int e = 1; e <= deg; ++e) t[e] = t[e - 1] * v;
    return t;
  };
  std::vector<std::vector<mpz_class>> apow, bpow;
  for (long v : av) apow.push_back(powers(v));
  for (long v : bv) bpow.push_back(powers(v));
  mpz_class zacc = 0, prod;
  Rat qacc = 0;
  for (const auto& [m, coeff] : f.terms()) {
    prod = 1;
    for (auto [v, e] : m.f) {
      const auto& t = var_ns(v) == VarNS::Alpha ? apow[var_index(v) - 1]
                                                : bpow[var_index(v) - 1];
      prod *= t[e];
    }
    if (coeff.get_den() == 1)
      zacc += coeff.get_num() * prod;
    else
      qacc += coeff * Rat(prod);
  }
  return qacc + Rat(zacc);
}

enum class SolveStatus { kOk, kDeficient, kInconsistent };

// Gauss-Jordan on rows of width ncols+1 (last entry is the right hand side).
SolveStatus solve_mod(std::vector<std::vector<std::uint64_t>>& rows, int ncols,
                      std::uint64_t p, std::vector<std::uint64_t>& sol) {
  int nrows = rows.size(), rank = 0;
  std::vector<int> pivot_row(ncols, -1);
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pr = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r][col]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[rank], rows[pr]);
    std::uint64_t inv = invmod(rows[rank][col], p);
    for (int j = col; j <= ncols; ++j)
      rows[rank][j] = mulmod(rows[rank][j], inv, p);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || !rows[r][col]) continue;
      std::uint64_t f = rows[r][col];
      for (int j = col; j <= ncols; ++j) {
        std::uint64_t s = mulmod(f, rows[rank][j], p);
        rows[r][j] = (rows[r][j] + p - s) % p;
      }
    }
    pivot_row[col] = rank;
    ++rank;
  }
  if (rank < ncols) return SolveStatus::kDeficient;
  for (int r = rank; r < nrows; ++r)
    if (rows[r][ncols]) return SolveStatus::kInconsistent;
  sol.assign(ncols, 0);
  for (int col = 0; col < ncols; ++col) sol[col] = rows[pivot_row[col]][ncols];
  return SolveStatus::kOk;
}

// Smallest a/b with a = r*b (mod m), |a|,|b| <= sqrt(m/2).
std::optional<Rat> rational_reconstruct(const mpz_class& r,
                                        const mpz_class& m) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = r % m, t0 = 0, t1 = 1, q, tmp;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    q = r0 / r1;
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (gcd(r1, t1) != 1) return std::nullopt;
  return Rat(mpq_class(r1) / mpq_class(t1));
}

}  // namespace

QuotientForm to_quotient(const RootForm& tp) {
  int n = tp.n, p = tp.p;
  if (n < 1 || p < n) throw ValidationError("to_quotient: need p >= n >= 1");
  int l = p - n;
  if (tp.poly.is_zero()) return QuotientForm{l, {}};
  for (VarId v : tp.poly.vars()) {
    bool ok = (var_ns(v) == VarNS::Alpha &&
               static_cast<int>(var_index(v)) <= n) ||
              (var_ns(v) == VarNS::Beta && static_cast<int>(var_index(v)) <= p);
    if (!ok)
      throw ValidationError("to_quotient: variable " + var_name(v) +
                            " outside the declared arities");
  }
  if (!tp.poly.is_homogeneous())
    throw ValidationError("to_quotient: input must be homogeneous");
  int D = tp.poly.degree();
  if (D >= (n + 1) * (p + 1))
    throw ValidationError(
        "to_quotient: degree " + std::to_string(D) +
        " admits quotient-map kernel elements at (n,p)=(" + std::to_string(n) +
        "," + std::to_string(p) + "); no unique solution");
  if (!supersymmetry_check(tp))
    throw NotSupersymmetric(
        "to_quotient: input is not expressible in quotient variables");

  std::vector<Partition> cands = partitions_of(D);
  int ncand = cands.size();
  std::vector<std::vector<std::pair<int, int>>> cmult(ncand);
  for (int j = 0; j < ncand; ++j) {
    const Partition& lam = cands[j];
    for (std::size_t i = 0; i < lam.size();) {
      std::size_t r = i;
      while (r < lam.size() && lam[r] == lam[i]) ++r;
      cmult[j].push_back({lam[i], static_cast<int>(r - i)});
      i = r;
    }
  }

  std::mt19937_64 rng(0x74686f6d51ull);
  auto draw = [&]() {
    long v = 1 + static_cast<long>(rng() % 300);
    return (rng() & 1) ? v : -v;
  };
  std::vector<std::vector<mpz_class>> mat;  // exact candidate values per point
  std::vector<Rat> rhs;
  auto add_points = [&](int count) {
    for (int t = 0; t < count; ++t) {
      std::vector<long> av(n), bv(p);
      for (long& v : av) v = draw();
      for (long& v : bv) v = draw();
      std::vector<mpz_class> c = chern_coeffs_at(av, bv, D);
      std::vector<std::vector<mpz_class>> cp(D + 1);
      std::vector<mpz_class> row(ncand);
      for (int j = 0; j < ncand; ++j) {
        mpz_class prod = 1;
        for (auto [k, e] : cmult[j]) {
          auto& pw = cp[k];
          if (pw.empty()) pw.push_back(mpz_class(1));
          while (static_cast<int>(pw.size()) <= e)
            pw.push_back(pw.back() * c[k]);
          prod *= pw[e];
        }
        row[j] = std::move(prod);
      }
      mat.push_back(std::move(row));
      rhs.push_back(eval_root_poly(tp.poly, av, bv));
    }
  };
  add_points(ncand + 24);

  std::vector<mpz_class> crt(ncand);
  mpz_class crt_mod = 1;
  bool extended = false;
  for (std::uint64_t prime : kSolvePrimes) {
    std::vector<std::vector<std::uint64_t>> rows;
    auto build_rows = [&]() {
      rows.clear();
      rows.reserve(mat.size());
      bool ok = true;
      for (std::size_t i = 0; i < mat.size(); ++i) {
        std::vector<std::uint64_t> r(ncand + 1);
        for (int j = 0; j < ncand; ++j) r[j] = mod_u64(mat[i][j], prime);
        std::uint64_t den = mod_u64(rhs[i].get_den(), prime);
        if (!den) {
          ok = false;
          break;
        }
        r[ncand] = mulmod(mod_u64(rhs[i].get_num(), prime),
                          invmod(den, prime), prime);
        rows.push_back(std::move(r));
      }
      return ok;
    };
    if (!build_rows()) continue;
    std::vector<std::uint64_t> sol;
    SolveStatus st = solve_mod(rows, ncand, prime, sol);
    if (st == SolveStatus::kDeficient && !extended) {
      extended = true;
      add_points(ncand / 2 + 24);
      if (!build_rows()) continue;
      st = solve_mod(rows, ncand, prime, sol);
    }
    if (st != SolveStatus::kOk) continue;
    // fold into the running CRT state
    if (crt_mod == 1) {
      for (int j = 0; j < ncand; ++j) crt[j] = sol[j];
      crt_mod = prime;
    } else {
      std::uint64_t m_inv = invmod(mod_u64(crt_mod, prime), prime);
      for (int j = 0; j < ncand; ++j) {
        std::uint64_t delta =
            (sol[j] + prime - mod_u64(crt[j], prime)) % prime;
        crt[j] += crt_mod * mulmod(delta, m_inv, prime);
      }
      crt_mod *= prime;
    }
    std::vector<Rat> x(ncand);
    bool all = true;
    for (int j = 0; j < ncand && all; ++j) {
      auto v = rational_reconstruct(crt[j], crt_mod);
      if (v)
        x[j] = *v;
      else
        all = false;
    }
    if (!all) continue;
    bool verified = true;
    for (std::size_t i = 0; i < mat.size() && verified; ++i) {
      Rat acc = 0;
      for (int j = 0; j < ncand; ++j)
        if (x[j] != 0) acc += x[j] * Rat(mat[i][j]);
      verified = acc == rhs[i];
    }
    if (!verified) continue;
    std::vector<MPoly::Term> ts;
    for (int j = 0; j < ncand; ++j) {
      if (x[j] == 0) continue;
      Monomial m;
      for (auto it = cmult[j].rbegin(); it != cmult[j].rend(); ++it)
        m.f.emplace_back(cvar(it->first), it->second);
      ts.emplace_back(std::move(m), x[j]);
    }
    return QuotientForm{l, schur_expand(MPoly::from_terms(std::move(ts)))};
  }
  throw MathError("to_quotient: failed to certify a solution at (n,p)=(" +
                  std::to_string(n) + "," + std::to_string(p) + ")");
}

MPoly lower(const MPoly& h, int m) {
  if (m < 0) throw ValidationError("lower: negative width");
  std::vector<MPoly::Term> out;
  for (const auto& [mono, coeff] : h.terms()) {
    int count = 0;
    for (auto [v, e] : mono.f) {
      if (var_ns(v) != VarNS::C)
        throw ValidationError("lower: input must be a polynomial in c variables");
      count += e;
    }
    if (count > m)
      throw ValidationError("lower: monomial " + mono_str(mono) +
                            " is wider than " + std::to_string(m));
    if (count < m) continue;  // a padded c_0 factor drops to c_{-1} = 0
    Monomial nm;
    for (auto [v, e] : mono.f) {
      int k = static_cast<int>(var_index(v)) - 1;
      if (k >= 1) nm.f.emplace_back(cvar(k), e);
    }
    out.emplace_back(std::move(nm), coeff);
  }
  return MPoly::from_terms(std::move(out));
}

QuotientForm lower_form(const QuotientForm& f, int m) {
  return QuotientForm{f.l - 1, schur_expand(lower(f.to_poly(), m))};
}

ThomSeries thom_series(const AlgebraId& q, const EulerTable& table,
                       int index_bound) {
  if (index_bound < 0)
    throw ValidationError("thom_series: negative index bound");
  int mu = q.mu(), gamma = q.gamma();
  int n = q.family == AlgebraFamily::Sigma ? mu : std::max(1, mu - 1);
  int lstar = std::max(0, (mu - 1) * index_bound + mu - gamma - 1);
  std::vector<QuotientForm> h;
  for (int l = 0; l <= lstar + 1; ++l) {
    h.push_back(to_quotient(localize_tp(q, n, n + l, table)));
    if (h.back().codim() != mu * l + gamma)
      throw MathError("thom_series: offset " + std::to_string(l) + " of " +
                      q.str() + " has codimension " +
                      std::to_string(h.back().codim()) + ", expected " +
                      std::to_string(mu * l + gamma));
  }
  for (int l = 0; l <= lstar; ++l)
    if (!(lower_form(h[l + 1], mu) == h[l]))
      throw MathError("thom_series: lowering does not reproduce offset " +
                      std::to_string(l) + " for " + q.str());
  ThomSeries out{mu, gamma - mu, index_bound, {}};
  const MPoly hp = h[lstar].to_poly();
  for (const auto& [mono, coeff] : hp.terms()) {
    std::vector<int> key;
    for (auto [v, e] : mono.f)
      key.insert(key.end(), e, static_cast<int>(var_index(v)) - (lstar + 1));
    if (static_cast<int>(key.size()) > mu)
      throw MathError("thom_series: " + q.str() +
                      " produced a monomial wider than mu");
    while (static_cast<int>(key.size()) < mu) key.push_back(-(lstar + 1));
    std::sort(key.begin(), key.end(), std::greater<int>());
    if (key.front() > index_bound) continue;
    out.terms[std::move(key)] = coeff;
  }
  return out;
}

QuotientForm porteous(int n, int l) {
  if (n < 1 || l < 0) throw ValidationError("porteous: need n >= 1, l >= 0");
  SchurExpansion e;
  e.coeffs[Partition(n, n + l)] = 1;
  return QuotientForm{l, std::move(e)};
}

RootForm sigma_power_tp(int n, int d, int p) {
  if (n < 1 || d < 1)
    throw ValidationError("sigma_power_tp: need n >= 1, d >= 1");
  long long need = binom(n + d - 1, d);
  if (p < need)
    throw ValidationError("sigma_power_tp: the degree-" + std::to_string(d) +
                          " power germ needs p >= " + std::to_string(need));
  WeightSet w;
  for (int deg = 1; deg < d; ++deg) append_weights_of_degree(n, deg, w);
  return RootForm{
      n, p,
      FactoredRat::resultant_factored(root_vars(VarNS::Beta, p), w).expand()};
}

RootForm subgrassmannian_tp(int n, int k, int d, int p) {
  if (n < 1 || k < 0 || d < 0)
    throw ValidationError("subgrassmannian_tp: need n >= 1, k >= 0, d >= 0");
  WeightSet sym;
  append_weights_of_degree(n, k + 1, sym);
  int dim = sym.size();
  if (d >= dim)
    throw ValidationError("subgrassmannian_tp: d must be below " +
                          std::to_string(dim));
  RootForm base = sigma_power_tp(n, k + 1, p);
  WeightSet betas = root_vars(VarNS::Beta, p);
  std::vector<RatFn> parts;
  std::vector<int> sel(d);
  for (int i = 0; i < d; ++i) sel[i] = i;
  for (;;) {
    WeightSet in, outw;
    std::size_t si = 0;
    for (int i = 0; i < dim; ++i) {
      if (si < sel.size() && sel[si] == i) {
        in.push_back(sym[i]);
        ++si;
      } else {
        outw.push_back(sym[i]);
      }
    }
    FactoredRat term = FactoredRat::resultant_factored(betas, in).div(
        FactoredRat::resultant_factored(in, outw));
    parts.push_back(RatFn::from_factored(term));
    // next d-subset of {0..dim-1}
    int i = d - 1;
    while (i >= 0 && sel[i] == dim - d + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < d; ++j) sel[j] = sel[j - 1] + 1;
  }
  RatFn sum = ratfn_sum_tree(std::move(parts));
  return RootForm{n, p,
                  sum.mul_factored(FactoredRat::from_poly(base.poly)).as_poly()};
}

QuotientForm iab_from_iiiab(const QuotientForm& tp_iii_at_1, int a, int b) {
  if (a < 2 || b < 2)
    throw ValidationError("iab_from_iiiab: need a, b >= 2");
  if (tp_iii_at_1.l != 1)
    throw ValidationError("iab_from_iiiab: input must sit at offset 1");
  AlgebraId iii = algebra_iiiab(a, b);
  int want = iii.mu() + iii.gamma();
  if (!tp_iii_at_1.expansion.coeffs.empty() && tp_iii_at_1.codim() != want)
    throw ValidationError("iab_from_iiiab: input codimension " +
                          std::to_string(tp_iii_at_1.codim()) +
                          " does not match " + iii.str() + " at offset 1");
  return lower_form(tp_iii_at_1, a + b - 2);
}

}  // namespace thom
