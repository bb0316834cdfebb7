#include "thom/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thom/algebra.hpp"
#include "thom/engine.hpp"
#include "thom/errors.hpp"
#include "thom/euler.hpp"
#include "thom/expr.hpp"
#include "thom/ideals.hpp"
#include "thom/mpoly.hpp"
#include "thom/partitions.hpp"
#include "thom/phi.hpp"
#include "thom/ratfn.hpp"
#include "thom/residue.hpp"
#include "thom/schur.hpp"
#include "thom/varid.hpp"

namespace thom {
namespace {

const EulerTable& table() {
  static const EulerTable t = shipped_table();
  return t;
}

MPoly cpoly(const std::string& s) { return parse_expression(s).expand(); }

MPoly cv(int k) { return k == 0 ? MPoly::constant(1) : MPoly::var(cvar(k)); }

// c_{l+1}^2 + sum_{i>=1} 2^{i-1} c_{l+1-i} c_{l+1+i}, cut at c_0.
MPoly corank_one_closed(int l) {
  MPoly s = cv(l + 1) * cv(l + 1);
  Rat w = 1;
  for (int i = 1; i <= l + 1; ++i) {
    s += (cv(l + 1 - i) * cv(l + 1 + i)).scaled(w);
    w *= 2;
  }
  return s;
}

bool rat_eq(const FactoredRat& a, const FactoredRat& b) {
  return RatFn::from_factored(a).equals(RatFn::from_factored(b));
}

// Localization variable count: the smallest stable choice per family.
int base_vars(const AlgebraId& q) {
  return q.family == AlgebraFamily::Sigma ? q.mu() : std::max(1, q.mu() - 1);
}

const std::vector<AlgebraId>& catalog_nine() {
  static const std::vector<AlgebraId> qs = {
      algebra_a(1),        algebra_a(2),        algebra_a(3),
      algebra_iab(2, 2),   algebra_iiiab(2, 3), algebra_iiiab(2, 4),
      algebra_iiiab(3, 3), algebra_iab(2, 3),   algebra_sigma21()};
  return qs;
}

std::string check_a2_series() {
  for (int l = 0; l <= 4; ++l) {
    const QuotientForm got = to_quotient(localize_tp(algebra_a(2), 2, 2 + l, table()));
    if (!(got.to_poly() == corank_one_closed(l)))
      return "offset " + std::to_string(l) + " differs from the closed series";
  }
  return "";
}

std::string check_a3_class() {
  const QuotientForm got = to_quotient(localize_tp(algebra_a(3), 2, 2, table()));
  if (!(got.to_poly() == cpoly("c1^3+3*c1*c2+2*c3")))
    return "A_3 class differs from c1^3+3*c1*c2+2*c3";
  return "";
}

std::string check_porteous() {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) {
      WeightSet as, bs;
      for (int i = 1; i <= n; ++i) as.push_back(MPoly::var(alpha(i)));
      for (int j = 1; j <= n + l; ++j) bs.push_back(MPoly::var(beta(j)));
      const RootForm rf{n, n + l, resultant(bs, as)};
      if (!(to_quotient(rf) == porteous(n, l)))
        return "n=" + std::to_string(n) + " l=" + std::to_string(l) +
               ": full product is not Delta_{(n+l)^n}";
    }
  return "";
}

std::string check_reciprocity() {
  EulerTable t = shipped_table();
  const FactoredRat v = complete_by_reciprocity(t, algebra_a(2));
  if (!rat_eq(v, parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)")))
    return "A_2 square row differs from the shipped expression";
  complete_table(t);
  for (const AlgebraId& q : t.algebras()) {
    if (q.mu() < 3) continue;
    if (!reciprocity_sum(t, q).is_zero())
      return q.str() + ": reciprocal Euler classes do not sum to zero";
  }
  return "";
}

std::string check_interpolation() {
  const GeneratingFunction k = kq_catalog().at(algebra_a(3));
  const QuotientForm tp1{1, schur_expand(iterated_residue(k, 1))};
  const EulerTable ext = extrapolate_table(algebra_a(3), tp1);
  const std::array<std::array<const char*, 2>, 2> rows = {{
      {"(x^2,xy,y^3)", "(1/2)*(3*a2-a1)*(a1-a2)^2"},
      {"(x^2,y^2)", "(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)"},
  }};
  for (const auto& row : rows) {
    const EulerEntry* e = ext.find(algebra_a(3), parse_ideal(row[0]));
    if (!e) return std::string(row[0]) + ": no interpolated entry";
    if (e->provenance != Provenance::Extrapolated)
      return std::string(row[0]) + ": entry not marked as interpolated";
    if (!rat_eq(e->value, parse_expression(row[1])))
      return std::string(row[0]) + ": interpolated value differs";
  }
  return "";
}

std::string check_residue_localization() {
  for (const AlgebraId& q : catalog_nine())
    if (!residue_vs_localization(q, 2, table()))
      return q.str() + ": residue and localization disagree";
  return "";
}

std::string check_antisymmetrization() {
  for (const AlgebraId& q : catalog_nine())
    if (!asym_consistency(q, table()))
      return q.str() + ": antisymmetrization is not the discriminant ratio";
  return "";
}

std::string check_pencil_pipelines() {
  const std::array<std::array<int, 2>, 6> nr = {
      {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}}};
  for (const auto& [n, r] : nr)
    for (int p = n; p <= n + 2; ++p) {
      const QuotientForm got = to_quotient(phi_tp_localized(n, r, p));
      const QuotientForm want = phi_tp_schur(n, n - r, p - n);
      if (!(got == want))
        return "(" + std::to_string(n) + "," + std::to_string(r) + "," +
               std::to_string(p) + "): localized and closed forms disagree";
    }
  return "";
}

std::string check_series_lowering() {
  for (const auto& [q, k] : kq_catalog()) {
    std::vector<MPoly> tp;
    for (int l = 0; l <= 3; ++l) tp.push_back(iterated_residue(k, l));
    for (int l = 0; l <= 2; ++l)
      if (!(lower(tp[l + 1], q.mu()) == tp[l]))
        return q.str() + ": offset " + std::to_string(l + 1) +
               " does not lower to offset " + std::to_string(l);
  }
  return "";
}

std::string check_supersymmetry_stability() {
  for (const AlgebraId& q : catalog_nine()) {
    const int n0 = base_vars(q);
    const RootForm tp = localize_tp(q, n0, n0, table());
    const RootForm up = localize_tp(q, n0 + 1, n0 + 1, table());
    if (!supersymmetry_check(tp) || !supersymmetry_check(up))
      return q.str() + ": substitution alpha_n = beta_p = t depends on t";
    if (!(to_quotient(tp) == to_quotient(up)))
      return q.str() + ": quotient form changes under (n,p) -> (n+1,p+1)";
  }
  const RootForm ph = phi_tp_localized(2, 1, 3);
  if (!supersymmetry_check(ph))
    return "pencil form (2,1,3): substitution alpha_n = beta_p = t depends on t";
  return "";
}

std::string check_positivity() {
  for (const auto& [q, k] : kq_catalog())
    for (int l = 0; l <= 1; ++l) {
      const SchurExpansion se = schur_expand(iterated_residue(k, l));
      if (!se.nonneg_integer())
        return q.str() + " offset " + std::to_string(l) +
               ": Schur coefficients are not nonnegative integers";
      for (const auto& [lam, c] : se.coeffs) {
        if (static_cast<int>(lam.size()) > q.mu())
          return q.str() + ": Schur partition wider than mu";
        if (weight(lam) != q.mu() * l + q.gamma())
          return q.str() + ": Schur partition off the expected weight";
      }
    }
  return "";
}

std::string check_small_parameter_lowerings() {
  const QuotientForm iii1 =
      to_quotient(localize_tp(algebra_iiiab(2, 3), 2, 3, table()));
  const QuotientForm i0 =
      to_quotient(localize_tp(algebra_iab(2, 3), 3, 3, table()));
  if (!(lower(iii1.to_poly(), 3) == i0.to_poly()))
    return "I_{2,3} at offset 0 is not the width-3 lowering of III_{2,3} at 1";
  if (!(iab_from_iiiab(iii1, 2, 3) == i0))
    return "I_{2,3} helper disagrees with the direct localization";
  for (int n = 2; n <= 3; ++n)
    for (int l = 0; l <= 2; ++l)
      if (!veronese_check(n, l))
        return "Veronese collapse fails at n=" + std::to_string(n) +
               " l=" + std::to_string(l);
  return "";
}

std::string check_segre() {
  Rat p2 = 1;
  for (int i = 0; i <= 10; ++i) {
    if (segre_coeff({i}) != p2)
      return "((" + std::to_string(i) + ")) differs from 2^i";
    if (i >= 1 && i <= 8 && segre_coeff({i, 0}) != p2 - 1)
      return "((" + std::to_string(i) + ",0)) differs from 2^i - 1";
    p2 *= 2;
  }
  if (segre_coeff({2, 1}) != 3) return "((2,1)) differs from 3";
  if (segre_coeff({3, 1}) != 10) return "((3,1)) differs from 10";
  for (int n = 1; n <= 3; ++n)
    if (!segre_series_check(n, 4))
      return "Segre series identity fails for n=" + std::to_string(n);
  return "";
}

// Downsets of size m in the divisibility order, grown along a linear
// extension; every prefix of a sorted downset is a downset, so each set is
// produced exactly once.
void grow_downsets(const std::vector<Expo>& monos, int m, std::set<Expo>& cur,
                   size_t start, std::set<std::set<Expo>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.insert(cur);
    return;
  }
  for (size_t i = start; i < monos.size(); ++i) {
    const Expo& e = monos[i];
    bool closed = true;
    for (size_t v = 0; v < e.size() && closed; ++v) {
      if (e[v] == 0) continue;
      Expo d = e;
      --d[v];
      if (expo_degree(d) >= 1 && !cur.count(d)) closed = false;
    }
    if (!closed) continue;
    cur.insert(e);
    grow_downsets(monos, m, cur, i + 1, out);
    cur.erase(e);
  }
}

std::set<std::set<Expo>> brute_staircases(int n, int m) {
  std::vector<Expo> monos;
  Expo e(n, 0);
  while (true) {
    int d = expo_degree(e);
    if (d >= 1 && d <= m) monos.push_back(e);
    int i = 0;
    while (i < n && e[i] == m) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  std::sort(monos.begin(), monos.end(), [](const Expo& a, const Expo& b) {
    const int da = expo_degree(a), db = expo_degree(b);
    return da != db ? da < db : a < b;
  });
  std::set<std::set<Expo>> out;
  std::set<Expo> cur;
  grow_downsets(monos, m, cur, 0, out);
  return out;
}

std::set<Expo> permute_expos(const std::set<Expo>& s,
                             const std::vector<int>& perm) {
  std::set<Expo> out;
  for (const Expo& e : s) {
    Expo c(e.size());
    for (size_t i = 0; i < e.size(); ++i) c[perm[i]] = e[i];
    out.insert(c);
  }
  return out;
}

std::string check_ideal_census() {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 5; ++m) {
      const std::set<std::set<Expo>> want = brute_staircases(n, m);
      std::set<std::set<Expo>> got;
      for (const MonomialIdeal& I : enumerate_ideals(n, m))
        got.insert(I.complement);
      if (got != want)
        return "n=" + std::to_string(n) + " m=" + std::to_string(m) +
               ": enumeration differs from the downset census (" +
               std::to_string(got.size()) + " vs " +
               std::to_string(want.size()) + ")";
    }
  for (int m = 1; m <= 4; ++m) {
    std::set<std::pair<int, std::set<Expo>>> canon;
    for (const MonomialIdeal& I : enumerate_ideals(m, m)) {
      std::vector<int> used;
      for (int v = 0; v < I.n; ++v)
        for (const Expo& e : I.complement)
          if (e[v] > 0) {
            used.push_back(v);
            break;
          }
      const int k = static_cast<int>(used.size());
      std::set<Expo> base;
      for (const Expo& e : I.complement) {
        Expo c(k);
        for (int i = 0; i < k; ++i) c[i] = e[used[i]];
        base.insert(c);
      }
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      std::set<Expo> best = base;
      while (std::next_permutation(perm.begin(), perm.end())) {
        const std::set<Expo> img = permute_expos(base, perm);
        if (img < best) best = img;
      }
      canon.insert({k, best});
    }
    const std::vector<CanonicalRep> reps = canonical_representatives(m);
    if (reps.size() != canon.size())
      return "m=" + std::to_string(m) + ": orbit count " +
             std::to_string(reps.size()) + " vs " +
             std::to_string(canon.size());
    for (const CanonicalRep& rep : reps) {
      if (!canon.count({rep.n_min, rep.ideal.complement}))
        return "m=" + std::to_string(m) + ": " + ideal_str(rep.ideal) +
               " is not the lex-least orbit form";
      std::vector<int> perm(rep.n_min);
      std::iota(perm.begin(), perm.end(), 0);
      int fix = 0;
      do {
        if (permute_expos(rep.ideal.complement, perm) == rep.ideal.complement)
          ++fix;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (fix != rep.stabilizer_order)
        return ideal_str(rep.ideal) + ": stabilizer order " +
               std::to_string(rep.stabilizer_order) + " vs " +
               std::to_string(fix);
    }
  }
  return "";
}

}  // namespace

const std::vector<VerifyCheck>& verify_manifest() {
  static const std::vector<VerifyCheck> checks = {
      {"a2-series-closed-form", true, check_a2_series},
      {"a3-chern-class", true, check_a3_class},
      {"porteous-ranks", false, check_porteous},
      {"euler-reciprocity", false, check_reciprocity},
      {"euler-interpolation", true, check_interpolation},
      {"residue-vs-localization", false, check_residue_localization},
      {"antisymmetrization", false, check_antisymmetrization},
      {"pencil-cross-pipeline", false, check_pencil_pipelines},
      {"series-lowering", false, check_series_lowering},
      {"supersymmetry-stability", false, check_supersymmetry_stability},
      {"schur-positivity", true, check_positivity},
      {"small-parameter-lowerings", false, check_small_parameter_lowerings},
      {"segre-goldens", true, check_segre},
      {"ideal-census", true, check_ideal_census},
  };
  return checks;
}

std::vector<CheckOutcome> run_checks(bool fast_only) {
  std::vector<CheckOutcome> out;
  for (const VerifyCheck& c : verify_manifest()) {
    if (fast_only && !c.fast) continue;
    CheckOutcome o;
    o.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o.detail = c.run();
      o.passed = o.detail.empty();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    o.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace thom
