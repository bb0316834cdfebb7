#include "thom/euler.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "thom/euler_table_data.hpp"
#include "thom/expr.hpp"

namespace thom {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool lex_min_form(const MonomialIdeal& I) {
  std::vector<int> perm(I.n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (permuted_ideal(I, perm).complement < I.complement) return false;
  return true;
}

void validate_row(const std::string& row, const AlgebraId& q,
                  const MonomialIdeal& I, const FactoredRat& v) {
  auto fail = [&](const std::string& why) {
    throw ValidationError("table row '" + row + "': " + why);
  };
  if (I.codim() != q.mu())
    fail("ideal codimension " + std::to_string(I.codim()) +
         " does not match mu = " + std::to_string(q.mu()));
  if (compact_support(I).n != I.n) fail("ideal uses an inactive variable");
  if (!lex_min_form(I)) fail("ideal is not the lex-least orbit form");
  if (v.inf) return;
  if (v.is_zero()) fail("Euler class cannot be zero");
  int want = q.mu() * I.n - q.gamma();
  auto check_factors = [&](const std::vector<std::pair<MPoly, int>>& fs) {
    for (const auto& [f, e] : fs) {
      if (!f.is_homogeneous()) fail("inhomogeneous factor " + f.to_string());
      for (VarId var : f.vars())
        if (var_ns(var) != VarNS::Alpha ||
            var_index(var) > static_cast<unsigned>(I.n))
          fail("factor uses variable " + var_name(var) +
               " outside a1..a" + std::to_string(I.n));
    }
  };
  check_factors(v.nfac);
  check_factors(v.dfac);
  if (v.degree() != want)
    fail("degree " + std::to_string(v.degree()) + ", expected mu*n - gamma = " +
         std::to_string(want));
}

// Suspends e(I0) to n variables, then renames standard positions to the
// query's actual coordinates (support for 1..k, the rest in order).
FactoredRat transport(FactoredRat v, MonomialIdeal cur,
                      const MonomialIdeal& target,
                      const std::vector<int>& support) {
  int k = cur.n, n = target.n;
  while (cur.n < n) {
    v = v.mul(suspension_factor_factored(cur));
    cur = descendant(cur);
  }
  std::vector<int> tau(n, -1);
  std::vector<char> used(n, 0);
  for (int j = 0; j < k; ++j) {
    tau[j] = support[j];
    used[support[j]] = 1;
  }
  int next = k;
  for (int c = 0; c < n; ++c)
    if (!used[c]) tau[next++] = c;
  if (!(permuted_ideal(cur, tau) == target))
    throw MathError("euler transport: permutation does not map onto target");
  std::map<VarId, MPoly> m;
  for (int j = 0; j < n; ++j)
    if (tau[j] != j) m[alpha(j + 1)] = MPoly::var(alpha(tau[j] + 1));
  return m.empty() ? v : v.subst(m);
}

std::vector<int> support_of(const MonomialIdeal& I) {
  std::vector<char> act(I.n, 0);
  for (const Expo& e : I.complement)
    for (int j = 0; j < I.n; ++j)
      if (e[j]) act[j] = 1;
  std::vector<int> s;
  for (int j = 0; j < I.n; ++j)
    if (act[j]) s.push_back(j);
  return s;
}

// Shared by complete_by_reciprocity and reciprocity_sum: the orbit sums of
// 1/e over the canonical classes, each symmetrized over S_mu.
RatFn class_sum(const EulerTable& table, const AlgebraId& q, bool skip_m2) {
  int mu = q.mu();
  std::vector<RatFn> parts;
  for (const CanonicalRep& rep : canonical_representatives(mu)) {
    if (skip_m2 && is_m2_staircase(rep.ideal)) continue;
    MonomialIdeal emb = rep.ideal;
    while (emb.n < mu) emb = descendant(emb);
    FactoredRat e = lookup(table, q, emb);
    if (e.inf) continue;
    parts.push_back(
        symmetrize_factored(e.pow(-1), mu, stabilizer_order(emb)));
  }
  return ratfn_sum_tree(std::move(parts));
}

}  // namespace

std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::Shipped:
      return "shipped";
    case Provenance::ReciprocityCompleted:
      return "reciprocity-completed";
    case Provenance::Extrapolated:
      return "extrapolated";
  }
  return "?";
}

const EulerEntry* EulerTable::find(const AlgebraId& q,
                                   const MonomialIdeal& I) const {
  auto it = entries.find({q, I});
  return it == entries.end() ? nullptr : &it->second;
}

std::vector<AlgebraId> EulerTable::algebras() const {
  std::vector<AlgebraId> r;
  for (const auto& [key, entry] : entries)
    if (r.empty() || !(r.back() == key.first)) r.push_back(key.first);
  return r;
}

bool EulerTable::covers(const AlgebraId& q) const {
  for (const auto& [key, entry] : entries)
    if (key.first == q) return true;
  return false;
}

EulerTable load_table(const std::string& text) {
  EulerTable t;
  t.raw_text = text;
  std::istringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto where = [&] { return "table line " + std::to_string(lineno); };
    std::size_t bar = s.find('|');
    if (bar == std::string::npos) {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos)
        throw ValidationError(where() + ": expected a row or a macro");
      std::string name = trim(s.substr(0, eq));
      if (name.empty() ||
          !std::all_of(name.begin(), name.end(), [](unsigned char c) {
            return std::isupper(c) || std::isdigit(c) || c == '_';
          }))
        throw ValidationError(where() + ": macro names are upper case");
      t.macros[name] = parse_expression(trim(s.substr(eq + 1)), t.macros);
      continue;
    }
    std::size_t bar2 = s.find('|', bar + 1);
    if (bar2 == std::string::npos)
      throw ValidationError(where() + ": expected two '|' separators");
    AlgebraId q = parse_algebra(trim(s.substr(0, bar)));
    MonomialIdeal I = parse_ideal(trim(s.substr(bar + 1, bar2 - bar - 1)));
    std::string raw = trim(s.substr(bar2 + 1));
    FactoredRat v = raw == "INF" ? FactoredRat::infinite()
                                 : parse_expression(raw, t.macros);
    validate_row(s, q, I, v);
    if (t.entries.count({q, I}))
      throw ValidationError(where() + ": duplicate row");
    t.entries[{q, I}] = EulerEntry{v, Provenance::Shipped, raw};
  }
  // Every fixed-point class except M^2 must be shipped per algebra.
  for (const AlgebraId& q : t.algebras())
    for (const CanonicalRep& rep : canonical_representatives(q.mu())) {
      if (is_m2_staircase(rep.ideal)) continue;
      if (!t.find(q, rep.ideal))
        throw ValidationError("table incomplete: no row for e(" + q.str() +
                              ", " + ideal_str(rep.ideal) + ")");
    }
  return t;
}

EulerTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str());
}

EulerTable shipped_table() {
  static const EulerTable t = load_table(kShippedEulerTable);
  return t;
}

MonomialIdeal m2_ideal(int mu) {
  std::set<Expo> c;
  for (int j = 0; j < mu; ++j) {
    Expo e(mu, 0);
    e[j] = 1;
    c.insert(e);
  }
  return make_ideal(mu, std::move(c));
}

bool is_m2_staircase(const MonomialIdeal& I) {
  for (const Expo& e : I.complement)
    if (expo_degree(e) != 1) return false;
  return true;
}

FactoredRat lookup(const EulerTable& table, const AlgebraId& q,
                   const MonomialIdeal& I) {
  if (I.codim() != q.mu())
    throw ValidationError("lookup: ideal codimension != mu(" + q.str() + ")");
  MonomialIdeal I0 = compact_support(I);
  std::vector<int> support = support_of(I);
  int k = I0.n;
  if (q.family == AlgebraFamily::Sigma) {
    if (!is_m2_staircase(I0)) return FactoredRat::infinite();
    return transport(FactoredRat::from_scalar(1), I0, I, support);
  }
  if (q.family == AlgebraFamily::Phi)
    throw MathError("Phi Euler data is not table-driven");
  for (const auto& [key, entry] : table.entries) {
    if (!(key.first == q) || key.second.n != k) continue;
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      if (!(permuted_ideal(key.second, sigma) == I0)) continue;
      if (entry.value.inf) return FactoredRat::infinite();
      std::map<VarId, MPoly> m;
      for (int j = 0; j < k; ++j)
        if (sigma[j] != j) m[alpha(j + 1)] = MPoly::var(alpha(sigma[j] + 1));
      FactoredRat base = m.empty() ? entry.value : entry.value.subst(m);
      return transport(base, I0, I, support);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  if (is_m2_staircase(I0))
    throw MathError("e(" + q.str() +
                    ", M^2) is missing; run complete_by_reciprocity first");
  throw MathError("no Euler entry for " + q.str() + " at " + ideal_str(I));
}

FactoredRat complete_by_reciprocity(EulerTable& table, const AlgebraId& q) {
  int mu = q.mu();
  RatFn S = class_sum(table, q, /*skip_m2=*/true);
  if (S.is_zero())
    throw MathError("reciprocity is tautological for " + q.str() +
                    " (zero-dimensional orbit closure)");
  FactoredRat e2 = S.reciprocal_factored().neg();
  if (e2.degree() != mu * mu - q.gamma())
    throw MathError("reciprocity completion for " + q.str() +
                    " has the wrong degree (inconsistent table)");
  MonomialIdeal M2 = m2_ideal(mu);
  if (const EulerEntry* have = table.find(q, M2)) {
    if (have->value.inf ||
        !RatFn::from_factored(have->value).equals(RatFn::from_factored(e2)))
      throw MathError("shipped e(" + q.str() +
                      ", M^2) contradicts the reciprocity relation");
    return have->value;
  }
  table.entries[{q, M2}] =
      EulerEntry{e2, Provenance::ReciprocityCompleted, e2.to_string()};
  return e2;
}

RatFn reciprocity_sum(const EulerTable& table, const AlgebraId& q) {
  return class_sum(table, q, /*skip_m2=*/false);
}

void complete_table(EulerTable& table) {
  for (const AlgebraId& q : table.algebras())
    if (!table.find(q, m2_ideal(q.mu()))) complete_by_reciprocity(table, q);
}

}  // namespace thom
