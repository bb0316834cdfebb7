#include "thom/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace thom {

int expo_degree(const Expo& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

namespace {
bool expo_divides(const Expo& d, const Expo& m) {
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] > m[j]) return false;
  return true;
}

Expo permuted_expo(const Expo& e, const std::vector<int>& perm) {
  Expo r(e.size(), 0);
  for (std::size_t j = 0; j < e.size(); ++j) r[perm[j]] = e[j];
  return r;
}

std::set<Expo> permuted_set(const std::set<Expo>& C,
                            const std::vector<int>& perm) {
  std::set<Expo> r;
  for (const Expo& e : C) r.insert(permuted_expo(e, perm));
  return r;
}
}  // namespace

MonomialIdeal permuted_ideal(const MonomialIdeal& I,
                             const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != I.n)
    throw ValidationError("permuted_ideal: permutation length mismatch");
  MonomialIdeal r;
  r.n = I.n;
  r.complement = permuted_set(I.complement, perm);
  return r;
}

MonomialIdeal make_ideal(int n, std::set<Expo> complement) {
  for (const Expo& e : complement) {
    if (static_cast<int>(e.size()) != n)
      throw ValidationError("ideal: exponent vector length mismatch");
    if (expo_degree(e) < 1)
      throw ValidationError("ideal: complement must exclude the constant");
    for (int j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      Expo d = e;
      --d[j];
      if (expo_degree(d) >= 1 && !complement.count(d))
        throw ValidationError("ideal: complement is not divisor-closed");
    }
  }
  return MonomialIdeal{n, std::move(complement)};
}

std::vector<MonomialIdeal> enumerate_ideals(int n, int m) {
  if (n < 1 || m < 1)
    throw ValidationError("enumerate_ideals: need n >= 1 and m >= 1");
  std::set<std::set<Expo>> level = {{}};
  const Expo origin(n, 0);
  for (int step = 0; step < m; ++step) {
    std::set<std::set<Expo>> next;
    for (const auto& C : level) {
      std::set<Expo> cands;
      auto extend = [&](const Expo& w) {
        for (int j = 0; j < n; ++j) {
          Expo v = w;
          ++v[j];
          if (!C.count(v)) cands.insert(std::move(v));
        }
      };
      extend(origin);
      for (const Expo& w : C) extend(w);
      for (const Expo& v : cands) {
        bool closed = true;
        for (int j = 0; j < n && closed; ++j) {
          if (v[j] == 0) continue;
          Expo d = v;
          --d[j];
          if (expo_degree(d) >= 1 && !C.count(d)) closed = false;
        }
        if (closed) {
          std::set<Expo> C2 = C;
          C2.insert(v);
          next.insert(std::move(C2));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<MonomialIdeal> out;
  out.reserve(level.size());
  for (const auto& C : level) out.push_back(MonomialIdeal{n, C});
  return out;
}

MonomialIdeal compact_support(const MonomialIdeal& I) {
  std::vector<int> used;
  for (int j = 0; j < I.n; ++j) {
    for (const Expo& e : I.complement)
      if (e[j] > 0) {
        used.push_back(j);
        break;
      }
  }
  std::set<Expo> small;
  for (const Expo& e : I.complement) {
    Expo r(used.size());
    for (std::size_t k = 0; k < used.size(); ++k) r[k] = e[used[k]];
    small.insert(std::move(r));
  }
  return MonomialIdeal{static_cast<int>(used.size()), std::move(small)};
}

int stabilizer_order(const MonomialIdeal& I) {
  std::vector<int> perm(I.n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (permuted_set(I.complement, perm) == I.complement) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {
MonomialIdeal lex_min_form(const MonomialIdeal& I) {
  std::vector<int> perm(I.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Expo> best = I.complement;
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::set<Expo> cand = permuted_set(I.complement, perm);
    if (cand < best) best = std::move(cand);
  }
  return MonomialIdeal{I.n, std::move(best)};
}
}  // namespace

std::vector<CanonicalRep> canonical_representatives(int m) {
  auto all = enumerate_ideals(m, m);
  std::map<MonomialIdeal, CanonicalRep> reps;
  for (const MonomialIdeal& I : all) {
    MonomialIdeal canon = lex_min_form(compact_support(I));
    if (!reps.count(canon))
      reps[canon] = CanonicalRep{canon, canon.n, stabilizer_order(canon)};
  }
  std::vector<CanonicalRep> out;
  out.reserve(reps.size());
  for (auto& [k, v] : reps) out.push_back(v);
  return out;
}

WeightSet quotient_weights(const MonomialIdeal& I) {
  WeightSet ws;
  for (const Expo& e : I.complement) {
    MPoly w;
    for (int j = 0; j < I.n; ++j)
      if (e[j] != 0) w += Rat(e[j]) * MPoly::var(alpha(j + 1));
    ws.push_back(std::move(w));
  }
  return ws;
}

WeightSet germ_weights(const MonomialGerm& f) {
  WeightSet ws;
  for (const Expo& e : f.coords) {
    MPoly w;
    for (int j = 0; j < f.n; ++j)
      if (e[j] != 0) w += Rat(e[j]) * MPoly::var(alpha(j + 1));
    ws.push_back(std::move(w));
  }
  return ws;
}

MonomialIdeal ideal_of(const MonomialGerm& f) {
  if (f.p() < 1) throw ValidationError("germ needs at least one coordinate");
  for (const Expo& e : f.coords)
    if (expo_degree(e) < 1)
      throw ValidationError("germ coordinate of degree 0");
  // Finite codimension needs a pure power of every variable in the ideal.
  std::vector<int> box(f.n, -1);
  for (const Expo& e : f.coords) {
    int var = -1, pure = 1;
    for (int j = 0; j < f.n; ++j)
      if (e[j] > 0) {
        if (var != -1) pure = 0;
        var = j;
      }
    if (pure && var >= 0 && (box[var] < 0 || e[var] < box[var]))
      box[var] = e[var];
  }
  for (int j = 0; j < f.n; ++j)
    if (box[j] < 0)
      throw ValidationError(
          "germ generates an infinite-codimension ideal (no pure power of "
          "variable " + std::to_string(j + 1) + ")");

  std::set<Expo> comp;
  Expo cur(f.n, 0);
  // Walk the bounding box; keep monomials not divisible by any coordinate.
  while (true) {
    if (expo_degree(cur) >= 1) {
      bool in_ideal = false;
      for (const Expo& g : f.coords)
        if (expo_divides(g, cur)) {
          in_ideal = true;
          break;
        }
      if (!in_ideal) comp.insert(cur);
    }
    int j = 0;
    while (j < f.n) {
      if (++cur[j] < box[j]) break;
      cur[j] = 0;
      ++j;
    }
    if (j == f.n) break;
  }
  return make_ideal(f.n, std::move(comp));
}

MonomialIdeal descendant(const MonomialIdeal& I) {
  std::set<Expo> comp;
  for (Expo e : I.complement) {
    e.push_back(0);
    comp.insert(std::move(e));
  }
  return MonomialIdeal{I.n + 1, std::move(comp)};
}

MPoly suspension_factor(const MonomialIdeal& I) {
  MPoly r = MPoly::constant(1);
  MPoly next = MPoly::var(alpha(I.n + 1));
  for (const MPoly& w : quotient_weights(I)) r *= next - w;
  return r;
}

FactoredRat suspension_factor_factored(const MonomialIdeal& I) {
  WeightSet next = {MPoly::var(alpha(I.n + 1))};
  return FactoredRat::resultant_factored(next, quotient_weights(I));
}

std::vector<Expo> min_generators(const MonomialIdeal& I) {
  std::set<Expo> cands;
  auto extend = [&](const Expo& w) {
    for (int j = 0; j < I.n; ++j) {
      Expo v = w;
      ++v[j];
      if (!I.complement.count(v)) cands.insert(std::move(v));
    }
  };
  extend(Expo(I.n, 0));
  for (const Expo& w : I.complement) extend(w);
  std::vector<Expo> gens;
  for (const Expo& v : cands) {
    bool minimal = true;
    for (int j = 0; j < I.n && minimal; ++j) {
      if (v[j] == 0) continue;
      Expo d = v;
      --d[j];
      if (expo_degree(d) >= 1 && !I.complement.count(d)) minimal = false;
    }
    if (minimal) gens.push_back(v);
  }
  std::sort(gens.begin(), gens.end(), std::greater<Expo>());
  return gens;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {
int var_index_of(char c) {
  switch (c) {
    case 'x': return 1;
    case 'y': return 2;
    case 'z': return 3;
    case 'u': return 4;
    default: return 0;
  }
}

std::map<int, int> parse_mono_text(const std::string& tok) {
  std::map<int, int> exps;
  std::size_t i = 0;
  while (i < tok.size()) {
    char c = tok[i];
    int idx = var_index_of(c);
    if (idx == 0)
      throw ValidationError("bad monomial '" + tok + "': unexpected '" +
                            std::string(1, c) + "'");
    ++i;
    if (c == 'x' && i < tok.size() &&
        std::isdigit(static_cast<unsigned char>(tok[i]))) {
      idx = 0;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
        idx = idx * 10 + (tok[i++] - '0');
      if (idx < 1) throw ValidationError("bad variable index in '" + tok + "'");
    }
    int e = 1;
    if (i < tok.size() && tok[i] == '^') {
      ++i;
      if (i >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[i])))
        throw ValidationError("bad exponent in '" + tok + "'");
      e = 0;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
        e = e * 10 + (tok[i++] - '0');
    }
    exps[idx] += e;
  }
  if (exps.empty()) throw ValidationError("empty monomial");
  return exps;
}

std::vector<std::map<int, int>> parse_mono_list(const std::string& s) {
  std::string body = s;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return std::isspace(
                                  static_cast<unsigned char>(c)); }),
             body.end());
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw ValidationError("unbalanced parentheses in '" + s + "'");
    body = body.substr(1, body.size() - 2);
  }
  if (body.empty()) throw ValidationError("empty monomial list");
  std::vector<std::map<int, int>> monos;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) monos.push_back(parse_mono_text(tok));
  return monos;
}

std::string mono_text(const Expo& e, int n) {
  std::ostringstream os;
  for (int j = 0; j < n; ++j) {
    if (e[j] == 0) continue;
    if (n <= 4)
      os << "xyzu"[j];
    else
      os << "x" << (j + 1);
    if (e[j] > 1) os << "^" << e[j];
  }
  return os.str();
}
}  // namespace

MonomialIdeal parse_ideal(const std::string& s) {
  auto monos = parse_mono_list(s);
  int n = 0;
  for (const auto& m : monos)
    for (const auto& [idx, e] : m) n = std::max(n, idx);
  MonomialGerm g;
  g.n = n;
  for (const auto& m : monos) {
    Expo e(n, 0);
    for (const auto& [idx, ex] : m) e[idx - 1] = ex;
    g.coords.push_back(std::move(e));
  }
  return ideal_of(g);
}

std::string ideal_str(const MonomialIdeal& I) {
  std::ostringstream os;
  os << "(";
  auto gens = min_generators(I);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) os << ",";
    os << mono_text(gens[k], I.n);
  }
  os << ")";
  return os.str();
}

MonomialGerm parse_germ(const std::string& s, int n) {
  auto monos = parse_mono_list(s);
  int used = 0;
  for (const auto& m : monos)
    for (const auto& [idx, e] : m) used = std::max(used, idx);
  if (n < 0) n = used;
  if (used > n)
    throw ValidationError("germ uses variable beyond the declared count");
  MonomialGerm g;
  g.n = n;
  for (const auto& m : monos) {
    Expo e(n, 0);
    for (const auto& [idx, ex] : m) e[idx - 1] = ex;
    if (expo_degree(e) < 1)
      throw ValidationError("germ coordinate of degree 0");
    g.coords.push_back(std::move(e));
  }
  return g;
}

std::string germ_str(const MonomialGerm& f) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < f.p(); ++i) {
    if (i) os << ",";
    os << mono_text(f.coords[i], f.n);
  }
  os << ")";
  return os.str();
}

}  // namespace thom
