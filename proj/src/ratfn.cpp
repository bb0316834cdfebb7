#include "thom/ratfn.hpp"

#include <algorithm>
#include <sstream>

namespace thom {

MPoly resultant(const WeightSet& S, const WeightSet& T) {
  MPoly r = MPoly::constant(1);
  for (const MPoly& s : S)
    for (const MPoly& t : T) r *= s - t;
  return r;
}

// ---------------------------------------------------------------------------
// FactoredRat

FactoredRat FactoredRat::infinite() {
  FactoredRat f;
  f.inf = true;
  return f;
}

FactoredRat FactoredRat::from_scalar(const Rat& c) {
  FactoredRat f;
  f.scale = c;
  return f;
}

FactoredRat FactoredRat::from_poly(const MPoly& p) {
  FactoredRat f;
  auto [sc, prim] = p.primitive();
  f.scale = sc;
  if (!prim.is_constant()) f.nfac.push_back({prim, 1});
  return f;
}

FactoredRat FactoredRat::resultant_factored(const WeightSet& S,
                                            const WeightSet& T) {
  FactoredRat f = from_scalar(1);
  for (const MPoly& s : S)
    for (const MPoly& t : T) {
      MPoly d = s - t;
      if (d.is_zero()) return from_scalar(0);
      auto [sc, prim] = d.primitive();
      f.scale *= sc;
      if (!prim.is_constant()) f.push_nfac(prim, 1);
    }
  f.cancel();
  return f;
}

void FactoredRat::push_nfac(const MPoly& p, int e) {
  if (e == 0) return;
  for (auto& [q, m] : nfac)
    if (q == p) {
      m += e;
      return;
    }
  nfac.push_back({p, e});
}

void FactoredRat::push_dfac(const MPoly& p, int e) {
  if (e == 0) return;
  for (auto& [q, m] : dfac)
    if (q == p) {
      m += e;
      return;
    }
  dfac.push_back({p, e});
}

void FactoredRat::cancel() {
  for (auto& [p, m] : nfac)
    for (auto& [q, d] : dfac)
      if (p == q) {
        int c = std::min(m, d);
        m -= c;
        d -= c;
      }
  auto drop = [](std::vector<std::pair<MPoly, int>>& fs) {
    fs.erase(std::remove_if(fs.begin(), fs.end(),
                            [](const auto& f) { return f.second == 0; }),
             fs.end());
  };
  drop(nfac);
  drop(dfac);
  if (scale == 0) {
    nfac.clear();
    dfac.clear();
  }
}

FactoredRat FactoredRat::mul(const FactoredRat& o) const {
  if (inf || o.inf) {
    if (is_zero() || o.is_zero())
      throw MathError("0 * infinite class is undefined");
    return infinite();
  }
  FactoredRat r = *this;
  r.scale *= o.scale;
  if (r.scale == 0) return from_scalar(0);
  for (const auto& [p, e] : o.nfac) r.push_nfac(p, e);
  for (const auto& [p, e] : o.dfac) r.push_dfac(p, e);
  r.cancel();
  return r;
}

FactoredRat FactoredRat::div(const FactoredRat& o) const {
  if (o.inf) return from_scalar(0);
  if (o.is_zero()) throw MathError("division by zero");
  FactoredRat inv;
  inv.scale = Rat(1) / o.scale;
  inv.nfac = o.dfac;
  inv.dfac = o.nfac;
  return mul(inv);
}

FactoredRat FactoredRat::add(const FactoredRat& o) const {
  if (inf || o.inf) throw MathError("adding infinite class");
  return from_poly(expand() + o.expand());
}

FactoredRat FactoredRat::neg() const {
  if (inf) return *this;
  FactoredRat r = *this;
  r.scale = -r.scale;
  return r;
}

FactoredRat FactoredRat::pow(int e) const {
  if (e == 0) return from_scalar(1);
  if (inf) return e > 0 ? infinite() : from_scalar(0);
  if (e < 0) return from_scalar(1).div(*this).pow(-e);
  FactoredRat r = *this;
  Rat s = 1;
  for (int i = 0; i < e; ++i) s *= scale;
  r.scale = s;
  for (auto& f : r.nfac) f.second *= e;
  for (auto& f : r.dfac) f.second *= e;
  return r;
}

MPoly FactoredRat::expand() const {
  if (inf) throw InfiniteClass("cannot expand infinite class");
  if (!dfac.empty())
    throw MathError("expand: value has denominator factors");
  return expand_num();
}

MPoly FactoredRat::expand_num() const {
  if (inf) throw InfiniteClass("cannot expand infinite class");
  MPoly r = MPoly::constant(scale);
  for (const auto& [p, e] : nfac) r *= p.pow(e);
  return r;
}

MPoly FactoredRat::expand_den() const {
  if (inf) throw InfiniteClass("cannot expand infinite class");
  MPoly r = MPoly::constant(1);
  for (const auto& [p, e] : dfac) r *= p.pow(e);
  return r;
}

Rat FactoredRat::eval(const std::map<VarId, Rat>& a) const {
  if (inf) throw InfiniteClass("evaluating infinite class");
  Rat r = scale;
  if (r == 0) return r;
  for (const auto& [p, e] : nfac) {
    Rat v = p.eval(a);
    if (v == 0) return Rat(0);
    for (int i = 0; i < e; ++i) r *= v;
  }
  for (const auto& [p, e] : dfac) {
    Rat v = p.eval(a);
    if (v == 0) throw MathError("denominator factor vanishes at point");
    for (int i = 0; i < e; ++i) r /= v;
  }
  return r;
}

int FactoredRat::degree() const {
  if (inf) throw InfiniteClass("degree of infinite class");
  if (scale == 0) return 0;
  int d = 0;
  for (const auto& [p, e] : nfac) d += e * p.degree();
  for (const auto& [p, e] : dfac) d -= e * p.degree();
  return d;
}

FactoredRat FactoredRat::subst(const std::map<VarId, MPoly>& a) const {
  if (inf) return *this;
  FactoredRat r = from_scalar(scale);
  for (const auto& [p, e] : nfac) {
    auto [sc, prim] = p.subst(a).primitive();
    if (sc == 0) return from_scalar(0);
    for (int i = 0; i < e; ++i) r.scale *= sc;
    if (!prim.is_constant()) r.push_nfac(prim, e);
  }
  for (const auto& [p, e] : dfac) {
    auto [sc, prim] = p.subst(a).primitive();
    if (sc == 0) throw MathError("substitution kills denominator factor");
    for (int i = 0; i < e; ++i) r.scale /= sc;
    if (!prim.is_constant()) r.push_dfac(prim, e);
  }
  r.cancel();
  return r;
}

std::string FactoredRat::to_string() const {
  if (inf) return "INF";
  std::ostringstream os;
  bool neg_scale = scale < 0;
  Rat mag = neg_scale ? Rat(-scale) : scale;
  if (neg_scale) os << "-";
  bool need_star = false;
  if (mag != 1 || nfac.empty()) {
    if (mag.get_den() == 1)
      os << mag.get_str();
    else
      os << "(" << mag.get_str() << ")";
    need_star = true;
  }
  for (const auto& [p, e] : nfac) {
    if (need_star) os << "*";
    os << "(" << p.to_string() << ")";
    if (e != 1) os << "^" << e;
    need_star = true;
  }
  if (!dfac.empty()) {
    os << "/";
    if (dfac.size() > 1 || dfac.front().second != 1) os << "(";
    bool first = true;
    for (const auto& [p, e] : dfac) {
      if (!first) os << "*";
      os << "(" << p.to_string() << ")";
      if (e != 1) os << "^" << e;
      first = false;
    }
    if (dfac.size() > 1 || dfac.front().second != 1) os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFn

namespace {
int mult_in(const std::map<MPoly, int, PolyLess>& den, const MPoly& f) {
  auto it = den.find(f);
  return it == den.end() ? 0 : it->second;
}

// A deterministic point on the zero set of a linear form, extended so that
// every variable in `vars` is assigned. Returns nullopt for non-linear input.
std::optional<std::map<VarId, Rat>> linear_zero_point(
    const MPoly& f, const std::set<VarId>& vars) {
  if (f.degree() != 1) return std::nullopt;
  std::map<VarId, Rat> pt;
  long seed = 2;
  for (VarId v : vars) {
    pt[v] = Rat(seed);
    seed = seed * 3 + 1;
  }
  for (VarId v : f.vars())
    if (!pt.count(v)) {
      pt[v] = Rat(seed);
      seed = seed * 3 + 1;
    }
  // Solve f(pt) = 0 for the last variable of f.
  VarId w = *f.vars().rbegin();
  Rat cw = 0, rest = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_one()) {
      rest += c;
    } else if (m.f.front().first == w) {
      cw = c;
    } else {
      rest += c * pt.at(m.f.front().first);
    }
  }
  if (cw == 0) return std::nullopt;
  pt[w] = -rest / cw;
  return pt;
}
}  // namespace

RatFn RatFn::from_poly(MPoly p) {
  RatFn r;
  r.num_ = std::move(p);
  return r;
}

RatFn RatFn::from_factored(const FactoredRat& f) {
  RatFn r;
  if (f.inf) {
    r.inf_ = true;
    return r;
  }
  r.num_ = f.expand_num();
  if (r.num_.is_zero()) return r;
  for (const auto& [p, e] : f.dfac) r.mul_den_factor(p, e);
  r.reduce();
  return r;
}

RatFn RatFn::from_num_den(MPoly num,
                          const std::vector<std::pair<MPoly, int>>& den) {
  RatFn r;
  r.num_ = std::move(num);
  if (r.num_.is_zero()) return r;
  Rat c(1);
  for (const auto& [p, e] : den) {
    auto [s, g] = p.primitive();
    if (g.is_constant()) throw MathError("constant denominator factor");
    for (int i = 0; i < e; ++i) c /= s;
    r.mul_den_factor(g, e);
  }
  r.num_ = r.num_.scaled(c);
  r.reduce();
  return r;
}

void RatFn::mul_den_factor(const MPoly& prim, int e) {
  if (e == 0) return;
  den_[prim] += e;
}

RatFn RatFn::add(const RatFn& o) const {
  if (inf_ || o.inf_) throw MathError("adding infinite class");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RatFn r;
  r.den_ = den_;
  for (const auto& [f, m] : o.den_) {
    auto it = r.den_.find(f);
    if (it == r.den_.end())
      r.den_[f] = m;
    else
      it->second = std::max(it->second, m);
  }
  MPoly na = num_, nb = o.num_;
  for (const auto& [f, m] : r.den_) {
    int da = m - mult_in(den_, f);
    if (da > 0) na *= f.pow(da);
    int db = m - mult_in(o.den_, f);
    if (db > 0) nb *= f.pow(db);
  }
  r.num_ = na + nb;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  r.reduce();
  return r;
}

RatFn RatFn::sub(const RatFn& o) const { return add(o.neg()); }

RatFn RatFn::neg() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::mul_poly(const MPoly& p) const {
  if (inf_) throw MathError("scaling infinite class");
  RatFn r = *this;
  if (p.is_zero()) {
    r.num_ = MPoly::zero();
    r.den_.clear();
    return r;
  }
  r.num_ *= p;
  r.reduce();
  return r;
}

RatFn RatFn::mul_factored(const FactoredRat& f) const {
  if (inf_) throw MathError("scaling infinite class");
  if (f.inf) throw MathError("multiplying by infinite class");
  RatFn r = *this;
  r.num_ = r.num_.scaled(f.scale);
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  for (const auto& [p, e] : f.nfac) {
    // Cancel against existing denominator factors first.
    auto it = r.den_.find(p);
    int left = e;
    if (it != r.den_.end()) {
      int c = std::min(left, it->second);
      it->second -= c;
      left -= c;
      if (it->second == 0) r.den_.erase(it);
    }
    if (left > 0) r.num_ *= p.pow(left);
  }
  for (const auto& [p, e] : f.dfac) r.mul_den_factor(p, e);
  r.reduce();
  return r;
}

RatFn RatFn::div_factored(const FactoredRat& f) const {
  if (f.inf) return RatFn();  // 1/INF contributes nothing
  if (f.is_zero()) throw MathError("division by zero");
  FactoredRat inv;
  inv.scale = Rat(1) / f.scale;
  inv.nfac = f.dfac;
  inv.dfac = f.nfac;
  return mul_factored(inv);
}

RatFn RatFn::scaled(const Rat& c) const {
  RatFn r = *this;
  r.num_ = r.num_.scaled(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

void RatFn::reduce() {
  if (inf_ || num_.is_zero()) {
    den_.clear();
    return;
  }
  std::set<VarId> vs = num_.vars();
  for (auto it = den_.begin(); it != den_.end();) {
    const MPoly& f = it->first;
    if (f.is_constant())
      throw MathError("constant denominator factor");
    auto pt = linear_zero_point(f, vs);
    while (it->second > 0) {
      // A nonzero value on the zero set of f rules out divisibility.
      if (pt && num_.eval(*pt) != 0) break;
      try {
        num_ = num_.exact_div(f);
      } catch (const NotDivisible&) {
        break;
      }
      --it->second;
    }
    if (it->second == 0)
      it = den_.erase(it);
    else
      ++it;
  }
}

bool RatFn::is_polynomial() const { return !inf_ && den_.empty(); }

MPoly RatFn::as_poly() const {
  if (!is_polynomial())
    throw MathError("rational function did not reduce to a polynomial: " +
                    to_string());
  return num_;
}

bool RatFn::equals(const RatFn& o) const {
  if (inf_ || o.inf_) return inf_ == o.inf_;
  return sub(o).is_zero();
}

Rat RatFn::eval(const std::map<VarId, Rat>& a) const {
  if (inf_) throw InfiniteClass("evaluating infinite class");
  Rat r = num_.eval(a);
  for (const auto& [f, m] : den_) {
    Rat v = f.eval(a);
    if (v == 0) throw MathError("denominator factor vanishes at point");
    for (int i = 0; i < m; ++i) r /= v;
  }
  return r;
}

FactoredRat RatFn::reciprocal_factored() const {
  if (inf_) return FactoredRat::from_scalar(0);
  if (num_.is_zero()) throw MathError("reciprocal of zero");
  auto [sc, prim] = num_.primitive();
  FactoredRat f;
  f.scale = Rat(1) / sc;
  for (const auto& [p, e] : den_) f.nfac.push_back({p, e});
  if (!prim.is_constant()) f.dfac.push_back({prim, 1});
  f.cancel();
  return f;
}

MPoly permute_poly(const MPoly& p, VarNS ns, const std::vector<int>& perm) {
  std::vector<MPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial m2 = m;
    for (auto& [v, e] : m2.f)
      if (var_ns(v) == ns) {
        int idx = var_index(v);
        if (idx >= 1 && idx <= static_cast<int>(perm.size()))
          v = make_var(ns, perm[idx - 1]);
      }
    std::sort(m2.f.begin(), m2.f.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ts.push_back({std::move(m2), c});
  }
  return MPoly::from_terms(std::move(ts));
}

RatFn RatFn::permuted(VarNS ns, const std::vector<int>& perm) const {
  RatFn r;
  r.inf_ = inf_;
  r.num_ = permute_poly(num_, ns, perm);
  for (const auto& [f, m] : den_) {
    auto [sc, prim] = permute_poly(f, ns, perm).primitive();
    // Permuting a primitive polynomial only reorders terms and possibly
    // flips the leading sign.
    if (sc == -1) {
      if (m % 2 != 0) r.num_ = -r.num_;
    } else if (sc != 1) {
      throw MathError("permutation broke factor normalization");
    }
    r.den_[prim] += m;
  }
  return r;
}

std::string RatFn::to_string() const {
  if (inf_) return "INF";
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ") / (";
  bool first = true;
  for (const auto& [f, m] : den_) {
    if (!first) os << "*";
    os << "(" << f.to_string() << ")";
    if (m != 1) os << "^" << m;
    first = false;
  }
  os << ")";
  return os.str();
}

RatFn ratfn_sum_tree(std::vector<RatFn> items) {
  if (items.empty()) return RatFn::zero();
  while (items.size() > 1) {
    std::vector<RatFn> next;
    next.reserve(items.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < items.size(); i += 2)
      next.push_back(items[i].add(items[i + 1]));
    if (items.size() % 2 == 1) next.push_back(items.back());
    items = std::move(next);
  }
  return items.front();
}

namespace {
bool perm_sign_positive(std::vector<int> p) {
  int sw = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i) + 1) {
      std::swap(p[i], p[p[i] - 1]);
      ++sw;
    }
  return sw % 2 == 0;
}
}  // namespace

RatFn symmetrize(const RatFn& f, int n, int stabilizer_order, VarNS ns) {
  if (n < 0 || stabilizer_order <= 0)
    throw ValidationError("symmetrize: bad arguments");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<RatFn> parts;
  do {
    parts.push_back(f.permuted(ns, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  RatFn s = ratfn_sum_tree(std::move(parts));
  return s.scaled(Rat(1) / Rat(stabilizer_order));
}

RatFn symmetrize_factored(const FactoredRat& f, int n, int stabilizer_order,
                          VarNS ns) {
  if (n < 0 || stabilizer_order <= 0)
    throw ValidationError("symmetrize_factored: bad arguments");
  if (f.inf) throw MathError("symmetrizing infinite class");
  if (f.is_zero()) return RatFn::zero();

  // Numerator with all signs and the scale folded in; denominator as a
  // multiset of primitive positive-leading factors.
  MPoly num = MPoly::constant(f.scale);
  for (const auto& [p, e] : f.nfac) num *= p.pow(e);
  Rat csc(1);
  std::map<MPoly, int, PolyLess> den;
  for (const auto& [p, e] : f.dfac) {
    auto [s, g] = p.primitive();
    for (int i = 0; i < e; ++i) csc /= s;
    den[g] += e;
  }
  num = num.scaled(csc / Rat(stabilizer_order));

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Orbit lcm of the denominator multiset.
  std::map<MPoly, int, PolyLess> lcm;
  for (const auto& perm : perms) {
    std::map<MPoly, int, PolyLess> img;
    for (const auto& [g, e] : den) {
      auto [s, gc] = permute_poly(g, ns, perm).primitive();
      img[gc] += e;
    }
    for (const auto& [g, e] : img) {
      int& m = lcm[g];
      m = std::max(m, e);
    }
  }

  // One numerator over the lcm; its permutations differ only by the sign
  // picked up when the permuted lcm factors are renormalized.
  MPoly base = num;
  for (const auto& [g, m] : lcm) {
    auto it = den.find(g);
    int extra = m - (it == den.end() ? 0 : it->second);
    if (extra > 0) base *= g.pow(extra);
  }
  std::vector<MPoly> parts;
  parts.reserve(perms.size());
  for (const auto& perm : perms) {
    bool flip = false;
    for (const auto& [g, m] : lcm) {
      if (m % 2 == 0) continue;
      auto [s, gc] = permute_poly(g, ns, perm).primitive();
      if (s < 0) flip = !flip;
    }
    MPoly img = permute_poly(base, ns, perm);
    parts.push_back(flip ? -img : img);
  }
  std::vector<std::pair<MPoly, int>> dlist(lcm.begin(), lcm.end());
  return RatFn::from_num_den(sum_tree(std::move(parts)), dlist);
}

RatFn asymmetrize(const RatFn& f, int mu, VarNS ns) {
  if (mu < 0) throw ValidationError("asymmetrize: bad arguments");
  std::vector<int> perm(mu);
  for (int i = 0; i < mu; ++i) perm[i] = i + 1;
  std::vector<RatFn> parts;
  do {
    RatFn g = f.permuted(ns, perm);
    parts.push_back(perm_sign_positive(perm) ? g : g.neg());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ratfn_sum_tree(std::move(parts));
}

}  // namespace thom
