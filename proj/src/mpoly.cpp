#include "thom/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace thom {

std::string var_name(VarId v) {
  switch (var_ns(v)) {
    case VarNS::T:
      return "t";
    case VarNS::Alpha:
      return "a" + std::to_string(var_index(v));
    case VarNS::Beta:
      return "b" + std::to_string(var_index(v));
    case VarNS::C:
      return "c" + std::to_string(var_index(v));
    case VarNS::Z:
      return "z" + std::to_string(var_index(v));
  }
  return "?";
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : f) d += e;
  return d;
}

int Monomial::exp_of(VarId v) const {
  for (const auto& [w, e] : f)
    if (w == v) return e;
  return 0;
}

Monomial mono_make(std::initializer_list<std::pair<VarId, int>> fs) {
  Monomial m;
  for (const auto& [v, e] : fs) {
    if (e != 0) m.f.emplace_back(v, e);
  }
  std::sort(m.f.begin(), m.f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f.reserve(a.f.size() + b.f.size());
  std::size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    if (a.f[i].first < b.f[j].first) {
      r.f.push_back(a.f[i++]);
    } else if (b.f[j].first < a.f[i].first) {
      r.f.push_back(b.f[j++]);
    } else {
      r.f.emplace_back(a.f[i].first, a.f[i].second + b.f[j].second);
      ++i, ++j;
    }
  }
  for (; i < a.f.size(); ++i) r.f.push_back(a.f[i]);
  for (; j < b.f.size(); ++j) r.f.push_back(b.f[j]);
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  std::size_t i = 0;
  for (const auto& [v, e] : d.f) {
    while (i < m.f.size() && m.f[i].first < v) ++i;
    if (i >= m.f.size() || m.f[i].first != v || m.f[i].second < e) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r;
  r.f.reserve(m.f.size());
  std::size_t i = 0;
  for (const auto& [v, e] : m.f) {
    int sub = 0;
    while (i < d.f.size() && d.f[i].first < v) ++i;
    if (i < d.f.size() && d.f[i].first == v) sub = d.f[i].second;
    if (e - sub < 0) throw NotDivisible("mono_div: not a multiple");
    if (e - sub > 0) r.f.emplace_back(v, e - sub);
  }
  return r;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    if (a.f[i].first == b.f[j].first) {
      if (a.f[i].second != b.f[j].second)
        return a.f[i].second < b.f[j].second ? -1 : 1;
      ++i, ++j;
    } else if (a.f[i].first < b.f[j].first) {
      return 1;  // a has a positive exponent on an earlier variable
    } else {
      return -1;
    }
  }
  if (i < a.f.size()) return 1;
  if (j < b.f.size()) return -1;
  return 0;
}

std::string mono_str(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto& [v, e] : m.f) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

MPoly MPoly::constant(const Rat& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

MPoly MPoly::var(VarId v) {
  MPoly p;
  p.terms_.emplace_back(mono_make({{v, 1}}), Rat(1));
  return p;
}

MPoly MPoly::term(Monomial m, Rat c) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return mono_cmp(a.first, b.first) > 0;
  });
  MPoly p;
  p.terms_.reserve(ts.size());
  for (auto& t : ts) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const MPoly::Term& MPoly::leading() const {
  if (terms_.empty()) throw MathError("leading term of zero polynomial");
  return terms_.front();
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.degree();
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::merge_add(const MPoly& a, const MPoly& b) {
  MPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = mono_cmp(a.terms_[i].first, b.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rat s = a.terms_[i].second + b.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const { return merge_add(*this, o); }

MPoly MPoly::operator-(const MPoly& o) const { return merge_add(*this, -o); }

MPoly MPoly::scaled(const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

MPoly MPoly::shift_scaled(const Monomial& m, const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_back(mono_mul(mm, m), cc * c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  const MPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
  const MPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
  std::vector<MPoly> parts;
  parts.reserve(small.terms_.size());
  for (const auto& [m, c] : small.terms_) parts.push_back(big.shift_scaled(m, c));
  return sum_tree(std::move(parts));
}

MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

MPoly MPoly::pow(int e) const {
  if (e < 0) throw MathError("MPoly::pow: negative exponent");
  MPoly r = MPoly::constant(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::set<VarId> MPoly::vars() const {
  std::set<VarId> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.f) s.insert(v);
  return s;
}

int MPoly::max_exp(VarId v) const {
  int mx = 0;
  for (const auto& [m, c] : terms_) mx = std::max(mx, m.exp_of(v));
  return mx;
}

MPoly MPoly::coeff_in_var(VarId v, int k) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.exp_of(v) != k) continue;
    Monomial mm;
    mm.f.reserve(m.f.size());
    for (const auto& [w, e] : m.f)
      if (w != v) mm.f.emplace_back(w, e);
    r.terms_.emplace_back(std::move(mm), c);
  }
  // Removing one shared variable keeps relative grlex order only within the
  // same total degree, so re-normalize.
  return from_terms(std::move(r.terms_));
}

MPoly MPoly::subst(const std::map<VarId, MPoly>& a) const {
  // Power cache per substituted variable.
  std::map<std::pair<VarId, int>, MPoly> cache;
  auto powered = [&](VarId v, int e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MPoly p = a.at(v).pow(e);
    return cache.emplace(key, std::move(p)).first->second;
  };
  std::vector<MPoly> parts;
  parts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    MPoly acc = MPoly::constant(c);
    Monomial keep;
    for (const auto& [v, e] : m.f) {
      if (a.count(v)) {
        acc = acc * powered(v, e);
      } else {
        keep.f.emplace_back(v, e);
      }
    }
    if (!keep.is_one()) acc = acc.shift_scaled(keep, Rat(1));
    parts.push_back(std::move(acc));
  }
  return sum_tree(std::move(parts));
}

MPoly MPoly::eval_partial(const std::map<VarId, Rat>& a) const {
  std::map<std::pair<VarId, int>, Rat> cache;
  auto powered = [&](VarId v, int e) -> const Rat& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Rat r = 1;
    const Rat& base = a.at(v);
    for (int i = 0; i < e; ++i) r *= base;
    return cache.emplace(key, std::move(r)).first->second;
  };
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    Monomial keep;
    for (const auto& [v, e] : m.f) {
      if (a.count(v)) {
        coef *= powered(v, e);
      } else {
        keep.f.emplace_back(v, e);
      }
    }
    out.emplace_back(std::move(keep), std::move(coef));
  }
  return from_terms(std::move(out));
}

Rat MPoly::eval(const std::map<VarId, Rat>& a) const {
  MPoly p = eval_partial(a);
  if (p.is_zero()) return Rat(0);
  if (!p.is_constant()) throw MathError("eval: unassigned variable " +
                                        var_name(*p.vars().begin()));
  return p.terms_.front().second;
}

std::pair<Rat, MPoly> MPoly::primitive() const {
  if (is_zero()) return {Rat(0), MPoly()};
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(num_gcd, den_lcm);
  scale.canonicalize();
  if (terms_.front().second < 0) scale = -scale;
  MPoly prim = scaled(Rat(1) / scale);
  return {scale, prim};
}

MPoly MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw MathError("exact_div: zero divisor");
  // Remainder lives in a descending-ordered map so each elimination step
  // touches only divisor-many entries instead of rebuilding the remainder.
  struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return mono_cmp(a, b) > 0;
    }
  };
  std::map<Monomial, Rat, MonoGreater> r;
  for (const auto& [m, c] : terms_) r.emplace_hint(r.end(), m, c);
  const auto& [dm, dc] = d.leading();
  MPoly q;
  while (!r.empty()) {
    auto lead = r.begin();
    if (!mono_divides(dm, lead->first)) throw NotDivisible("exact_div: remainder");
    Monomial qm = mono_div(lead->first, dm);
    Rat qc = lead->second / dc;
    r.erase(lead);
    q.terms_.emplace_back(qm, qc);  // quotient terms appear in decreasing order
    bool skip_lead = true;
    for (const auto& [m2, c2] : d.terms_) {
      if (skip_lead) {
        skip_lead = false;  // the leading product cancels by construction
        continue;
      }
      auto [it, fresh] = r.try_emplace(mono_mul(qm, m2), 0);
      it->second -= qc * c2;
      if (it->second == 0) r.erase(it);
    }
  }
  return q;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (m.is_one()) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << mono_str(m);
    }
    first = false;
  }
  return os.str();
}

bool poly_less(const MPoly& a, const MPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = mono_cmp(ta[i].first, tb[i].first);
    if (c != 0) return c < 0;
    if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second;
  }
  return ta.size() < tb.size();
}

MPoly sum_tree(std::vector<MPoly> items) {
  if (items.empty()) return MPoly();
  while (items.size() > 1) {
    std::vector<MPoly> next;
    next.reserve((items.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < items.size(); i += 2)
      next.push_back(items[i] + items[i + 1]);
    if (items.size() % 2) next.push_back(std::move(items.back()));
    items = std::move(next);
  }
  return std::move(items.front());
}

}  // namespace thom
