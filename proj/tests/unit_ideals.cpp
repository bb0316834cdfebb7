#include <algorithm>
#include <functional>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "thom/ideals.hpp"

using namespace thom;

namespace {

// Census oracle built on a different principle than the production BFS:
// an order ideal in N^d is a weakly decreasing chain of order ideals in
// N^{d-1} (its slices along the last coordinate).
using IdealSet = std::set<std::vector<int>>;

bool subset_of(const IdealSet& a, const IdealSet& b) {
  for (const auto& v : a)
    if (!b.count(v)) return false;
  return true;
}

// All nonempty order ideals (origin included) of N^d with at most cap points.
std::vector<IdealSet> oracle_ideals(int d, int cap) {
  if (d == 1) {
    std::vector<IdealSet> out;
    for (int k = 1; k <= cap; ++k) {
      IdealSet s;
      for (int i = 0; i < k; ++i) s.insert({i});
      out.push_back(std::move(s));
    }
    return out;
  }
  std::vector<IdealSet> lower = oracle_ideals(d - 1, cap);
  std::vector<IdealSet> out;
  IdealSet acc;
  std::function<void(const IdealSet*, int, int)> grow =
      [&](const IdealSet* prev, int slice, int room) {
        for (const IdealSet& T : lower) {
          if (static_cast<int>(T.size()) > room) continue;
          if (prev && !subset_of(T, *prev)) continue;
          for (const auto& v : T) {
            std::vector<int> w = v;
            w.push_back(slice);
            acc.insert(std::move(w));
          }
          out.push_back(acc);
          grow(&T, slice + 1, room - static_cast<int>(T.size()));
          for (const auto& v : T) {
            std::vector<int> w = v;
            w.push_back(slice);
            acc.erase(w);
          }
        }
      };
  grow(nullptr, 0, cap);
  return out;
}

std::size_t oracle_census(int n, int m) {
  std::size_t count = 0;
  for (const auto& s : oracle_ideals(n, m + 1))
    if (static_cast<int>(s.size()) == m + 1) ++count;
  return count;
}

IdealSet complement_with_origin(const MonomialIdeal& I) {
  IdealSet s(I.complement.begin(), I.complement.end());
  s.insert(std::vector<int>(I.n, 0));
  return s;
}

Expo ev(std::initializer_list<int> xs) { return Expo(xs); }
}  // namespace

TEST_CASE("ideal construction validates the staircase") {
  CHECK(make_ideal(2, {ev({1, 0}), ev({0, 1})}).codim() == 2);
  CHECK_THROWS_AS(make_ideal(2, {ev({2, 0})}), ValidationError);       // gap
  CHECK_THROWS_AS(make_ideal(2, {ev({0, 0})}), ValidationError);       // deg 0
  CHECK_THROWS_AS(make_ideal(1, {ev({1, 0})}), ValidationError);       // length
}

TEST_CASE("fixed point enumeration matches the slice-chain oracle") {
  CHECK(enumerate_ideals(2, 2).size() == 3);
  CHECK(enumerate_ideals(1, 3).size() == 1);
  CHECK(enumerate_ideals(3, 3).size() == 13);

  // Frozen censuses: partitions, plane partitions, solid partitions.
  std::size_t expect2[] = {2, 3, 5, 7, 11};
  std::size_t expect3[] = {3, 6, 13, 24, 48};
  std::size_t expect4[] = {4, 10, 26, 59, 140};
  for (int m = 1; m <= 5; ++m) {
    CHECK(enumerate_ideals(1, m).size() == 1);
    CHECK(enumerate_ideals(2, m).size() == expect2[m - 1]);
    CHECK(enumerate_ideals(3, m).size() == expect3[m - 1]);
    CHECK(enumerate_ideals(4, m).size() == expect4[m - 1]);
    for (int n = 1; n <= 4; ++n)
      CHECK(enumerate_ideals(n, m).size() == oracle_census(n, m));
  }

  // Full set agreement with the oracle, not only counts.
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::set<IdealSet> produced;
      for (const auto& I : enumerate_ideals(n, m))
        produced.insert(complement_with_origin(I));
      std::set<IdealSet> expected;
      for (const auto& s : oracle_ideals(n, m + 1))
        if (static_cast<int>(s.size()) == m + 1) expected.insert(s);
      CHECK(produced == expected);
    }

  // Deterministic order.
  auto a = enumerate_ideals(3, 3), b = enumerate_ideals(3, 3);
  CHECK(a == b);

  CHECK_THROWS_AS(enumerate_ideals(0, 1), ValidationError);
}

TEST_CASE("codimension-2 ideals in two variables") {
  std::set<std::string> names;
  for (const auto& I : enumerate_ideals(2, 2)) names.insert(ideal_str(I));
  CHECK(names ==
        std::set<std::string>{"(x^3,y)", "(x,y^3)", "(x^2,xy,y^2)"});
}

TEST_CASE("canonical representatives match the published lists") {
  using Row = std::tuple<std::string, int, int>;
  auto rows = [](int m) {
    std::set<Row> out;
    for (const auto& r : canonical_representatives(m))
      out.insert({ideal_str(r.ideal), r.n_min, r.stabilizer_order});
    return out;
  };

  CHECK(rows(1) == std::set<Row>{{"(x^2)", 1, 1}});
  CHECK(rows(2) == std::set<Row>{{"(x^3)", 1, 1}, {"(x^2,xy,y^2)", 2, 2}});
  CHECK(rows(3) == std::set<Row>{{"(x^4)", 1, 1},
                                 {"(x^2,y^2)", 2, 2},
                                 {"(x^2,xy,y^3)", 2, 1},
                                 {"(x^2,xy,xz,y^2,yz,z^2)", 3, 6}});
  CHECK(rows(4) == std::set<Row>{{"(x^5)", 1, 1},
                                 {"(x^2,xy,y^4)", 2, 1},
                                 {"(x^3,xy,y^3)", 2, 2},
                                 {"(x^2,xy^2,y^3)", 2, 1},
                                 {"(x^2,xy,xz,y^2,yz,z^3)", 3, 2},
                                 {"(x^2,xy,xz,y^2,z^2)", 3, 2},
                                 {"(x^2,xy,xz,xu,y^2,yz,yu,z^2,zu,u^2)", 4, 24}});
}

TEST_CASE("orbit-stabilizer bookkeeping against the census") {
  for (int m = 1; m <= 4; ++m) {
    long total = 0;
    long mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    for (const auto& r : canonical_representatives(m)) {
      long rest = 1;
      for (int i = 2; i <= m - r.n_min; ++i) rest *= i;
      // Stabilizer of the ideal embedded in m variables.
      MonomialIdeal embedded = r.ideal;
      while (embedded.n < m) embedded = descendant(embedded);
      CHECK(stabilizer_order(embedded) == r.stabilizer_order * rest);
      total += mfact / (r.stabilizer_order * rest);
    }
    CHECK(total == static_cast<long>(enumerate_ideals(m, m).size()));
  }
}

TEST_CASE("quotient weights") {
  auto sorted = [](WeightSet ws) {
    std::sort(ws.begin(), ws.end(), poly_less);
    return ws;
  };
  MPoly a1 = MPoly::var(alpha(1)), a2 = MPoly::var(alpha(2));

  WeightSet w1 = sorted(quotient_weights(parse_ideal("(x^2,y^2)")));
  CHECK(w1 == sorted({a1, a2, a1 + a2}));

  WeightSet w2 = sorted(quotient_weights(parse_ideal("(x^2,xy,y^2)")));
  CHECK(w2 == sorted({a1, a2}));

  WeightSet w3 = sorted(quotient_weights(parse_ideal("(x^4)")));
  CHECK(w3 == sorted({a1, Rat(2) * a1, Rat(3) * a1}));
}

TEST_CASE("germs, their weights and their ideals") {
  MonomialGerm f = parse_germ("(x^2, y^2)");
  CHECK(f.p() == 2);
  auto ws = germ_weights(f);
  MPoly a1 = MPoly::var(alpha(1)), a2 = MPoly::var(alpha(2));
  CHECK(ws == WeightSet{Rat(2) * a1, Rat(2) * a2});
  CHECK(ideal_of(f) == parse_ideal("(x^2,y^2)"));

  MonomialIdeal J = parse_ideal("(xy,x^3,y^3)");
  CHECK(J.complement ==
        std::set<Expo>{ev({1, 0}), ev({0, 1}), ev({2, 0}), ev({0, 2})});

  CHECK(ideal_of(parse_germ("(x^2,x^3)")) == ideal_of(parse_germ("(x^2)")));

  CHECK_THROWS_AS(parse_ideal("(xy)"), ValidationError);
  CHECK_THROWS_AS(parse_germ("(x^2, 0)"), ValidationError);

  // Declared variable count beyond what the text uses.
  MonomialGerm g = parse_germ("(x^2)", 2);
  CHECK(g.n == 2);
  CHECK_THROWS_AS(ideal_of(g), ValidationError);  // infinite codimension
}

TEST_CASE("descendants and suspension factors") {
  MonomialIdeal x3 = parse_ideal("(x^3)");
  MonomialIdeal d = descendant(x3);
  CHECK(d == parse_ideal("(x^3,y)"));
  CHECK(d.complement == std::set<Expo>{ev({1, 0}), ev({2, 0})});

  MPoly a1 = MPoly::var(alpha(1)), a2 = MPoly::var(alpha(2));
  CHECK(suspension_factor(x3) == (a2 - a1) * (a2 - Rat(2) * a1));
  RatFn sf = RatFn::from_factored(suspension_factor_factored(x3));
  CHECK(sf.as_poly() == suspension_factor(x3));

  for (const auto& I : enumerate_ideals(2, 3)) {
    MonomialIdeal D = descendant(I);
    CHECK(D.codim() == I.codim());
    CHECK_NOTHROW(make_ideal(D.n, D.complement));
  }
}

TEST_CASE("minimal generators and text round trips") {
  auto gens = min_generators(parse_ideal("(x^2,xy,y^2)"));
  CHECK(gens == std::vector<Expo>{ev({2, 0}), ev({1, 1}), ev({0, 2})});

  CHECK(min_generators(parse_ideal("(x^2,y^2)")) ==
        std::vector<Expo>{ev({2, 0}), ev({0, 2})});

  for (const char* s : {"(x^2,xy,y^3)", "(x^2,y^2)", "(x^3,y)",
                        "(x^2,xy,xz,y^2,yz,z^3)", "(x^5)"}) {
    CHECK(ideal_str(parse_ideal(s)) == s);
  }

  // Indexed variable names denote the same ideals.
  CHECK(parse_ideal("(x1^2,x2^2)") == parse_ideal("(x^2,y^2)"));
  CHECK(parse_ideal("(x^2, x y, y^3)") == parse_ideal("(x^2,xy,y^3)"));
  CHECK(germ_str(parse_germ("(y^2,x^2)")) == "(y^2,x^2)");  // order kept

  CHECK_THROWS_AS(parse_ideal("(x^2,,y^2)"), ValidationError);
  CHECK_THROWS_AS(parse_ideal("(v^2)"), ValidationError);
}
