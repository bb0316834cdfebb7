#include <string>

#include "doctest.h"
#include "thom/euler.hpp"
#include "thom/expr.hpp"

using namespace thom;

namespace {

bool same(const FactoredRat& a, const FactoredRat& b) {
  return RatFn::from_factored(a).equals(RatFn::from_factored(b));
}

bool same_expr(const FactoredRat& a, const std::string& expr) {
  return same(a, parse_expression(expr));
}

}  // namespace

TEST_CASE("algebra ids: mu, gamma, text forms") {
  struct Row {
    const char* text;
    int mu, gamma;
  };
  const Row rows[] = {
      {"A_1", 1, 1},         {"A_2", 2, 2},         {"A_4", 4, 4},
      {"Sigma^2", 2, 4},     {"Sigma^3", 3, 9},     {"I_{2,2}", 3, 4},
      {"I_{2,3}", 4, 5},     {"III_{2,3}", 3, 5},   {"III_{2,4}", 4, 6},
      {"III_{3,3}", 4, 6},   {"Sigma^{2,1}", 4, 7}, {"Phi_{1,0}", 2, 2},
      {"Phi_{2,0}", 3, 4},   {"Phi_{2,1}", 3, 5},   {"Phi_{3,0}", 4, 7},
      {"Phi_{3,1}", 4, 8},   {"Phi_{3,2}", 4, 10},
  };
  for (const Row& r : rows) {
    AlgebraId q = parse_algebra(r.text);
    CHECK(q.mu() == r.mu);
    CHECK(q.gamma() == r.gamma);
    CHECK(q.str() == r.text);
    CHECK(parse_algebra(q.str()) == q);
  }
  // flag spellings
  CHECK(parse_algebra("A2") == algebra_a(2));
  CHECK(parse_algebra("I2,3") == algebra_iab(2, 3));
  CHECK(parse_algebra("III2,4") == algebra_iiiab(2, 4));
  CHECK(parse_algebra("Sigma2,1") == algebra_sigma21());
  CHECK(parse_algebra("Sigma2") == algebra_sigma(2));
  CHECK(parse_algebra("Phi3,1") == algebra_phi(3, 1));
  // the quadric-pencil aliases share mu and gamma with their duals
  CHECK(algebra_phi(2, 0).mu() == algebra_iab(2, 2).mu());
  CHECK(algebra_phi(2, 0).gamma() == algebra_iab(2, 2).gamma());
  CHECK(algebra_phi(2, 1).mu() == algebra_iiiab(2, 3).mu());
  CHECK(algebra_phi(2, 1).gamma() == algebra_iiiab(2, 3).gamma());
  CHECK_THROWS_AS(parse_algebra("B_2"), ValidationError);
  CHECK_THROWS_AS(parse_algebra("A_x"), ValidationError);
  CHECK_THROWS_AS(parse_algebra("Phi_{2,2}"), ValidationError);
  CHECK_THROWS_AS(parse_algebra("I_{3,2}"), ValidationError);
  CHECK_THROWS_AS(parse_algebra("Sigma^{3,1}"), ValidationError);
}

TEST_CASE("shipped table loads with macros and round-trips byte for byte") {
  EulerTable t = shipped_table();
  CHECK(t.entries.size() == 42);
  CHECK(t.algebras().size() == 10);
  REQUIRE(t.macros.count("CLUB") == 1);
  REQUIRE(t.macros.count("SPADE") == 1);
  CHECK(same_expr(t.macros.at("CLUB"),
                  "(a1-a2)*(a1-a3)*(a1-2*a2)*(a1-2*a3)*(a2-a3)^2"));
  CHECK(same_expr(t.macros.at("SPADE"),
                  "(a1-a3)^2*(a2-a3)^2*(a1-a2-a3)*(a2-a1-a3)"));

  EulerTable t2 = load_table_file(THOM_TABLE_FILE);
  CHECK(t2.dump() == t.dump());
  CHECK(load_table(t.dump()).dump() == t.dump());
  CHECK(t2.entries.size() == t.entries.size());

  const EulerEntry* inf = t.find(parse_algebra("I_{2,2}"), parse_ideal("(x^4)"));
  REQUIRE(inf != nullptr);
  CHECK(inf->value.inf);
  CHECK(inf->raw == "INF");

  const EulerEntry* a2m2 =
      t.find(parse_algebra("A_2"), parse_ideal("(x^2,xy,y^2)"));
  REQUIRE(a2m2 != nullptr);
  CHECK(a2m2->provenance == Provenance::Shipped);
  CHECK(a2m2->raw == "(1/3)*(a1-2*a2)*(a2-2*a1)");
  CHECK(same_expr(a2m2->value, "(1/3)*(a1-2*a2)*(a2-2*a1)"));

  const EulerEntry* spade_row = t.find(parse_algebra("Sigma^{2,1}"),
                                       parse_ideal("(x^2,y^2,z^3,xy,yz,zx)"));
  REQUIRE(spade_row != nullptr);
  CHECK(spade_row->value.degree() == 5);
}

TEST_CASE("table validation rejects bad rows by name") {
  // wrong degree
  try {
    load_table("A_2 | (x^3) | a1\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("degree") != std::string::npos);
    CHECK(std::string(e.what()).find("A_2 | (x^3) | a1") != std::string::npos);
  }
  // wrong codimension
  CHECK_THROWS_AS(load_table("A_2 | (x^2) | 1\n"), ValidationError);
  // inactive variable in the key
  CHECK_THROWS_AS(load_table("A_2 | (x^3,y) | 1\n"), ValidationError);
  // not the lex-least orbit form
  CHECK_THROWS_AS(load_table("A_3 | (x^3,xy,y^2) | 1\n"), ValidationError);
  // zero entry
  CHECK_THROWS_AS(load_table("A_2 | (x^3) | 0\n"), ValidationError);
  // variable beyond the ideal's support
  CHECK_THROWS_AS(load_table("A_2 | (x^3) | a2/a1\n"), ValidationError);
  // incomplete coverage: A_3 needs three non-M^2 classes
  CHECK_THROWS_AS(load_table("A_3 | (x^4) | 1\n"), ValidationError);
  // duplicate row
  CHECK_THROWS_AS(load_table("A_2 | (x^3) | 1\nA_2 | (x^3) | 1\n"),
                  ValidationError);
  // unknown macro
  CHECK_THROWS_AS(load_table("A_2 | (x^3) | CLUBX\n"), ValidationError);
  // macro names are upper case
  CHECK_THROWS_AS(load_table("club = a1\n"), ValidationError);
}

TEST_CASE("lookup transports entries over the orbit") {
  EulerTable t = shipped_table();
  AlgebraId a2 = parse_algebra("A_2");
  AlgebraId a3 = parse_algebra("A_3");

  // suspension of e(A_2,(x^3)) = 1 and its coordinate swap
  CHECK(same_expr(lookup(t, a2, parse_ideal("(x^3,y)")),
                  "(a2-a1)*(a2-2*a1)"));
  CHECK(same_expr(lookup(t, a2, parse_ideal("(x,y^3)")),
                  "(a1-a2)*(a1-2*a2)"));
  // shipped row verbatim
  CHECK(same_expr(lookup(t, a3, parse_ideal("(x^2,y^2)")),
                  "(a1-a2)^2*(2*a1-a2)*(a1-2*a2)/(a1+a2)"));
  // swap of a shipped two-variable row
  CHECK(same_expr(lookup(t, a3, parse_ideal("(x^3,xy,y^2)")),
                  "(1/2)*(3*a1-a2)*(a2-a1)^2"));
  // INF rows stay infinite across the orbit
  CHECK(lookup(t, parse_algebra("Sigma^{2,1}"), parse_ideal("(x^5)")).inf);
  CHECK(lookup(t, parse_algebra("I_{2,2}"), parse_ideal("(x,y,z^4)")).inf);
  // arity guard
  CHECK_THROWS_AS(lookup(t, a2, parse_ideal("(x^2)")), ValidationError);
  // M^2 classes of mu >= 3 are not shipped
  CHECK_THROWS_AS(lookup(t, a3, m2_ideal(3)), MathError);
}

TEST_CASE("lookup is equivariant") {
  EulerTable t = shipped_table();
  AlgebraId a3 = parse_algebra("A_3");
  MonomialIdeal I = parse_ideal("(x^2,xy,y^3,z)");
  // relabel x->z, y->x, z->y
  std::vector<int> perm0 = {2, 0, 1};
  MonomialIdeal J = permuted_ideal(I, perm0);
  RatFn lhs = RatFn::from_factored(lookup(t, a3, J));
  RatFn rhs =
      RatFn::from_factored(lookup(t, a3, I)).permuted(VarNS::Alpha, {3, 1, 2});
  CHECK(lhs.equals(rhs));
}

TEST_CASE("Sigma^r entries are synthesized, not stored") {
  EulerTable t = shipped_table();
  AlgebraId s2 = parse_algebra("Sigma^2");
  CHECK(same_expr(lookup(t, s2, m2_ideal(2)), "1"));
  // complement {y,z} inside three variables
  CHECK(same_expr(lookup(t, s2, parse_ideal("(x,y^2,yz,z^2)")),
                  "(a1-a2)*(a1-a3)"));
  CHECK(lookup(t, s2, parse_ideal("(x,y^3)")).inf);
  CHECK(same_expr(lookup(t, parse_algebra("Sigma^1"), parse_ideal("(x^2,y)")),
                  "a2-a1"));
}

TEST_CASE("reciprocity reproduces e(A_2, M_2^2) from the other class alone") {
  EulerTable t = load_table("A_2 | (x^3) | 1\n");
  AlgebraId a2 = parse_algebra("A_2");
  FactoredRat v = complete_by_reciprocity(t, a2);
  CHECK(same_expr(v, "(1/3)*(a1-2*a2)*(a2-2*a1)"));
  const EulerEntry* stored = t.find(a2, m2_ideal(2));
  REQUIRE(stored != nullptr);
  CHECK(stored->provenance == Provenance::ReciprocityCompleted);
  CHECK(reciprocity_sum(t, a2).is_zero());

  // verification path against the shipped value
  EulerTable ts = shipped_table();
  CHECK(same_expr(complete_by_reciprocity(ts, a2),
                  "(1/3)*(a1-2*a2)*(a2-2*a1)"));

  // a wrong shipped M^2 value is detected
  EulerTable bad =
      load_table("A_2 | (x^3) | 1\nA_2 | (x^2,xy,y^2) | a1*a2\n");
  CHECK_THROWS_AS(complete_by_reciprocity(bad, a2), MathError);
}

TEST_CASE("reciprocity completes every mu=3 algebra to an exact zero sum") {
  EulerTable t = shipped_table();
  for (const char* name : {"A_3", "I_{2,2}", "III_{2,3}"}) {
    AlgebraId q = parse_algebra(name);
    FactoredRat v = complete_by_reciprocity(t, q);
    CHECK(!v.inf);
    CHECK(v.degree() == 9 - q.gamma());
    CHECK(reciprocity_sum(t, q).is_zero());
  }
  // completed entries now feed lookup, including transport
  CHECK(!lookup(t, parse_algebra("A_3"), m2_ideal(3)).inf);
}

TEST_CASE("reciprocity is degenerate when the orbit closure is a point") {
  EulerTable t = shipped_table();
  CHECK_THROWS_AS(complete_by_reciprocity(t, parse_algebra("Sigma^2")),
                  MathError);
  CHECK_THROWS_AS(complete_by_reciprocity(t, parse_algebra("A_1")), MathError);
}
