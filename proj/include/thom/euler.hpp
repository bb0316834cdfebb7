#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thom/algebra.hpp"
#include "thom/ideals.hpp"
#include "thom/ratfn.hpp"

namespace thom {

enum class Provenance { Shipped, ReciprocityCompleted, Extrapolated };

std::string provenance_str(Provenance p);

struct EulerEntry {
  FactoredRat value;  // inf marks fixed points outside the orbit closure
  Provenance provenance = Provenance::Shipped;
  std::string raw;  // expression text as it appeared in the source
};

// The finite data of a Thom series: e(Q,I) per canonical fixed-point class.
// Keys are ideals on their minimal variable set in lex-least form; lookup
// transports them over the whole orbit.
struct EulerTable {
  std::string raw_text;  // loaded source, byte for byte
  std::map<std::string, FactoredRat> macros;
  std::map<std::pair<AlgebraId, MonomialIdeal>, EulerEntry> entries;

  const EulerEntry* find(const AlgebraId& q, const MonomialIdeal& I) const;
  std::vector<AlgebraId> algebras() const;
  bool covers(const AlgebraId& q) const;
  std::string dump() const { return raw_text; }
};

// Parses the row format "<algebra> | <ideal> | <expression>" with '#'
// comments and "NAME = expression" macro lines. Each finite entry is
// validated: homogeneous factors, total degree mu*n - gamma, canonical key,
// and per algebra all fixed-point classes except M^2 must be present.
EulerTable load_table(const std::string& text);
EulerTable load_table_file(const std::string& path);

// Fresh copy of the mu <= 4 data built into the library (M^2 rows of
// mu >= 3 not yet completed).
EulerTable shipped_table();

// The staircase of M_mu^2 in mu variables (all degree-one monomials).
MonomialIdeal m2_ideal(int mu);
bool is_m2_staircase(const MonomialIdeal& I);

// Entry for an arbitrary ideal of codimension mu(Q): finds the canonical
// class, applies the witnessing variable permutation, and multiplies one
// res(alpha_j | -W) factor per suspension variable. Sigma^r needs no table:
// 1 on the M^2 staircase, INF elsewhere.
FactoredRat lookup(const EulerTable& table, const AlgebraId& q,
                   const MonomialIdeal& I);

// Solves sum_I 1/e(Q,I) = 0 over the codimension-mu ideals of M_mu for the
// one unknown e(Q, M_mu^2), stores and returns it. When the table already
// ships the value, verifies agreement instead. Throws MathError in the
// degenerate case (zero-dimensional orbit closure: at most one finite term).
FactoredRat complete_by_reciprocity(EulerTable& table, const AlgebraId& q);

// sum_I 1/e(Q,I) over all codimension-mu ideals in mu variables; must be
// exactly zero for a complete, consistent table.
RatFn reciprocity_sum(const EulerTable& table, const AlgebraId& q);

// Completes every algebra in the table whose M^2 entry is missing.
void complete_table(EulerTable& table);

}  // namespace thom
