#pragma once

#include <string>

#include "thom/errors.hpp"

namespace thom {

// Families of finite dimensional nilpotent algebras the engine knows by name.
//   A(i)       = C[[x]]/(x^{i+1})
//   Sigma(r)   = M_r/M_r^2 (zero multiplication; Giambelli-Thom-Porteous)
//   Iab(a,b)   = M_2/(xy, x^a + y^b)
//   IIIab(a,b) = M_2/(xy, x^a, y^b)
//   Sigma21    = M_2/(x^2, xy^2, y^3)  (the Thom-Boardman class Sigma^{2,1})
//   Phi(m,r)   = M_{m+1}/(ideal of the rank<=r pencil of quadrics), r < m
enum class AlgebraFamily { A, Sigma, Iab, IIIab, Sigma21, Phi };

struct AlgebraId {
  AlgebraFamily family = AlgebraFamily::A;
  int a = 0;  // A(i): i; Sigma(r): r; Iab/IIIab: a; Phi(m,r): m
  int b = 0;  // Iab/IIIab: b; Phi(m,r): r

  // Dimension of the algebra; the number of localization variables.
  int mu() const;
  // Codimension offset: deg tp_Q(l) = mu*l + gamma.
  int gamma() const;

  std::string str() const;  // "A_2", "I_{2,3}", "Sigma^{2,1}", "Phi_{3,1}"

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend bool operator<(const AlgebraId& x, const AlgebraId& y) {
    if (x.family != y.family) return x.family < y.family;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

AlgebraId algebra_a(int i);
AlgebraId algebra_sigma(int r);
AlgebraId algebra_iab(int a, int b);
AlgebraId algebra_iiiab(int a, int b);
AlgebraId algebra_sigma21();
AlgebraId algebra_phi(int m, int r);

// Accepts both the table spelling (A_2, I_{2,3}, III_{2,4}, Sigma^2,
// Sigma^{2,1}, Phi_{3,1}) and the bare flag spelling (A2, I2,3, III2,4,
// Sigma2, Sigma2,1, Phi3,1).
AlgebraId parse_algebra(const std::string& text);

}  // namespace thom
