#include "thom/algebra.hpp"

#include <cctype>
#include <vector>

namespace thom {

namespace {
int binom2(int k) { return k * (k - 1) / 2; }
}  // namespace

int AlgebraId::mu() const {
  switch (family) {
    case AlgebraFamily::A:
      return a;
    case AlgebraFamily::Sigma:
      return a;
    case AlgebraFamily::Iab:
      return a + b - 1;
    case AlgebraFamily::IIIab:
      return a + b - 2;
    case AlgebraFamily::Sigma21:
      return 4;
    case AlgebraFamily::Phi:
      return a + 1;
  }
  throw MathError("unreachable");
}

int AlgebraId::gamma() const {
  switch (family) {
    case AlgebraFamily::A:
      return a;
    case AlgebraFamily::Sigma:
      return a * a;
    case AlgebraFamily::Iab:
    case AlgebraFamily::IIIab:
      return a + b;
    case AlgebraFamily::Sigma21:
      return 7;
    case AlgebraFamily::Phi:
      return binom2(a + 1) + binom2(b + 1) + 1;
  }
  throw MathError("unreachable");
}

std::string AlgebraId::str() const {
  switch (family) {
    case AlgebraFamily::A:
      return "A_" + std::to_string(a);
    case AlgebraFamily::Sigma:
      return "Sigma^" + std::to_string(a);
    case AlgebraFamily::Iab:
      return "I_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case AlgebraFamily::IIIab:
      return "III_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    case AlgebraFamily::Sigma21:
      return "Sigma^{2,1}";
    case AlgebraFamily::Phi:
      return "Phi_{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
  throw MathError("unreachable");
}

AlgebraId algebra_a(int i) {
  if (i < 1) throw ValidationError("A_i needs i >= 1");
  return {AlgebraFamily::A, i, 0};
}

AlgebraId algebra_sigma(int r) {
  if (r < 1) throw ValidationError("Sigma^r needs r >= 1");
  return {AlgebraFamily::Sigma, r, 0};
}

AlgebraId algebra_iab(int a, int b) {
  if (a < 2 || b < a) throw ValidationError("I_{a,b} needs 2 <= a <= b");
  return {AlgebraFamily::Iab, a, b};
}

AlgebraId algebra_iiiab(int a, int b) {
  if (a < 2 || b < a) throw ValidationError("III_{a,b} needs 2 <= a <= b");
  return {AlgebraFamily::IIIab, a, b};
}

AlgebraId algebra_sigma21() { return {AlgebraFamily::Sigma21, 0, 0}; }

AlgebraId algebra_phi(int m, int r) {
  if (m < 1 || r < 0 || r >= m)
    throw ValidationError("Phi_{m,r} needs m >= 1 and 0 <= r < m");
  return {AlgebraFamily::Phi, m, r};
}

AlgebraId parse_algebra(const std::string& text) {
  // Drop the decorations shared by both spellings.
  std::string s;
  for (char ch : text)
    if (ch != '_' && ch != '{' && ch != '}' && ch != '^' && ch != ' ')
      s += ch;
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  std::string name = s.substr(0, i);
  std::vector<int> params;
  while (i < s.size()) {
    if (s[i] == ',') ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ValidationError("bad algebra name: " + text);
    params.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
  }
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw ValidationError("bad algebra parameters: " + text);
  };
  if (name == "A") {
    want(1);
    return algebra_a(params[0]);
  }
  if (name == "Sigma") {
    if (params.size() == 2) {
      if (params[0] != 2 || params[1] != 1)
        throw ValidationError("only Sigma^{2,1} is supported: " + text);
      return algebra_sigma21();
    }
    want(1);
    return algebra_sigma(params[0]);
  }
  if (name == "III") {
    want(2);
    return algebra_iiiab(params[0], params[1]);
  }
  if (name == "I") {
    want(2);
    return algebra_iab(params[0], params[1]);
  }
  if (name == "Phi") {
    want(2);
    return algebra_phi(params[0], params[1]);
  }
  throw ValidationError("unknown algebra family: " + text);
}

}  // namespace thom
