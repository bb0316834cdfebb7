#pragma once

#include <cstdint>
#include <string>

namespace thom {

// Variable namespaces, ordered so that packed ids sort t < a_i < b_i < c_i < z_i.
enum class VarNS : std::uint16_t { T = 0, Alpha = 1, Beta = 2, C = 3, Z = 4 };

// Packed variable id: namespace in the top nibble, 1-based index below.
using VarId = std::uint16_t;

constexpr VarId make_var(VarNS ns, unsigned index) {
  return static_cast<VarId>((static_cast<std::uint16_t>(ns) << 12) |
                            static_cast<std::uint16_t>(index & 0x0fff));
}
constexpr VarNS var_ns(VarId v) { return static_cast<VarNS>(v >> 12); }
constexpr unsigned var_index(VarId v) { return v & 0x0fff; }

inline VarId alpha(unsigned i) { return make_var(VarNS::Alpha, i); }
inline VarId beta(unsigned i) { return make_var(VarNS::Beta, i); }
inline VarId cvar(unsigned i) { return make_var(VarNS::C, i); }
inline VarId zvar(unsigned i) { return make_var(VarNS::Z, i); }
inline VarId tvar() { return make_var(VarNS::T, 1); }

std::string var_name(VarId v);

}  // namespace thom
