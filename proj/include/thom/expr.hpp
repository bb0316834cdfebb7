#pragma once

#include <map>
#include <string>

#include "thom/ratfn.hpp"

namespace thom {

// Parses arithmetic over the variables a<k>, b<k>, z<k>, c<k> (c0 is the
// constant 1) and t, with integer literals, + - * / ^ and parentheses.
// Bare identifiers resolve through `symbols` (macro definitions). "INF" is
// accepted only as the entire expression. Sums are folded into a single
// primitive factor, so factored shape survives products and quotients.
FactoredRat parse_expression(
    const std::string& text,
    const std::map<std::string, FactoredRat>& symbols = {});

}  // namespace thom
