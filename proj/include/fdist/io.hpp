#pragma once

#include <string>

#include "fdist/term.hpp"

namespace fdist {

// Term grammar shared by all modules and the CLI:
//   leaf    a(n)  or a bare name  q
//   node    (lhs * rhs), (lhs . rhs), (lhs o rhs), brackets as [lhs,rhs]
//   combs   c1*T1 + c2*T2 with exact rationals as p/q
std::string term_str(const Term& t);
std::string lincomb_str(const LinComb& x);

// The token `*` resolves to `mul` for the associative signature and to
// `star` elsewhere; the variety argument supplies that context.
Term parse_term(const std::string& text, Variety v = Variety::pre_associative);
LinComb parse_lincomb(const std::string& text, Variety v = Variety::pre_associative);

}  // namespace fdist
