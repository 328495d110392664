#pragma once

#include "maxtoric/ratpoly/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace maxtoric::ratpoly {

// Text grammar shared by the CLI and the docs:
//
//   poly   := ["-"] term (("+" | "-") term)*  |  "0"
//   term   := factor ("*" factor)*
//   factor := int ["/" int]  |  var ["^" ["-"] int]
//
// Terms are printed in descending lex order (identity priority), a
// coefficient of +-1 is omitted whenever a variable follows, and `^1` is
// never printed. print(parse(s)) == s for every printed s.

std::string to_string(const Polynomial& f);
std::string to_string(const Polynomial& f, const MonomialOrder& ord);

/// Parses `text` over `vars`. Negative exponents are accepted only when
/// `laurent` is set. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::vector<std::string> vars,
                            bool laurent = false);

}  // namespace maxtoric::ratpoly
