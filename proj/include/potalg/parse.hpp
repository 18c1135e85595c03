#pragma once

#include <string_view>

#include "potalg/ncpoly.hpp"

namespace potalg {

/// Parses the expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := 'x' | 'y' | rational | 'cyc' '(' expr ')' | '(' expr ')'
/// with rationals written p/q or as integers.  cyc(...) applies cyclic
/// symmetrization.  Throws ParseError with line/column on bad input.
NcPoly parse_ncpoly(std::string_view text,
                    const FieldSpec& field = FieldSpec::rationals());

}  // namespace potalg
