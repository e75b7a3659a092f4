#pragma once

#include <string>
#include <string_view>

#include "qsheaf/expr.hpp"

namespace qsheaf {

/// Parses `Qn: expr`. Lines may carry `#` comments. Throws ParseError with position.
///   expr  := term ('+' term)*
///   term  := atom | 'quot(' expr ',' expr ')' twist? | 'res(' expr ')' twist?
///          | '(' expr ')' twist? | '0'
///   atom  := ('O' | 'S' | 'S1' | 'S2' | 'Pt[' int ']') twist?
///   twist := '(' int ')'
/// The body of res(...) lives on Q_{n+1}. The result is normalized.
SheafExpr parse(std::string_view text);

}  // namespace qsheaf
