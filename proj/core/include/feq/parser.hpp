#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feq/equation.hpp"

namespace feq {

struct SourceSpan {
    int line = 1;   // 1-based
    int column = 1; // 1-based
    int length = 1;
};

enum class ParseErrorKind {
    LexError,
    SyntaxError,
    UnknownSymbol,
    ArityMismatch,
    DivisionByZeroLiteral,
    NonIntegerExponent,
};
const char* parse_error_kind_name(ParseErrorKind k);

class ParseError : public Error {
public:
    ParseError(SourceSpan span, ParseErrorKind kind, const std::string& message);
    SourceSpan span;
    ParseErrorKind kind;
    std::string message;
};

struct ParsedInput {
    EquationSpec spec;
    std::optional<std::vector<FieldElement>> f; // verify-mode blocks
    std::optional<std::vector<FieldElement>> F;
};

/// Parses the key/value equation description:
///
///   field u: t^2 - 3          # optional; omitted means the rational field
///   root_hint = 1.7+0.0i      # optional; selects the distinguished root
///   a     = [1/2, 1/2]
///   alpha = [(3+u)/6, (3-u)/6]
///   beta  = [(3-u)/6, (3+u)/6]
///   f     = [0, 0, 1]         # optional (verify)
///   F     = [0, 0, 0, 1/3]    # optional (verify)
///
/// '#' starts a comment; expressions evaluate to exact field elements at
/// parse time; decimals are rejected outside root_hint. The first error
/// wins. Reducible and UnsupportedDegree propagate from field construction.
ParsedInput parse_input(const std::string& text);
EquationSpec parse(const std::string& text);

} // namespace feq
