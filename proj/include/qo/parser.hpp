#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qo/error.hpp"
#include "qo/ypoly.hpp"

namespace qo {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct LiteralContext {
    std::vector<std::string> vars;
    ExtensionPtr ext;              // its generator name is accepted as a constant
    std::string poly_var = "y";    // empty: no polynomial variable allowed
    std::string ext_var;           // generator name while parsing the extension modulus itself
    int line = 1;                  // position of the literal in the enclosing file
    int column = 1;
};

// Grammar: sums and products of rational literals, zeta(N), sqrt(q), variables with
// nonnegative rational exponents x^(a/b), and integer powers of y and of groups.
// Division is only by nonzero constants.
SeriesYPoly parse_ypoly(std::string_view text, const LiteralContext& ctx);
Series parse_series(std::string_view text, const LiteralContext& ctx);
// Modulus of an extension, a polynomial in var with constant coefficients.
CPoly parse_extension_modulus(std::string_view text, const std::string& var, int line = 1, int column = 1);

}  // namespace qo
