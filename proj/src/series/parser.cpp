#include "qo/parser.hpp"

#include <cctype>

namespace qo {

namespace {

class Parser {
public:
    Parser(std::string_view text, const LiteralContext& ctx) : s_(text), ctx_(ctx), d_(ctx.vars.size()) {}

    SeriesYPoly run()
    {
        SeriesYPoly v = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const
    {
        int line = ctx_.line, col = ctx_.column;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    SeriesYPoly constant(const Number& c) const { return SeriesYPoly::constant(Series::constant(d_, c)); }

    Integer integer_literal()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    // ^int or ^(a/b), possibly signed inside parentheses.
    Rational exponent()
    {
        skip_ws();
        if (accept('(')) {
            bool neg = accept('-');
            Integer a = integer_literal();
            Integer b = 1;
            std::size_t at = pos_;
            if (accept('/')) {
                at = pos_;
                b = integer_literal();
                if (b == 0) fail_at("zero denominator in exponent", at);
            }
            expect(')');
            Rational q(a, b);
            q.canonicalize();
            return neg ? Rational(-q) : q;
        }
        if (accept('-')) return Rational(-Rational(integer_literal()));
        return Rational(integer_literal());
    }

    std::string identifier()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    static bool is_constant(const SeriesYPoly& p)
    {
        return p.degree() <= 0 && (p.is_zero() || p.coeff(0).is_constant());
    }

    static Number constant_value(const SeriesYPoly& p)
    {
        if (p.is_zero() || p.coeff(0).is_zero()) return Number(0);
        return p.coeff(0).terms().begin()->second;
    }

    SeriesYPoly expr()
    {
        skip_ws();
        SeriesYPoly v(d_);
        if (accept('-')) v = v - term();
        else {
            accept('+');
            v = term();
        }
        for (;;) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    SeriesYPoly term()
    {
        SeriesYPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else {
                skip_ws();
                std::size_t at = pos_;
                if (!accept('/')) return v;
                SeriesYPoly den = unary();
                if (!is_constant(den)) fail_at("division by a non-constant", at);
                Number c = constant_value(den);
                if (c.is_zero()) fail_at("division by zero", at);
                v = v.scaled(c.inverse());
            }
        }
    }

    SeriesYPoly unary()
    {
        if (accept('-')) return unary().scaled(Number(-1));
        if (accept('+')) return unary();
        return power();
    }

    SeriesYPoly power()
    {
        skip_ws();
        std::size_t start = pos_;
        bool is_var = false;
        std::size_t var_index = 0;
        SeriesYPoly base = primary(is_var, var_index);
        if (!accept('^')) return base;
        std::size_t at = pos_;
        Rational e = exponent();
        if (is_var) {
            if (sgn(e) < 0) fail_at("negative exponent", at);
            ExponentVec q = zero_exponent(d_);
            q[var_index] = e;
            return SeriesYPoly::constant(Series::monomial(q));
        }
        if (!is_integer(e)) fail_at("fractional power of a non-variable", at);
        long n = to_long(e.get_num());
        if (n < 0) {
            if (!is_constant(base)) fail_at("negative power of a non-constant", at);
            Number c = constant_value(base);
            if (c.is_zero()) fail_at("negative power of zero", start);
            base = constant(c.inverse());
            n = -n;
        }
        return base.pow(static_cast<unsigned>(n));
    }

    SeriesYPoly primary(bool& is_var, std::size_t& var_index)
    {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SeriesYPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(Number(Rational(integer_literal())));
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("unexpected '" + std::string(1, c) + "'");
        std::size_t at = pos_;
        std::string id = identifier();
        if (id == "zeta") {
            expect('(');
            Integer n = integer_literal();
            if (n <= 0) fail_at("zeta order must be positive", at);
            expect(')');
            return constant(Number(Cyclotomic::zeta(to_long(n), 1)));
        }
        if (id == "sqrt") {
            expect('(');
            SeriesYPoly arg = expr();
            expect(')');
            if (!is_constant(arg)) fail_at("sqrt of a non-constant", at);
            Number a = constant_value(arg);
            if (!a.is_rational()) fail_at("sqrt is only supported for rationals", at);
            return constant(Number(sqrt_rational(a.rational_value())));
        }
        for (std::size_t i = 0; i < d_; ++i) {
            if (ctx_.vars[i] == id) {
                is_var = true;
                var_index = i;
                ExponentVec q = zero_exponent(d_);
                q[i] = 1;
                return SeriesYPoly::constant(Series::monomial(q));
            }
        }
        if (!ctx_.poly_var.empty() && id == ctx_.poly_var) return SeriesYPoly::y(d_);
        if (ctx_.ext && id == ctx_.ext->var) return constant(Number::generator(ctx_.ext));
        if (id == "y") fail_at("y is not allowed here", at);
        fail_at("unknown variable '" + id + "'", at);
    }

    std::string_view s_;
    const LiteralContext& ctx_;
    std::size_t d_;
    std::size_t pos_ = 0;
};

}  // namespace

SeriesYPoly parse_ypoly(std::string_view text, const LiteralContext& ctx) { return Parser(text, ctx).run(); }

Series parse_series(std::string_view text, const LiteralContext& ctx)
{
    LiteralContext c = ctx;
    c.poly_var.clear();
    SeriesYPoly p = Parser(text, c).run();
    return p.is_zero() ? Series(ctx.vars.size()) : p.coeff(0);
}

CPoly parse_extension_modulus(std::string_view text, const std::string& var, int line, int column)
{
    LiteralContext c;
    c.poly_var = var;
    c.line = line;
    c.column = column;
    SeriesYPoly p = Parser(text, c).run();
    std::vector<Cyclotomic> out;
    for (const auto& s : p.coeffs()) {
        Number v = s.is_zero() ? Number(0) : s.terms().begin()->second;
        out.push_back(v.base_value());
    }
    return CPoly(out);
}

}  // namespace qo
