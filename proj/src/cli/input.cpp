#include <cctype>
#include <cstdlib>
#include <map>
#include <regex>
#include <set>

#include "qo/cli.hpp"

namespace qo {

namespace {

enum class Tok { ident, string, number, eq, lbracket, rbracket, lbrace, rbrace, comma, semi, newline, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            int l = line_, c = col_;
            if (i_ >= s_.size()) {
                out.push_back({Tok::end, "", l, c});
                return out;
            }
            char ch = s_[i_];
            if (ch == '\n') {
                advance();
                out.push_back({Tok::newline, "\n", l, c});
            } else if (ch == '"') {
                advance();
                int sl = line_, sc = col_;
                std::string text;
                while (i_ < s_.size() && s_[i_] != '"') {
                    if (s_[i_] == '\n') throw ParseError("unterminated string", l, c);
                    if (s_[i_] == '\\' && i_ + 1 < s_.size()) advance();
                    text += s_[i_];
                    advance();
                }
                if (i_ >= s_.size()) throw ParseError("unterminated string", l, c);
                advance();
                out.push_back({Tok::string, text, sl, sc});
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string id;
                while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.')) {
                    id += s_[i_];
                    advance();
                }
                out.push_back({Tok::ident, id, l, c});
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
                std::string num;
                if (ch == '-') {
                    num += ch;
                    advance();
                }
                read_digits(num, l, c);
                if (i_ < s_.size() && s_[i_] == '/') {
                    num += '/';
                    advance();
                    read_digits(num, l, c);
                }
                out.push_back({Tok::number, num, l, c});
            } else {
                static const std::map<char, Tok> punct = {{'=', Tok::eq},     {'[', Tok::lbracket}, {']', Tok::rbracket},
                                                          {'{', Tok::lbrace}, {'}', Tok::rbrace},   {',', Tok::comma},
                                                          {';', Tok::semi}};
                auto it = punct.find(ch);
                if (it == punct.end()) throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
                advance();
                out.push_back({it->second, std::string(1, ch), l, c});
            }
        }
    }

private:
    void advance()
    {
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_blank()
    {
        while (i_ < s_.size()) {
            char ch = s_[i_];
            if (ch == '#') {
                while (i_ < s_.size() && s_[i_] != '\n') advance();
            } else if (ch == ' ' || ch == '\t' || ch == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    void read_digits(std::string& num, int l, int c)
    {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            num += s_[i_];
            advance();
        }
        if (i_ == start) throw ParseError("malformed number", l, c);
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct Value {
    Token tok;                      // string or number; first token of a list
    std::vector<std::string> list;  // identifiers of a [..] list
    bool is_list = false;
};

struct Field {
    Token key;
    Value value;
};

struct Statement {
    Token head;
    bool block = false;
    std::vector<Field> fields;  // one field for key=value
};

class StatementParser {
public:
    explicit StatementParser(std::vector<Token> toks) : t_(std::move(toks)) {}

    std::vector<Statement> run()
    {
        std::vector<Statement> out;
        while (true) {
            skip_separators(false);
            if (peek().kind == Tok::end) return out;
            Token head = expect(Tok::ident, "a key or block name");
            Statement st{head, false, {}};
            if (peek().kind == Tok::lbrace) {
                next();
                st.block = true;
                while (true) {
                    skip_separators(true);
                    if (peek().kind == Tok::rbrace) {
                        next();
                        break;
                    }
                    Token key = expect(Tok::ident, "a field name");
                    expect(Tok::eq, "'='");
                    st.fields.push_back({key, value()});
                    Tok k = peek().kind;
                    if (k != Tok::comma && k != Tok::semi && k != Tok::newline && k != Tok::rbrace)
                        fail("expected ',' or '}'", peek());
                }
            } else {
                expect(Tok::eq, "'=' or '{'");
                st.fields.push_back({head, value()});
            }
            Tok k = peek().kind;
            if (k != Tok::semi && k != Tok::newline && k != Tok::end) fail("expected ';' or a new line", peek());
            out.push_back(std::move(st));
        }
    }

private:
    const Token& peek() const { return t_[p_]; }
    Token next() { return t_[p_++]; }

    [[noreturn]] static void fail(const std::string& msg, const Token& at) { throw ParseError(msg, at.line, at.column); }

    Token expect(Tok k, const std::string& what)
    {
        if (peek().kind != k) fail("expected " + what, peek());
        return next();
    }

    void skip_separators(bool commas)
    {
        while (peek().kind == Tok::semi || peek().kind == Tok::newline || (commas && peek().kind == Tok::comma)) next();
    }

    Value value()
    {
        Value v{peek(), {}, false};
        if (peek().kind == Tok::string || peek().kind == Tok::number) {
            next();
            return v;
        }
        if (peek().kind != Tok::lbracket) fail("expected a string, a number or a list", peek());
        next();
        v.is_list = true;
        while (peek().kind != Tok::rbracket) {
            v.list.push_back(expect(Tok::ident, "an identifier").text);
            if (peek().kind == Tok::comma) next();
            else if (peek().kind != Tok::rbracket) fail("expected ',' or ']'", peek());
        }
        next();
        return v;
    }

    std::vector<Token> t_;
    std::size_t p_ = 0;
};

[[noreturn]] void fail_at(const std::string& msg, const Token& at) { throw ParseError(msg, at.line, at.column); }

Rational number_value(const Value& v)
{
    if (v.is_list || v.tok.kind != Tok::number) fail_at("expected a number", v.tok);
    auto slash = v.tok.text.find('/');
    if (slash != std::string::npos && std::stol(v.tok.text.substr(slash + 1)) == 0) fail_at("zero denominator", v.tok);
    Rational q(v.tok.text);
    q.canonicalize();
    return q;
}

std::string string_value(const Value& v)
{
    if (v.is_list || v.tok.kind != Tok::string) fail_at("expected a quoted string", v.tok);
    return v.tok.text;
}

LiteralContext at(LiteralContext c, const Value& v)
{
    c.line = v.tok.line;
    c.column = v.tok.column;
    return c;
}

void check_conductor(const Series& s, long n, const std::string& what)
{
    if (n == 0) return;
    for (const auto& [e, c] : s.terms())
        if (n % c.conductor() != 0)
            throw Error(what + ": constant " + c.to_string() + " needs conductor " + std::to_string(c.conductor()) +
                        ", not dividing the declared conductor " + std::to_string(n));
}

void check_conductor(const SeriesYPoly& g, long n, const std::string& what)
{
    for (const auto& c : g.coeffs()) check_conductor(c, n, what);
}

}  // namespace

LiteralContext ProblemInput::context() const
{
    LiteralContext c;
    c.vars = vars;
    c.ext = ext;
    return c;
}

Rational default_precision()
{
    const char* env = std::getenv("QO_PRECISION");
    if (!env || !*env) return kDefaultPrecision;
    Rational q;
    if (q.set_str(env, 10) != 0) throw Error(std::string("QO_PRECISION is not a rational number: ") + env);
    q.canonicalize();
    if (q <= 0) throw Error("QO_PRECISION must be positive");
    return q;
}

ProblemInput parse_input(std::string_view text, const Rational& default_prec)
{
    auto statements = StatementParser(Lexer(text).run()).run();
    ProblemInput in;
    in.precision = default_prec;

    // Declarations first, so literals may precede them in the file.
    bool have_vars = false;
    const Statement* ext_block = nullptr;
    for (const auto& st : statements) {
        const std::string& key = st.head.text;
        if (st.block) {
            if (key == "ext") {
                if (ext_block) fail_at("duplicate ext block", st.head);
                ext_block = &st;
            } else if (key != "branch") {
                fail_at("unknown block '" + key + "'", st.head);
            }
            continue;
        }
        const Value& v = st.fields[0].value;
        if (key == "vars") {
            if (have_vars) fail_at("duplicate vars", st.head);
            if (!v.is_list || v.list.empty()) fail_at("vars needs a nonempty list", v.tok);
            std::set<std::string> seen;
            for (const auto& name : v.list) {
                if (name == "y") fail_at("'y' is reserved for the polynomial variable", v.tok);
                if (!seen.insert(name).second) fail_at("duplicate variable '" + name + "'", v.tok);
            }
            in.vars = v.list;
            have_vars = true;
        } else if (key == "precision") {
            in.precision = number_value(v);
            if (in.precision <= 0) fail_at("precision must be positive", v.tok);
        } else if (key == "conductor") {
            Rational n = number_value(v);
            if (n.get_den() != 1 || n < 1) fail_at("conductor must be a positive integer", v.tok);
            in.conductor = n.get_num().get_si();
        } else if (key != "poly") {
            fail_at("unknown key '" + key + "'", st.head);
        }
    }
    if (!have_vars) throw ParseError("missing vars=[...]", 1, 1);

    if (ext_block) {
        std::optional<Field> var, poly;
        for (const auto& f : ext_block->fields) {
            if (f.key.text == "var") var = f;
            else if (f.key.text == "poly") poly = f;
            else fail_at("unknown ext field '" + f.key.text + "'", f.key);
        }
        if (!var || !poly) fail_at("ext needs var and poly", ext_block->head);
        std::string name = string_value(var->value);
        if (name == "y" || std::find(in.vars.begin(), in.vars.end(), name) != in.vars.end())
            fail_at("extension generator '" + name + "' clashes with a variable", var->value.tok);
        std::string mod = string_value(poly->value);
        in.ext = make_extension(name, mod, parse_extension_modulus(mod, name, poly->value.tok.line, poly->value.tok.column));
    }

    LiteralContext ctx = in.context();
    LiteralContext series_ctx = ctx;
    series_ctx.poly_var.clear();
    std::set<std::string> labels;
    for (const auto& st : statements) {
        if (!st.block && st.head.text == "poly") {
            if (in.poly) fail_at("duplicate poly", st.head);
            const Value& v = st.fields[0].value;
            in.poly = parse_ypoly(string_value(v), at(ctx, v));
            check_conductor(*in.poly, in.conductor, "poly");
        } else if (st.block && st.head.text == "branch") {
            BranchInput b;
            b.branch.label = "f" + std::to_string(in.branches.size() + 1);
            std::optional<Value> root;
            std::optional<Rational> denom;
            for (const auto& f : st.fields) {
                const std::string& k = f.key.text;
                if (k == "label" || k == "name") {
                    b.branch.label = string_value(f.value);
                } else if (k == "root") {
                    root = f.value;
                } else if (k == "denom") {
                    denom = number_value(f.value);
                    if (denom->get_den() != 1 || *denom < 1) fail_at("denom must be a positive integer", f.value.tok);
                } else if (k == "poly") {
                    b.poly = parse_ypoly(string_value(f.value), at(ctx, f.value));
                } else {
                    fail_at("unknown branch field '" + k + "'", f.key);
                }
            }
            if (!root) fail_at("branch " + b.branch.label + " needs a root", st.head);
            if (!labels.insert(b.branch.label).second) fail_at("duplicate branch label '" + b.branch.label + "'", st.head);
            b.branch.root = parse_series(string_value(*root), at(series_ctx, *root));
            long actual = b.branch.root.denominator();
            b.branch.denom = denom ? denom->get_num().get_si() : actual;
            if (b.branch.denom != actual)
                throw Error("branch " + b.branch.label + ": denom=" + std::to_string(b.branch.denom) +
                            " but the root exponents have denominator " + std::to_string(actual));
            check_conductor(b.branch.root, in.conductor, "branch " + b.branch.label);
            if (b.poly) check_conductor(*b.poly, in.conductor, "branch " + b.branch.label);
            in.branches.push_back(std::move(b));
        }
    }
    if (in.branches.empty() && !in.poly) throw Error("input needs at least one branch or a poly");
    return in;
}

Problem resolve(const ProblemInput& in)
{
    std::vector<Branch> branches;
    std::vector<SeriesYPoly> polys;
    SeriesYPoly f(in.d());
    if (!in.branches.empty()) {
        f = SeriesYPoly::constant(Series::constant(in.d(), Number(1)));
        for (const auto& b : in.branches) {
            branches.push_back(b.branch);
            SeriesYPoly p = b.poly ? *b.poly : branch_polynomial(b.branch);
            long orbit = static_cast<long>(galois_orbit(b.branch).size());
            if (p.degree() != orbit)
                throw Error("branch " + b.branch.label + ": poly has degree " + std::to_string(p.degree()) + " but the root has " +
                            std::to_string(orbit) + " conjugates");
            f = f * p;
            polys.push_back(std::move(p));
        }
        if (in.poly) {
            if (in.poly->degree() != f.degree())
                throw Error("poly has degree " + std::to_string(in.poly->degree()) + " but the branches give " +
                            std::to_string(f.degree()) + " roots");
            f = *in.poly;
        }
    } else {
        if (in.d() != 1) throw Error("a poly without branches needs a single variable; list branch{...} entries for d > 1");
        f = *in.poly;
        if (!f.is_monic()) throw Error("poly must be monic in y");
        auto np = newton_puiseux_roots(f, in.precision);
        branches = branches_from_roots(np.roots);
        if (np.partial)
            throw Indeterminate("roots of poly are not separated below precision " + in.precision.get_str() +
                                "; raise precision or QO_PRECISION");
        for (const auto& b : branches) polys.push_back(branch_polynomial(b));
    }
    auto tree = build_kuo_lu(expand_roots(branches));
    auto eggers = build_eggers(tree);
    return Problem{in, std::move(branches), std::move(polys), std::move(f), std::move(tree), std::move(eggers)};
}

SeriesYPoly resolve_polynomial(const Problem& p, const std::string& spec)
{
    static const std::regex derivative(R"(\s*f\((\d+)\)\s*)");
    std::smatch m;
    if (spec == "f") return p.f;
    if (std::regex_match(spec, m, derivative)) return normalized_derivative(p.f, std::stol(m[1]));
    for (std::size_t i = 0; i < p.branches.size(); ++i)
        if (p.branches[i].label == spec) return p.branch_polys[i];
    return parse_ypoly(spec, p.input.context());
}

}  // namespace qo
