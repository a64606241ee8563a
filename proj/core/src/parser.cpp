#include "feq/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace feq {

const char* parse_error_kind_name(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::LexError: return "LexError";
        case ParseErrorKind::SyntaxError: return "SyntaxError";
        case ParseErrorKind::UnknownSymbol: return "UnknownSymbol";
        case ParseErrorKind::ArityMismatch: return "ArityMismatch";
        case ParseErrorKind::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
        case ParseErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    }
    return "?";
}

namespace {

std::string render(const SourceSpan& span, ParseErrorKind kind, const std::string& message) {
    std::ostringstream s;
    s << "line " << span.line << ", column " << span.column << ": "
      << parse_error_kind_name(kind) << ": " << message;
    return s.str();
}

} // namespace

ParseError::ParseError(SourceSpan span_, ParseErrorKind kind_, const std::string& message_)
    : Error(render(span_, kind_, message_)), span(span_), kind(kind_), message(message_) {}

namespace {

enum class Tok { Ident, Integer, RatLit, Decimal, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    char punct = 0;
    SourceSpan span;
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (const char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
    return lines;
}

std::vector<Token> lex_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const int col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            Tok kind = Tok::Integer;
            // maximal munch: digits '/' digits is one rational literal,
            // digits '.' digits a decimal (valid only after root_hint)
            if (j < line.size() && (line[j] == '/' || line[j] == '.') && j + 1 < line.size() &&
                std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
                kind = line[j] == '/' ? Tok::RatLit : Tok::Decimal;
                ++j;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            }
            out.push_back({kind, line.substr(i, j - i), 0, {line_no, col, static_cast<int>(j - i)}});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, line.substr(i, j - i), 0, {line_no, col, static_cast<int>(j - i)}});
            i = j;
            continue;
        }
        if (std::string("=[](),+-*/^:").find(c) != std::string::npos) {
            out.push_back({Tok::Punct, std::string(1, c), c, {line_no, col, 1}});
            ++i;
            continue;
        }
        throw ParseError({line_no, col, 1}, ParseErrorKind::LexError,
                         std::string("unexpected character '") + c + "'");
    }
    return out;
}

// Cursor over one logical line of tokens.
class Cursor {
public:
    Cursor(const std::vector<Token>* toks, int line_no, int line_len)
        : toks_(toks), line_no_(line_no), line_len_(line_len) {}

    const Token& peek() const {
        static const Token end_tok;
        if (pos_ >= toks_->size()) return end_tok;
        return (*toks_)[pos_];
    }
    const Token& next() {
        const Token& t = peek();
        if (t.kind != Tok::End) ++pos_;
        return t;
    }
    bool at_end() const { return pos_ >= toks_->size(); }
    bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().punct == c; }
    Token expect_punct(char c, const std::string& what) {
        if (!is_punct(c))
            throw ParseError(here(), ParseErrorKind::SyntaxError,
                             "expected '" + std::string(1, c) + "' " + what);
        return next();
    }
    SourceSpan here() const {
        if (pos_ < toks_->size()) return (*toks_)[pos_].span;
        return {line_no_, std::max(1, line_len_), 1}; // just past the last token
    }

private:
    const std::vector<Token>* toks_;
    size_t pos_ = 0;
    int line_no_;
    int line_len_;
};

Rational rational_of_token(const Token& t) {
    if (t.kind == Tok::Integer) return Rational(Int(t.text));
    // RatLit "num/den"
    const size_t slash = t.text.find('/');
    const Int num(t.text.substr(0, slash));
    const Int den(t.text.substr(slash + 1));
    if (sgn(den) == 0)
        throw ParseError(t.span, ParseErrorKind::DivisionByZeroLiteral,
                         "rational literal with zero denominator");
    return Rational(num, den);
}

Rational decimal_of_token(const Token& t) {
    if (t.kind == Tok::Integer) return Rational(Int(t.text));
    const size_t dot = t.text.find('.');
    const std::string whole = t.text.substr(0, dot);
    const std::string frac = t.text.substr(dot + 1);
    const Int scale = int_pow(Int(10), static_cast<unsigned long>(frac.size()));
    return Rational(Int(whole + frac), scale);
}

// expression evaluator over one field
class Evaluator {
public:
    Evaluator(NumberField::Ptr field, std::string generator_name)
        : field_(std::move(field)), gen_(std::move(generator_name)) {}

    FieldElement expr(Cursor& c) const {
        FieldElement acc = term(c);
        while (c.is_punct('+') || c.is_punct('-')) {
            const char op = c.next().punct;
            const FieldElement rhs = term(c);
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

private:
    FieldElement term(Cursor& c) const {
        FieldElement acc = factor(c);
        while (c.is_punct('*') || c.is_punct('/')) {
            const char op = c.next().punct;
            const SourceSpan rhs_span = c.here();
            const FieldElement rhs = factor(c);
            if (op == '/') {
                if (rhs.is_zero())
                    throw ParseError(rhs_span, ParseErrorKind::DivisionByZeroLiteral,
                                     "division by zero");
                acc = acc / rhs;
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    FieldElement factor(Cursor& c) const {
        bool negate = false;
        if (c.is_punct('-')) {
            c.next();
            negate = true;
        }
        const Token t = c.peek();
        FieldElement value = FieldElement::zero(field_);
        SourceSpan base_span = t.span;
        switch (t.kind) {
            case Tok::Integer:
            case Tok::RatLit:
                c.next();
                value = FieldElement::from_rational(field_, rational_of_token(t));
                break;
            case Tok::Decimal:
                throw ParseError(t.span, ParseErrorKind::SyntaxError,
                                 "decimal literals are not allowed here; use rationals");
            case Tok::Ident:
                c.next();
                if (t.text != gen_)
                    throw ParseError(t.span, ParseErrorKind::UnknownSymbol,
                                     "unknown symbol '" + t.text + "'");
                value = FieldElement::generator(field_);
                break;
            case Tok::Punct:
                if (t.punct == '(') {
                    c.next();
                    value = expr(c);
                    c.expect_punct(')', "to close the group");
                    break;
                }
                [[fallthrough]];
            default:
                throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                 "expected a number, symbol or parenthesized expression");
        }
        if (c.is_punct('^')) {
            c.next();
            bool neg_exp = false;
            if (c.is_punct('-')) {
                c.next();
                neg_exp = true;
            }
            const Token e = c.peek();
            unsigned long k = 0;
            if (e.kind == Tok::Integer) {
                c.next();
                k = std::stoul(e.text);
            } else if (e.kind == Tok::RatLit || e.kind == Tok::Decimal) {
                throw ParseError(e.span, ParseErrorKind::NonIntegerExponent,
                                 "exponent must be an integer");
            } else if (e.kind == Tok::Punct && e.punct == '(') {
                // parenthesized exponents are accepted when they evaluate
                // to a rational integer
                c.next();
                const FieldElement ev = expr(c);
                c.expect_punct(')', "to close the exponent");
                if (!ev.is_rational() || !ev.as_rational().is_integer())
                    throw ParseError(e.span, ParseErrorKind::NonIntegerExponent,
                                     "exponent must be an integer");
                Rational q = ev.as_rational();
                if (q.sign() < 0) {
                    neg_exp = !neg_exp;
                    q = -q;
                }
                if (q.numerator() > 64)
                    throw ParseError(e.span, ParseErrorKind::SyntaxError, "exponent too large");
                k = q.numerator().get_ui();
            } else {
                throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                 "expected an integer exponent");
            }
            if (neg_exp) {
                if (value.is_zero())
                    throw ParseError(base_span, ParseErrorKind::DivisionByZeroLiteral,
                                     "zero raised to a negative power");
                value = value.inverse().pow(k);
            } else {
                value = value.pow(k);
            }
        }
        return negate ? -value : value;
    }

    NumberField::Ptr field_;
    std::string gen_;
};

// "field" IDENT ":" poly  -- integer-coefficient monic polynomial in t
UniPoly parse_field_poly(Cursor& c) {
    std::map<int, Rational> coeffs;
    bool first = true;
    for (;;) {
        int sign = 1;
        if (c.is_punct('+') || c.is_punct('-')) {
            if (c.next().punct == '-') sign = -1;
        } else if (!first) {
            break;
        }
        // term: INTEGER ["*"] ["t" ["^" INTEGER]] | "t" ["^" INTEGER]
        Rational coeff(1);
        bool have_coeff = false;
        if (c.peek().kind == Tok::Integer) {
            coeff = Rational(Int(c.next().text));
            have_coeff = true;
            if (c.is_punct('*')) c.next();
        } else if (c.peek().kind == Tok::RatLit || c.peek().kind == Tok::Decimal) {
            throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                             "minimal polynomial needs integer coefficients");
        }
        int exp = 0;
        if (c.peek().kind == Tok::Ident) {
            const Token var = c.next();
            if (var.text != "t")
                throw ParseError(var.span, ParseErrorKind::SyntaxError,
                                 "minimal polynomial variable must be 't'");
            exp = 1;
            if (c.is_punct('^')) {
                c.next();
                if (c.peek().kind != Tok::Integer)
                    throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                     "expected an integer exponent");
                exp = std::stoi(c.next().text);
            }
        } else if (!have_coeff) {
            throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                             "expected a polynomial term");
        }
        coeffs[exp] += Rational(sign) * coeff;
        first = false;
        if (c.at_end()) break;
    }
    int deg = 0;
    for (const auto& [e, v] : coeffs)
        if (!v.is_zero()) deg = std::max(deg, e);
    std::vector<Rational> v(static_cast<size_t>(deg) + 1);
    for (const auto& [e, val] : coeffs) v[static_cast<size_t>(e)] = val;
    return UniPoly(std::move(v));
}

struct RawLine {
    int number = 0;
    std::vector<Token> tokens;
    int length = 0;
};

} // namespace

ParsedInput parse_input(const std::string& text) {
    const std::vector<std::string> raw = split_lines(text);
    std::vector<RawLine> lines;
    for (size_t i = 0; i < raw.size(); ++i) {
        std::vector<Token> toks = lex_line(raw[i], static_cast<int>(i) + 1);
        if (toks.empty()) continue;
        lines.push_back({static_cast<int>(i) + 1, std::move(toks), static_cast<int>(raw[i].size())});
    }

    // pass 1: the field declaration and root hint may appear anywhere
    NumberField::Ptr field;
    std::string gen_name;
    std::optional<std::pair<Rational, Rational>> hint;
    const RawLine* field_line = nullptr;
    for (const RawLine& line : lines) {
        const Token& head = line.tokens.front();
        if (head.kind == Tok::Ident && head.text == "field") {
            if (field_line)
                throw ParseError(head.span, ParseErrorKind::SyntaxError,
                                 "duplicate field declaration");
            field_line = &line;
        } else if (head.kind == Tok::Ident && head.text == "root_hint") {
            Cursor c(&line.tokens, line.number, line.length);
            c.next();
            c.expect_punct('=', "after root_hint");
            auto signed_decimal = [&c]() {
                int sign = 1;
                if (c.is_punct('-')) {
                    c.next();
                    sign = -1;
                } else if (c.is_punct('+')) {
                    c.next();
                }
                const Token t = c.peek();
                if (t.kind != Tok::Decimal && t.kind != Tok::Integer)
                    throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                     "expected a decimal number");
                c.next();
                return Rational(sign) * decimal_of_token(t);
            };
            const Rational re = signed_decimal();
            Rational im(0);
            if (!c.at_end()) {
                if (!c.is_punct('+') && !c.is_punct('-'))
                    throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                     "expected '+' or '-' before the imaginary part");
                im = signed_decimal();
                const Token unit = c.peek();
                if (unit.kind != Tok::Ident || unit.text != "i")
                    throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                     "expected 'i' after the imaginary part");
                c.next();
            }
            if (!c.at_end())
                throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                                 "unexpected input after the root hint");
            if (hint)
                throw ParseError(head.span, ParseErrorKind::SyntaxError, "duplicate root_hint");
            hint = std::make_pair(re, im);
        }
    }
    if (field_line) {
        Cursor c(&field_line->tokens, field_line->number, field_line->length);
        c.next(); // "field"
        const Token name = c.peek();
        if (name.kind != Tok::Ident)
            throw ParseError(c.here(), ParseErrorKind::SyntaxError, "expected the generator name");
        c.next();
        gen_name = name.text;
        c.expect_punct(':', "after the generator name");
        const SourceSpan poly_span = c.here();
        const UniPoly m = parse_field_poly(c);
        if (!c.at_end())
            throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                             "unexpected input after the polynomial");
        if (m.degree() < 1)
            throw ParseError(poly_span, ParseErrorKind::SyntaxError,
                             "minimal polynomial must have degree >= 1");
        if (!m.is_monic())
            throw ParseError(poly_span, ParseErrorKind::SyntaxError,
                             "minimal polynomial must be monic");
        field = NumberField::create(m, hint);
    } else {
        field = NumberField::rationals();
    }

    // pass 2: assignments
    const Evaluator eval(field, gen_name);
    std::map<std::string, std::pair<std::vector<FieldElement>, SourceSpan>> lists;
    for (const RawLine& line : lines) {
        const Token& head = line.tokens.front();
        if (head.kind == Tok::Ident && (head.text == "field" || head.text == "root_hint")) continue;
        Cursor c(&line.tokens, line.number, line.length);
        const Token key = c.peek();
        if (key.kind != Tok::Ident)
            throw ParseError(c.here(), ParseErrorKind::SyntaxError, "expected a key");
        c.next();
        if (key.text != "a" && key.text != "alpha" && key.text != "beta" && key.text != "f" &&
            key.text != "F")
            throw ParseError(key.span, ParseErrorKind::SyntaxError,
                             "unknown key '" + key.text + "'");
        if (lists.count(key.text))
            throw ParseError(key.span, ParseErrorKind::SyntaxError,
                             "duplicate assignment of '" + key.text + "'");
        c.expect_punct('=', "after the key");
        c.expect_punct('[', "to open the list");
        std::vector<FieldElement> values;
        for (;;) {
            values.push_back(eval.expr(c));
            if (c.is_punct(',')) {
                c.next();
                continue;
            }
            break;
        }
        c.expect_punct(']', "to close the list");
        if (!c.at_end())
            throw ParseError(c.here(), ParseErrorKind::SyntaxError,
                             "unexpected input after the list");
        lists.emplace(key.text, std::make_pair(std::move(values), key.span));
    }

    const SourceSpan end_span =
        lines.empty() ? SourceSpan{1, 1, 1} : lines.back().tokens.back().span;
    for (const char* required : {"a", "alpha", "beta"})
        if (!lists.count(required))
            throw ParseError(end_span, ParseErrorKind::SyntaxError,
                             std::string("missing assignment of '") + required + "'");
    const size_t n = lists.at("a").first.size();
    for (const char* key : {"alpha", "beta"}) {
        const auto& [vals, span] = lists.at(key);
        if (vals.size() != n) {
            std::ostringstream msg;
            msg << "'" << key << "' has " << vals.size() << " entries but 'a' has " << n;
            throw ParseError(span, ParseErrorKind::ArityMismatch, msg.str());
        }
    }

    ParsedInput out{make_spec(field, std::move(lists.at("a").first), std::move(lists.at("alpha").first),
                              std::move(lists.at("beta").first)),
                    {},
                    {}};
    if (lists.count("f")) out.f = std::move(lists.at("f").first);
    if (lists.count("F")) out.F = std::move(lists.at("F").first);
    return out;
}

EquationSpec parse(const std::string& text) { return parse_input(text).spec; }

} // namespace feq
