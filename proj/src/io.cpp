#include "fdist/io.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "fdist/errors.hpp"

namespace fdist {

std::string term_str(const Term& t) {
    if (t.empty()) return "<empty>";
    if (t.is_leaf()) return t.symbol().str();
    if (t.op() == OpLabel::bracket)
        return "[" + term_str(t.lhs()) + "," + term_str(t.rhs()) + "]";
    return "(" + term_str(t.lhs()) + " " + op_token(t.op()) + " " + term_str(t.rhs()) + ")";
}

std::string lincomb_str(const LinComb& x) {
    if (x.is_zero()) return "0";
    // Leading (largest) term first.
    std::string out;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const Rational& c = it->second;
        Rational a = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (!a.is_one()) out += a.str() + "*";
        out += term_str(it->first);
    }
    return out;
}

namespace {

struct Lexer {
    explicit Lexer(const std::string& s) : text(s) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' at offset " +
                             std::to_string(pos) + " in: " + text);
    }
    std::optional<std::string> ident() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        if (!std::isalpha((unsigned char)text[pos]) && text[pos] != '_') return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
    std::optional<Int> integer() {
        skip_ws();
        std::size_t start = pos;
        std::size_t p = pos;
        if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
        std::size_t digits = p;
        while (p < text.size() && std::isdigit((unsigned char)text[p])) ++p;
        if (p == digits) return std::nullopt;
        pos = p;
        return Int(text.substr(start, pos - start));
    }

    const std::string& text;
    std::size_t pos = 0;
};

OpLabel op_for_token(char tok, Variety v) {
    switch (tok) {
        case '*': return v == Variety::associative ? OpLabel::mul : OpLabel::star;
        case '.': return OpLabel::succ;
        case 'o': return OpLabel::circ;
        default: throw ParseError(std::string("unknown operation token '") + tok + "'");
    }
}

Term parse_term_inner(Lexer& lex, Variety v) {
    if (lex.accept('(')) {
        Term lhs = parse_term_inner(lex, v);
        char tok = lex.peek();
        if (tok == '*' || tok == '.') {
            ++lex.pos;
        } else {
            auto id = lex.ident();
            if (!id || *id != "o")
                throw ParseError("expected operation token in: " + lex.text);
            tok = 'o';
        }
        Term rhs = parse_term_inner(lex, v);
        lex.expect(')');
        return Term::node(op_for_token(tok, v), lhs, rhs);
    }
    if (lex.accept('[')) {
        Term lhs = parse_term_inner(lex, v);
        lex.expect(',');
        Term rhs = parse_term_inner(lex, v);
        lex.expect(']');
        return Term::node(OpLabel::bracket, lhs, rhs);
    }
    auto id = lex.ident();
    if (!id) throw ParseError("expected a term at offset " + std::to_string(lex.pos) +
                              " in: " + lex.text);
    if (lex.accept('(')) {
        auto n = lex.integer();
        if (!n) throw ParseError("expected integer index in: " + lex.text);
        lex.expect(')');
        return Term::leaf(*id, *n);
    }
    return Term::leaf(*id);
}

Rational parse_rational(Lexer& lex) {
    auto num = lex.integer();
    if (!num) throw ParseError("expected a number in: " + lex.text);
    if (lex.accept('/')) {
        auto den = lex.integer();
        if (!den) throw ParseError("expected denominator in: " + lex.text);
        return Rational(*num, *den);
    }
    return Rational(*num);
}

}  // namespace

Term parse_term(const std::string& text, Variety v) {
    Lexer lex(text);
    Term t = parse_term_inner(lex, v);
    if (!lex.eof()) throw ParseError("trailing input in term: " + text);
    return t;
}

LinComb parse_lincomb(const std::string& text, Variety v) {
    Lexer lex(text);
    LinComb out;
    bool first = true;
    while (!lex.eof()) {
        int sign = 1;
        if (lex.accept('-')) {
            sign = -1;
        } else if (lex.accept('+')) {
            sign = 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in combination: " + text);
        }
        first = false;
        Rational coeff(1);
        char c = lex.peek();
        if (std::isdigit((unsigned char)c)) {
            coeff = parse_rational(lex);
            if (coeff.is_zero() && lex.eof()) break;  // the literal "0"
            lex.expect('*');
        }
        Term t = parse_term_inner(lex, v);
        if (sign < 0) coeff = -coeff;
        out.add_term(t, coeff);
    }
    return out;
}

std::optional<Variety> variety_from_name(const std::string& name) {
    for (Variety v : {Variety::associative, Variety::lie, Variety::right_symmetric,
                      Variety::novikov, Variety::pre_associative, Variety::leibniz})
        if (name == variety_name(v)) return v;
    return std::nullopt;
}

}  // namespace fdist
