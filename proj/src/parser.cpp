// parser.cpp

#include "smallzeros/parser.hpp"

#include <cctype>
#include <sstream>

namespace smallzeros {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;
    unsigned max_var = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    char advance() {
        char c = text[pos++];
        ++col;
        return c;
    }

    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += advance();
        return Int(digits);
    }

    unsigned exponent() {
        skip_ws();
        if (pos < text.size() && (text[pos] == '(' || text[pos] == '-'))
            fail("exponent must be a non-negative integer literal");
        Int e = integer();
        if (e > 64) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    // terms are collected into a shared-arity polynomial at the end; during
    // parsing we track (monomial over a growing variable set, coefficient)
    struct Term {
        std::map<unsigned, unsigned> vars;  // var index (0-based) -> exponent
        Rat coeff;
    };
    using Poly = std::vector<Term>;

    static Poly poly_const(const Rat& c) {
        if (c == 0) return {};
        return {Term{{}, c}};
    }

    static Poly poly_add(const Poly& a, const Poly& b) {
        Poly out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    static Poly poly_mul(const Poly& a, const Poly& b) {
        Poly out;
        for (const Term& x : a)
            for (const Term& y : b) {
                Term t;
                t.coeff = x.coeff * y.coeff;
                t.vars = x.vars;
                for (auto [v, e] : y.vars) t.vars[v] += e;
                out.push_back(std::move(t));
            }
        return out;
    }

    static Poly poly_neg(Poly a) {
        for (Term& t : a) t.coeff = -t.coeff;
        return a;
    }

    static Poly poly_pow(const Poly& a, unsigned e) {
        Poly acc = poly_const(Rat(1));
        for (unsigned i = 0; i < e; ++i) acc = poly_mul(acc, a);
        return acc;
    }

    Poly parse_expr() {
        Poly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = parse_term();
        if (neg) acc = poly_neg(acc);
        for (;;) {
            char c = peek();
            if (c == '+') {
                advance();
                acc = poly_add(acc, parse_term());
            } else if (c == '-') {
                advance();
                acc = poly_add(acc, poly_neg(parse_term()));
            } else {
                return acc;
            }
        }
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            advance();
            acc = poly_mul(acc, parse_factor());
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (peek() == '^') {
            advance();
            unsigned e = exponent();
            base = poly_pow(base, e);
        }
        return base;
    }

    Poly parse_base() {
        char c = peek();
        if (c == '(') {
            advance();
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            advance();
            return poly_neg(parse_factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (peek() == '/') {
                advance();
                Int den = integer();
                if (den == 0) fail("division by zero in a rational literal");
                return poly_const(make_rat(num, den));
            }
            return poly_const(Rat(num));
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            advance();
            unsigned idx;
            if (c == 'x' && pos < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos]))) {
                Int n = integer();
                if (n < 1) fail("variable index must be >= 1");
                if (n > 64) fail("variable index too large");
                idx = static_cast<unsigned>(n.get_ui()) - 1;
            } else {
                idx = (c == 'x') ? 0 : (c == 'y') ? 1 : 2;
            }
            max_var = std::max(max_var, idx + 1);
            Term t;
            t.coeff = 1;
            t.vars[idx] = 1;
            return {t};
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, unsigned min_vars) {
    Parser p(text);
    Parser::Poly terms = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    unsigned nvars = std::max(std::max(p.max_var, min_vars), 1u);
    MultiPoly out(nvars);
    for (const Parser::Term& t : terms) {
        Monomial m(nvars, 0);
        for (auto [v, e] : t.vars) m[v] = e;
        out.add_term(m, t.coeff);
    }
    return out;
}

QMatrix parse_matrix(const std::string& text) {
    QMatrix m;
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<Rat> r;
        std::stringstream entries(row);
        std::string e;
        while (std::getline(entries, e, ',')) {
            // trim
            size_t a = e.find_first_not_of(" \t");
            size_t b = e.find_last_not_of(" \t");
            if (a == std::string::npos) throw std::invalid_argument("matrix: empty entry");
            r.push_back(parse_rat(e.substr(a, b - a + 1)));
        }
        if (!m.rows.empty() && r.size() != m.rows[0].size())
            throw std::invalid_argument("matrix: ragged rows");
        m.rows.push_back(std::move(r));
    }
    if (m.rows.empty()) throw std::invalid_argument("matrix: empty");
    return m;
}

std::string print_poly(const MultiPoly& f) { return f.str(); }

}  // namespace smallzeros
