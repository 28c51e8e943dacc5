#include <plaincharts/format.hpp>

#include <cctype>
#include <sstream>
#include <vector>

namespace plaincharts {

namespace {

struct Token {
    enum class Type { plus, minus, star, caret, lparen, rparen, ident, number, end };
    Type type;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& input) : in_(input) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= in_.size()) return {Token::Type::end, "", line, col};
        char c = in_[pos_];
        switch (c) {
        case '+': advance(); return {Token::Type::plus, "+", line, col};
        case '-': advance(); return {Token::Type::minus, "-", line, col};
        case '*': advance(); return {Token::Type::star, "*", line, col};
        case '^': advance(); return {Token::Type::caret, "^", line, col};
        case '(': advance(); return {Token::Type::lparen, "(", line, col};
        case ')': advance(); return {Token::Type::rparen, ")", line, col};
        default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (pos_ < in_.size() &&
                   (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_')) {
                id += in_[pos_];
                advance();
            }
            return {Token::Type::ident, id, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                num += in_[pos_];
                advance();
            }
            // optional '/uint' forming an exact rational literal
            if (pos_ < in_.size() && in_[pos_] == '/') {
                std::size_t save = pos_;
                int sl = line_, sc = col_;
                advance();
                if (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                    num += '/';
                    while (pos_ < in_.size() &&
                           std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                        num += in_[pos_];
                        advance();
                    }
                } else {
                    pos_ = save;
                    line_ = sl;
                    col_ = sc;
                }
            }
            return {Token::Type::number, num, line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col,
                         "operator, identifier or number");
    }

private:
    void skip_ws() {
        while (pos_ < in_.size() &&
               std::isspace(static_cast<unsigned char>(in_[pos_]))) {
            advance();
        }
    }
    void advance() {
        if (in_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& input, PolyRingPtr ring)
        : lexer_(input), ring_(std::move(ring)) {
        tok_ = lexer_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        expect(Token::Type::end, "end of input");
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        if (tok_.type == Token::Type::plus) {
            consume();
        } else if (tok_.type == Token::Type::minus) {
            neg = true;
            consume();
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (tok_.type == Token::Type::plus || tok_.type == Token::Type::minus) {
            bool minus = tok_.type == Token::Type::minus;
            consume();
            Polynomial t = term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (tok_.type == Token::Type::star) {
            consume();
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = base();
        if (tok_.type == Token::Type::caret) {
            consume();
            if (tok_.type != Token::Type::number || tok_.text.find('/') != std::string::npos)
                fail("nonnegative integer exponent");
            unsigned long e = std::stoul(tok_.text);
            consume();
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    Polynomial base() {
        switch (tok_.type) {
        case Token::Type::ident: {
            if (!ring_->has_var(tok_.text))
                throw ParseError("unknown variable '" + tok_.text + "'", tok_.line,
                                 tok_.col, "declared variable");
            Polynomial p = Polynomial::variable(ring_, tok_.text);
            consume();
            return p;
        }
        case Token::Type::number: {
            Polynomial p = Polynomial::constant(ring_, parse_rational(tok_.text));
            consume();
            return p;
        }
        case Token::Type::lparen: {
            consume();
            Polynomial p = expr();
            expect(Token::Type::rparen, "')'");
            return p;
        }
        default:
            fail("identifier, number or '('");
        }
        return Polynomial::zero(ring_); // unreachable
    }

    void consume() { tok_ = lexer_.next(); }

    void expect(Token::Type t, const std::string& what) {
        if (tok_.type != t) fail(what);
        if (t != Token::Type::end) consume();
    }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = tok_.type == Token::Type::end ? "end of input"
                                                        : "'" + tok_.text + "'";
        throw ParseError("parse error at " + got, tok_.line, tok_.col, expected);
    }

    Lexer lexer_;
    PolyRingPtr ring_;
    Token tok_;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring) {
    return Parser(text, ring).parse();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    // collect terms, sort descending grevlex
    std::vector<const Exponents*> exps;
    exps.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) exps.push_back(&e);
    MonomialOrder ord = MonomialOrder::grevlex();
    std::sort(exps.begin(), exps.end(),
              [&](const Exponents* a, const Exponents* b) { return ord.less(*b, *a); });
    std::ostringstream out;
    bool first = true;
    for (const Exponents* e : exps) {
        Rational c = p.terms().at(*e);
        bool negative = c < 0;
        Rational abs = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? "-" : "+");
        }
        first = false;
        bool is_const_term = total_degree(*e) == 0;
        bool coeff_shown = is_const_term || abs != 1;
        if (coeff_shown) out << rational_to_string(abs);
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < e->size(); ++i) {
            int pw = (*e)[i];
            if (pw == 0) continue;
            if (need_star) out << "*";
            out << p.ring()->var(i);
            if (pw > 1) out << "^" << pw;
            need_star = true;
        }
    }
    return out.str();
}

} // namespace plaincharts
