#include "poisinv/expr.hpp"

#include <cctype>
#include <utility>

#include "poisinv/errors.hpp"

namespace poisinv {

namespace {

enum class Tok {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    Rational value;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (p_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[p_]))) ++p_;
        cur_ = Token{Tok::End, "", Rational(0), p_};
        if (p_ >= src_.size()) return;
        char c = src_[p_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = p_;
            BigInt num = read_digits();
            BigInt den = 1;
            // a '/' directly between digit runs belongs to the literal
            if (p_ + 1 < src_.size() && src_[p_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[p_ + 1]))) {
                ++p_;
                den = read_digits();
                if (den == 0) throw SyntaxError("zero denominator in literal", start);
            }
            cur_ = Token{Tok::Number, "", Rational(num, den), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = p_;
            while (e < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[e])) || src_[e] == '_'))
                ++e;
            cur_ = Token{Tok::Ident, std::string(src_.substr(p_, e - p_)), Rational(0), p_};
            p_ = e;
            return;
        }
        std::size_t at = p_++;
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
        cur_ = Token{k, "", Rational(0), at};
    }

    BigInt read_digits() {
        BigInt v = 0;
        while (p_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p_]))) {
            v = v * 10 + (src_[p_] - '0');
            ++p_;
        }
        return v;
    }

    std::string_view src_;
    std::size_t p_ = 0;
    Token cur_;
};

class Parser {
public:
    Parser(std::string_view src, std::vector<std::string> vars, unsigned zeta_modulus)
        : lex_(src), vars_(std::move(vars)), zmod_(zeta_modulus) {}

    MultiPoly parse_full() {
        MultiPoly p = parse_expr();
        expect_end();
        return p;
    }

    Matrix parse_matrix_full() {
        expect(Tok::LBracket, "'['");
        std::vector<std::vector<Cyclo>> rows;
        rows.push_back(parse_row());
        while (lex_.peek().kind == Tok::Semi) {
            std::size_t at = lex_.take().pos;
            rows.push_back(parse_row());
            if (rows.back().size() != rows.front().size())
                throw SyntaxError("matrix rows have unequal lengths", at);
        }
        expect(Tok::RBracket, "']'");
        expect_end();
        Matrix m(static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows.front().size()));
        for (unsigned i = 0; i < m.rows(); ++i)
            for (unsigned j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        return m;
    }

private:
    unsigned nvars() const { return static_cast<unsigned>(vars_.size()); }

    void expect(Tok k, const char* what) {
        Token t = lex_.take();
        if (t.kind != k) throw SyntaxError(std::string("expected ") + what, t.pos);
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::End)
            throw SyntaxError("unexpected trailing input", lex_.peek().pos);
    }

    std::vector<Cyclo> parse_row() {
        std::vector<Cyclo> row;
        row.push_back(parse_expr().constant_value());
        while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            row.push_back(parse_expr().constant_value());
        }
        return row;
    }

    MultiPoly parse_expr() {
        MultiPoly acc = parse_term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            MultiPoly rhs = parse_term();
            if (op == Tok::Plus)
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    MultiPoly parse_term() {
        bool last_bare = false;
        MultiPoly acc = parse_unary(last_bare);
        for (;;) {
            if (lex_.peek().kind == Tok::Star) {
                lex_.take();
                acc = acc * parse_unary(last_bare);
            } else if (last_bare && lex_.peek().kind == Tok::Ident) {
                // "3x1" multiplies; only a plain number may prefix this way
                acc = acc * parse_power(last_bare);
            } else {
                return acc;
            }
        }
    }

    MultiPoly parse_unary(bool& bare_number) {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            MultiPoly v = parse_unary(bare_number);
            bare_number = false;
            return -v;
        }
        return parse_power(bare_number);
    }

    MultiPoly parse_power(bool& bare_number) {
        auto [base, was_number] = parse_primary();
        bare_number = was_number;
        if (lex_.peek().kind != Tok::Caret) return base;
        std::size_t at = lex_.take().pos;
        bare_number = false;
        long e = parse_exponent();
        if (e >= 0) return base.pow(static_cast<unsigned>(e));
        if (!base.is_constant())
            throw SyntaxError("negative exponent on a non-constant expression", at);
        return MultiPoly::constant(nvars(), base.constant_value().pow(e));
    }

    long parse_exponent() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        Token t = lex_.take();
        if (t.kind != Tok::Number) throw SyntaxError("expected an integer exponent", t.pos);
        if (rat_den(t.value) != 1) throw ExponentNotInteger(t.pos);
        BigInt e = rat_num(t.value);
        if (e > 1024) throw SyntaxError("exponent too large", t.pos);
        long v = static_cast<long>(e);
        return neg ? -v : v;
    }

    std::pair<MultiPoly, bool> parse_primary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return {MultiPoly::constant(nvars(), Cyclo(t.value)), true};
            case Tok::Ident: {
                if (t.text == "zeta") return {parse_zeta(t.pos), false};
                for (unsigned i = 0; i < nvars(); ++i)
                    if (vars_[i] == t.text) return {MultiPoly::variable(nvars(), i), false};
                throw UnknownVariable(t.text, t.pos);
            }
            case Tok::LParen: {
                MultiPoly inner = parse_expr();
                expect(Tok::RParen, "')'");
                return {inner, false};
            }
            default:
                throw SyntaxError("expected a number, variable, or '('", t.pos);
        }
    }

    MultiPoly parse_zeta(std::size_t at) {
        expect(Tok::LParen, "'('");
        Token n = lex_.take();
        if (n.kind != Tok::Number || rat_den(n.value) != 1 || n.value <= 0)
            throw SyntaxError("zeta expects a positive integer order", n.pos);
        BigInt order = rat_num(n.value);
        if (order > 1000000) throw SyntaxError("zeta order too large", n.pos);
        unsigned N = static_cast<unsigned>(order);
        if (zmod_ != 0 && zmod_ % N != 0)
            throw SyntaxError("zeta(" + std::to_string(N) +
                                  ") lies outside the working field Q(zeta(" +
                                  std::to_string(zmod_) + "))",
                              at);
        expect(Tok::RParen, "')'");
        return MultiPoly::constant(nvars(), Cyclo::zeta(N));
    }

    Lexer lex_;
    std::vector<std::string> vars_;
    unsigned zmod_;
};

}  // namespace

MultiPoly parse_poly(const std::string& src, const std::vector<std::string>& vars,
                     unsigned zeta_modulus) {
    return Parser(src, vars, zeta_modulus).parse_full();
}

MultiPoly parse_poly(const std::string& src, unsigned nvars, unsigned zeta_modulus) {
    return Parser(src, default_names("x", nvars), zeta_modulus).parse_full();
}

Cyclo parse_scalar(const std::string& src, unsigned zeta_modulus) {
    return Parser(src, {}, zeta_modulus).parse_full().constant_value();
}

Matrix parse_matrix(const std::string& src, unsigned zeta_modulus) {
    return Parser(src, {}, zeta_modulus).parse_matrix_full();
}

}  // namespace poisinv
