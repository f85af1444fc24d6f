#include "resint/parser.hpp"

#include <cctype>

namespace resint {

namespace {

class Lexer {
public:
    Lexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') { ++line_; col_ = 1; }
            else ++col_;
            ++pos_;
        }
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        char c = s_[pos_++];
        ++col_;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, col_);
    }
    int line() const { return line_; }
    int col() const { return col_; }

    unsigned long long read_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an unsigned integer");
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
            if (v > (1ULL << 62)) fail("integer literal too large");
            ++pos_; ++col_;
        }
        return v;
    }

    std::string read_ident() {
        skip_ws();
        if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            fail("expected a variable name");
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            id += s_[pos_++];
            ++col_;
        }
        return id;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& s, RingPtr ring) : lx_(s), ring_(std::move(ring)) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (!lx_.eof()) lx_.fail("unexpected trailing input");
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        if (lx_.peek() == '-') { lx_.get(); neg = true; }
        Polynomial p = term();
        if (neg) p = -p;
        while (!lx_.eof()) {
            char c = lx_.peek();
            if (c != '+' && c != '-') break;
            lx_.get();
            Polynomial t = term();
            p = (c == '+') ? p + t : p - t;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (!lx_.eof() && lx_.peek() == '*') {
            lx_.get();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        if (lx_.eof()) lx_.fail("unexpected end of input");
        char c = lx_.peek();
        if (c == '(') {
            lx_.get();
            Polynomial p = expr();
            if (lx_.eof() || lx_.peek() != ')') lx_.fail("expected ')'");
            lx_.get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long num = lx_.read_uint();
            if (!lx_.eof() && lx_.peek() == '/') {
                lx_.get();
                unsigned long long den = lx_.read_uint();
                if (den == 0) lx_.fail("zero denominator");
                return Polynomial::constant(
                    ring_, ring_->field().from_fraction(static_cast<long long>(num),
                                                        static_cast<long long>(den)));
            }
            return Polynomial::constant(ring_,
                                        ring_->field().from_int(static_cast<long long>(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx_.read_ident();
            int idx = ring_->var_index(name);
            if (idx < 0) lx_.fail("unknown variable '" + name + "'");
            int exp = 1;
            if (!lx_.eof() && lx_.peek() == '^') {
                lx_.get();
                unsigned long long e = lx_.read_uint();
                if (e > 100000) lx_.fail("exponent too large");
                exp = static_cast<int>(e);
            }
            return Polynomial::variable(ring_, idx, exp);
        }
        lx_.fail(std::string("unexpected character '") + c + "'");
    }

    Lexer lx_;
    RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

}  // namespace resint
