// Expression parser for algebra elements.
//
// Grammar (ASCII):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'.') factor)*
//   factor  := primary ('^' integer)?
//   primary := '(' expr ')' | rational | 'q' | 'l' | generator-name
//
// '.' and '*' both denote the product; scalars commute with everything.
// Negative powers are allowed for q and l only.

#pragma once

#include "qsphere/algebra.hpp"

#include <cctype>
#include <string>

namespace qsphere {

class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

namespace detail {

class ExprParser {
  public:
    ExprParser(const Presentation& pres, const std::string& text)
        : pres_(pres), s_(text) {}

    NCPoly parse() {
        NCPoly p = expr();
        skip();
        if (i_ < s_.size()) throw ParseError("unexpected character", i_);
        return pres_.normalize(p);
    }

  private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }

    NCPoly expr() {
        NCPoly acc = eat('-') ? -term() : (static_cast<void>(eat('+')), term());
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    NCPoly term() {
        NCPoly acc = factor();
        while (eat('*') || eat('.')) acc = pres_.mul(acc, factor());
        return acc;
    }

    NCPoly factor() {
        std::size_t at = i_;
        NCPoly base = primary();
        if (!eat('^')) return base;
        skip();
        bool negative = eat('-');
        long k = integer();
        if (negative) {
            // negative powers are only meaningful for invertible scalars
            if (base.term_count() != 1 || !base.terms().begin()->first.empty())
                throw ParseError("negative power of a non-scalar", at);
            const Scalar& c = base.terms().begin()->second;
            if (c.term_count() != 1 || c.terms().begin()->second != 1)
                throw ParseError("negative power of a non-monomial scalar", at);
            auto e = c.terms().begin()->first;
            return pres_.poly(Word{},
                              Scalar::monomial(1, static_cast<std::int32_t>(-e.q * k),
                                               static_cast<std::int32_t>(-e.l * k)));
        }
        NCPoly acc = pres_.unit();
        for (long j = 0; j < k; ++j) acc = pres_.mul(acc, base);
        return acc;
    }

    NCPoly primary() {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            NCPoly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", i_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) throw ParseError("zero denominator", i_);
                return pres_.poly(Word{}, Scalar(Rational(num) / den));
            }
            return pres_.poly(Word{}, Scalar(Rational(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = i_;
            std::string name;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                                      s_[i_] == '_'))
                name.push_back(s_[i_++]);
            if (name == "q") return pres_.poly(Word{}, Scalar::q());
            if (name == "l") return pres_.poly(Word{}, Scalar::lam());
            int g = pres_.find_gen(name);
            if (g < 0) throw ParseError("unknown generator '" + name + "'", at);
            return pres_.gen(g);
        }
        throw ParseError("unexpected character", i_);
    }

    long integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == start) throw ParseError("integer expected", start);
        return std::stol(s_.substr(start, i_ - start));
    }

    const Presentation& pres_;
    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline NCPoly parse_poly(const Presentation& pres, const std::string& text) {
    return detail::ExprParser(pres, text).parse();
}

}  // namespace qsphere
