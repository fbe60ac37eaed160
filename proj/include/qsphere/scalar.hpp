// Exact arithmetic in the Laurent coefficient ring Q[q^{±1}, l^{±1}].
//
// q is a formal real parameter, l a formal unitary (conjugation sends
// l to l^{-1} and fixes q).  Coefficients are exact rationals; floating
// point enters only through specialize().

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsphere {

using Rational = boost::multiprecision::cpp_rational;

// Exponent pair (e_q, e_l).  Bounded machine integers; overflow is a
// hard error (see Scalar::check_exponent).
struct ExpPair {
    std::int32_t q = 0;
    std::int32_t l = 0;
    friend auto operator<=>(const ExpPair&, const ExpPair&) = default;
};

class Scalar {
  public:
    static constexpr std::int32_t kMaxExponent = 1 << 20;

    Scalar() = default;
    Scalar(const Rational& c) {
        if (c != 0) terms_[ExpPair{0, 0}] = c;
    }
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(int c) : Scalar(Rational(c)) {}

    static Scalar monomial(const Rational& c, std::int32_t eq, std::int32_t el) {
        check_exponent(eq);
        check_exponent(el);
        Scalar s;
        if (c != 0) s.terms_[ExpPair{eq, el}] = c;
        return s;
    }
    static Scalar q(std::int32_t k = 1) { return monomial(1, k, 0); }
    static Scalar lam(std::int32_t k = 1) { return monomial(1, 0, k); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar zero() { return Scalar(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == one(); }

    // True when the scalar is a rational multiple of the unit (no q or l).
    bool is_rational() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0});
    }
    Rational rational_part() const {
        auto it = terms_.find(ExpPair{0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpPair, Rational>& terms() const { return terms_; }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [e, c] : o.terms_) {
            auto it = terms_.find(e);
            if (it == terms_.end()) {
                terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar operator-() const {
        Scalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpPair e{ea.q + eb.q, ea.l + eb.l};
                check_exponent(e.q);
                check_exponent(e.l);
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(e, ca * cb);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    // *-conjugation: rationals fixed, e_q fixed, e_l negated.
    Scalar conj() const {
        Scalar r;
        for (const auto& [e, c] : terms_) r.terms_[ExpPair{e.q, -e.l}] = c;
        return r;
    }

    // q -> q_val, l -> exp(2*pi*i*theta_val).
    std::complex<double> specialize(double q_val, double theta_val) const {
        if (!(q_val > 0.0))
            throw std::domain_error("Scalar::specialize: q must be positive");
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [e, c] : terms_) {
            double mag = std::pow(q_val, static_cast<double>(e.q));
            double ph = 2.0 * std::numbers::pi * theta_val * static_cast<double>(e.l);
            acc += c.convert_to<double>() * mag *
                   std::complex<double>(std::cos(ph), std::sin(ph));
        }
        return acc;
    }

    // Exact substitution q = 1 (collapses all q-exponents, l kept formal).
    Scalar substitute_q1() const {
        Scalar r;
        for (const auto& [e, c] : terms_) {
            auto key = ExpPair{0, e.l};
            auto it = r.terms_.find(key);
            if (it == r.terms_.end()) {
                r.terms_.emplace(key, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }
    // Exact substitution l = 1.
    Scalar substitute_l1() const {
        Scalar r;
        for (const auto& [e, c] : terms_) {
            auto key = ExpPair{e.q, 0};
            auto it = r.terms_.find(key);
            if (it == r.terms_.end()) {
                r.terms_.emplace(key, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    // Largest minus smallest l-exponent over all terms; 0 for the zero
    // scalar.  A zero spread means the value does not depend on theta.
    std::int32_t lambda_degree_spread() const {
        if (terms_.empty()) return 0;
        std::int32_t lo = kMaxExponent, hi = -kMaxExponent;
        for (const auto& [e, c] : terms_) {
            lo = std::min(lo, e.l);
            hi = std::max(hi, e.l);
        }
        return hi - lo;
    }

    // Canonical text: terms sorted by (e_q, e_l); each term c*q^a*l^b
    // with the rational in lowest terms ("1", "q^2 - 1", "2/3*q*l^-2").
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool has_pow = (e.q != 0 || e.l != 0);
            bool coeff_shown = !(has_pow && a == 1);
            if (coeff_shown) os << a;
            if (e.q != 0) {
                if (coeff_shown) os << "*";
                os << "q";
                if (e.q != 1) os << "^" << e.q;
            }
            if (e.l != 0) {
                if (coeff_shown || e.q != 0) os << "*";
                os << "l";
                if (e.l != 1) os << "^" << e.l;
            }
        }
        return os.str();
    }

    static Scalar parse(const std::string& text);

  private:
    static void check_exponent(std::int64_t e) {
        if (e > kMaxExponent || e < -kMaxExponent)
            throw std::overflow_error("Scalar: exponent out of range");
    }

    // invariant: no stored rational is zero
    std::map<ExpPair, Rational> terms_;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline long parse_int(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits)
        throw std::invalid_argument("scalar parse: integer expected at position " +
                                    std::to_string(start));
    return std::stol(s.substr(start, i - start));
}

// One factor of a scalar term: rational literal, q[^k] or l[^k].
inline Scalar parse_scalar_factor(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size())
        throw std::invalid_argument("scalar parse: unexpected end of input");
    if (s[i] == 'q' || s[i] == 'l') {
        char sym = s[i++];
        std::int32_t k = 1;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '^') {
            ++i;
            k = static_cast<std::int32_t>(parse_int(s, i));
        }
        return sym == 'q' ? Scalar::q(k) : Scalar::lam(k);
    }
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        long num = parse_int(s, i);
        skip_ws(s, i);
        if (i < s.size() && s[i] == '/') {
            ++i;
            long den = parse_int(s, i);
            if (den == 0) throw std::invalid_argument("scalar parse: zero denominator");
            return Scalar(Rational(num) / den);
        }
        return Scalar(Rational(num));
    }
    throw std::invalid_argument("scalar parse: unexpected character at position " +
                                std::to_string(i));
}

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
    std::size_t i = 0;
    detail::skip_ws(text, i);
    Scalar acc;
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -sign;
            ++i;
            detail::skip_ws(text, i);
            expect_term = true;
            continue;
        }
        Scalar term = detail::parse_scalar_factor(text, i);
        detail::skip_ws(text, i);
        while (i < text.size() && text[i] == '*') {
            ++i;
            term *= detail::parse_scalar_factor(text, i);
            detail::skip_ws(text, i);
        }
        acc += sign < 0 ? -term : term;
        sign = 1;
        expect_term = false;
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw std::invalid_argument("scalar parse: unexpected character at position " +
                                        std::to_string(i));
    }
    if (expect_term)
        throw std::invalid_argument("scalar parse: empty input or dangling sign");
    return acc;
}

}  // namespace qsphere
