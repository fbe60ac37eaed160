// Matrix algebra over a presented algebra, the two 4x4 projectors, the
// Dennis trace into the reduced (b,B) complex, and the Chern character
// components ch_0, ch_1, ch_2.
//
// Chains live in the normalized complex: a degree-k chain is a linear
// combination of (k+1)-fold tensor words of normal-form monomials; any
// tensor word with the unit in a position >= 1 is dropped.  Character
// normalization: ch_n = (-1)^n (2n)!/n! * Tr((E - I/2) (x) E^{(x)2n}),
// which makes b(ch_{n+1}) + B(ch_n) = 0 an exact identity.

#pragma once

#include "qsphere/algebra.hpp"

#include <optional>
#include <vector>

namespace qsphere {

class MatrixPoly {
  public:
    MatrixPoly(const Presentation* pres, int n)
        : pres_(pres), n_(n), entries_(static_cast<std::size_t>(n) * n, pres->zero()) {}

    static MatrixPoly identity(const Presentation& pres, int n) {
        MatrixPoly m(&pres, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = pres.unit();
        return m;
    }

    const Presentation* pres() const { return pres_; }
    int dim() const { return n_; }
    NCPoly& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const NCPoly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    MatrixPoly& normalize() {
        for (auto& e : entries_) e = pres_->normalize(e);
        return *this;
    }

    friend MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b) {
        a.require_compatible(b);
        MatrixPoly r = a;
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
        return r;
    }
    friend MatrixPoly operator-(const MatrixPoly& a, const MatrixPoly& b) {
        a.require_compatible(b);
        MatrixPoly r = a;
        for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
        return r;
    }
    friend MatrixPoly operator*(const Scalar& s, const MatrixPoly& m) {
        MatrixPoly r = m;
        for (auto& e : r.entries_) e = s * e;
        return r;
    }
    friend bool operator==(const MatrixPoly& a, const MatrixPoly& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    NCPoly trace() const {
        NCPoly t = pres_->zero();
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    void require_compatible(const MatrixPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("MatrixPoly: dimension mismatch");
        if (pres_ != o.pres_)
            throw std::invalid_argument("MatrixPoly: mismatched presentations");
    }

  private:
    const Presentation* pres_;
    int n_;
    std::vector<NCPoly> entries_;  // row-major
};

inline MatrixPoly mat_mul(const MatrixPoly& a, const MatrixPoly& b) {
    a.require_compatible(b);
    const Presentation& pres = *a.pres();
    MatrixPoly r(&pres, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            NCPoly acc = pres.zero();
            for (int k = 0; k < a.dim(); ++k) acc += pres.mul(a.at(i, k), b.at(k, j));
            r.at(i, j) = acc;
        }
    return r;
}

inline MatrixPoly mat_adjoint(const MatrixPoly& a) {
    const Presentation& pres = *a.pres();
    MatrixPoly r(&pres, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = pres.star(a.at(j, i));
    return r;
}

// ---- the two projectors ------------------------------------------------

// 4x4 idempotent over the q,theta 4-sphere algebra; the theta phase
// enters through the formal unitary l.
inline MatrixPoly projector_e(const Presentation& pres) {
    const Scalar half(Rational(1) / 2);
    auto g = [&](const char* name) { return pres.gen(name); };
    NCPoly one = pres.unit();
    NCPoly alpha = g("alpha"), alphastar = g("alphastar"), beta = g("beta");
    NCPoly U = g("U"), Ustar = g("Ustar");
    MatrixPoly e(&pres, 4);
    e.at(0, 0) = half * (one + beta);
    e.at(0, 2) = half * U;
    e.at(0, 3) = half * alphastar;
    e.at(1, 1) = half * (one + Scalar::q(-1) * beta);
    e.at(1, 2) = half * alpha;
    e.at(1, 3) = -(half * Scalar::lam()) * Ustar;
    e.at(2, 0) = half * Ustar;
    e.at(2, 1) = half * alphastar;
    e.at(2, 2) = half * (one - beta);
    e.at(3, 0) = half * alpha;
    e.at(3, 1) = -(half * Scalar::lam(-1)) * U;
    e.at(3, 3) = half * (one - Scalar::q(-1) * beta);
    return e.normalize();
}

// 4x4 idempotent built from the adjoined central self-adjoint x with
// x^2 = Ustar.U; requires the x-extended presentation.
inline MatrixPoly projector_eprime(const Presentation& pres) {
    if (pres.find_gen("x") < 0)
        throw std::invalid_argument("projector_eprime: presentation has no generator x");
    const Scalar half(Rational(1) / 2);
    NCPoly one = pres.unit();
    NCPoly alpha = pres.gen("alpha"), alphastar = pres.gen("alphastar");
    NCPoly beta = pres.gen("beta"), x = pres.gen("x");
    MatrixPoly e(&pres, 4);
    e.at(0, 0) = half * (one + x);
    e.at(0, 2) = half * beta;
    e.at(0, 3) = half * alphastar;
    e.at(1, 1) = half * (one + x);
    e.at(1, 2) = half * alpha;
    e.at(1, 3) = -(half * Scalar::q(-1)) * beta;
    e.at(2, 0) = half * beta;
    e.at(2, 1) = half * alphastar;
    e.at(2, 2) = half * (one - x);
    e.at(3, 0) = half * alpha;
    e.at(3, 1) = -(half * Scalar::q(-1)) * beta;
    e.at(3, 3) = half * (one - x);
    return e.normalize();
}

struct IdempotentReport {
    MatrixPoly idem_residual;      // E^2 - E, normalized
    MatrixPoly selfadj_residual;   // E - E*, normalized
    NCPoly trace;
    bool idempotent() const { return idem_residual.is_zero(); }
    bool selfadjoint() const { return selfadj_residual.is_zero(); }
};

inline IdempotentReport idempotent_report(const MatrixPoly& E) {
    return IdempotentReport{mat_mul(E, E) - E, E - mat_adjoint(E), E.trace()};
}

// ---- chains in the reduced (b,B) complex --------------------------------

class Chain {
  public:
    Chain(const Presentation* pres, int degree) : pres_(pres), degree_(degree) {}

    const Presentation* pres() const { return pres_; }
    int degree() const { return degree_; }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds one tensor word; drops it when a position >= 1 holds the unit.
    void add_term(const std::vector<Word>& factors, const Scalar& c) {
        if (c.is_zero()) return;
        for (std::size_t i = 1; i < factors.size(); ++i)
            if (factors[i].empty()) return;
        auto it = terms_.find(factors);
        if (it == terms_.end()) {
            terms_.emplace(factors, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Multilinear expansion of a tensor of polynomials.
    void add_tensor(const std::vector<NCPoly>& factors, const Scalar& c) {
        std::vector<Word> current(factors.size());
        expand(factors, 0, c, current);
    }

    Chain& operator+=(const Chain& o) {
        if (degree_ != o.degree_) throw std::invalid_argument("Chain: degree mismatch");
        for (const auto& [f, c] : o.terms_) add_term(f, c);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator*(const Scalar& s, const Chain& ch) {
        Chain r(ch.pres_, ch.degree_);
        for (const auto& [f, c] : ch.terms_) r.add_term(f, s * c);
        return r;
    }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::int32_t lambda_degree_spread() const {
        std::int32_t spread = 0;
        for (const auto& [f, c] : terms_)
            spread = std::max(spread, c.lambda_degree_spread());
        return spread;
    }
    Chain substitute_q1() const {
        Chain r(pres_, degree_);
        for (const auto& [f, c] : terms_) r.add_term(f, c.substitute_q1());
        return r;
    }

  private:
    void expand(const std::vector<NCPoly>& factors, std::size_t pos, const Scalar& c,
                std::vector<Word>& current) {
        if (c.is_zero()) return;
        if (pos == factors.size()) {
            add_term(current, c);
            return;
        }
        for (const auto& [w, fc] : factors[pos].terms()) {
            if (pos >= 1 && w.empty()) continue;
            current[pos] = w;
            expand(factors, pos + 1, c * fc, current);
        }
    }

    const Presentation* pres_;
    int degree_;
    std::map<std::vector<Word>, Scalar> terms_;
};

inline std::size_t term_count(const Chain& c) { return c.terms().size(); }

// Trace map from matrix tensor chains to algebra chains: sum over index
// cycles i0,...,ik of (m0)_{i0 i1} (x) ... (x) (mk)_{ik i0}.
inline Chain dennis_trace(const std::vector<MatrixPoly>& factors) {
    if (factors.empty()) throw std::invalid_argument("dennis_trace: no factors");
    const int n = factors[0].dim();
    for (const auto& m : factors) factors[0].require_compatible(m);
    const int k = static_cast<int>(factors.size()) - 1;
    Chain out(factors[0].pres(), k);
    std::vector<int> idx(static_cast<std::size_t>(k) + 1, 0);
    std::vector<NCPoly> tensor(static_cast<std::size_t>(k) + 1);
    for (;;) {
        for (int j = 0; j <= k; ++j)
            tensor[static_cast<std::size_t>(j)] =
                factors[static_cast<std::size_t>(j)].at(idx[static_cast<std::size_t>(j)],
                                                        idx[static_cast<std::size_t>((j + 1) % (k + 1))]);
        out.add_tensor(tensor, Scalar::one());
        int j = k;
        while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == n) {
            idx[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

// ---- boundary operators -------------------------------------------------

// Hochschild boundary on the normalized complex.
inline Chain hochschild_b(const Chain& c) {
    if (c.degree() < 1) throw std::invalid_argument("hochschild_b: degree must be >= 1");
    const Presentation& pres = *c.pres();
    const int k = c.degree();
    Chain out(&pres, k - 1);
    for (const auto& [f, coeff] : c.terms()) {
        for (int i = 0; i < k; ++i) {
            Word joined = f[static_cast<std::size_t>(i)];
            joined.insert(joined.end(), f[static_cast<std::size_t>(i) + 1].begin(),
                          f[static_cast<std::size_t>(i) + 1].end());
            std::vector<NCPoly> tensor;
            tensor.reserve(static_cast<std::size_t>(k));
            for (int j = 0; j < i; ++j) tensor.push_back(pres.poly(f[static_cast<std::size_t>(j)]));
            tensor.push_back(pres.normalize(pres.poly(joined)));
            for (int j = i + 2; j <= k; ++j)
                tensor.push_back(pres.poly(f[static_cast<std::size_t>(j)]));
            out.add_tensor(tensor, i % 2 == 0 ? coeff : -coeff);
        }
        // cyclic last term: a_k a_0 in position 0
        Word joined = f[static_cast<std::size_t>(k)];
        joined.insert(joined.end(), f[0].begin(), f[0].end());
        std::vector<NCPoly> tensor;
        tensor.push_back(pres.normalize(pres.poly(joined)));
        for (int j = 1; j < k; ++j) tensor.push_back(pres.poly(f[static_cast<std::size_t>(j)]));
        out.add_tensor(tensor, k % 2 == 0 ? coeff : -coeff);
    }
    return out;
}

// Connes boundary on the normalized complex: signed cyclic permutations
// with a prepended unit.
inline Chain connes_B(const Chain& c) {
    const Presentation& pres = *c.pres();
    const int k = c.degree();
    Chain out(&pres, k + 1);
    for (const auto& [f, coeff] : c.terms()) {
        for (int i = 0; i <= k; ++i) {
            std::vector<Word> t;
            t.reserve(static_cast<std::size_t>(k) + 2);
            t.push_back(Word{});
            for (int j = 0; j <= k; ++j)
                t.push_back(f[static_cast<std::size_t>((i + j) % (k + 1))]);
            out.add_term(t, (k * i) % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

// ---- Chern character ----------------------------------------------------

// ch_0 = class of the trace with scalars dropped; ch_n for n >= 1 uses
// the Dennis trace of (E - I/2) (x) E^{(x)2n} with the documented
// constant (-1)^n (2n)!/n!.
inline Chain chern(const MatrixPoly& E, int n) {
    const Presentation& pres = *E.pres();
    if (n == 0) {
        Chain out(&pres, 0);
        NCPoly tr = E.trace();
        for (const auto& [w, c] : tr.terms())
            if (!w.empty()) out.add_term({w}, c);
        return out;
    }
    if (n > 2) throw std::invalid_argument("chern: only n <= 2 is supported");
    MatrixPoly F = E - (Scalar(Rational(1) / 2) * MatrixPoly::identity(pres, E.dim()));
    std::vector<MatrixPoly> factors;
    factors.push_back(F.normalize());
    for (int j = 0; j < 2 * n; ++j) factors.push_back(E);
    long cn = 1;
    for (long j = 1; j <= 2 * n; ++j) cn *= j;
    for (long j = 1; j <= n; ++j) cn /= j;
    if (n % 2 == 1) cn = -cn;
    return Scalar(cn) * dennis_trace(factors);
}

// ---- chain comparison ----------------------------------------------------

// Exact division in the Laurent coefficient ring; nullopt when b does
// not divide a.
inline std::optional<Scalar> scalar_divide(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Scalar::zero();
    Scalar rem = a, quot;
    const auto lead = [](const Scalar& s) { return *s.terms().rbegin(); };
    for (int guard = 0; guard < 10000 && !rem.is_zero(); ++guard) {
        auto [ea, ca] = lead(rem);
        auto [eb, cb] = lead(b);
        Scalar t = Scalar::monomial(ca / cb, ea.q - eb.q, ea.l - eb.l);
        quot += t;
        rem -= t * b;
        if (rem.term_count() > a.term_count() + b.term_count() + 16) return std::nullopt;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

struct ChainCompare {
    enum class Kind { Equal, Proportional, Different } kind;
    std::optional<Scalar> ratio;  // c1 = ratio * c2 when exactly divisible
    std::string ratio_text;
};

inline ChainCompare chain_compare(const Chain& c1, const Chain& c2) {
    if (c1.degree() != c2.degree())
        throw std::invalid_argument("chain_compare: degree mismatch");
    if (c1 == c2) return {ChainCompare::Kind::Equal, Scalar::one(), "1"};
    if (c1.is_zero() || c2.is_zero())
        return {ChainCompare::Kind::Different, std::nullopt, ""};
    if (c1.terms().size() != c2.terms().size())
        return {ChainCompare::Kind::Different, std::nullopt, ""};
    auto it1 = c1.terms().begin();
    auto it2 = c2.terms().begin();
    const Scalar r1 = it1->second, r2 = it2->second;
    for (; it1 != c1.terms().end(); ++it1, ++it2) {
        if (it1->first != it2->first)
            return {ChainCompare::Kind::Different, std::nullopt, ""};
        if (!(it1->second * r2 == it2->second * r1))
            return {ChainCompare::Kind::Different, std::nullopt, ""};
    }
    auto ratio = scalar_divide(r1, r2);
    std::string text =
        ratio ? ratio->to_string() : "(" + r1.to_string() + ") / (" + r2.to_string() + ")";
    return {ChainCompare::Kind::Proportional, ratio, text};
}

}  // namespace qsphere
