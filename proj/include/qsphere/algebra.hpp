// Free *-algebra over a generator alphabet and normalization to a
// canonical form modulo a presentation's oriented rewrite rules.
//
// A Presentation fixes the alphabet (listed in ascending precedence),
// a positive weight per generator (the graded termination order is
// "total weight, then length, then lex by precedence"), an ordered rule
// list LHS -> RHS with every RHS word strictly below the LHS, and the
// defining relations of the quotient algebra.  normalize() applies the
// leftmost matching rule until every word is irreducible; confluence is
// checked by confluence_probe, not assumed.

#pragma once

#include "qsphere/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qsphere {

struct Generator {
    std::string name;
    int adjoint = -1;  // index of the adjoint partner; own index if self-adjoint
};

// A word is a sequence of generator indices; the empty word is the unit.
using Word = std::vector<int>;

class Presentation;

class NCPoly {
  public:
    NCPoly() = default;
    explicit NCPoly(const Presentation* pres) : pres_(pres) {}

    const Presentation* pres() const { return pres_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        require_same_pres(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        require_same_pres(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    friend NCPoly operator*(const Scalar& s, const NCPoly& p) {
        NCPoly r(p.pres_);
        for (const auto& [w, c] : p.terms_) r.add_term(w, s * c);
        return r;
    }
    NCPoly operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Exact coefficient substitutions, applied termwise.
    NCPoly substitute_q1() const {
        NCPoly r(pres_);
        for (const auto& [w, c] : terms_) r.add_term(w, c.substitute_q1());
        return r;
    }
    NCPoly substitute_l1() const {
        NCPoly r(pres_);
        for (const auto& [w, c] : terms_) r.add_term(w, c.substitute_l1());
        return r;
    }

    std::int32_t lambda_degree_spread() const {
        std::int32_t spread = 0;
        for (const auto& [w, c] : terms_)
            spread = std::max(spread, c.lambda_degree_spread());
        return spread;
    }

  private:
    void require_same_pres(const NCPoly& o) const {
        if (pres_ && o.pres_ && pres_ != o.pres_)
            throw std::invalid_argument("NCPoly: mismatched presentations");
        if (!pres_) const_cast<NCPoly*>(this)->pres_ = o.pres_;
    }

    const Presentation* pres_ = nullptr;
    std::map<Word, Scalar> terms_;
};

struct Rule {
    Word lhs;                                       // length >= 2
    std::vector<std::pair<Word, Scalar>> rhs;       // expanded polynomial
};

class Presentation {
  public:
    static constexpr std::size_t kStepBudget = 1'000'000;

    const std::string& name() const { return name_; }
    const std::vector<Generator>& gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    const std::vector<Rule>& rules() const { return rules_; }
    int weight(int g) const { return weights_[static_cast<std::size_t>(g)]; }

    int find_gen(const std::string& name) const {
        for (int i = 0; i < num_gens(); ++i)
            if (gens_[static_cast<std::size_t>(i)].name == name) return i;
        return -1;
    }
    int gen_index(const std::string& name) const {
        int i = find_gen(name);
        if (i < 0)
            throw std::invalid_argument("presentation " + name_ +
                                        ": unknown generator '" + name + "'");
        return i;
    }
    int adjoint_of(int g) const { return gens_[static_cast<std::size_t>(g)].adjoint; }

    long word_weight(const Word& w) const {
        long t = 0;
        for (int g : w) t += weight(g);
        return t;
    }

    // Graded termination order: weight, then length, then lex by index.
    bool word_less(const Word& a, const Word& b) const {
        long wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    // ---- element constructors -------------------------------------

    NCPoly zero() const { return NCPoly(this); }
    NCPoly unit() const { return poly(Word{}, Scalar::one()); }
    NCPoly poly(const Word& w, const Scalar& c = Scalar::one()) const {
        NCPoly p(this);
        p.add_term(w, c);
        return p;
    }
    NCPoly gen(int g) const { return poly(Word{g}); }
    NCPoly gen(const std::string& name) const { return gen(gen_index(name)); }
    Word word(std::initializer_list<const char*> names) const {
        Word w;
        for (const char* n : names) w.push_back(gen_index(n));
        return w;
    }

    std::vector<NCPoly> relations() const {
        std::vector<NCPoly> out;
        out.reserve(relations_.size());
        for (const auto& rel : relations_) {
            NCPoly p(this);
            for (const auto& [w, c] : rel) p.add_term(w, c);
            out.push_back(std::move(p));
        }
        return out;
    }

    // ---- normal form ------------------------------------------------

    NCPoly normalize(const NCPoly& p) const {
        if (p.pres() && p.pres() != this)
            throw std::invalid_argument("normalize: polynomial from another presentation");
        NCPoly out(this);
        std::vector<std::pair<Word, Scalar>> work(p.terms().begin(), p.terms().end());
        std::size_t steps = 0;
        while (!work.empty()) {
            auto [w, c] = std::move(work.back());
            work.pop_back();
            if (c.is_zero()) continue;
            auto m = find_match(w);
            if (!m) {
                out.add_term(w, c);
                continue;
            }
            if (++steps > kStepBudget)
                throw std::runtime_error("normalize: step budget exceeded (bad rule set?)");
            const auto& [pos, rule_idx] = *m;
            const Rule& rule = rules_[rule_idx];
            for (const auto& [rw, rc] : rule.rhs) {
                Word nw;
                nw.reserve(w.size() - rule.lhs.size() + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + static_cast<long>(pos + rule.lhs.size()),
                          w.end());
                work.emplace_back(std::move(nw), c * rc);
            }
        }
        return out;
    }

    NCPoly mul(const NCPoly& a, const NCPoly& b) const {
        NCPoly prod(this);
        for (const auto& [wa, ca] : a.terms()) {
            for (const auto& [wb, cb] : b.terms()) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                prod.add_term(w, ca * cb);
            }
        }
        return normalize(prod);
    }

    // Reverses each word, swaps adjoint partners, conjugates coefficients.
    NCPoly star_raw(const NCPoly& p) const {
        NCPoly r(this);
        for (const auto& [w, c] : p.terms()) {
            Word sw(w.rbegin(), w.rend());
            for (int& g : sw) g = adjoint_of(g);
            r.add_term(sw, c.conj());
        }
        return r;
    }
    NCPoly star(const NCPoly& p) const { return normalize(star_raw(p)); }

    // ---- canonical text ---------------------------------------------

    std::string word_str(const Word& w) const {
        if (w.empty()) return "1";
        std::ostringstream os;
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (i > 0) os << ".";
            os << gens_[static_cast<std::size_t>(w[i])].name;
            if (j - i > 1) os << "^" << (j - i);
            i = j;
        }
        return os.str();
    }

    // Terms sorted by (length, lex) ascending; "coeff * word" per term.
    std::string poly_str(const NCPoly& p) const {
        if (p.is_zero()) return "0";
        std::vector<const std::pair<const Word, Scalar>*> ts;
        for (const auto& t : p.terms()) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
            if (a->first.size() != b->first.size())
                return a->first.size() < b->first.size();
            return a->first < b->first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : ts) {
            const Word& w = t->first;
            Scalar c = t->second;
            bool neg = false;
            if (c.term_count() == 1) {
                // pull the sign of a single-term coefficient into the join
                const auto& [e, r] = *c.terms().begin();
                if (r < 0) {
                    neg = true;
                    c = -c;
                }
            }
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string cs = c.to_string();
            if (w.empty()) {
                os << (c.term_count() > 1 ? "(" + cs + ")" : cs);
            } else if (c.is_one()) {
                os << word_str(w);
            } else if (c.term_count() > 1) {
                os << "(" << cs << ") * " << word_str(w);
            } else {
                os << cs << " * " << word_str(w);
            }
        }
        return os.str();
    }

    // ---- consistency ------------------------------------------------

    // normalize() applied to every defining relation; all-zero means the
    // rules orient the relations consistently.
    std::vector<NCPoly> relation_residuals() const {
        std::vector<NCPoly> out;
        for (const auto& r : relations()) out.push_back(normalize(r));
        return out;
    }

    // Throws if the termination order, the relations, or the starred
    // rules are inconsistent with the rule set.
    void validate() const {
        for (const auto& g : gens_) {
            if (g.adjoint < 0 || g.adjoint >= num_gens() ||
                gens_[static_cast<std::size_t>(g.adjoint)].adjoint !=
                    find_gen(g.name))
                throw std::invalid_argument("presentation " + name_ +
                                            ": adjoint pairing is not an involution");
        }
        for (const auto& rule : rules_) {
            if (rule.lhs.size() < 2)
                throw std::invalid_argument("presentation " + name_ +
                                            ": rule LHS shorter than 2");
            for (const auto& [rw, rc] : rule.rhs) {
                if (!word_less(rw, rule.lhs))
                    throw std::invalid_argument(
                        "presentation " + name_ + ": rule " + word_str(rule.lhs) +
                        " does not decrease on " + word_str(rw));
            }
        }
        for (const auto& r : relation_residuals()) {
            if (!r.is_zero())
                throw std::invalid_argument("presentation " + name_ +
                                            ": relation residual " + poly_str(r));
        }
        for (const auto& rule : rules_) {
            NCPoly diff = poly(rule.lhs);
            for (const auto& [rw, rc] : rule.rhs) diff.add_term(rw, -rc);
            NCPoly starred = normalize(star_raw(diff));
            if (!starred.is_zero())
                throw std::invalid_argument("presentation " + name_ + ": star of rule " +
                                            word_str(rule.lhs) + " is not derivable: " +
                                            poly_str(starred));
        }
    }

  private:
    friend class PresentationBuilder;

    std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w) const {
        if (w.size() < 2) return std::nullopt;
        for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
            const auto& cand = rules_by_first_[static_cast<std::size_t>(w[pos])];
            for (std::size_t ri : cand) {
                const Word& lhs = rules_[ri].lhs;
                if (pos + lhs.size() > w.size()) continue;
                if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos)))
                    return std::make_pair(pos, ri);
            }
        }
        return std::nullopt;
    }

    void reindex() {
        rules_by_first_.assign(gens_.size(), {});
        for (std::size_t i = 0; i < rules_.size(); ++i)
            rules_by_first_[static_cast<std::size_t>(rules_[i].lhs[0])].push_back(i);
    }

    std::string name_;
    std::vector<Generator> gens_;   // ascending precedence
    std::vector<int> weights_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::pair<Word, Scalar>>> relations_;
    std::vector<std::vector<std::size_t>> rules_by_first_;
};

class PresentationBuilder {
  public:
    explicit PresentationBuilder(std::string name) { p_.name_ = std::move(name); }

    // Generators are added in ascending precedence order.
    PresentationBuilder& self_adjoint_gen(const std::string& name, int weight) {
        int idx = static_cast<int>(p_.gens_.size());
        p_.gens_.push_back({name, idx});
        p_.weights_.push_back(weight);
        return *this;
    }
    // Adds `lower` then `upper` as an adjoint pair (lower precedence first).
    PresentationBuilder& adjoint_pair(const std::string& lower, const std::string& upper,
                                      int weight) {
        int i = static_cast<int>(p_.gens_.size());
        p_.gens_.push_back({lower, i + 1});
        p_.gens_.push_back({upper, i});
        p_.weights_.push_back(weight);
        p_.weights_.push_back(weight);
        return *this;
    }

    using TermList = std::vector<std::pair<Scalar, std::vector<std::string>>>;

    PresentationBuilder& rule(const std::vector<std::string>& lhs, const TermList& rhs) {
        Rule r;
        for (const auto& n : lhs) r.lhs.push_back(p_.gen_index(n));
        for (const auto& [c, ws] : rhs) {
            Word w;
            for (const auto& n : ws) w.push_back(p_.gen_index(n));
            r.rhs.emplace_back(std::move(w), c);
        }
        p_.rules_.push_back(std::move(r));
        return *this;
    }

    PresentationBuilder& relation(const TermList& terms) {
        std::vector<std::pair<Word, Scalar>> rel;
        for (const auto& [c, ws] : terms) {
            Word w;
            for (const auto& n : ws) w.push_back(p_.gen_index(n));
            rel.emplace_back(std::move(w), c);
        }
        p_.relations_.push_back(std::move(rel));
        return *this;
    }

    std::shared_ptr<const Presentation> build(bool validate = true) {
        auto sp = std::make_shared<Presentation>(std::move(p_));
        sp->reindex();
        if (validate) sp->validate();
        return sp;
    }

  private:
    Presentation p_;
};

// ---- confluence probe ---------------------------------------------------

struct ProbeReport {
    int trials = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;  // capped at 10
    bool pass() const { return failures == 0; }
};

// Random-word probe for well-definedness of the normal form:
// associativity of the normalized product, involutivity of star, and
// the anti-homomorphism property of star.
inline ProbeReport confluence_probe(const Presentation& pres, int trials,
                                    std::uint64_t seed, int max_degree) {
    if (trials < 1) throw std::invalid_argument("confluence_probe: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(0, max_degree);
    std::uniform_int_distribution<int> gen_dist(0, pres.num_gens() - 1);
    auto random_word = [&] {
        Word w(static_cast<std::size_t>(len_dist(rng)));
        for (int& g : w) g = gen_dist(rng);
        return w;
    };
    ProbeReport rep;
    rep.trials = trials;
    auto fail = [&](const std::string& what, const Word& x, const Word& y, const Word& z) {
        ++rep.failures;
        if (rep.counterexamples.size() < 10)
            rep.counterexamples.push_back(what + ": x=" + pres.word_str(x) +
                                          " y=" + pres.word_str(y) +
                                          " z=" + pres.word_str(z));
    };
    for (int t = 0; t < trials; ++t) {
        Word wx = random_word(), wy = random_word(), wz = random_word();
        NCPoly x = pres.poly(wx), y = pres.poly(wy), z = pres.poly(wz);
        if (pres.mul(pres.mul(x, y), z) != pres.mul(x, pres.mul(y, z)))
            fail("associativity", wx, wy, wz);
        if (pres.star(pres.star(x)) != pres.normalize(x))
            fail("star involution", wx, wy, wz);
        if (pres.star(pres.mul(x, y)) != pres.mul(pres.star(y), pres.star(x)))
            fail("star anti-homomorphism", wx, wy, wz);
    }
    return rep;
}

}  // namespace qsphere
