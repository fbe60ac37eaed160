// Built-in presentations for the quantum 2-sphere, the two-parameter
// 4-spheres (plain and with the adjoined central square root x of U*U),
// the theta-deformed 3-sphere, the suspension of the 2-sphere and its
// crossed product by Z, plus homomorphism / character / centrality
// verification.
//
// Normal-form conventions (documented; the term counts reported by the
// chern module are taken in these bases):
//   S2Q     words (astar)^i a^j b^k with at most one of i, j nonzero past
//           the sphere reductions astar.a -> 1 - b^2, a.astar -> 1 - q^-2 b^2
//   S4QT    words (alphastar)^i alpha^j beta^k followed by U^m or Ustar^n
//   S4QT_X  optional leading x, then as S4QT
//   S3T     words (alphastar)^i alpha^j followed by beta^m or betastar^n
//   SUSP    leading t^k, then (astar)^i a^j b^l as in S2Q
//   CROSS   leading t^k, S2Q part, trailing V^m or Vstar^n

#pragma once

#include "qsphere/algebra.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>

namespace qsphere {

enum class Preset { S2Q, S4QT, S4QT_X, S3T, SUSP, CROSS };

namespace detail {

inline Scalar Q(int k = 1) { return Scalar::q(k); }
inline Scalar L(int k = 1) { return Scalar::lam(k); }
inline Scalar C(long n) { return Scalar(n); }

inline std::shared_ptr<const Presentation> build_s2q() {
    PresentationBuilder b("S2Q");
    b.adjoint_pair("astar", "a", 3).self_adjoint_gen("b", 2);
    b.rule({"b", "a"}, {{Q(1), {"a", "b"}}})
        .rule({"b", "astar"}, {{Q(-1), {"astar", "b"}}})
        .rule({"a", "astar"}, {{C(1), {}}, {-Q(-2), {"b", "b"}}})
        .rule({"astar", "a"}, {{C(1), {}}, {C(-1), {"b", "b"}}});
    b.relation({{C(1), {"b", "a"}}, {-Q(1), {"a", "b"}}})
        .relation({{C(1), {"astar", "b"}}, {-Q(1), {"b", "astar"}}})
        .relation({{C(1), {"astar", "a"}}, {C(1), {"b", "b"}}, {C(-1), {}}})
        .relation({{C(1), {"a", "astar"}}, {Q(-2), {"b", "b"}}, {C(-1), {}}});
    return b.build();
}

inline void add_s4qt_core(PresentationBuilder& b) {
    b.adjoint_pair("alphastar", "alpha", 3)
        .self_adjoint_gen("beta", 2)
        .adjoint_pair("Ustar", "U", 3);
    b.rule({"beta", "alpha"}, {{Q(1), {"alpha", "beta"}}})
        .rule({"beta", "alphastar"}, {{Q(-1), {"alphastar", "beta"}}})
        .rule({"alpha", "alphastar"},
              {{C(1), {"alphastar", "alpha"}}, {C(1) - Q(-2), {"beta", "beta"}}})
        .rule({"U", "alpha"}, {{L(1), {"alpha", "U"}}})
        .rule({"U", "alphastar"}, {{L(-1), {"alphastar", "U"}}})
        .rule({"U", "beta"}, {{C(1), {"beta", "U"}}})
        .rule({"Ustar", "alpha"}, {{L(-1), {"alpha", "Ustar"}}})
        .rule({"Ustar", "alphastar"}, {{L(1), {"alphastar", "Ustar"}}})
        .rule({"Ustar", "beta"}, {{C(1), {"beta", "Ustar"}}})
        .rule({"U", "Ustar"}, {{C(1), {"Ustar", "U"}}})
        .rule({"Ustar", "U"},
              {{C(1), {}}, {C(-1), {"alphastar", "alpha"}}, {C(-1), {"beta", "beta"}}});
    b.relation({{C(1), {"beta", "alpha"}}, {-Q(1), {"alpha", "beta"}}})
        .relation({{C(1), {"alphastar", "beta"}}, {-Q(1), {"beta", "alphastar"}}})
        .relation({{C(1), {"alphastar", "alpha"}}, {C(1), {"beta", "beta"}},
                   {C(1), {"Ustar", "U"}}, {C(-1), {}}})
        .relation({{C(1), {"alpha", "alphastar"}}, {Q(-2), {"beta", "beta"}},
                   {C(1), {"Ustar", "U"}}, {C(-1), {}}})
        .relation({{C(1), {"U", "alpha"}}, {-L(1), {"alpha", "U"}}})
        .relation({{C(1), {"U", "alphastar"}}, {-L(-1), {"alphastar", "U"}}})
        .relation({{C(1), {"U", "beta"}}, {C(-1), {"beta", "U"}}})
        .relation({{C(1), {"Ustar", "U"}}, {C(-1), {"U", "Ustar"}}});
}

inline std::shared_ptr<const Presentation> build_s4qt() {
    PresentationBuilder b("S4QT");
    add_s4qt_core(b);
    return b.build();
}

inline std::shared_ptr<const Presentation> build_s4qt_x() {
    PresentationBuilder b("S4QT_X");
    b.self_adjoint_gen("x", 4);
    add_s4qt_core(b);
    for (const char* g : {"alphastar", "alpha", "beta", "Ustar", "U"}) {
        b.rule({g, "x"}, {{C(1), {"x", g}}});
        b.relation({{C(1), {g, "x"}}, {C(-1), {"x", g}}});
    }
    b.rule({"x", "x"},
           {{C(1), {}}, {C(-1), {"alphastar", "alpha"}}, {C(-1), {"beta", "beta"}}});
    b.relation({{C(1), {"x", "x"}}, {C(-1), {"Ustar", "U"}}});
    return b.build();
}

inline std::shared_ptr<const Presentation> build_s3t() {
    PresentationBuilder b("S3T");
    b.adjoint_pair("alphastar", "alpha", 3).adjoint_pair("betastar", "beta", 3);
    b.rule({"alpha", "alphastar"}, {{C(1), {"alphastar", "alpha"}}})
        .rule({"beta", "alpha"}, {{L(1), {"alpha", "beta"}}})
        .rule({"beta", "alphastar"}, {{L(-1), {"alphastar", "beta"}}})
        .rule({"betastar", "alpha"}, {{L(-1), {"alpha", "betastar"}}})
        .rule({"betastar", "alphastar"}, {{L(1), {"alphastar", "betastar"}}})
        .rule({"beta", "betastar"}, {{C(1), {}}, {C(-1), {"alphastar", "alpha"}}})
        .rule({"betastar", "beta"}, {{C(1), {}}, {C(-1), {"alphastar", "alpha"}}});
    b.relation({{C(1), {"alpha", "alphastar"}}, {C(-1), {"alphastar", "alpha"}}})
        .relation({{C(1), {"beta", "betastar"}}, {C(-1), {"betastar", "beta"}}})
        .relation({{C(1), {"beta", "alpha"}}, {-L(1), {"alpha", "beta"}}})
        .relation({{C(1), {"beta", "alphastar"}}, {-L(-1), {"alphastar", "beta"}}})
        .relation({{C(1), {"alphastar", "alpha"}}, {C(1), {"betastar", "beta"}},
                   {C(-1), {}}});
    return b.build();
}

inline void add_susp_core(PresentationBuilder& b) {
    b.self_adjoint_gen("t", 2).adjoint_pair("astar", "a", 3).self_adjoint_gen("b", 2);
    b.rule({"astar", "t"}, {{C(1), {"t", "astar"}}})
        .rule({"a", "t"}, {{C(1), {"t", "a"}}})
        .rule({"b", "t"}, {{C(1), {"t", "b"}}})
        .rule({"b", "a"}, {{Q(1), {"a", "b"}}})
        .rule({"b", "astar"}, {{Q(-1), {"astar", "b"}}})
        .rule({"astar", "a"}, {{C(1), {}}, {C(-1), {"b", "b"}}, {C(-1), {"t", "t"}}})
        .rule({"a", "astar"}, {{C(1), {}}, {-Q(-2), {"b", "b"}}, {C(-1), {"t", "t"}}});
    b.relation({{C(1), {"b", "a"}}, {-Q(1), {"a", "b"}}})
        .relation({{C(1), {"astar", "b"}}, {-Q(1), {"b", "astar"}}})
        .relation({{C(1), {"astar", "a"}}, {C(1), {"b", "b"}}, {C(1), {"t", "t"}},
                   {C(-1), {}}})
        .relation({{C(1), {"a", "astar"}}, {Q(-2), {"b", "b"}}, {C(1), {"t", "t"}},
                   {C(-1), {}}})
        .relation({{C(1), {"a", "t"}}, {C(-1), {"t", "a"}}})
        .relation({{C(1), {"astar", "t"}}, {C(-1), {"t", "astar"}}})
        .relation({{C(1), {"b", "t"}}, {C(-1), {"t", "b"}}});
}

inline std::shared_ptr<const Presentation> build_susp() {
    PresentationBuilder b("SUSP");
    add_susp_core(b);
    return b.build();
}

inline std::shared_ptr<const Presentation> build_cross() {
    // gen order matches SUSP with the V pair appended, so the inclusion
    // morphism is the identity on names
    PresentationBuilder c("CROSS");
    c.self_adjoint_gen("t", 2).adjoint_pair("astar", "a", 3).self_adjoint_gen("b", 2);
    c.adjoint_pair("Vstar", "V", 3);
    c.rule({"astar", "t"}, {{C(1), {"t", "astar"}}})
        .rule({"a", "t"}, {{C(1), {"t", "a"}}})
        .rule({"b", "t"}, {{C(1), {"t", "b"}}})
        .rule({"b", "a"}, {{Q(1), {"a", "b"}}})
        .rule({"b", "astar"}, {{Q(-1), {"astar", "b"}}})
        .rule({"astar", "a"}, {{C(1), {}}, {C(-1), {"b", "b"}}, {C(-1), {"t", "t"}}})
        .rule({"a", "astar"}, {{C(1), {}}, {-Q(-2), {"b", "b"}}, {C(-1), {"t", "t"}}})
        .rule({"V", "t"}, {{C(1), {"t", "V"}}})
        .rule({"Vstar", "t"}, {{C(1), {"t", "Vstar"}}})
        .rule({"V", "a"}, {{L(1), {"a", "V"}}})
        .rule({"V", "astar"}, {{L(-1), {"astar", "V"}}})
        .rule({"V", "b"}, {{C(1), {"b", "V"}}})
        .rule({"Vstar", "a"}, {{L(-1), {"a", "Vstar"}}})
        .rule({"Vstar", "astar"}, {{L(1), {"astar", "Vstar"}}})
        .rule({"Vstar", "b"}, {{C(1), {"b", "Vstar"}}})
        .rule({"V", "Vstar"}, {{C(1), {}}})
        .rule({"Vstar", "V"}, {{C(1), {}}});
    c.relation({{C(1), {"b", "a"}}, {-Q(1), {"a", "b"}}})
        .relation({{C(1), {"astar", "b"}}, {-Q(1), {"b", "astar"}}})
        .relation({{C(1), {"astar", "a"}}, {C(1), {"b", "b"}}, {C(1), {"t", "t"}},
                   {C(-1), {}}})
        .relation({{C(1), {"a", "astar"}}, {Q(-2), {"b", "b"}}, {C(1), {"t", "t"}},
                   {C(-1), {}}})
        .relation({{C(1), {"a", "t"}}, {C(-1), {"t", "a"}}})
        .relation({{C(1), {"b", "t"}}, {C(-1), {"t", "b"}}})
        .relation({{C(1), {"V", "Vstar"}}, {C(-1), {}}})
        .relation({{C(1), {"Vstar", "V"}}, {C(-1), {}}})
        .relation({{C(1), {"V", "a"}}, {-L(1), {"a", "V"}}})
        .relation({{C(1), {"V", "astar"}}, {-L(-1), {"astar", "V"}}})
        .relation({{C(1), {"V", "b"}}, {C(-1), {"b", "V"}}})
        .relation({{C(1), {"V", "t"}}, {C(-1), {"t", "V"}}});
    return c.build();
}

}  // namespace detail

inline const Presentation& preset(Preset which) {
    switch (which) {
        case Preset::S2Q: {
            static const auto p = detail::build_s2q();
            return *p;
        }
        case Preset::S4QT: {
            static const auto p = detail::build_s4qt();
            return *p;
        }
        case Preset::S4QT_X: {
            static const auto p = detail::build_s4qt_x();
            return *p;
        }
        case Preset::S3T: {
            static const auto p = detail::build_s3t();
            return *p;
        }
        case Preset::SUSP: {
            static const auto p = detail::build_susp();
            return *p;
        }
        case Preset::CROSS: {
            static const auto p = detail::build_cross();
            return *p;
        }
    }
    throw std::invalid_argument("unknown preset");
}

inline const Presentation& preset(const std::string& name) {
    std::string n;
    for (char ch : name) n.push_back(static_cast<char>(std::tolower(ch)));
    if (n == "s2q") return preset(Preset::S2Q);
    if (n == "s4qt") return preset(Preset::S4QT);
    if (n == "s4qt_x" || n == "s4qtx") return preset(Preset::S4QT_X);
    if (n == "s3t") return preset(Preset::S3T);
    if (n == "susp") return preset(Preset::SUSP);
    if (n == "cross") return preset(Preset::CROSS);
    throw std::invalid_argument("unknown preset '" + name + "'");
}

inline std::vector<NCPoly> check_relations(const Presentation& pres) {
    return pres.relation_residuals();
}

// ---- *-morphism checking --------------------------------------------

struct MorphismSpec {
    const Presentation* source = nullptr;
    const Presentation* target = nullptr;
    std::map<int, NCPoly> images;  // source generator index -> target element
};

// Builds a spec from images given by generator name.  Missing adjoint
// images are filled in as the star of the partner's image; explicitly
// given ones must respect adjoints.
inline MorphismSpec make_morphism(const Presentation& source, const Presentation& target,
                                  const std::map<std::string, NCPoly>& by_name) {
    MorphismSpec m{&source, &target, {}};
    for (const auto& [name, img] : by_name) m.images[source.gen_index(name)] = img;
    for (int g = 0; g < source.num_gens(); ++g) {
        int gs = source.adjoint_of(g);
        auto it = m.images.find(g);
        if (it == m.images.end()) continue;
        auto star_img = target.star(it->second);
        auto jt = m.images.find(gs);
        if (jt == m.images.end()) {
            m.images[gs] = star_img;
        } else if (target.normalize(jt->second) != star_img) {
            throw std::invalid_argument("morphism: image of " + source.gens()[gs].name +
                                        " does not respect adjoints");
        }
    }
    return m;
}

inline NCPoly apply_morphism(const MorphismSpec& m, const NCPoly& p) {
    for (int g = 0; g < m.source->num_gens(); ++g)
        if (!m.images.count(g))
            throw std::invalid_argument("morphism: no image for generator " +
                                        m.source->gens()[static_cast<std::size_t>(g)].name);
    NCPoly out = m.target->zero();
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = m.target->unit();
        for (int g : w) prod = m.target->mul(prod, m.images.at(g));
        out += c * prod;
    }
    return m.target->normalize(out);
}

// Image of each defining relation of the source, normalized in the
// target; all zero means the images extend to a *-homomorphism.
inline std::vector<NCPoly> check_morphism(const MorphismSpec& m) {
    std::vector<NCPoly> out;
    for (const auto& r : m.source->relations()) out.push_back(apply_morphism(m, r));
    return out;
}

// ---- characters -------------------------------------------------------

// Evaluates every defining relation at the given scalar values
// (one-dimensional representation candidate).  Returns |residual| per
// relation.  Values must respect adjoints.
inline std::vector<double> check_character(const Presentation& pres,
                                           const std::map<int, std::complex<double>>& values,
                                           double q_val, double theta_val) {
    for (int g = 0; g < pres.num_gens(); ++g) {
        auto it = values.find(g);
        if (it == values.end())
            throw std::invalid_argument("character: no value for generator " +
                                        pres.gens()[static_cast<std::size_t>(g)].name);
        auto jt = values.find(pres.adjoint_of(g));
        if (jt == values.end() ||
            std::abs(jt->second - std::conj(it->second)) > 1e-9)
            throw std::invalid_argument("character: values do not respect adjoints for " +
                                        pres.gens()[static_cast<std::size_t>(g)].name);
    }
    std::vector<double> out;
    for (const auto& r : pres.relations()) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [w, c] : r.terms()) {
            std::complex<double> v = c.specialize(q_val, theta_val);
            for (int g : w) v *= values.at(g);
            acc += v;
        }
        out.push_back(std::abs(acc));
    }
    return out;
}

inline std::vector<double> check_character(const Presentation& pres,
                                           const std::map<std::string, std::complex<double>>& values,
                                           double q_val, double theta_val) {
    std::map<int, std::complex<double>> by_idx;
    for (const auto& [name, v] : values) by_idx[pres.gen_index(name)] = v;
    return check_character(pres, by_idx, q_val, theta_val);
}

// ---- centrality -------------------------------------------------------

// normalize(p*g - g*p) for every generator g.
inline std::vector<NCPoly> centrality_check(const Presentation& pres, const NCPoly& p) {
    std::vector<NCPoly> out;
    for (int g = 0; g < pres.num_gens(); ++g) {
        NCPoly gp = pres.gen(g);
        out.push_back(pres.mul(p, gp) - pres.mul(gp, p));
    }
    return out;
}

}  // namespace qsphere
