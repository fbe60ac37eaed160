// JSON serialization: chains, presentations, morphism specs, numeric
// reports.  All floats are printed with 17 significant digits so that
// identical parameter sets give byte-identical output.

#pragma once

#include "qsphere/chern.hpp"
#include "qsphere/numrep.hpp"
#include "qsphere/presets.hpp"
#include "qsphere/text.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <string>

namespace qsphere {

using json = nlohmann::ordered_json;

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---- words and chains -----------------------------------------------------

// Parses a canonical word text: generator names joined by '.', with
// optional positive '^' powers; "1" is the empty word.
inline Word parse_word(const Presentation& pres, const std::string& text) {
    NCPoly p = parse_poly(pres, text);
    if (p.term_count() != 1)
        throw std::invalid_argument("parse_word: not a single word: " + text);
    const auto& [w, c] = *p.terms().begin();
    if (!c.is_one())
        throw std::invalid_argument("parse_word: nontrivial coefficient in: " + text);
    return w;
}

inline json chain_to_json(const Chain& c) {
    json terms = json::array();
    for (const auto& [factors, coeff] : c.terms()) {
        json fs = json::array();
        for (const auto& w : factors) fs.push_back(c.pres()->word_str(w));
        terms.push_back({{"coeff", coeff.to_string()}, {"factors", fs}});
    }
    return {{"degree", c.degree()}, {"terms", terms}};
}

inline Chain chain_from_json(const Presentation& pres, const json& j) {
    Chain c(&pres, j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<Word> factors;
        for (const auto& f : t.at("factors"))
            factors.push_back(parse_word(pres, f.get<std::string>()));
        c.add_term(factors, Scalar::parse(t.at("coeff").get<std::string>()));
    }
    return c;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// ---- presentations ---------------------------------------------------------

inline json presentation_to_json(const Presentation& pres) {
    json gens = json::array();
    for (int g = 0; g < pres.num_gens(); ++g) {
        const auto& gen = pres.gens()[static_cast<std::size_t>(g)];
        gens.push_back({{"name", gen.name},
                        {"adjoint", pres.gens()[static_cast<std::size_t>(gen.adjoint)].name},
                        {"selfadjoint", gen.adjoint == g},
                        {"weight", pres.weight(g)}});
    }
    auto name_list = [&](const Word& w) {
        json a = json::array();
        for (int g : w) a.push_back(pres.gens()[static_cast<std::size_t>(g)].name);
        return a;
    };
    auto poly_terms = [&](const std::vector<std::pair<Word, Scalar>>& ts) {
        json a = json::array();
        for (const auto& [w, c] : ts)
            a.push_back({{"coeff", c.to_string()}, {"word", name_list(w)}});
        return a;
    };
    json rules = json::array();
    for (const auto& r : pres.rules())
        rules.push_back({{"lhs", name_list(r.lhs)}, {"rhs", poly_terms(r.rhs)}});
    json rels = json::array();
    for (const auto& r : pres.relations()) {
        std::vector<std::pair<Word, Scalar>> ts(r.terms().begin(), r.terms().end());
        rels.push_back(poly_terms(ts));
    }
    return {{"name", pres.name()},
            {"generators", gens},
            {"rules", rules},
            {"relations", rels}};
}

inline std::shared_ptr<const Presentation> presentation_from_json(const json& j,
                                                                  bool validate = true) {
    PresentationBuilder b(j.at("name").get<std::string>());
    // adjoint pairs must be declared lower-then-upper and adjacent
    const auto& gens = j.at("generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        std::string name = g.at("name").get<std::string>();
        if (g.at("selfadjoint").get<bool>()) {
            b.self_adjoint_gen(name, g.value("weight", 1));
        } else {
            std::string adj = g.at("adjoint").get<std::string>();
            if (i + 1 >= gens.size() || gens[i + 1].at("name") != adj)
                throw std::invalid_argument(
                    "presentation_from_json: adjoint pair must be adjacent: " + name);
            b.adjoint_pair(name, adj, g.value("weight", 1));
            ++i;
        }
    }
    auto term_list = [](const json& a) {
        PresentationBuilder::TermList ts;
        for (const auto& t : a) {
            std::vector<std::string> w;
            for (const auto& n : t.at("word")) w.push_back(n.get<std::string>());
            ts.emplace_back(Scalar::parse(t.at("coeff").get<std::string>()), std::move(w));
        }
        return ts;
    };
    for (const auto& r : j.at("rules")) {
        std::vector<std::string> lhs;
        for (const auto& n : r.at("lhs")) lhs.push_back(n.get<std::string>());
        b.rule(lhs, term_list(r.at("rhs")));
    }
    for (const auto& r : j.at("relations")) b.relation(term_list(r));
    return b.build(validate);
}

// Morphism spec file: {"source": preset, "target": preset,
// "images": {generator: expression}}.  Adjoint images may be omitted.
inline MorphismSpec morphism_from_json(const json& j) {
    const Presentation& src = preset(j.at("source").get<std::string>());
    const Presentation& tgt = preset(j.at("target").get<std::string>());
    std::map<std::string, NCPoly> images;
    for (const auto& [name, expr] : j.at("images").items())
        images.emplace(name, parse_poly(tgt, expr.get<std::string>()));
    return make_morphism(src, tgt, images);
}

// ---- reports ----------------------------------------------------------------

inline json probe_to_json(const ProbeReport& r) {
    return {{"trials", r.trials},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples},
            {"pass", r.pass()}};
}

inline json residuals_to_json(const std::vector<RelationResidual>& rs, int margin) {
    json out = json::array();
    for (const auto& r : rs)
        out.push_back({{"relation", r.relation},
                       {"margin", margin},
                       {"residual_norm", fmt_double(r.residual)}});
    return out;
}

inline json spectrum_to_json(const SpectrumReport& r) {
    json ritz = json::array();
    for (double v : r.ritz_values) ritz.push_back(fmt_double(v));
    return {{"max_distance_to_01", fmt_double(r.max_distance_to_01)},
            {"selfadjoint_defect", fmt_double(r.selfadjoint_defect)},
            {"interior_idem_residual", fmt_double(r.interior_idem_residual)},
            {"full_dim", r.full_dim},
            {"interior_dim", r.interior_dim},
            {"eigenvalue_histogram",
             {{"near_zero", r.near_zero_count}, {"near_one", r.near_one_count}}},
            {"ritz_values", ritz}};
}

}  // namespace qsphere
