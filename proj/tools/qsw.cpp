// qsw: command-line front end for the quantum-sphere workbench.
//
// Subcommands: normalize, check (relations|morphism|character|center|
// confluence), chern, rep.  All reports go to stdout as JSON (or to
// --out).  Exit codes: 0 = all checks pass, 1 = a check failed,
// 2 = usage or parse error.

#include "qsphere/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

using namespace qsphere;

namespace {

int emit(const json& report, const std::string& out_path, bool pass) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file " + out_path);
        f << report.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

// "name=re" or "name=re,im"
std::pair<std::string, std::complex<double>> parse_assignment(const std::string& s) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("expected name=value: " + s);
    std::string name = s.substr(0, eq), val = s.substr(eq + 1);
    double re = 0, im = 0;
    auto comma = val.find(',');
    re = std::stod(val.substr(0, comma));
    if (comma != std::string::npos) im = std::stod(val.substr(comma + 1));
    return {name, {re, im}};
}

struct ChernBasis {
    const Presentation* pres;
    MatrixPoly proj;
    std::string note;
};

ChernBasis chern_setup(const std::string& projector) {
    if (projector == "e") {
        const Presentation& p = preset("s4qt");
        return {&p, projector_e(p),
                "PBW words (alphastar)^i alpha^j beta^k {U^m | Ustar^n}; reduced "
                "complex drops tensor factors equal to 1 in positions >= 1"};
    }
    if (projector == "eprime") {
        const Presentation& p = preset("s4qt_x");
        return {&p, projector_eprime(p),
                "PBW words x^h (alphastar)^i alpha^j beta^k {U^m | Ustar^n}; reduced "
                "complex drops tensor factors equal to 1 in positions >= 1"};
    }
    throw CLI::ValidationError("--projector", "must be 'e' or 'eprime'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic workbench for two-parameter quantum 4-spheres"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");

    // ---- normalize ----
    auto* cmd_norm = app.add_subcommand("normalize", "rewrite an expression to normal form");
    std::string norm_preset = "s4qt", norm_expr;
    cmd_norm->add_option("--preset", norm_preset, "presentation name");
    cmd_norm->add_option("expr", norm_expr, "polynomial expression")->required();

    // ---- check ----
    auto* cmd_check = app.add_subcommand("check", "verify an algebraic property");
    cmd_check->require_subcommand(1);
    std::string chk_preset = "s4qt", chk_spec, chk_element;
    std::vector<std::string> chk_values;
    double chk_q = 0.5, chk_theta = std::sqrt(2.0) - 1.0, chk_tol = 1e-12;
    int chk_trials = 1000, chk_maxdeg = 6;
    std::uint64_t chk_seed = 7;
    auto* chk_rel = cmd_check->add_subcommand("relations", "rules reduce every relation to 0");
    chk_rel->add_option("--preset", chk_preset);
    auto* chk_mor = cmd_check->add_subcommand("morphism", "generator images extend to a *-morphism");
    chk_mor->add_option("--spec", chk_spec, "morphism spec JSON file")->required();
    auto* chk_chr = cmd_check->add_subcommand("character", "scalar values satisfy the relations");
    chk_chr->add_option("--preset", chk_preset);
    chk_chr->add_option("--set", chk_values, "generator value, name=re[,im]")->required();
    chk_chr->add_option("--q", chk_q);
    chk_chr->add_option("--theta", chk_theta);
    chk_chr->add_option("--tol", chk_tol);
    auto* chk_cen = cmd_check->add_subcommand("center", "element commutes with all generators");
    chk_cen->add_option("--preset", chk_preset);
    chk_cen->add_option("--element", chk_element)->required();
    auto* chk_con = cmd_check->add_subcommand("confluence", "randomized well-definedness probe");
    chk_con->add_option("--preset", chk_preset);
    chk_con->add_option("--trials", chk_trials);
    chk_con->add_option("--seed", chk_seed);
    chk_con->add_option("--max-degree", chk_maxdeg);

    // ---- chern ----
    auto* cmd_chern = app.add_subcommand("chern", "Chern character component of a projector");
    std::string ch_proj;
    int ch_deg = 0;
    std::string ch_fixture;
    bool ch_count_only = false;
    cmd_chern->add_option("projector", ch_proj, "e | eprime")->required();
    cmd_chern->add_option("degree", ch_deg, "0 | 1 | 2")->required()
        ->check(CLI::Range(0, 2));
    cmd_chern->add_option("--compare-fixture", ch_fixture, "chain JSON to compare against");
    cmd_chern->add_flag("--count-only", ch_count_only, "omit the serialized chain");

    // ---- rep ----
    auto* cmd_rep = app.add_subcommand("rep", "truncated operator representation checks");
    cmd_rep->require_subcommand(1);
    double rp_q = 0.5, rp_theta = std::sqrt(2.0) - 1.0, rp_phi = 0.7;
    int rp_N = 40, rp_M = 40, rp_margin = 3;
    double rp_tol_res = 1e-10, rp_tol_spec = 1e-6;
    std::string rp_proj = "e";
    auto add_rep_flags = [&](CLI::App* c) {
        c->add_option("--q", rp_q);
        c->add_option("--theta", rp_theta);
        c->add_option("--phi", rp_phi);
        c->add_option("--N", rp_N);
        c->add_option("--M", rp_M);
        c->add_option("--margin", rp_margin);
    };
    auto* rep_res = cmd_rep->add_subcommand("residuals", "relation residuals on the interior");
    add_rep_flags(rep_res);
    rep_res->add_option("--tol", rp_tol_res);
    auto* rep_spec = cmd_rep->add_subcommand("spectrum", "interior spectrum of a projector image");
    add_rep_flags(rep_spec);
    rep_spec->add_option("--projector", rp_proj, "e | eprime");
    rep_spec->add_option("--tol", rp_tol_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_norm) {
            const Presentation& p = preset(norm_preset);
            NCPoly nf = parse_poly(p, norm_expr);
            json rpt = {{"preset", p.name()},
                        {"input", norm_expr},
                        {"normal_form", p.poly_str(nf)},
                        {"term_count", nf.term_count()}};
            return emit(rpt, out_path, true);
        }
        if (*chk_rel) {
            const Presentation& p = preset(chk_preset);
            json items = json::array();
            bool pass = true;
            auto rels = p.relations();
            auto res = check_relations(p);
            for (std::size_t i = 0; i < res.size(); ++i) {
                bool ok = res[i].is_zero();
                pass = pass && ok;
                items.push_back({{"relation", p.poly_str(rels[i])},
                                 {"residual", p.poly_str(res[i])},
                                 {"pass", ok}});
            }
            return emit({{"check", "relations"}, {"preset", p.name()},
                         {"items", items}, {"pass", pass}}, out_path, pass);
        }
        if (*chk_mor) {
            MorphismSpec m = morphism_from_json(load_json(chk_spec));
            json items = json::array();
            bool pass = true;
            auto rels = m.source->relations();
            auto res = check_morphism(m);
            for (std::size_t i = 0; i < res.size(); ++i) {
                bool ok = res[i].is_zero();
                pass = pass && ok;
                items.push_back({{"relation", m.source->poly_str(rels[i])},
                                 {"residual", m.target->poly_str(res[i])},
                                 {"pass", ok}});
            }
            return emit({{"check", "morphism"}, {"source", m.source->name()},
                         {"target", m.target->name()}, {"items", items}, {"pass", pass}},
                        out_path, pass);
        }
        if (*chk_chr) {
            const Presentation& p = preset(chk_preset);
            std::map<std::string, std::complex<double>> values;
            for (const auto& s : chk_values) values.insert(parse_assignment(s));
            auto res = check_character(p, values, chk_q, chk_theta);
            auto rels = p.relations();
            json items = json::array();
            bool pass = true;
            for (std::size_t i = 0; i < res.size(); ++i) {
                bool ok = res[i] < chk_tol;
                pass = pass && ok;
                items.push_back({{"relation", p.poly_str(rels[i])},
                                 {"residual", fmt_double(res[i])},
                                 {"pass", ok}});
            }
            return emit({{"check", "character"}, {"preset", p.name()},
                         {"q", fmt_double(chk_q)}, {"theta", fmt_double(chk_theta)},
                         {"tol", fmt_double(chk_tol)}, {"items", items}, {"pass", pass}},
                        out_path, pass);
        }
        if (*chk_cen) {
            const Presentation& p = preset(chk_preset);
            NCPoly el = parse_poly(p, chk_element);
            json items = json::array();
            bool pass = true;
            auto res = centrality_check(p, el);
            for (int g = 0; g < p.num_gens(); ++g) {
                bool ok = res[static_cast<std::size_t>(g)].is_zero();
                pass = pass && ok;
                items.push_back({{"generator", p.gens()[static_cast<std::size_t>(g)].name},
                                 {"commutator", p.poly_str(res[static_cast<std::size_t>(g)])},
                                 {"pass", ok}});
            }
            return emit({{"check", "center"}, {"preset", p.name()},
                         {"element", chk_element}, {"items", items}, {"pass", pass}},
                        out_path, pass);
        }
        if (*chk_con) {
            const Presentation& p = preset(chk_preset);
            auto rep = confluence_probe(p, chk_trials, chk_seed, chk_maxdeg);
            json rpt = probe_to_json(rep);
            rpt["check"] = "confluence";
            rpt["preset"] = p.name();
            rpt["seed"] = chk_seed;
            rpt["max_degree"] = chk_maxdeg;
            return emit(rpt, out_path, rep.pass());
        }
        if (*cmd_chern) {
            ChernBasis cb = chern_setup(ch_proj);
            Chain ch = chern(cb.proj, ch_deg);
            json rpt = {{"projector", ch_proj},
                        {"degree", ch_deg},
                        {"term_count", term_count(ch)},
                        {"basis", cb.note}};
            if (!ch_count_only) rpt["chain"] = chain_to_json(ch);
            bool pass = true;
            if (!ch_fixture.empty()) {
                Chain ref = chain_from_json(*cb.pres, load_json(ch_fixture));
                auto cmp = chain_compare(ch, ref);
                const char* verdict =
                    cmp.kind == ChainCompare::Kind::Equal ? "equal"
                    : cmp.kind == ChainCompare::Kind::Proportional ? "proportional"
                                                                   : "different";
                rpt["compare"] = {{"fixture", ch_fixture},
                                  {"verdict", verdict},
                                  {"ratio", cmp.ratio_text}};
                pass = cmp.kind != ChainCompare::Kind::Different;
            }
            return emit(rpt, out_path, pass);
        }
        if (*rep_res) {
            const Presentation& p = preset("s4qt");
            auto rep = rho_phi(p, rp_q, rp_theta, rp_phi, rp_N, rp_M);
            auto res = relation_residuals(p, rep, rp_margin);
            bool pass = true;
            for (const auto& r : res) pass = pass && r.residual < rp_tol_res;
            json rpt = {{"task", "residuals"},
                        {"q", fmt_double(rp_q)}, {"theta", fmt_double(rp_theta)},
                        {"phi", fmt_double(rp_phi)}, {"N", rp_N}, {"M", rp_M},
                        {"margin", rp_margin}, {"tol", fmt_double(rp_tol_res)},
                        {"items", residuals_to_json(res, rp_margin)}, {"pass", pass}};
            return emit(rpt, out_path, pass);
        }
        if (*rep_spec) {
            ChernBasis cb = chern_setup(rp_proj);
            auto rep = rho_phi(*cb.pres, rp_q, rp_theta, rp_phi, rp_N, rp_M);
            auto sp = projector_spectrum(cb.proj, rep, rp_margin);
            bool pass = sp.max_distance_to_01 < rp_tol_spec;
            json rpt = spectrum_to_json(sp);
            rpt["task"] = "spectrum";
            rpt["projector"] = rp_proj;
            rpt["q"] = fmt_double(rp_q);
            rpt["theta"] = fmt_double(rp_theta);
            rpt["phi"] = fmt_double(rp_phi);
            rpt["N"] = rp_N;
            rpt["M"] = rp_M;
            rpt["margin"] = rp_margin;
            rpt["tol"] = fmt_double(rp_tol_spec);
            rpt["pass"] = pass;
            return emit(rpt, out_path, pass);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
