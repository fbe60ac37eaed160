#include "qsphere/numrep.hpp"
#include "qsphere/presets.hpp"
#include "qsphere/text.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace qsphere;

namespace {
const double kTheta = std::sqrt(2.0) - 1.0;
}

TEST_CASE("weighted-shift representation: ladder weights from the recurrence") {
    const Presentation& p = preset("s2q");
    double q = 0.5;
    int N = 12;
    auto rep = podles_rep(p, q, 1, N);
    const auto& A = rep.ops.at("a").mat;
    const auto& B = rep.ops.at("b").mat;
    // b e_n = q^{n+1} e_n and |a e_n|^2 = 1 - q^{2(n+1)}
    Eigen::MatrixXcd Ad(A), Bd(B);
    for (int n = 0; n < N; ++n)
        CHECK(std::abs(Bd(n, n) - std::pow(q, n + 1)) < 1e-15);
    for (int n = 0; n + 1 < N; ++n)
        CHECK(std::abs(std::norm(Ad(n + 1, n)) - (1.0 - std::pow(q, 2 * (n + 1)))) < 1e-15);
}

TEST_CASE("weighted-shift representation: relation residuals by boundary") {
    const Presentation& p = preset("s2q");
    auto rep = podles_rep(p, 0.5, 1, 16);
    // commutation and a.astar relations hold with no margin at all;
    // astar.a + b^2 - 1 fails only on the top rung, where the raising
    // operator is cut off and the defect is b^2 - 1 = q^{2N} - 1
    auto res0 = relation_residuals(p, rep, 0);
    CHECK(res0[0].residual < 1e-14);  // b.a - q a.b
    CHECK(res0[1].residual < 1e-14);  // astar.b - q b.astar
    CHECK(res0[2].residual == Catch::Approx(1.0 - std::pow(0.5, 32)).margin(1e-12));
    CHECK(res0[3].residual < 1e-14);
    for (const auto& r : relation_residuals(p, rep, 1)) CHECK(r.residual < 1e-14);
}

TEST_CASE("negative-sign sector also satisfies the relations") {
    const Presentation& p = preset("s2q");
    auto rep = podles_rep(p, 0.5, -1, 16);
    for (const auto& r : relation_residuals(p, rep, 1)) CHECK(r.residual < 1e-14);
}

TEST_CASE("representation constructors reject bad parameters") {
    const Presentation& p = preset("s2q");
    CHECK_THROWS_AS(podles_rep(p, 1.5, 1, 8), std::domain_error);
    CHECK_THROWS_AS(podles_rep(p, 0.5, 0, 8), std::domain_error);
    CHECK_THROWS_AS(podles_rep(p, 0.5, 1, 1), std::domain_error);
    const Presentation& p4 = preset("s4qt");
    CHECK_THROWS_AS(rho_phi(p4, 0.0, kTheta, 0.7, 8, 8), std::domain_error);
    CHECK_THROWS_AS(rho_phi(p4, 0.5, kTheta, -0.1, 8, 8), std::domain_error);
    CHECK_THROWS_AS(rho_phi(p4, 0.5, kTheta, 0.7, 8, 1), std::domain_error);
}

TEST_CASE("4-sphere relations hold on the interior, degrade at margin 0") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 10, 10);
    double worst2 = 0, worst0 = 0;
    for (const auto& r : relation_residuals(p, rep, 2)) worst2 = std::max(worst2, r.residual);
    for (const auto& r : relation_residuals(p, rep, 0)) worst0 = std::max(worst0, r.residual);
    CHECK(worst2 < 1e-12);
    // the zero-padded shift breaks the sphere relation on the window edge
    CHECK(worst0 > 0.1);
}

TEST_CASE("phi = pi/2 degenerate member") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, std::numbers::pi / 2, 8, 8);
    for (const auto& r : relation_residuals(p, rep, 1)) CHECK(r.residual < 1e-12);
}

TEST_CASE("x-extended relations are exact under the extended representation") {
    const Presentation& p = preset("s4qt_x");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 8, 8);
    // the [x, U] commutator defect sits one column inside the window
    // edge, so these relations need margin 2 rather than 1
    for (const auto& r : relation_residuals(p, rep, 2)) CHECK(r.residual < 1e-12);
}

TEST_CASE("residuals shrink (weakly) as the margin grows") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 10, 10);
    for (int m = 0; m < 3; ++m) {
        auto lo = relation_residuals(p, rep, m);
        auto hi = relation_residuals(p, rep, m + 1);
        for (std::size_t i = 0; i < lo.size(); ++i)
            CHECK(hi[i].residual <= lo[i].residual + 1e-12);
    }
}

TEST_CASE("represent is multiplicative up to truncation on the interior") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 10, 10);
    NCPoly f = parse_poly(p, "U.alpha - 2*beta");
    NCPoly g = parse_poly(p, "alphastar + q*U");
    SpMat lhs = represent(p.mul(f, g), rep).mat;
    SpMat rhs = SpMat(represent(f, rep).mat * represent(g, rep).mat);
    SpMat P = rep.interior(4);
    CHECK(op_norm(SpMat(SpMat(lhs - rhs) * P)) < 1e-12);
}

TEST_CASE("normalize oracle needs margin >= word length") {
    // U*.U^4 has degree 5; its normal form uses the sphere relation, which
    // only holds three steps away from the window edge, so a margin-3
    // interior still sees an order-one discrepancy while margin 5 is clean.
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 12, 12);
    NCPoly w(&p);  // raw word, deliberately not normalized
    w.add_term(p.word({"Ustar", "U", "U", "U", "U"}), Scalar::one());
    SpMat A = represent(w, rep).mat;
    SpMat B = represent(p.normalize(w), rep).mat;
    SpMat D = SpMat(A - B);
    double at3 = op_norm(SpMat(D * rep.interior(3)));
    double at5 = op_norm(SpMat(D * rep.interior(5)));
    CHECK(at3 > 0.1);
    CHECK(at5 < 1e-13);
}

TEST_CASE("interior spectrum of e sticks to {0,1}; dense path agrees") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 6, 6);
    MatrixPoly E = projector_e(p);
    auto sp = projector_spectrum(E, rep, 2);
    CHECK(sp.selfadjoint_defect < 1e-13);
    CHECK(sp.interior_idem_residual < 1e-12);
    CHECK(sp.max_distance_to_01 < 1e-8);
    CHECK(sp.near_zero_count + sp.near_one_count == sp.interior_dim);

    auto dense = interior_eigenvalues_dense(E, rep, 2);
    CHECK_FALSE(dense.empty());
    for (double mu : dense)
        CHECK(std::min(std::abs(mu), std::abs(mu - 1.0)) < 1e-8);
}

TEST_CASE("two-sided compression manufactures mid-gap artifacts (why Ritz)") {
    // compressing the represented projector to the interior cuts the shift
    // and creates spurious eigenvalues far from {0,1}; the Ritz spectrum
    // seeded from the interior does not see them
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 6, 6);
    MatrixPoly E = projector_e(p);
    SpMat X = represent_matrix(E, rep).mat;
    SpMat Ps = rep.interior(2);
    std::vector<long> idx;
    for (int blk = 0; blk < 4; ++blk)
        for (int k = 0; k < Ps.outerSize(); ++k)
            for (SpMat::InnerIterator it(Ps, k); it; ++it)
                idx.push_back(blk * rep.dim + it.row());
    Eigen::MatrixXcd Xd(X);
    Eigen::MatrixXcd C(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            C(static_cast<long>(i), static_cast<long>(j)) = Xd(idx[i], idx[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(C);
    double worst = 0;
    for (long i = 0; i < es.eigenvalues().size(); ++i) {
        double mu = es.eigenvalues()[i];
        worst = std::max(worst, std::min(std::abs(mu), std::abs(mu - 1.0)));
    }
    CHECK(worst > 0.1);
}

TEST_CASE("spectrum negative control: half the identity sits at distance 1/2") {
    const Presentation& p = preset("s4qt");
    auto rep = rho_phi(p, 0.5, kTheta, 0.7, 6, 6);
    MatrixPoly half = Scalar(Rational(1) / 2) * MatrixPoly::identity(p, 2);
    auto sp = projector_spectrum(half, rep, 2);
    CHECK(sp.max_distance_to_01 == Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("op_norm matches a dense singular value on a small operator") {
    const Presentation& p = preset("s2q");
    auto rep = podles_rep(p, 0.5, 1, 10);
    SpMat A = represent(parse_poly(p, "a.b - 2*astar"), rep).mat;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd((Eigen::MatrixXcd(A)));
    CHECK(op_norm(A) == Catch::Approx(svd.singularValues()[0]).epsilon(1e-10));
}
