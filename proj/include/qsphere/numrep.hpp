// Floating-point operator realizations on truncated Hilbert spaces: the
// weighted-shift representation of the quantum 2-sphere and the phi
// family on (2-sphere space) (x) l2(Z), with relation-residual and
// projector-spectrum verification.
//
// Truncation policy: the l2(Z) shift is zero-padded (non-cyclic), so the
// defining relations hold exactly on the interior subspace (basis
// vectors at distance >= margin from every truncation boundary) and the
// relation defects are diagonal operators supported on the boundary
// basis vectors.  "Interior spectrum" of an operator therefore means
// the spectrum seen from interior vectors: Lanczos Ritz values seeded
// from the interior subspace, each certified by its residual.  A plain
// two-sided compression P X P is not used for spectra; cutting a shift
// operator at the interior edge manufactures spurious mid-gap modes.

#pragma once

#include "qsphere/algebra.hpp"
#include "qsphere/chern.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace qsphere {

using Complex = std::complex<double>;
using SpMat = Eigen::SparseMatrix<Complex>;
using DenseVec = Eigen::VectorXcd;

// Dense-or-sparse complex operator on a truncated space, with the
// truncation metadata needed to build interior projectors.
struct TruncatedOp {
    SpMat mat;
    int N = 0;               // 2-sphere cutoff (basis e_0..e_{N-1})
    int M = 0;               // l2(Z) half-window; 0 when there is no Z leg
    std::string boundary = "zero-padded";

    long dim() const { return mat.rows(); }
    TruncatedOp adjoint() const { return {SpMat(mat.adjoint()), N, M, boundary}; }
    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }
};

inline void write_csv(const TruncatedOp& op, std::ostream& os) {
    Eigen::MatrixXcd d = op.dense();
    for (Eigen::Index i = 0; i < d.rows(); ++i) {
        for (Eigen::Index j = 0; j < d.cols(); ++j) {
            if (j) os << ",";
            os << d(i, j).real() << (d(i, j).imag() < 0 ? "-" : "+")
               << std::abs(d(i, j).imag()) << "i";
        }
        os << "\n";
    }
}

struct RepFamily {
    const Presentation* pres = nullptr;
    std::map<std::string, TruncatedOp> ops;  // keyed by generator name
    double q = 0, theta = 0, phi = 0;
    int N = 0, M = 0;  // M = 0 means no Z leg
    long dim = 0;

    // Orthogonal projector onto basis vectors at distance >= margin from
    // every truncation boundary.  The bottom of the 2-sphere ladder is
    // not a truncation boundary (the lowering operator vanishes there
    // exactly); the top of the ladder and both window edges are.
    SpMat interior(int margin) const {
        std::vector<Eigen::Triplet<Complex>> trip;
        if (M == 0) {
            for (int p = 0; p + margin <= N - 1; ++p) trip.emplace_back(p, p, 1.0);
        } else {
            const int zdim = 2 * M + 1;
            for (int p = 0; p + margin <= N - 1; ++p)
                for (int z = -M + margin; z <= M - margin; ++z) {
                    long i = static_cast<long>(p) * zdim + (z + M);
                    trip.emplace_back(i, i, 1.0);
                }
        }
        SpMat P(dim, dim);
        P.setFromTriplets(trip.begin(), trip.end());
        return P;
    }
    long interior_dim(int margin) const {
        long pd = std::max(0, N - margin);
        if (M == 0) return pd;
        return pd * std::max(0, 2 * (M - margin) + 1);
    }
};

// ---- representations -----------------------------------------------------

// Weighted-shift representation of the quantum 2-sphere:
// b e_n = sign * q^{n+1} e_n,  a e_n = sqrt(1 - q^{2(n+1)}) e_{n+1}.
inline RepFamily podles_rep(const Presentation& pres, double q, int sign, int N) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("podles_rep: q must be in (0,1)");
    if (N < 2) throw std::domain_error("podles_rep: N must be >= 2");
    if (sign != 1 && sign != -1) throw std::domain_error("podles_rep: sign must be +-1");
    std::vector<Eigen::Triplet<Complex>> ta, tb;
    for (int n = 0; n < N; ++n) tb.emplace_back(n, n, sign * std::pow(q, n + 1));
    for (int n = 0; n + 1 < N; ++n)
        ta.emplace_back(n + 1, n, std::sqrt(1.0 - std::pow(q, 2 * (n + 1))));
    SpMat A(N, N), B(N, N);
    A.setFromTriplets(ta.begin(), ta.end());
    B.setFromTriplets(tb.begin(), tb.end());
    RepFamily rep;
    rep.pres = &pres;
    rep.q = q;
    rep.N = N;
    rep.M = 0;
    rep.dim = N;
    rep.ops["a"] = {A, N, 0};
    rep.ops["astar"] = {SpMat(A.adjoint()), N, 0};
    rep.ops["b"] = {B, N, 0};
    return rep;
}

// The phi family on the 2-sphere space tensored with a truncated l2(Z)
// window (indices -M..M):
//   alpha = cos(phi) a (x) diag(exp(-2 pi i n theta))
//   beta  = cos(phi) b (x) 1
//   U     = sin(phi) 1 (x) (shift n -> n+1, zero-padded)
// plus x = sqrt(Ustar U) for the x-extended presentation.
inline RepFamily rho_phi(const Presentation& pres, double q, double theta, double phi,
                         int N, int M) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("rho_phi: q must be in (0,1)");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw std::domain_error("rho_phi: phi must be in [0, 2*pi)");
    if (N < 2 || M < 2) throw std::domain_error("rho_phi: N and M must be >= 2");
    const int zdim = 2 * M + 1;
    const long dim = static_cast<long>(N) * zdim;
    const double c = std::cos(phi), s = std::sin(phi);

    std::vector<Eigen::Triplet<Complex>> tal, tbe, tu, tx;
    for (int p = 0; p < N; ++p) {
        double bw = std::pow(q, p + 1);
        double aw = p + 1 < N ? std::sqrt(1.0 - std::pow(q, 2 * (p + 1))) : 0.0;
        for (int z = 0; z < zdim; ++z) {
            long col = static_cast<long>(p) * zdim + z;
            double ph = -2.0 * std::numbers::pi * theta * (z - M);
            if (p + 1 < N)
                tal.emplace_back(static_cast<long>(p + 1) * zdim + z, col,
                                 c * aw * Complex(std::cos(ph), std::sin(ph)));
            tbe.emplace_back(col, col, c * bw);
            if (z + 1 < zdim) tu.emplace_back(col + 1, col, Complex(s, 0.0));
            if (z + 1 < zdim) tx.emplace_back(col, col, std::abs(s));
        }
    }
    auto make = [&](const std::vector<Eigen::Triplet<Complex>>& t) {
        SpMat m(dim, dim);
        m.setFromTriplets(t.begin(), t.end());
        return m;
    };
    RepFamily rep;
    rep.pres = &pres;
    rep.q = q;
    rep.theta = theta;
    rep.phi = phi;
    rep.N = N;
    rep.M = M;
    rep.dim = dim;
    SpMat alpha = make(tal), beta = make(tbe), U = make(tu);
    rep.ops["alpha"] = {alpha, N, M};
    rep.ops["alphastar"] = {SpMat(alpha.adjoint()), N, M};
    rep.ops["beta"] = {beta, N, M};
    rep.ops["U"] = {U, N, M};
    rep.ops["Ustar"] = {SpMat(U.adjoint()), N, M};
    if (pres.find_gen("x") >= 0) rep.ops["x"] = {make(tx), N, M};
    return rep;
}

// ---- symbolic-to-numeric bridge -------------------------------------------

inline TruncatedOp represent(const NCPoly& p, const RepFamily& rep) {
    SpMat acc(rep.dim, rep.dim);
    for (const auto& [w, coeff] : p.terms()) {
        Complex cv = coeff.specialize(rep.q, rep.theta);
        SpMat prod;
        bool first = true;
        for (int g : w) {
            const std::string& name = rep.pres->gens()[static_cast<std::size_t>(g)].name;
            auto it = rep.ops.find(name);
            if (it == rep.ops.end())
                throw std::invalid_argument("represent: no operator for generator " + name);
            prod = first ? it->second.mat : SpMat(prod * it->second.mat);
            first = false;
        }
        if (first) {
            SpMat id(rep.dim, rep.dim);
            id.setIdentity();
            prod = id;
        }
        acc += cv * prod;
    }
    return {acc, rep.N, rep.M};
}

// Block operator image of a matrix over the algebra.
inline TruncatedOp represent_matrix(const MatrixPoly& E, const RepFamily& rep) {
    const int n = E.dim();
    const long d = rep.dim;
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SpMat blk = represent(E.at(i, j), rep).mat;
            for (int k = 0; k < blk.outerSize(); ++k)
                for (SpMat::InnerIterator it(blk, k); it; ++it)
                    trip.emplace_back(i * d + it.row(), j * d + it.col(), it.value());
        }
    SpMat big(static_cast<long>(n) * d, static_cast<long>(n) * d);
    big.setFromTriplets(trip.begin(), trip.end());
    return {big, rep.N, rep.M};
}

// ---- norms and spectra -----------------------------------------------------

namespace detail {

inline DenseVec seeded_unit_vector(long dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    DenseVec v(dim);
    for (long i = 0; i < dim; ++i) v[i] = Complex(nd(rng), nd(rng));
    v.normalize();
    return v;
}

// Lanczos with full reorthogonalization; returns Ritz values of X seen
// from the starting vector.  X must be Hermitian.
inline std::vector<double> lanczos_ritz(const SpMat& X, const DenseVec& start,
                                        int max_steps) {
    std::vector<DenseVec> basis;
    std::vector<double> alpha, beta;
    DenseVec v = start;
    if (v.norm() == 0.0) return {};
    v.normalize();
    for (int step = 0; step < max_steps; ++step) {
        basis.push_back(v);
        DenseVec w = X * v;
        double a = std::real(v.dot(w));
        alpha.push_back(a);
        w -= a * v;
        if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
        for (const auto& u : basis) w -= u.dot(w) * u;  // full reorthogonalization
        double b = w.norm();
        if (b < 1e-10) break;
        beta.push_back(b);
        v = w / b;
    }
    const int k = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
        T(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < k)
            T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    std::vector<double> ritz(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    return ritz;
}

}  // namespace detail

// Largest singular value: Lanczos on A*A with deterministic seeds.
inline double op_norm(const SpMat& A, int max_steps = 96) {
    if (A.nonZeros() == 0) return 0.0;
    SpMat H = SpMat(SpMat(A.adjoint()) * A);
    double top = 0.0;
    for (std::uint64_t s = 0; s < 2; ++s) {
        DenseVec v0 = detail::seeded_unit_vector(H.rows(), 0x9e3779b97f4a7c15ull + s);
        for (double r : detail::lanczos_ritz(H, v0, max_steps))
            top = std::max(top, r);
    }
    return std::sqrt(std::max(top, 0.0));
}

struct RelationResidual {
    std::string relation;
    double residual = 0.0;
};

// Operator norm of represent(r) * P_interior(margin) per defining relation.
inline std::vector<RelationResidual> relation_residuals(const Presentation& pres,
                                                        const RepFamily& rep, int margin) {
    SpMat P = rep.interior(margin);
    std::vector<RelationResidual> out;
    for (const auto& r : pres.relations()) {
        SpMat A = represent(r, rep).mat;
        out.push_back({pres.poly_str(r), op_norm(SpMat(A * P))});
    }
    return out;
}

struct SpectrumReport {
    double max_distance_to_01 = 0.0;   // over interior-seeded Ritz values
    double selfadjoint_defect = 0.0;   // ||X - X*||_F
    double interior_idem_residual = 0.0;  // ||(X^2 - X) P||
    long full_dim = 0;
    long interior_dim = 0;
    long near_one_count = 0;  // round(Re tr PXP); meaningful when max distance is small
    long near_zero_count = 0;
    std::vector<double> ritz_values;
};

// Interior spectrum of the operator image of a matrix idempotent:
// Lanczos Ritz values of the full Hermitian image, seeded from several
// deterministic random interior vectors.
inline SpectrumReport projector_spectrum(const MatrixPoly& E, const RepFamily& rep,
                                         int margin, int starts = 8, int max_steps = 48) {
    SpMat X = represent_matrix(E, rep).mat;
    const int n = E.dim();
    SpMat Psmall = rep.interior(margin);
    // block-diagonal interior projector on the n-fold sum
    std::vector<Eigen::Triplet<Complex>> trip;
    for (int blk = 0; blk < n; ++blk)
        for (int k = 0; k < Psmall.outerSize(); ++k)
            for (SpMat::InnerIterator it(Psmall, k); it; ++it)
                trip.emplace_back(blk * rep.dim + it.row(), blk * rep.dim + it.col(),
                                  it.value());
    SpMat P(X.rows(), X.cols());
    P.setFromTriplets(trip.begin(), trip.end());

    SpectrumReport rep_out;
    rep_out.full_dim = X.rows();
    rep_out.interior_dim = static_cast<long>(n) * rep.interior_dim(margin);
    rep_out.selfadjoint_defect = SpMat(X - SpMat(X.adjoint())).norm();

    SpMat Xh = SpMat(0.5 * (X + SpMat(X.adjoint())));  // symmetrize fp noise
    rep_out.interior_idem_residual = op_norm(SpMat(SpMat(Xh * Xh - Xh) * P));

    double maxdist = 0.0;
    for (int s = 0; s < starts; ++s) {
        DenseVec v0 = P * detail::seeded_unit_vector(X.rows(), 0xabcdef12345678ull + s);
        auto ritz = detail::lanczos_ritz(Xh, v0, max_steps);
        for (double r : ritz) {
            maxdist = std::max(maxdist, std::min(std::abs(r), std::abs(r - 1.0)));
            rep_out.ritz_values.push_back(r);
        }
    }
    std::sort(rep_out.ritz_values.begin(), rep_out.ritz_values.end());
    rep_out.max_distance_to_01 = maxdist;

    Complex tr{0.0, 0.0};
    SpMat PXP = SpMat(P * Xh * P);
    for (int k = 0; k < PXP.outerSize(); ++k)
        for (SpMat::InnerIterator it(PXP, k); it; ++it)
            if (it.row() == it.col()) tr += it.value();
    rep_out.near_one_count = std::lround(tr.real());
    rep_out.near_zero_count = rep_out.interior_dim - rep_out.near_one_count;
    return rep_out;
}

// Dense reference path for small problems: eigenvalues of the full
// Hermitian image whose eigenvectors carry interior mass >= 1/2.
inline std::vector<double> interior_eigenvalues_dense(const MatrixPoly& E,
                                                      const RepFamily& rep, int margin) {
    SpMat Xs = represent_matrix(E, rep).mat;
    Eigen::MatrixXcd X = Eigen::MatrixXcd(Xs);
    X = 0.5 * (X + X.adjoint().eval());
    SpMat Psmall = rep.interior(margin);
    Eigen::VectorXd mask = Eigen::VectorXd::Zero(X.rows());
    for (int blk = 0; blk < E.dim(); ++blk)
        for (int k = 0; k < Psmall.outerSize(); ++k)
            for (SpMat::InnerIterator it(Psmall, k); it; ++it)
                mask[blk * rep.dim + it.row()] = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(X);
    std::vector<double> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double m = (mask.array() * es.eigenvectors().col(i).cwiseAbs2().array()).sum();
        if (m >= 0.5) out.push_back(es.eigenvalues()[i]);
    }
    return out;
}

}  // namespace qsphere
