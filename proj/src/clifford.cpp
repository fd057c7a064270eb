#include "dirac/clifford.hpp"

namespace dirac {

namespace {

const Cplx kI{0.0, 1.0};

GammaSet build_standard()
{
    GammaSet g;
    g.picture = Picture::Spinor;
    g.frame_label = "lab";

    Mat4c& g0 = g.matrices[0];
    g0(0, 0) = 1.0;
    g0(1, 1) = 1.0;
    g0(2, 2) = -1.0;
    g0(3, 3) = -1.0;

    // Pauli matrices in the off-diagonal blocks:
    //   gamma^k = [[0, sigma_k], [-sigma_k, 0]].
    const Cplx sigma[3][2][2] = {
        {{0.0, 1.0}, {1.0, 0.0}},
        {{0.0, -kI}, {kI, 0.0}},
        {{1.0, 0.0}, {0.0, -1.0}},
    };
    for (int k = 0; k < 3; ++k) {
        Mat4c& gk = g.matrices[static_cast<std::size_t>(k + 1)];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                gk(a, 2 + b) = sigma[k][a][b];
                gk(2 + a, b) = -sigma[k][a][b];
            }
    }
    return g;
}

} // namespace

GammaSet standard_gammas()
{
    static const GammaSet g = build_standard();
    return g;
}

Mat4c anticommutator(const Mat4c& a, const Mat4c& b) { return a * b + b * a; }

SigmaGenerators sigma_generators(const GammaSet& g)
{
    SigmaGenerators s;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            s.sigma[mu][nu] = (kI * 0.5) * commutator(g[mu], g[nu]);
    return s;
}

double verify_clifford(const GammaSet& g)
{
    const Mat4d eta = minkowski_metric();
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4c residual =
                anticommutator(g[mu], g[nu]) - Mat4c::identity() * (2.0 * eta(mu, nu));
            worst = std::fmax(worst, residual.max_abs());
        }
    return worst;
}

Mat4c square_dirac_operator(const GammaSet& g, const FourVector& p)
{
    const FourVector p_lo = lower_index(p);
    Mat4c slash = Mat4c::zero();
    for (int mu = 0; mu < 4; ++mu)
        slash = slash + g[mu] * p_lo[mu];
    return slash * slash;
}

CVec4 dirac_adjoint(const CVec4& psi, const Mat4c& g0)
{
    // Row vector psi^dagger g0.
    CVec4 bar;
    for (int j = 0; j < 4; ++j) {
        Cplx s = 0.0;
        for (int i = 0; i < 4; ++i)
            s += std::conj(psi[i]) * g0(i, j);
        bar[j] = s;
    }
    return bar;
}

CVec4 dirac_adjoint(const CVec4& psi) { return dirac_adjoint(psi, standard_gammas()[0]); }

} // namespace dirac
