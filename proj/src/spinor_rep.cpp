#include "dirac/spinor_rep.hpp"

namespace dirac {

namespace {

const Cplx kI{0.0, 1.0};

const SigmaGenerators& standard_sigma()
{
    static const SigmaGenerators s = sigma_generators(standard_gammas());
    return s;
}

// omega_{0k} = -rapidity_k, omega_{ij} = -eps_{ijk} angle_k, antisymmetric.
std::array<std::array<double, 4>, 4> omega_for(const GeneratorParams& p)
{
    std::array<std::array<double, 4>, 4> w{};
    for (int k = 0; k < 3; ++k) {
        w[0][static_cast<std::size_t>(k + 1)] = -p.rapidity[k];
        w[static_cast<std::size_t>(k + 1)][0] = p.rapidity[k];
    }
    w[1][2] = -p.rotation[2];
    w[2][1] = p.rotation[2];
    w[2][3] = -p.rotation[0];
    w[3][2] = p.rotation[0];
    w[3][1] = -p.rotation[1];
    w[1][3] = p.rotation[1];
    return w;
}

} // namespace

SpinorRep spinor_rep_for(const GeneratorParams& params)
{
    if (!params.finite())
        throw InvalidParameterError("generator parameters must be finite");

    const auto w = omega_for(params);
    const SigmaGenerators& sig = standard_sigma();
    Mat4c x = Mat4c::zero();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const double wmn = w[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
            if (wmn != 0.0)
                x = x + sig(mu, nu) * (kI * (-0.25) * wmn);
        }
    return {expm(x), {params}};
}

SpinorRep spinor_rep_for_transform(const LorentzTransform& t)
{
    if (!t.has_lineage())
        throw UnsupportedInputError("spinor representation requires a generator lineage; "
                                    "raw-matrix transforms are not supported");
    Mat4c s = Mat4c::identity();
    const auto& lin = t.lineage();
    for (auto it = lin.rbegin(); it != lin.rend(); ++it)
        s = s * spinor_rep_for(*it).matrix;
    return {s, lin};
}

Mat4c spinor_rep_inverse(const SpinorRep& s)
{
    const Mat4c g0 = standard_gammas()[0];
    return g0 * s.matrix.adjoint() * g0;
}

double verify_intertwining(const SpinorRep& s, const LorentzTransform& t)
{
    const GammaSet g = standard_gammas();
    const Mat4c sinv = spinor_rep_inverse(s);
    const Mat4d lam = t.matrix();
    const Mat4d lam_inv = inverse(t).matrix();

    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        Mat4c rhs = Mat4c::zero();
        Mat4c rhs_inv = Mat4c::zero();
        for (int mu = 0; mu < 4; ++mu) {
            rhs = rhs + g[mu] * lam(a, mu);
            rhs_inv = rhs_inv + g[mu] * lam_inv(a, mu);
        }
        worst = std::fmax(worst, max_abs_diff(s.matrix * g[a] * sinv, rhs));
        worst = std::fmax(worst, max_abs_diff(sinv * g[a] * s.matrix, rhs_inv));
    }
    return worst;
}

double verify_pseudo_unitarity(const SpinorRep& s)
{
    // Exact group inverse from the lineage: S = S(p_n)...S(p_1), so
    // S^{-1} = S(-p_1)...S(-p_n).
    Mat4c sinv_ref = Mat4c::identity();
    for (const GeneratorParams& p : s.lineage)
        sinv_ref = sinv_ref * spinor_rep_for(p.negated()).matrix;

    const Mat4c g0 = standard_gammas()[0];
    const Mat4c sdag = s.matrix.adjoint();
    const double r1 = max_abs_diff(sinv_ref, g0 * sdag * g0);
    const double r2 = max_abs_diff(g0 * sinv_ref, sdag * g0);
    return std::fmax(r1, r2);
}

} // namespace dirac
