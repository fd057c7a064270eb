#include "dirac/pictures.hpp"

#include <cmath>
#include <string>

namespace dirac {

namespace {

const Cplx kI{0.0, 1.0};

std::string label_for(const LorentzTransform& frame)
{
    if (frame.lineage().empty())
        return "lab";
    return "frame[" + std::to_string(frame.lineage().size()) + "]";
}

GammaSet standard_as_vector(const std::string& label)
{
    GammaSet g = standard_gammas();
    g.picture = Picture::Vector;
    g.frame_label = label;
    return g;
}

void require_partners(const PictureBundle& spinor_side, const PictureBundle& vector_side)
{
    if (spinor_side.picture() != Picture::Spinor || vector_side.picture() != Picture::Vector)
        throw PreconditionError("check_bilinear_equalities expects a (spinor, vector) pair");
    if (max_abs_diff(spinor_side.frame.matrix(), vector_side.frame.matrix()) > 1e-12)
        throw PreconditionError("bundles are not picture partners: frames differ");
    const DiracField& a = spinor_side.field;
    const DiracField& b = vector_side.field;
    if (a.mass != b.mass || a.modes.size() != b.modes.size())
        throw PreconditionError("bundles are not picture partners: field structure differs");
    for (std::size_t n = 0; n < a.modes.size(); ++n) {
        if (a.modes[n].energy_sign != b.modes[n].energy_sign)
            throw PreconditionError("bundles are not picture partners: energy signs differ");
        const FourVector d = a.modes[n].momentum - b.modes[n].momentum;
        if (d.max_abs() > 1e-12)
            throw PreconditionError("bundles are not picture partners: momenta differ");
    }
}

} // namespace

PictureBundle make_bundle(const DiracField& f)
{
    PictureBundle b;
    b.field = f;
    b.frame = f.frame;
    const std::string label = label_for(f.frame);
    if (f.picture == Picture::Spinor) {
        b.gammas = standard_gammas();
        b.gammas.frame_label = label;
    } else if (f.frame.lineage().empty()) {
        b.gammas = standard_as_vector(label);
    } else {
        b.gammas = conjugate_gammas(standard_as_vector(label), spinor_rep_for_transform(f.frame));
        b.gammas.frame_label = label;
    }
    return b;
}

PictureBundle to_vector_picture(const PictureBundle& b)
{
    if (b.picture() != Picture::Spinor)
        throw PreconditionError("to_vector_picture requires a spinor-picture bundle");

    const SpinorRep s = spinor_rep_for_transform(b.frame);
    const Mat4c s_inv = spinor_rep_inverse(s);

    PictureBundle out;
    out.frame = b.frame;
    out.field = b.field;
    out.field.picture = Picture::Vector;
    for (PlaneWaveMode& mode : out.field.modes)
        mode.amplitude = s_inv * mode.amplitude;
    out.gammas = conjugate_gammas(standard_as_vector(label_for(b.frame)), s);
    return out;
}

PictureBundle to_spinor_picture(const PictureBundle& b)
{
    if (b.picture() != Picture::Vector)
        throw PreconditionError("to_spinor_picture requires a vector-picture bundle");

    const SpinorRep s = spinor_rep_for_transform(b.frame);

    PictureBundle out;
    out.frame = b.frame;
    out.field = b.field;
    out.field.picture = Picture::Spinor;
    for (PlaneWaveMode& mode : out.field.modes)
        mode.amplitude = s.matrix * mode.amplitude;
    out.gammas = standard_gammas();
    out.gammas.frame_label = label_for(b.frame);
    return out;
}

GammaSet transform_gammas(const GammaSet& g, const LorentzTransform& t)
{
    if (g.picture != Picture::Vector)
        throw PreconditionError("transform_gammas requires a vector-picture set; "
                                "the fixed spinor-picture gammas do not transform");

    const Mat4d lam_inv = inverse(t).matrix();
    GammaSet out;
    out.picture = Picture::Vector;
    out.frame_label = g.frame_label + "'";
    for (int mu = 0; mu < 4; ++mu) {
        Mat4c m = Mat4c::zero();
        for (int nu = 0; nu < 4; ++nu)
            m = m + g[nu] * lam_inv(mu, nu);
        out.matrices[static_cast<std::size_t>(mu)] = m;
    }
    return out;
}

GammaSet conjugate_gammas(const GammaSet& g, const SpinorRep& s)
{
    const Mat4c s_inv = spinor_rep_inverse(s);
    GammaSet out;
    out.picture = Picture::Vector;
    out.frame_label = g.frame_label;
    for (int mu = 0; mu < 4; ++mu)
        out.matrices[static_cast<std::size_t>(mu)] = s_inv * g[mu] * s.matrix;
    return out;
}

PictureBundle transform_bundle(const PictureBundle& b, const LorentzTransform& t)
{
    PictureBundle out;
    out.field = transform_field(b.field, t);
    out.frame = out.field.frame;
    if (b.picture() == Picture::Spinor) {
        out.gammas = standard_gammas();
        out.gammas.frame_label = label_for(out.frame);
    } else {
        out.gammas = transform_gammas(b.gammas, t);
        out.gammas.frame_label = label_for(out.frame);
    }
    return out;
}

CVec4 dirac_residual(const PictureBundle& b, const FourVector& x)
{
    CVec4 r = evaluate(b.field, x) * Cplx(-b.field.mass, 0.0);
    for (int mu = 0; mu < 4; ++mu)
        r = r + kI * (b.gammas[mu] * derivative(b.field, x, mu));
    return r;
}

BilinearReport bilinears(const PictureBundle& b, const FourVector& x)
{
    const CVec4 value = evaluate(b.field, x);
    const CVec4 bar = dirac_adjoint(value);

    BilinearReport report;
    report.evaluated_at = x;
    report.scalar_bar = row_dot(bar, value);
    report.density = value.norm2();
    for (int mu = 0; mu < 4; ++mu) {
        report.vector_current[static_cast<std::size_t>(mu)] = row_dot(bar, b.gammas[mu] * value);
        const CVec4 d = derivative(b.field, x, mu);
        report.kg_current[static_cast<std::size_t>(mu)] =
            kI * 0.5 * (inner(value, d) - inner(d, value));
    }
    return report;
}

BilinearEqualityResiduals check_bilinear_equalities(const PictureBundle& spinor_side,
                                                    const PictureBundle& vector_side,
                                                    const FourVector& x)
{
    require_partners(spinor_side, vector_side);

    const BilinearReport bs = bilinears(spinor_side, x);
    const BilinearReport bv = bilinears(vector_side, x);

    BilinearEqualityResiduals r;
    r.scalar_equality = std::abs(bv.scalar_bar - bs.scalar_bar);
    for (int mu = 0; mu < 4; ++mu)
        r.current_equality = std::fmax(
            r.current_equality,
            std::abs(bv.vector_current[static_cast<std::size_t>(mu)]
                     - bs.vector_current[static_cast<std::size_t>(mu)]));
    r.density_witness = std::fabs(bv.density - bs.density);
    return r;
}

CurrentDivergence current_divergence(const PictureBundle& b, const FourVector& x)
{
    const Mat4d eta = minkowski_metric();
    const CVec4 value = evaluate(b.field, x);
    const CVec4 bar = dirac_adjoint(value);

    CurrentDivergence div{0.0, 0.0};
    for (int mu = 0; mu < 4; ++mu) {
        const CVec4 d = derivative(b.field, x, mu);
        const CVec4 bar_d = dirac_adjoint(d);

        // d_mu (field-bar g^mu field), product rule.
        div.dirac += row_dot(bar_d, b.gammas[mu] * value) + row_dot(bar, b.gammas[mu] * d);

        // d^mu j_mu with j_mu = (i/2)(f^dag d_mu f - (d_mu f)^dag f).  The
        // first-derivative cross terms cancel on the diagonal, leaving only
        // the second-derivative pieces.
        const CVec4 d2 = second_derivative(b.field, x, mu, mu);
        div.kg += eta(mu, mu) * kI * 0.5 * (inner(value, d2) - inner(d2, value));
    }
    return div;
}

RhoCurrentResiduals frame_invariance_of_rho_and_j(const PictureBundle& b,
                                                  const LorentzTransform& t,
                                                  const FourVector& x)
{
    if (b.picture() != Picture::Vector)
        throw PreconditionError("frame_invariance_of_rho_and_j requires a vector-picture bundle");

    const PictureBundle bt = transform_bundle(b, t);
    const FourVector xp = to_frame(t, x);

    const BilinearReport here = bilinears(b, x);
    const BilinearReport there = bilinears(bt, xp);

    RhoCurrentResiduals r;
    r.rho = std::fabs(there.density - here.density);
    for (int mu = 0; mu < 4; ++mu) {
        Cplx expected = 0.0;
        for (int a = 0; a < 4; ++a)
            expected += t.matrix()(a, mu) * here.kg_current[static_cast<std::size_t>(a)];
        r.current = std::fmax(
            r.current, std::abs(there.kg_current[static_cast<std::size_t>(mu)] - expected));
    }
    return r;
}

} // namespace dirac
