#include "dirac/planewave.hpp"

#include <cmath>
#include <utility>

namespace dirac {

namespace {

const Cplx kI{0.0, 1.0};

double sign_of(EnergySign s) { return s == EnergySign::Positive ? 1.0 : -1.0; }

// sigma.p acting on a two-spinor.
std::array<Cplx, 2> pauli_dot(const std::array<double, 3>& p, const std::array<Cplx, 2>& chi)
{
    return {
        p[2] * chi[0] + Cplx(p[0], -p[1]) * chi[1],
        Cplx(p[0], p[1]) * chi[0] - p[2] * chi[1],
    };
}

void require_mass(double m)
{
    if (!std::isfinite(m) || m < 0.0)
        throw InvalidParameterError("mass must be finite and non-negative");
    if (m == 0.0)
        throw UnsupportedInputError("massless solution spinors are not supported");
}

} // namespace

FourVector onshell_momentum(const std::array<double, 3>& p3, double m)
{
    const double e = std::sqrt(m * m + p3[0] * p3[0] + p3[1] * p3[1] + p3[2] * p3[2]);
    return {e, p3[0], p3[1], p3[2]};
}

void validate_field(const DiracField& f)
{
    if (!std::isfinite(f.mass) || f.mass < 0.0)
        throw ValidationError("field mass must be finite and non-negative");
    for (const PlaneWaveMode& mode : f.modes) {
        if (mode.momentum[0] <= 0.0)
            throw ValidationError("mode violates the positive-energy invariant p^0 > 0");
        const double p2 = minkowski_norm2(mode.momentum);
        double scale = 1.0;
        for (int mu = 0; mu < 4; ++mu)
            scale += mode.momentum[mu] * mode.momentum[mu];
        if (std::fabs(p2 - f.mass * f.mass) > 1e-10 * scale)
            throw ValidationError("mode violates the mass-shell invariant p.p = m^2");
    }
}

DiracField make_field(double mass, std::vector<PlaneWaveMode> modes, Picture picture,
                      LorentzTransform frame, bool allow_off_shell)
{
    DiracField f;
    f.mass = mass;
    f.modes = std::move(modes);
    f.picture = picture;
    f.frame = std::move(frame);
    if (!allow_off_shell)
        validate_field(f);
    return f;
}

CVec4 u_spinor(const std::array<double, 3>& p3, Spin spin, double m)
{
    require_mass(m);
    const FourVector p = onshell_momentum(p3, m);
    const double n = std::sqrt(p[0] + m);
    const std::array<Cplx, 2> chi =
        spin == Spin::Up ? std::array<Cplx, 2>{1.0, 0.0} : std::array<Cplx, 2>{0.0, 1.0};
    const std::array<Cplx, 2> lower = pauli_dot(p3, chi);
    CVec4 u;
    u[0] = n * chi[0];
    u[1] = n * chi[1];
    u[2] = lower[0] / n;
    u[3] = lower[1] / n;
    return u;
}

CVec4 v_spinor(const std::array<double, 3>& p3, Spin spin, double m)
{
    require_mass(m);
    const FourVector p = onshell_momentum(p3, m);
    const double n = std::sqrt(p[0] + m);
    const std::array<Cplx, 2> xi =
        spin == Spin::Up ? std::array<Cplx, 2>{1.0, 0.0} : std::array<Cplx, 2>{0.0, 1.0};
    const std::array<Cplx, 2> upper = pauli_dot(p3, xi);
    CVec4 v;
    v[0] = upper[0] / n;
    v[1] = upper[1] / n;
    v[2] = n * xi[0];
    v[3] = n * xi[1];
    return v;
}

CVec4 evaluate(const DiracField& f, const FourVector& x)
{
    CVec4 value;
    for (const PlaneWaveMode& mode : f.modes) {
        const double s = sign_of(mode.energy_sign);
        const Cplx phase = std::exp(-kI * s * minkowski_dot(mode.momentum, x));
        value = value + mode.amplitude * phase;
    }
    return value;
}

CVec4 derivative(const DiracField& f, const FourVector& x, int mu)
{
    CVec4 value;
    for (const PlaneWaveMode& mode : f.modes) {
        const double s = sign_of(mode.energy_sign);
        const FourVector p_lo = lower_index(mode.momentum);
        const Cplx phase = std::exp(-kI * s * minkowski_dot(mode.momentum, x));
        value = value + mode.amplitude * (-kI * s * p_lo[mu] * phase);
    }
    return value;
}

CVec4 second_derivative(const DiracField& f, const FourVector& x, int mu, int nu)
{
    CVec4 value;
    for (const PlaneWaveMode& mode : f.modes) {
        const double s = sign_of(mode.energy_sign);
        const FourVector p_lo = lower_index(mode.momentum);
        const Cplx phase = std::exp(-kI * s * minkowski_dot(mode.momentum, x));
        value = value + mode.amplitude * ((-kI * s * p_lo[mu]) * (-kI * s * p_lo[nu]) * phase);
    }
    return value;
}

DiracField transform_field(const DiracField& f, const LorentzTransform& t)
{
    if (!t.has_lineage())
        throw UnsupportedInputError("transform_field requires a generator lineage; "
                                    "raw-matrix transforms are not supported");

    const LorentzTransform t_inv = inverse(t);
    DiracField out;
    out.mass = f.mass;
    out.picture = f.picture;
    out.frame = compose(f.frame, t);
    out.modes.reserve(f.modes.size());

    if (f.picture == Picture::Spinor) {
        const Mat4c s = spinor_rep_for_transform(t).matrix;
        for (const PlaneWaveMode& mode : f.modes)
            out.modes.push_back({apply(t_inv, mode.momentum), mode.energy_sign,
                                 s * mode.amplitude});
    } else {
        for (const PlaneWaveMode& mode : f.modes)
            out.modes.push_back({apply(t_inv, mode.momentum), mode.energy_sign,
                                 mode.amplitude});
    }
    return out;
}

} // namespace dirac
