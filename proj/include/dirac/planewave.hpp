#ifndef DIRAC_PLANEWAVE_HPP
#define DIRAC_PLANEWAVE_HPP

#include <vector>

#include "dirac/clifford.hpp"
#include "dirac/lorentz.hpp"
#include "dirac/spinor_rep.hpp"

namespace dirac {

enum class EnergySign { Positive, Negative };
enum class Spin { Up, Down };

/// One on-shell plane-wave mode.  The stored momentum always has
/// p^0 = +sqrt(|p|^2 + m^2); the energy sign only selects the phase
/// e^{-i p.x} (Positive) or e^{+i p.x} (Negative).
struct PlaneWaveMode {
    FourVector momentum;
    EnergySign energy_sign = EnergySign::Positive;
    CVec4 amplitude;
};

/// Finite superposition of plane-wave modes with spinor amplitudes.
/// Fields are exact analytic objects: evaluation, derivatives and hence
/// every covariance or conservation check are limited only by round-off,
/// never by discretization.  The frame tag records the transform from the
/// designated lab frame to the frame whose coordinates the momenta are
/// expressed in.
struct DiracField {
    double mass = 0.0;
    std::vector<PlaneWaveMode> modes;
    Picture picture = Picture::Spinor;
    LorentzTransform frame = LorentzTransform::identity();
};

/// (sqrt(m^2 + |p3|^2), p3).
FourVector onshell_momentum(const std::array<double, 3>& p3, double m);

/// Throws ValidationError naming the violated invariant: non-finite or
/// negative mass, non-positive p^0, or a mode off the mass shell
/// (|p.p - m^2| measured relative to max(1, |p|^2)).
void validate_field(const DiracField& f);

/// Validating factory.  allow_off_shell skips the mass-shell test; it
/// exists so the conservation checks can inject deliberately broken modes.
DiracField make_field(double mass, std::vector<PlaneWaveMode> modes, Picture picture,
                      LorentzTransform frame = LorentzTransform::identity(),
                      bool allow_off_shell = false);

/// Positive-energy solution spinor, (g^mu p_mu - m) u = 0, normalized to
/// u-bar u = 2m (so u^dagger u = 2E).  Spin labels the rest-frame
/// two-spinor (1,0) or (0,1).  Throws UnsupportedInputError for m = 0 and
/// InvalidParameterError for negative or non-finite m.
CVec4 u_spinor(const std::array<double, 3>& p3, Spin spin, double m);

/// Negative-energy solution spinor, (g^mu p_mu + m) v = 0, v-bar v = -2m.
CVec4 v_spinor(const std::array<double, 3>& p3, Spin spin, double m);

/// Sum over modes of amplitude * e^{-i s p.x}, s = +-1 by energy sign.
CVec4 evaluate(const DiracField& f, const FourVector& x);

/// Analytic derivative d/dx^mu: sum of (-i s p_mu) amplitude e^{-i s p.x}
/// with the lowered index p_mu = eta_{mu nu} p^nu.
CVec4 derivative(const DiracField& f, const FourVector& x, int mu);

/// Analytic second derivative d^2/dx^mu dx^nu.
CVec4 second_derivative(const DiracField& f, const FourVector& x, int mu, int nu);

/// Frame change by t: every momentum is relabeled with the new-frame
/// components Lambda^{-1} p, and in the spinor picture the amplitudes are
/// left-multiplied by S(t) so that psi'(x') = S psi(x) holds pointwise at
/// x' = Lambda^{-1} x.  Vector-picture amplitudes are untouched (the field
/// is a scalar).  The frame tag becomes compose(f.frame, t).
/// Throws UnsupportedInputError if t has no lineage.
DiracField transform_field(const DiracField& f, const LorentzTransform& t);

} // namespace dirac

#endif
