#ifndef DIRAC_PICTURES_HPP
#define DIRAC_PICTURES_HPP

#include "dirac/clifford.hpp"
#include "dirac/planewave.hpp"
#include "dirac/spinor_rep.hpp"

namespace dirac {

/// A field packaged with the gamma set it is to be read against and the
/// frame both live in.  In the spinor picture the gammas are always the
/// fixed standard set regardless of frame; in the vector picture they are
/// the transformed set belonging to the frame.  The lab frame anchors the
/// two pictures: there Gamma^mu = gamma^mu and the two wave functions
/// coincide.
struct PictureBundle {
    DiracField field;
    GammaSet gammas;
    LorentzTransform frame = LorentzTransform::identity();

    Picture picture() const { return field.picture; }
};

/// Build the bundle belonging to a field: standard gammas for the spinor
/// picture, the frame's transformed set for the vector picture.
PictureBundle make_bundle(const DiracField& f);

/// Spinor picture -> vector picture in the same frame: amplitudes are
/// left-multiplied by S^{-1} and the gammas replaced by S^{-1} gamma S,
/// where S is the spinor representation of the frame-from-lab transform.
/// In the lab frame this changes nothing but the picture tag.
/// Throws PreconditionError if the bundle is not in the spinor picture.
PictureBundle to_vector_picture(const PictureBundle& b);

/// Exact inverse of to_vector_picture.
PictureBundle to_spinor_picture(const PictureBundle& b);

/// Vector transformation law for the gamma set,
///     Gamma'^mu = (Lambda^{-1})^mu_nu Gamma^nu,
/// a componentwise linear combination of the matrices.  This route uses
/// only the Lorentz matrix, never the spinor representation, and preserves
/// the Clifford relation because Lambda preserves the metric.
/// Throws PreconditionError for spinor-picture sets: the fixed gammas do
/// not transform.
GammaSet transform_gammas(const GammaSet& g, const LorentzTransform& t);

/// The similarity route Gamma^mu = S^{-1} g^mu S.  Must agree with
/// transform_gammas for the paired transform; the two routes are kept as
/// independent code paths and cross-checked, since their consistency is
/// exactly the picture-equivalence statement.
GammaSet conjugate_gammas(const GammaSet& g, const SpinorRep& s);

/// Frame change of a whole bundle.  Spinor picture: field transforms,
/// gammas stay fixed.  Vector picture: field momenta relabel (scalar wave
/// function) and the gammas follow the vector law above; no spinor
/// representation is involved anywhere on this path.
PictureBundle transform_bundle(const PictureBundle& b, const LorentzTransform& t);

/// (i g^mu d_mu - m) field at x, using the bundle's own gamma set and
/// analytic derivatives.  Vanishes (to round-off) for solution fields in
/// either picture.
CVec4 dirac_residual(const PictureBundle& b, const FourVector& x);

/// Pointwise bilinear covariants.  scalar_bar and vector_current use the
/// Dirac adjoint with the FIXED gamma^0 in both pictures; vector_current
/// uses the bundle's own gamma set; kg_current is the antisymmetrized
/// derivative current (i/2) field^dagger (d_mu <->) field with the lowered
/// derivative index.
struct BilinearReport {
    Cplx scalar_bar;
    double density = 0.0;
    std::array<Cplx, 4> vector_current{};
    std::array<Cplx, 4> kg_current{};
    FourVector evaluated_at;
};

BilinearReport bilinears(const PictureBundle& b, const FourVector& x);

/// Residuals of the cross-picture bilinear identities for partner bundles
/// (one obtained from the other, same frame):
///   scalar_equality   |Psi-bar Psi - psi-bar psi|
///   current_equality  max_mu |Psi-bar Gamma^mu Psi - psi-bar gamma^mu psi|
///   density_witness   |Psi^dagger Psi - psi^dagger psi|
/// The first two vanish identically; the witness is strictly positive in
/// any boosted frame and quantifies why psi^dagger psi is not a scalar.
struct BilinearEqualityResiduals {
    double scalar_equality = 0.0;
    double current_equality = 0.0;
    double density_witness = 0.0;
};

BilinearEqualityResiduals check_bilinear_equalities(const PictureBundle& spinor_side,
                                                    const PictureBundle& vector_side,
                                                    const FourVector& x);

/// Analytic four-divergences of the two currents at x:
///   dirac = d_mu (field-bar g^mu field)
///   kg    = d^mu [(i/2) field^dagger (d_mu <->) field]
/// Both vanish for on-shell solution fields; an off-shell mode makes them
/// detectably nonzero.
struct CurrentDivergence {
    Cplx dirac;
    Cplx kg;
};

CurrentDivergence current_divergence(const PictureBundle& b, const FourVector& x);

/// Frame-change residuals of the vector-picture density and Klein-Gordon
/// current at the event x:
///   rho      |rho'(x') - rho(x)|                  (scalar law)
///   current  max_mu |j'_mu(x') - Lambda^a_mu j_a(x)|   (covector law)
/// with x' = Lambda^{-1} x.  Requires a vector-picture bundle.
struct RhoCurrentResiduals {
    double rho = 0.0;
    double current = 0.0;
};

RhoCurrentResiduals frame_invariance_of_rho_and_j(const PictureBundle& b,
                                                  const LorentzTransform& t,
                                                  const FourVector& x);

} // namespace dirac

#endif
