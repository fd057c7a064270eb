#ifndef DIRAC_SPINOR_REP_HPP
#define DIRAC_SPINOR_REP_HPP

#include <vector>

#include "dirac/clifford.hpp"
#include "dirac/lorentz.hpp"

namespace dirac {

/// Complex 4x4 matrix S implementing a Lorentz transformation on spinor
/// indices, together with the generator lineage of the transform it
/// represents.  The binding contract, enforced by verify_intertwining, is
///
///     S g^a S^{-1} = Lambda^a_mu g^mu
///
/// against the paired LorentzTransform.  S is unimodular, pseudo-unitary
/// (S^{-1} = g0 S^dagger g0), unitary for pure rotations and Hermitian
/// positive-definite for pure boosts.
struct SpinorRep {
    Mat4c matrix;
    std::vector<GeneratorParams> lineage;
};

/// Spinor representation of a single generator step:
///     S = exp(-(i/4) omega_{mu nu} sigma^{mu nu})
/// with the packing omega_{0k} = -rapidity_k, omega_{ij} = -eps_{ijk}
/// angle_k.  The signs are fixed by requiring the intertwining identity
/// above against Lambda = exp(rapidity.K + angle.J); flipping either one
/// would pair S with the inverse transform instead.
SpinorRep spinor_rep_for(const GeneratorParams& params);

/// Spinor representation of a generator-built transform.  Because the
/// intertwining identity is order-reversing under matrix composition
/// (S_a S_b pairs with Lambda_b Lambda_a), the lineage entries are
/// multiplied in reverse order so that the result pairs with
/// Lambda = Lambda_1 ... Lambda_n exactly as composed.
/// Throws UnsupportedInputError for transforms without a lineage.
SpinorRep spinor_rep_for_transform(const LorentzTransform& t);

/// S^{-1} computed as g0 S^dagger g0 rather than by numerical inversion;
/// this is cheap, exact up to construction error, and exercises the
/// pseudo-unitarity identity on every use.
Mat4c spinor_rep_inverse(const SpinorRep& s);

/// max over a of || S g^a S^{-1} - Lambda^a_mu g^mu ||_max, together with
/// the inverse form S^{-1} g^a S = (Lambda^{-1})^a_mu g^mu; returns the
/// larger residual.
double verify_intertwining(const SpinorRep& s, const LorentzTransform& t);

/// max of || S^{-1} - g0 S^dagger g0 ||_max and || g0 S^{-1} - S^dagger g0
/// ||_max, where the reference S^{-1} is rebuilt from the negated lineage
/// (the exact group inverse) so the identity is checked, not assumed.
double verify_pseudo_unitarity(const SpinorRep& s);

} // namespace dirac

#endif
