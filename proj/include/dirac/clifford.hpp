#ifndef DIRAC_CLIFFORD_HPP
#define DIRAC_CLIFFORD_HPP

#include <array>
#include <string>

#include "dirac/linalg.hpp"
#include "dirac/lorentz.hpp"

namespace dirac {

/// Whether a quantity lives in the spinor picture (fixed gamma matrices,
/// transforming wave function) or the vector picture (transforming Gamma
/// matrices, scalar wave function).
enum class Picture { Spinor, Vector };

/// Four complex 4x4 matrices satisfying the Clifford relation
/// {g^mu, g^nu} = 2 eta^{mu nu}, tagged with the picture and frame they
/// belong to.
struct GammaSet {
    std::array<Mat4c, 4> matrices;
    Picture picture = Picture::Spinor;
    std::string frame_label = "lab";

    const Mat4c& operator[](int mu) const { return matrices[static_cast<std::size_t>(mu)]; }
};

/// The standard (Dirac-representation) gamma matrices: gamma^0 =
/// diag(1,1,-1,-1) and gamma^k assembled from Pauli blocks.  gamma^0 is
/// Hermitian, the spatial ones anti-Hermitian; this fixed set never
/// transforms in the spinor picture.
GammaSet standard_gammas();

/// ab + ba.
Mat4c anticommutator(const Mat4c& a, const Mat4c& b);

/// sigma^{mu nu} = (i/2) [g^mu, g^nu], antisymmetric in (mu, nu).
/// sigma^{0k} is anti-Hermitian and sigma^{jk} Hermitian for the
/// standard set.
struct SigmaGenerators {
    std::array<std::array<Mat4c, 4>, 4> sigma;

    const Mat4c& operator()(int mu, int nu) const
    {
        return sigma[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
    }
};

SigmaGenerators sigma_generators(const GammaSet& g);

/// max over (mu, nu) of || {g^mu, g^nu} - 2 eta^{mu nu} I ||_max.
double verify_clifford(const GammaSet& g);

/// (g^mu p_mu)^2.  For any Clifford set this equals (p.p) I, which is the
/// consistency condition for the Dirac operator to square to the
/// Klein-Gordon operator.
Mat4c square_dirac_operator(const GammaSet& g, const FourVector& p);

/// psi-bar = psi^dagger g0 as a row vector.  g0 is always the fixed
/// standard gamma^0, in both pictures.
CVec4 dirac_adjoint(const CVec4& psi, const Mat4c& g0);

/// Convenience overload using the standard gamma^0.
CVec4 dirac_adjoint(const CVec4& psi);

} // namespace dirac

#endif
