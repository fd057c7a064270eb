#ifndef DIRAC_LORENTZ_HPP
#define DIRAC_LORENTZ_HPP

#include <array>
#include <vector>

#include "dirac/linalg.hpp"

namespace dirac {

/// Real 4-component spacetime or momentum vector, index 0 = time,
/// natural units c = 1, metric signature (+,-,-,-).
struct FourVector {
    std::array<double, 4> c{};

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    double max_abs() const
    {
        double m = 0.0;
        for (double x : c)
            m = std::fmax(m, std::fabs(x));
        return m;
    }
};

inline FourVector operator+(const FourVector& a, const FourVector& b)
{
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
}

inline FourVector operator-(const FourVector& a, const FourVector& b)
{
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
}

inline FourVector operator*(const FourVector& a, double s)
{
    return {a.c[0] * s, a.c[1] * s, a.c[2] * s, a.c[3] * s};
}

/// Minkowski metric eta = diag(1,-1,-1,-1).
Mat4d minkowski_metric();

/// eta_{mu nu} a^mu b^nu.
double minkowski_dot(const FourVector& a, const FourVector& b);

/// x.x = eta_{mu nu} x^mu x^nu.
double minkowski_norm2(const FourVector& x);

/// Index lowering: a_mu = eta_{mu nu} a^nu.
FourVector lower_index(const FourVector& a);

/// Abstract generator coefficients for one exponential step: a boost
/// rapidity vector (dimensionless) and a rotation angle vector (radians,
/// active right-handed rotation about the axis).  Recommended test ranges
/// are |rapidity| <= 3 and |rotation| <= 2 pi.
struct GeneratorParams {
    std::array<double, 3> rapidity{};
    std::array<double, 3> rotation{};

    bool finite() const;
    GeneratorParams negated() const;
};

/// Proper orthochronous Lorentz transformation.  Instances are always built
/// from boost/rotation generators (never ingested as raw matrices), so the
/// generator lineage needed to construct the matching spinor representation
/// is available by construction.  The one escape hatch, from_matrix(), yields
/// a transform without lineage that the spinor-representation machinery
/// rejects.
class LorentzTransform {
public:
    static LorentzTransform identity();

    /// Validating constructor for externally supplied matrices.  The result
    /// carries no lineage.  Throws ValidationError unless the matrix is
    /// metric-preserving, det = +1 and Lambda^0_0 >= 1 (tolerance 1e-10).
    static LorentzTransform from_matrix(const Mat4d& m);

    const Mat4d& matrix() const { return matrix_; }
    const std::vector<GeneratorParams>& lineage() const { return lineage_; }

    /// True when built from generators (possibly an empty composition).
    bool has_lineage() const { return generator_built_; }

private:
    friend LorentzTransform boost(const std::array<double, 3>&);
    friend LorentzTransform rotation(const std::array<double, 3>&);
    friend LorentzTransform from_params(const GeneratorParams&);
    friend LorentzTransform compose(const LorentzTransform&, const LorentzTransform&);
    friend LorentzTransform inverse(const LorentzTransform&);

    Mat4d matrix_ = Mat4d::identity();
    std::vector<GeneratorParams> lineage_;
    bool generator_built_ = true;
};

/// Lambda = exp(K . rapidity) with K the three standard boost generators.
LorentzTransform boost(const std::array<double, 3>& rapidity);

/// Spatial block exp(J . angles), active right-handed rotation; time
/// row/column stays (1,0,0,0).
LorentzTransform rotation(const std::array<double, 3>& angles);

/// One exponential step mixing boost and rotation generators.
LorentzTransform from_params(const GeneratorParams& params);

/// Matrix product a.matrix * b.matrix with lineage a.lineage ++ b.lineage.
/// In the frame-change reading (see to_frame below) this is "step a, then
/// step b".
LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b);

/// Inverse computed as eta Lambda^T eta, exact for metric-preserving
/// matrices; the lineage is reversed with negated parameters.
LorentzTransform inverse(const LorentzTransform& t);

/// (Lambda x)^mu = Lambda^mu_nu x^nu.
FourVector apply(const LorentzTransform& t, const FourVector& x);

/// Coordinates of the event x in the frame reached by t.  The library
/// convention, fixed once and used everywhere, is
///     x_new = Lambda^{-1} x_old,
/// i.e. a transform "to a frame" applies the inverse matrix to coordinates.
FourVector to_frame(const LorentzTransform& t, const FourVector& x);

/// max-norm of Lambda^T eta Lambda - eta.
double metric_residual(const LorentzTransform& t);

/// det Lambda = +1 and Lambda^0_0 >= 1, within tol.
bool is_proper_orthochronous(const LorentzTransform& t, double tol = 1e-10);

} // namespace dirac

#endif
