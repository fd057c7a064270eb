#include "dirac/lorentz.hpp"

#include <cmath>

namespace dirac {

Mat4d minkowski_metric()
{
    Mat4d eta;
    eta(0, 0) = 1.0;
    eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
    return eta;
}

double minkowski_dot(const FourVector& a, const FourVector& b)
{
    return a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3];
}

double minkowski_norm2(const FourVector& x) { return minkowski_dot(x, x); }

FourVector lower_index(const FourVector& a) { return {a.c[0], -a.c[1], -a.c[2], -a.c[3]}; }

bool GeneratorParams::finite() const
{
    for (int k = 0; k < 3; ++k)
        if (!std::isfinite(rapidity[k]) || !std::isfinite(rotation[k]))
            return false;
    return true;
}

GeneratorParams GeneratorParams::negated() const
{
    GeneratorParams n;
    for (int k = 0; k < 3; ++k) {
        n.rapidity[k] = -rapidity[k];
        n.rotation[k] = -rotation[k];
    }
    return n;
}

namespace {

// Boost generators K_k carry 1 at (0,k) and (k,0).  Rotation generators
// J_k have spatial block (J_k)_ij = -eps_{ijk}, which exponentiates to an
// active right-handed rotation about axis k.
Mat4d generator_matrix(const GeneratorParams& p)
{
    Mat4d g;
    for (int k = 0; k < 3; ++k) {
        g(0, k + 1) = p.rapidity[k];
        g(k + 1, 0) = p.rapidity[k];
    }
    g(1, 2) = -p.rotation[2];
    g(2, 1) = p.rotation[2];
    g(2, 3) = -p.rotation[0];
    g(3, 2) = p.rotation[0];
    g(3, 1) = -p.rotation[1];
    g(1, 3) = p.rotation[1];
    return g;
}

void require_finite(const GeneratorParams& p)
{
    if (!p.finite())
        throw InvalidParameterError("generator parameters must be finite");
}

} // namespace

LorentzTransform LorentzTransform::identity() { return LorentzTransform{}; }

LorentzTransform LorentzTransform::from_matrix(const Mat4d& m)
{
    LorentzTransform t;
    t.matrix_ = m;
    t.generator_built_ = false;
    if (metric_residual(t) > 1e-10)
        throw ValidationError("matrix violates the metric-preservation invariant "
                              "Lambda^T eta Lambda = eta");
    if (!is_proper_orthochronous(t))
        throw ValidationError("matrix violates the proper-orthochronous invariant "
                              "det Lambda = +1, Lambda^0_0 >= 1");
    return t;
}

LorentzTransform from_params(const GeneratorParams& params)
{
    require_finite(params);
    LorentzTransform t;
    t.matrix_ = expm(generator_matrix(params));
    t.lineage_ = {params};
    return t;
}

LorentzTransform boost(const std::array<double, 3>& rapidity)
{
    GeneratorParams p;
    p.rapidity = rapidity;
    return from_params(p);
}

LorentzTransform rotation(const std::array<double, 3>& angles)
{
    GeneratorParams p;
    p.rotation = angles;
    return from_params(p);
}

LorentzTransform compose(const LorentzTransform& a, const LorentzTransform& b)
{
    LorentzTransform t;
    t.matrix_ = a.matrix_ * b.matrix_;
    t.generator_built_ = a.generator_built_ && b.generator_built_;
    if (t.generator_built_) {
        t.lineage_ = a.lineage_;
        t.lineage_.insert(t.lineage_.end(), b.lineage_.begin(), b.lineage_.end());
    }
    return t;
}

LorentzTransform inverse(const LorentzTransform& t)
{
    const Mat4d eta = minkowski_metric();
    LorentzTransform inv;
    inv.matrix_ = eta * t.matrix().transposed() * eta;
    inv.generator_built_ = t.has_lineage();
    if (inv.generator_built_) {
        const auto& lin = t.lineage();
        inv.lineage_.reserve(lin.size());
        for (auto it = lin.rbegin(); it != lin.rend(); ++it)
            inv.lineage_.push_back(it->negated());
    }
    return inv;
}

FourVector apply(const LorentzTransform& t, const FourVector& x)
{
    FourVector y;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j)
            s += t.matrix()(i, j) * x.c[j];
        y.c[i] = s;
    }
    return y;
}

FourVector to_frame(const LorentzTransform& t, const FourVector& x)
{
    return apply(inverse(t), x);
}

double metric_residual(const LorentzTransform& t)
{
    const Mat4d eta = minkowski_metric();
    return max_abs_diff(t.matrix().transposed() * eta * t.matrix(), eta);
}

bool is_proper_orthochronous(const LorentzTransform& t, double tol)
{
    return std::fabs(det4(t.matrix()) - 1.0) <= tol && t.matrix()(0, 0) >= 1.0 - tol;
}

} // namespace dirac
