#ifndef DIRAC_LINALG_HPP
#define DIRAC_LINALG_HPP

#include <array>
#include <cmath>
#include <complex>

#include "dirac/errors.hpp"

namespace dirac {

using Cplx = std::complex<double>;

/// Real 4x4 matrix, row-major storage.
struct Mat4d {
    std::array<double, 16> e{};

    double& operator()(int i, int j) { return e[4 * i + j]; }
    double operator()(int i, int j) const { return e[4 * i + j]; }

    static Mat4d zero() { return {}; }

    static Mat4d identity()
    {
        Mat4d m;
        m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = 1.0;
        return m;
    }

    Mat4d transposed() const
    {
        Mat4d t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                t(i, j) = (*this)(j, i);
        return t;
    }

    double max_abs() const
    {
        double m = 0.0;
        for (double x : e)
            m = std::fmax(m, std::fabs(x));
        return m;
    }
};

inline Mat4d operator+(const Mat4d& a, const Mat4d& b)
{
    Mat4d r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] + b.e[n];
    return r;
}

inline Mat4d operator-(const Mat4d& a, const Mat4d& b)
{
    Mat4d r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] - b.e[n];
    return r;
}

inline Mat4d operator*(const Mat4d& a, double s)
{
    Mat4d r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] * s;
    return r;
}

inline Mat4d operator*(double s, const Mat4d& a) { return a * s; }

inline Mat4d operator*(const Mat4d& a, const Mat4d& b)
{
    Mat4d r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline double max_abs_diff(const Mat4d& a, const Mat4d& b) { return (a - b).max_abs(); }

/// Complex 4x4 matrix, row-major storage.
struct Mat4c {
    std::array<Cplx, 16> e{};

    Cplx& operator()(int i, int j) { return e[4 * i + j]; }
    const Cplx& operator()(int i, int j) const { return e[4 * i + j]; }

    static Mat4c zero() { return {}; }

    static Mat4c identity()
    {
        Mat4c m;
        m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = 1.0;
        return m;
    }

    Mat4c adjoint() const
    {
        Mat4c t;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                t(i, j) = std::conj((*this)(j, i));
        return t;
    }

    Cplx trace() const { return e[0] + e[5] + e[10] + e[15]; }

    double max_abs() const
    {
        double m = 0.0;
        for (const Cplx& x : e)
            m = std::fmax(m, std::abs(x));
        return m;
    }
};

inline Mat4c operator+(const Mat4c& a, const Mat4c& b)
{
    Mat4c r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] + b.e[n];
    return r;
}

inline Mat4c operator-(const Mat4c& a, const Mat4c& b)
{
    Mat4c r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] - b.e[n];
    return r;
}

inline Mat4c operator*(const Mat4c& a, const Cplx& s)
{
    Mat4c r;
    for (int n = 0; n < 16; ++n)
        r.e[n] = a.e[n] * s;
    return r;
}

inline Mat4c operator*(const Cplx& s, const Mat4c& a) { return a * s; }
inline Mat4c operator*(const Mat4c& a, double s) { return a * Cplx(s, 0.0); }
inline Mat4c operator*(double s, const Mat4c& a) { return a * Cplx(s, 0.0); }

inline Mat4c operator*(const Mat4c& a, const Mat4c& b)
{
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Cplx s = 0.0;
            for (int k = 0; k < 4; ++k)
                s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline double max_abs_diff(const Mat4c& a, const Mat4c& b) { return (a - b).max_abs(); }

inline Mat4c commutator(const Mat4c& a, const Mat4c& b) { return a * b - b * a; }

/// Complex 4-component column vector (spinor amplitudes and field values).
struct CVec4 {
    std::array<Cplx, 4> v{};

    Cplx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const Cplx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    double max_abs() const
    {
        double m = 0.0;
        for (const Cplx& x : v)
            m = std::fmax(m, std::abs(x));
        return m;
    }

    /// Squared Euclidean norm, i.e. the density psi^dagger psi.
    double norm2() const
    {
        double s = 0.0;
        for (const Cplx& x : v)
            s += std::norm(x);
        return s;
    }
};

inline CVec4 operator+(const CVec4& a, const CVec4& b)
{
    CVec4 r;
    for (int n = 0; n < 4; ++n)
        r.v[n] = a.v[n] + b.v[n];
    return r;
}

inline CVec4 operator-(const CVec4& a, const CVec4& b)
{
    CVec4 r;
    for (int n = 0; n < 4; ++n)
        r.v[n] = a.v[n] - b.v[n];
    return r;
}

inline CVec4 operator*(const CVec4& a, const Cplx& s)
{
    CVec4 r;
    for (int n = 0; n < 4; ++n)
        r.v[n] = a.v[n] * s;
    return r;
}

inline CVec4 operator*(const Cplx& s, const CVec4& a) { return a * s; }

inline CVec4 operator*(const Mat4c& m, const CVec4& x)
{
    CVec4 r;
    for (int i = 0; i < 4; ++i) {
        Cplx s = 0.0;
        for (int j = 0; j < 4; ++j)
            s += m(i, j) * x.v[j];
        r.v[i] = s;
    }
    return r;
}

/// Hermitian inner product a^dagger b (conjugate-linear in the first slot).
inline Cplx inner(const CVec4& a, const CVec4& b)
{
    Cplx s = 0.0;
    for (int n = 0; n < 4; ++n)
        s += std::conj(a.v[n]) * b.v[n];
    return s;
}

/// Plain contraction of a row vector with a column vector, no conjugation.
inline Cplx row_dot(const CVec4& row, const CVec4& col)
{
    Cplx s = 0.0;
    for (int n = 0; n < 4; ++n)
        s += row.v[n] * col.v[n];
    return s;
}

inline double max_abs_diff(const CVec4& a, const CVec4& b) { return (a - b).max_abs(); }

/// 4x4 determinant by cofactor expansion.
template <class M, class Scalar = std::decay_t<decltype(std::declval<M>()(0, 0))>>
Scalar det4(const M& m)
{
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1))
             - m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0))
             + m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3)
         + m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

namespace detail {

// Scaling-and-squaring on the truncated Taylor series.  Terms are summed
// until the next term's max-norm drops below 1e-16; 4x4 matrices need
// nothing fancier.
template <class M>
M expm_impl(const M& a)
{
    M x = a;
    int squarings = 0;
    double norm = a.max_abs();
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    if (squarings > 0)
        x = a * std::ldexp(1.0, -squarings);

    M result = M::identity();
    M term = M::identity();
    bool converged = false;
    for (int k = 1; k <= 40; ++k) {
        term = term * x * (1.0 / static_cast<double>(k));
        result = result + term;
        if (term.max_abs() < 1e-16) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericError("matrix exponential series did not converge");
    for (int s = 0; s < squarings; ++s)
        result = result * result;
    return result;
}

} // namespace detail

inline Mat4d expm(const Mat4d& a) { return detail::expm_impl(a); }
inline Mat4c expm(const Mat4c& a) { return detail::expm_impl(a); }

} // namespace dirac

#endif
