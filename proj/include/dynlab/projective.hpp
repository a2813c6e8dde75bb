#ifndef DYNLAB_PROJECTIVE_HPP
#define DYNLAB_PROJECTIVE_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dynlab/tolerances.hpp"

namespace dynlab {

using cplx = std::complex<double>;

inline double abs2(const cplx& z) { return z.real() * z.real() + z.imag() * z.imag(); }

// A point of P^1 in homogeneous coordinates [z0 : z1], kept normalized so
// that max(|z0|, |z1|) = 1.  [1:0] is the point at infinity.
struct ProjectivePoint {
    cplx z0{0.0, 0.0};
    cplx z1{1.0, 0.0};

    ProjectivePoint() = default;
    ProjectivePoint(cplx a, cplx b) : z0(a), z1(b) { normalize(); }

    static ProjectivePoint affine(cplx z) { return ProjectivePoint(z, cplx(1.0, 0.0)); }
    static ProjectivePoint infinity() {
        ProjectivePoint p;
        p.z0 = cplx(1.0, 0.0);
        p.z1 = cplx(0.0, 0.0);
        return p;
    }

    void normalize() {
        const double a = std::abs(z0), b = std::abs(z1);
        const double m = a > b ? a : b;
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::domain_error("ProjectivePoint: (0,0) or non-finite coordinates");
        z0 /= m;
        z1 /= m;
    }

    bool is_infinity() const { return std::abs(z1) < tol::kPointEq; }

    // affine chart value z0/z1; huge but finite near infinity
    cplx affine_value() const {
        if (is_infinity()) return cplx(1.0 / tol::kPointEq, 0.0);
        return z0 / z1;
    }

    double norm2() const { return abs2(z0) + abs2(z1); }
};

// |p0 q1 - p1 q0| / (|p| |q|), the spherical chord metric with diameter 1.
inline double chordal(const ProjectivePoint& p, const ProjectivePoint& q) {
    const cplx cross = p.z0 * q.z1 - p.z1 * q.z0;
    double d = std::abs(cross) / std::sqrt(p.norm2() * q.norm2());
    return d > 1.0 ? 1.0 : d;
}

inline bool projectively_equal(const ProjectivePoint& p, const ProjectivePoint& q) {
    return chordal(p, q) < tol::kPointEq;
}

// Great-circle-chord interpolation: phase-align the homogeneous vectors and
// combine linearly, then renormalize.  For s in [0,1] this traces the short
// chord from p to q on the sphere.
inline ProjectivePoint geodesic_chord(const ProjectivePoint& p, const ProjectivePoint& q, double s) {
    cplx inner = std::conj(p.z0) * q.z0 + std::conj(p.z1) * q.z1;
    cplx phase(1.0, 0.0);
    const double m = std::abs(inner);
    if (m > 1e-14) phase = inner / m;
    // q aligned so <p, q'> is real >= 0; antipodal pairs keep phase = 1
    const cplx a0 = p.z0 * (1.0 - s) + q.z0 / phase * s;
    const cplx a1 = p.z1 * (1.0 - s) + q.z1 / phase * s;
    return ProjectivePoint(a0, a1);
}

// Normalized Lebesgue (Fubini-Study) area of a chordal ball of radius r.
// With total area 1 and chord metric of diameter 1 this is exactly r^2.
inline double leb_chordal_ball(double r) { return r * r; }

// Sort key for deterministic root/preimage ordering: finite points by
// (Re, Im) of the affine value, infinity last.
inline bool point_order_less(const ProjectivePoint& a, const ProjectivePoint& b) {
    const bool ia = a.is_infinity(), ib = b.is_infinity();
    if (ia != ib) return ib;
    if (ia && ib) return false;
    const cplx za = a.affine_value(), zb = b.affine_value();
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
}

// ---- product space P^1 x P^1 ----

struct ProductPoint {
    ProjectivePoint x, y;
};

inline double chordal(const ProductPoint& p, const ProductPoint& q) {
    // max metric on the product; any equivalent metric works for diagnostics
    return std::max(chordal(p.x, q.x), chordal(p.y, q.y));
}

}  // namespace dynlab

#endif
