#ifndef DYNLAB_POLY_HPP
#define DYNLAB_POLY_HPP

#include <stdexcept>
#include <vector>

#include "dynlab/projective.hpp"

namespace dynlab {

// Coefficients are stored in decreasing power order: c[0] z^n + ... + c[n].
// A homogeneous binary form of degree n uses the same layout with
// c[i] multiplying z0^{n-i} z1^i.
using Coeffs = std::vector<cplx>;

// Horner evaluation of sum c[i] t^{n-i}.
inline cplx horner(const Coeffs& c, cplx t) {
    cplx v(0.0, 0.0);
    for (const cplx& ci : c) v = v * t + ci;
    return v;
}

// Horner with simultaneous derivative and a running magnitude scale
// s = sum |c[i]| |t|^{n-i}, the standard backward-error yardstick.
inline void horner_full(const Coeffs& c, cplx t, cplx& value, cplx& deriv, double& scale) {
    cplx v(0.0, 0.0), d(0.0, 0.0);
    double s = 0.0;
    const double at = std::abs(t);
    for (const cplx& ci : c) {
        d = d * t + v;
        v = v * t + ci;
        s = s * at + std::abs(ci);
    }
    value = v;
    deriv = d;
    scale = s;
}

Coeffs poly_derivative(const Coeffs& c);
Coeffs poly_multiply(const Coeffs& a, const Coeffs& b);
Coeffs poly_subtract(const Coeffs& a, const Coeffs& b);
Coeffs poly_scale(const Coeffs& a, cplx s);

// d/dz0 and d/dz1 of a homogeneous form of degree n (layout above).
Coeffs homog_d0(const Coeffs& c);
Coeffs homog_d1(const Coeffs& c);

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All projective roots of a binary form, counted with multiplicity.
struct PolyRoots {
    std::vector<ProjectivePoint> roots;       // size == degree
    std::vector<double> residuals;            // relative |form(root)|
    std::vector<std::vector<int>> clusters;   // index groups within cluster radius

    bool has_multiple() const {
        for (const auto& g : clusters)
            if (g.size() > 1) return true;
        return false;
    }
};

// Affine roots of c[0] z^n + ... + c[n]; requires |c[0]| above the stripping
// tolerance and degree >= 1.  Aberth-Ehrlich with companion-matrix fallback.
PolyRoots solve_poly(const Coeffs& coeffs);

// Projective roots of a homogeneous binary form; leading/trailing zero
// coefficients become roots at infinity/zero.
PolyRoots solve_homogeneous(const Coeffs& coeffs);

// log |det Sylvester(p, q)| for binary forms of equal degree, used as the
// nondegeneracy certificate; coefficient vectors should be pre-normalized.
double log_abs_resultant(const Coeffs& p, const Coeffs& q);

}  // namespace dynlab

#endif
