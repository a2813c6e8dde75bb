#ifndef DYNLAB_TOLERANCES_HPP
#define DYNLAB_TOLERANCES_HPP

// Shared numeric decisions. One definition each, used by every module.
namespace dynlab::tol {

// Two projective points are equal iff chordal distance < kPointEq.
inline constexpr double kPointEq = 1e-12;

// Relative residual bound certifying a polynomial root.
inline constexpr double kRootResidual = 1e-11;

// Chordal radius for merging root clusters into a multiple root.
inline constexpr double kClusterRadius = 1e-7;

// Paths must keep this chordal distance from critical values.
inline constexpr double kCriticalProximity = 1e-4;

// Relative |resultant| below which a map is rejected as degenerate.
inline constexpr double kResultantMin = 1e-10;

// Newton corrector target for path continuation.
inline constexpr double kCorrectorTol = 1e-12;

// Full tree storage allowed up to this many vertices (incl. path samples).
inline constexpr unsigned long long kTreeBudget = 1ull << 22;

// Aberth-Ehrlich iteration cap.
inline constexpr int kRootMaxIter = 200;

}  // namespace dynlab::tol

#endif
