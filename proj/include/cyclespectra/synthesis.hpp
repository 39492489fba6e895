#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string_view>

#include "core.hpp"
#include "criterion.hpp"
#include "cycle_matrix.hpp"
#include "region.hpp"

namespace cyclespectra {

enum class RealizationMethod { RealInterval, BoundaryCR, BoundaryCL, InteriorShrink, CriterionSolver };

inline std::string_view to_string(RealizationMethod m) {
    switch (m) {
        case RealizationMethod::RealInterval: return "RealInterval";
        case RealizationMethod::BoundaryCR: return "BoundaryCR";
        case RealizationMethod::BoundaryCL: return "BoundaryCL";
        case RealizationMethod::InteriorShrink: return "InteriorShrink";
        case RealizationMethod::CriterionSolver: return "CriterionSolver";
    }
    return "Unknown";
}

/// A matrix carrying lam in its spectrum, with how it was built.
struct Realization {
    CycleMatrix4 matrix;
    Complex lam;
    RealizationMethod method;
    std::optional<Complex> mu;        // CL anchor, InteriorShrink only
    std::optional<double> shrink_l;   // InteriorShrink only
    double residual = 0.0;
};

/// alpha = (mu^4 - 1) / (mu^3 - 1) for mu on CL; real exactly when G(mu) = 0.
inline double alpha_L_of_mu(Complex mu, const Tolerance& tol = {}) {
    require_finite(mu, "alpha_L_of_mu");
    if (!(mu.imag() > 0.0))
        throw Error(ErrorCode::NotOnCurve, "mu must lie in the open upper half-plane");
    const Complex mu3 = mu * mu * mu;
    const Complex q = (mu3 * mu - 1.0) / (mu3 - 1.0);
    if (std::abs(q.imag()) > tol.eigen_residual)
        throw Error(ErrorCode::NotOnCurve,
                    "Im(alpha) = " + std::to_string(q.imag()) + ", mu is not on G = 0");
    double alpha = q.real();
    // alpha = 0 exactly at mu = i; rounding may leave a tiny negative value.
    if (alpha < 0.0 && alpha > -tol.eigen_residual) alpha = 0.0;
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw Error(ErrorCode::AlphaOutOfRange, "alpha = " + std::to_string(alpha));
    return alpha;
}

/// A_L(alpha) = (alpha, 0, 0, 0).
inline CycleMatrix4 left_boundary_matrix(double alpha) {
    return make_cycle_matrix(alpha, 0.0, 0.0, 0.0);
}

struct RayHit {
    Complex mu;
    double s_star;
};

/// Intersects the ray 1 + s (lam - 1), s >= 1, with the curve G = 0 by bisection on
/// [1, s0], where s0 puts the ray on the imaginary axis. G(lam) > 0 at s = 1 and
/// G(0, b') = b'^2 (b'^2 - 1) < 0 at s0.
inline RayHit ray_hit_CL(Complex lam, const Tolerance& tol = {}) {
    require_finite(lam, "ray_hit_CL");
    const double a = lam.real();
    const double b = lam.imag();
    if (!(b > 0.0) || !(a > 0.0) || !(a < 1.0) || !(a + b < 1.0) || !(G(a, b) > 0.0))
        throw Error(ErrorCode::NotInterior, "lam is not a strict interior point");

    const Complex dir = lam - 1.0;
    auto point = [&](double s) { return Complex(1.0 + s * dir.real(), s * dir.imag()); };
    auto h = [&](double s) {
        const Complex p = point(s);
        return G(p.real(), p.imag());
    };

    double lo = 1.0;
    double hi = 1.0 / (1.0 - a);
    double h_hi = h(hi);
    if (h_hi >= 0.0) {
        hi *= 1.0 + 1e-6;
        h_hi = h(hi);
        if (h_hi >= 0.0) throw Error(ErrorCode::BracketFailure, "G >= 0 at the far bracket end");
    }
    double h_lo = h(lo);

    // Bisect until the bracket cannot shrink further.
    for (int iter = 0; iter < 4 * tol.max_iter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = h(mid);
        if (v == 0.0) {
            lo = hi = mid;
            h_lo = h_hi = 0.0;
            break;
        }
        if (v > 0.0) {
            lo = mid;
            h_lo = v;
        } else {
            hi = mid;
            h_hi = v;
        }
    }
    const double s = std::abs(h_lo) <= std::abs(h_hi) ? lo : hi;
    const double hs = h(s);
    if (!(std::abs(hs) < 1e-12))
        throw Error(ErrorCode::BracketFailure, "bisection left |G| = " + std::to_string(hs));
    return {point(s), s};
}

/// alpha_k -> (1 - l) + l alpha_k, i.e. A -> (1 - l) I + l A.
inline CycleMatrix4 shrink(const CycleMatrix4& m, double l) {
    if (!std::isfinite(l) || !(l > 0.0) || l > 1.0)
        throw Error(ErrorCode::ShrinkOutOfRange, "l must lie in (0, 1]");
    if (l == 1.0) return m;
    std::array<double, 4> a{};
    for (int k = 0; k < 4; ++k) a[k] = (1.0 - l) + l * m.alpha()[k];
    return make_cycle_matrix(a);
}

namespace detail {

inline Realization make_realization(const CycleMatrix4& m, Complex target, Complex upper,
                                    RealizationMethod method, const Tolerance& tol) {
    Realization r{m, target, method, std::nullopt, std::nullopt, eigen_residual(m, upper)};
    if (!(r.residual < tol.eigen_residual))
        throw Error(ErrorCode::NoConvergence,
                    std::string(to_string(method)) + " residual " + std::to_string(r.residual));
    return r;
}

inline Realization realize_real(Complex lam, const Tolerance& tol) {
    const double r = std::clamp(lam.real(), -1.0, 1.0);
    const double x = 0.5 * (1.0 - r);
    // x = 0 would need alpha = 1; every member of the family has eigenvalue 1.
    const double alpha = x == 0.0 ? 0.0 : 1.0 - x;
    const CycleMatrix4 m = make_cycle_matrix(alpha, alpha, alpha, alpha);
    return make_realization(m, lam, Complex(lam.real(), 0.0), RealizationMethod::RealInterval, tol);
}

}  // namespace detail

/// Builds a matrix whose spectrum contains lam.
///
/// Real points use the equal-parameter matrix (1 - x) I + x P; CR points the same family
/// with x = |b|; CL points A_L(alpha) with alpha from alpha_L_of_mu. Interior points follow
/// the ray from 1 through lam to its CL hit mu and shrink A_L(alpha(mu)) by l = 1/s*.
/// Lower half-plane inputs are conjugated first; the matrix is the same.
inline Realization realize(Complex lam, const Tolerance& tol = {}) {
    tol.validate();
    const RegionVerdict verdict = membership(lam, tol);
    const Complex upper(lam.real(), std::abs(lam.imag()));

    switch (verdict.status) {
        case RegionStatus::Outside:
            throw Error(ErrorCode::OutsideRegion, "lam is outside the spectral region");
        case RegionStatus::InsideRealInterval:
        case RegionStatus::BoundaryRealEndpoint:
            return detail::realize_real(lam, tol);
        case RegionStatus::BoundaryCR: {
            const double x = std::min(upper.imag(), 1.0);
            const double alpha = 1.0 - x;
            return detail::make_realization(make_cycle_matrix(alpha, alpha, alpha, alpha), lam,
                                            upper, RealizationMethod::BoundaryCR, tol);
        }
        case RegionStatus::BoundaryCL: {
            const double alpha = alpha_L_of_mu(upper, tol);
            return detail::make_realization(left_boundary_matrix(alpha), lam, upper,
                                            RealizationMethod::BoundaryCL, tol);
        }
        case RegionStatus::InsideNonreal: {
            const RayHit hit = ray_hit_CL(upper, tol);
            const double alpha = alpha_L_of_mu(hit.mu, tol);
            const double l = 1.0 / hit.s_star;
            Realization r = detail::make_realization(shrink(left_boundary_matrix(alpha), l), lam,
                                                     upper, RealizationMethod::InteriorShrink, tol);
            r.mu = hit.mu;
            r.shrink_l = l;
            return r;
        }
    }
    throw Error(ErrorCode::OutsideRegion, "unreachable verdict");
}

/// Same contract as realize, but nonreal points go through solve_criterion.
inline Realization realize_by_criterion(Complex lam, const Tolerance& tol = {}) {
    tol.validate();
    const RegionVerdict verdict = membership(lam, tol);
    if (verdict.status == RegionStatus::Outside)
        throw Error(ErrorCode::OutsideRegion, "lam is outside the spectral region");
    if (verdict.status == RegionStatus::InsideRealInterval ||
        verdict.status == RegionStatus::BoundaryRealEndpoint)
        return detail::realize_real(lam, tol);

    const Complex upper(lam.real(), std::abs(lam.imag()));
    const CriterionSolution sol = solve_criterion(make_context(upper), tol);
    return detail::make_realization(to_matrix(sol), lam, upper, RealizationMethod::CriterionSolver,
                                    tol);
}

}  // namespace cyclespectra
