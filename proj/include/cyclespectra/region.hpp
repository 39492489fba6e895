#pragma once

#include <cmath>
#include <string_view>
#include <vector>

#include "core.hpp"
#include "quartic.hpp"

namespace cyclespectra {

/// Left-boundary polynomial (b^2 + a^2 + a)^2 + 2a^2 - b^2.
inline double G(double a, double b) {
    const double q = b * b + a * a + a;
    return q * q + 2.0 * a * a - b * b;
}

/// 4a^3 - 3a^2 - 4ab^2 + b^2; |lam|^6 - N = |lam - 1|^2 G.
inline double N(double a, double b) {
    return 4.0 * a * a * a - 3.0 * a * a - 4.0 * a * b * b + b * b;
}

enum class RegionStatus {
    InsideNonreal,
    InsideRealInterval,
    BoundaryCR,
    BoundaryCL,
    BoundaryRealEndpoint,
    Outside,
};

inline std::string_view to_string(RegionStatus s) {
    switch (s) {
        case RegionStatus::InsideNonreal: return "InsideNonreal";
        case RegionStatus::InsideRealInterval: return "InsideRealInterval";
        case RegionStatus::BoundaryCR: return "BoundaryCR";
        case RegionStatus::BoundaryCL: return "BoundaryCL";
        case RegionStatus::BoundaryRealEndpoint: return "BoundaryRealEndpoint";
        case RegionStatus::Outside: return "Outside";
    }
    return "Unknown";
}

/// Constraint values a >= 0, 1 - a - |b| >= 0 and G(a, |b|) >= 0 that decided a verdict.
struct Binding {
    double a_check = 0.0;
    double right_check = 0.0;
    double g_check = 0.0;
};

struct RegionVerdict {
    RegionStatus status = RegionStatus::Outside;
    Binding binding;

    bool inside() const noexcept { return status != RegionStatus::Outside; }
};

/// Classifies lam against the nonreal region union [-1, 1].
///
/// |b| < band counts as real. All comparisons use the absolute band on the constraint
/// values; CR wins over CL where both trigger (near lam = i).
inline RegionVerdict membership(Complex lam, const Tolerance& tol = {}) {
    require_finite(lam, "membership");
    const double band = tol.boundary_band;
    const double a = lam.real();
    const double b = std::abs(lam.imag());

    RegionVerdict v;
    v.binding = {a, 1.0 - a - b, G(a, b)};

    if (b < band) {
        const double r = std::abs(a);
        if (r > 1.0 + band) {
            v.status = RegionStatus::Outside;
        } else if (std::abs(r - 1.0) <= band) {
            v.status = RegionStatus::BoundaryRealEndpoint;
        } else {
            v.status = RegionStatus::InsideRealInterval;
        }
        return v;
    }

    if (a < -band || a >= 1.0 || v.binding.right_check < -band || v.binding.g_check < -band) {
        v.status = RegionStatus::Outside;
    } else if (std::abs(v.binding.right_check) <= band) {
        v.status = RegionStatus::BoundaryCR;
    } else if (std::abs(v.binding.g_check) <= band) {
        v.status = RegionStatus::BoundaryCL;
    } else {
        v.status = RegionStatus::InsideNonreal;
    }
    return v;
}

/// n points 1 - x + ix with x uniform on [0, 1], endpoints included.
inline std::vector<Complex> trace_CR(int n) {
    if (n < 2) throw Error(ErrorCode::ArgumentOutOfRange, "trace_CR needs n >= 2");
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double x = static_cast<double>(j) / (n - 1);
        pts.emplace_back(1.0 - x, x);
    }
    return pts;
}

struct CLPoint {
    double alpha;
    Complex lam;
};

/// Upper nonreal root of x^4 - alpha x^3 + alpha - 1, the eigenvalue of A_L(alpha) on CL.
inline Complex upper_CL_root(double alpha, const Tolerance& tol = {}) {
    const QuarticRoots roots = solve_quartic(1.0, -alpha, 0.0, 0.0, alpha - 1.0, tol);
    const Complex* best = nullptr;
    for (const Complex& r : roots) {
        if (r.imag() <= tol.boundary_band) continue;
        if (best != nullptr) {
            throw Error(ErrorCode::SpectrumFailure,
                        "two upper-half-plane roots for alpha = " + std::to_string(alpha));
        }
        best = &r;
    }
    if (best == nullptr)
        throw Error(ErrorCode::SpectrumFailure,
                    "no upper-half-plane root for alpha = " + std::to_string(alpha));
    return *best;
}

/// n points on CL for alpha uniform on [0, 1 - 1/n].
inline std::vector<CLPoint> trace_CL(int n, const Tolerance& tol = {}) {
    if (n < 2) throw Error(ErrorCode::ArgumentOutOfRange, "trace_CL needs n >= 2");
    std::vector<CLPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double top = 1.0 - 1.0 / n;
    for (int j = 0; j < n; ++j) {
        const double alpha = top * j / (n - 1);
        pts.push_back({alpha, upper_CL_root(alpha, tol)});
    }
    return pts;
}

}  // namespace cyclespectra
