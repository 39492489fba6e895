#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string_view>

#include "core.hpp"
#include "cycle_matrix.hpp"
#include "region.hpp"

// Argument parametrization of the eigenvalue equation
//
//     (z + t1)(z + t2)(z + t3)(z + t4) = t1 t2 t3 t4,   z = lam - 1, t_k = 1 - alpha_k,
//
// through u_k = Arg(z + t_k) in [m, M). A nonreal lam is an eigenvalue iff some
// (u_1..u_4) in the box with sum 2 pi has Psi(u) = sum F(u_k) = 0.

namespace cyclespectra {

enum class Regime { Unbounded, Tight };

inline std::string_view to_string(Regime r) {
    return r == Regime::Tight ? "Tight" : "Unbounded";
}

/// Per-lam quantities for the argument parametrization. Upper half-plane only.
struct CriterionContext {
    Complex lam;
    Complex z;
    double x = 0.0;  // a - 1
    double y = 0.0;  // b
    double m = 0.0;  // Arg(lam)
    double M = 0.0;  // Arg(lam - 1)
    Regime regime = Regime::Unbounded;
    std::optional<double> U;  // 2 pi - 3m, Tight regime only
};

// Slack for angles that land just below m through rounding of convex combinations.
inline constexpr double kAngleSlack = 1e-12;

inline CriterionContext make_context(Complex lam) {
    require_finite(lam, "make_context");
    if (lam.imag() == 0.0) throw Error(ErrorCode::NonrealRequired, "lam must be nonreal");
    if (lam.imag() < 0.0)
        throw Error(ErrorCode::LowerHalfPlane, "conjugate lam into the upper half-plane first");
    if (lam.real() >= 1.0) throw Error(ErrorCode::FeasibilityViolation, "Re(lam) must be < 1");

    CriterionContext ctx;
    ctx.lam = lam;
    ctx.z = lam - 1.0;
    ctx.x = lam.real() - 1.0;
    ctx.y = lam.imag();
    ctx.m = principal_arg(lam);
    ctx.M = principal_arg(ctx.z);
    if (3.0 * ctx.m + ctx.M > kTwoPi) {
        ctx.regime = Regime::Tight;
        ctx.U = kTwoPi - 3.0 * ctx.m;
    } else {
        ctx.regime = Regime::Unbounded;
    }
    return ctx;
}

namespace detail {

inline double checked_angle(const CriterionContext& ctx, double u) {
    if (!std::isfinite(u) || u < ctx.m - kAngleSlack || u >= ctx.M)
        throw Error(ErrorCode::ArgumentOutOfRange,
                    "angle " + std::to_string(u) + " outside [m, M)");
    return u < ctx.m ? ctx.m : u;
}

}  // namespace detail

/// t(u) = y cot u - x, the inverse of u(t) = Arg(z + t).
inline double t_of_u(const CriterionContext& ctx, double u) {
    u = detail::checked_angle(ctx, u);
    if (u == ctx.m) return 1.0;
    return ctx.y / std::tan(u) - ctx.x;
}

inline double u_of_t(const CriterionContext& ctx, double t) {
    if (!std::isfinite(t) || !(t > 0.0) || t > 1.0)
        throw Error(ErrorCode::ArgumentOutOfRange, "t must lie in (0, 1]");
    if (t == 1.0) return ctx.m;
    return principal_arg(ctx.z + t);
}

/// F(u) = log(y csc u) - log(y cot u - x).
inline double F(const CriterionContext& ctx, double u) {
    u = detail::checked_angle(ctx, u);
    if (u == ctx.m) return std::log(std::abs(ctx.lam));
    return std::log(ctx.y / std::sin(u)) - std::log(t_of_u(ctx, u));
}

/// F(u) = log|z + t(u)| - log t(u), the defining form; used to cross-check F.
inline double F_modulus_form(const CriterionContext& ctx, double u) {
    const double t = t_of_u(ctx, u);
    return std::log(std::abs(ctx.z + t)) - std::log(t);
}

/// Closed form F''(u) = (x^2 + y^2) / ((y cot u - x)^2 sin^2 u).
inline double F_second_derivative(const CriterionContext& ctx, double u) {
    const double t = ctx.y / std::tan(u) - ctx.x;
    const double s = std::sin(u);
    return (ctx.x * ctx.x + ctx.y * ctx.y) / (t * t * s * s);
}

using Angles4 = std::array<double, 4>;

inline constexpr double kHyperplaneTol = 1e-9;

inline double psi(const CriterionContext& ctx, const Angles4& u) {
    double sum = 0.0;
    for (double uk : u) {
        if (!std::isfinite(uk) || uk < ctx.m - kAngleSlack || uk >= ctx.M)
            throw Error(ErrorCode::InfeasiblePoint, "angle outside [m, M)");
        sum += uk;
    }
    if (std::abs(sum - kTwoPi) > kHyperplaneTol)
        throw Error(ErrorCode::InfeasiblePoint, "angles do not sum to 2 pi");
    double total = 0.0;
    for (double uk : u) total += F(ctx, uk);
    return total;
}

/// sup of Psi over the feasible set: +inf when Unbounded, 3F(m) + F(U) when Tight.
inline double max_psi(const CriterionContext& ctx) {
    if (ctx.regime == Regime::Unbounded) return std::numeric_limits<double>::infinity();
    return 3.0 * F(ctx, ctx.m) + F(ctx, *ctx.U);
}

/// log(|lam|^6 / N(a, b)), the algebraic form of the Tight-regime maximum.
inline double max_psi_closed_form(const CriterionContext& ctx) {
    const double a = ctx.lam.real();
    const double b = ctx.lam.imag();
    const double r2 = a * a + b * b;
    return std::log(r2 * r2 * r2 / N(a, b));
}

struct CriterionSolution {
    std::array<double, 4> t{};
    Angles4 u{};
    double theta = 0.0;  // position on the search path; 0 is the barycenter
    double relative_defect = 0.0;
};

namespace detail {

inline double relative_defect(const CriterionContext& ctx, const std::array<double, 4>& t) {
    Complex lhs = 1.0;
    double rhs = 1.0;
    for (double tk : t) {
        lhs *= ctx.z + tk;
        rhs *= tk;
    }
    return std::abs(lhs - rhs) / rhs;
}

inline Angles4 path_point(const Angles4& w, double theta) {
    Angles4 u{};
    const double half_pi = 0.5 * kPi;
    for (int k = 0; k < 3; ++k) u[k] = (1.0 - theta) * half_pi + theta * w[k];
    u[3] = kTwoPi - u[0] - u[1] - u[2];
    return u;
}

// Newton steps on prod(z + t_k) = prod(t_k) in t_4 and the best-conditioned partner, the
// other two held fixed. Recovering a small t_4 from its angle cancels badly, so the angle
// solution is refined in t directly. Steps that leave (0, 1] or do not help are discarded.
inline std::array<double, 4> polish(const CriterionContext& ctx, std::array<double, 4> t) {
    auto partial = [&](const std::array<double, 4>& v, int skip) {
        Complex p = 1.0;
        double q = 1.0;
        for (int j = 0; j < 4; ++j)
            if (j != skip) {
                p *= ctx.z + v[j];
                q *= v[j];
            }
        return p - q;
    };
    for (int iter = 0; iter < 8; ++iter) {
        const double before = relative_defect(ctx, t);
        if (before < 1e-15) break;
        Complex f = 1.0;
        double q = 1.0;
        for (double tk : t) {
            f *= ctx.z + tk;
            q *= tk;
        }
        f -= q;
        const Complex j4 = partial(t, 3);
        int best = 0;
        double best_det = 0.0;
        for (int k = 0; k < 3; ++k) {
            const Complex jk = partial(t, k);
            const double det = jk.real() * j4.imag() - jk.imag() * j4.real();
            if (std::abs(det) > std::abs(best_det)) {
                best = k;
                best_det = det;
            }
        }
        if (best_det == 0.0) break;
        const Complex jk = partial(t, best);
        const double dk = (f.real() * j4.imag() - f.imag() * j4.real()) / best_det;
        const double d4 = (jk.real() * f.imag() - jk.imag() * f.real()) / best_det;
        std::array<double, 4> next = t;
        next[best] -= dk;
        next[3] -= d4;
        if (!(next[best] > 0.0 && next[best] <= 1.0 && next[3] > 0.0 && next[3] <= 1.0)) break;
        if (!(relative_defect(ctx, next) < before)) break;
        t = next;
    }
    return t;
}

inline CriterionSolution finish(const CriterionContext& ctx, const Angles4& u, double theta,
                                const Tolerance& tol) {
    CriterionSolution sol;
    sol.theta = theta;
    for (int k = 0; k < 4; ++k) {
        sol.t[k] = t_of_u(ctx, u[k]);
        if (!(sol.t[k] > 0.0) || !(1.0 - sol.t[k] < 1.0) || sol.t[k] > 1.0)
            throw Error(ErrorCode::NoConvergence, "path point maps to alpha outside [0, 1)");
    }
    sol.t = polish(ctx, sol.t);
    for (int k = 0; k < 4; ++k) sol.u[k] = sol.t[k] == t_of_u(ctx, u[k]) ? u[k] : u_of_t(ctx, sol.t[k]);
    sol.relative_defect = relative_defect(ctx, sol.t);
    if (!(sol.relative_defect < tol.eigen_residual))
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "relative defect %.3e", sol.relative_defect);
        throw Error(ErrorCode::NoConvergence, buf);
    }
    return sol;
}

inline std::optional<CriterionSolution> try_finish(const CriterionContext& ctx, const Angles4& u,
                                                   double theta, const Tolerance& tol) {
    try {
        return finish(ctx, u, theta, tol);
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace detail

/// Finds t_1..t_4 in (0, 1] realizing lam by following the segment from the barycenter
/// (pi/2, pi/2, pi/2, pi/2) to a point where Psi >= 0 and bisecting on the sign change.
///
/// The far endpoint is (U, m, m, m) in the Tight regime. In the Unbounded regime it is
/// ((2pi - u4)/3 x3, u4) with u4 pushed toward M until Psi turns positive.
inline CriterionSolution solve_criterion(const CriterionContext& ctx, const Tolerance& tol = {}) {
    tol.validate();
    const double a = ctx.lam.real();
    const double half_pi = 0.5 * kPi;
    if (a < 0.0 || !(ctx.m <= half_pi && half_pi < ctx.M))
        throw Error(ErrorCode::FeasibilityViolation, "feasible set is empty (Re(lam) < 0)");

    const Angles4 bary{half_pi, half_pi, half_pi, half_pi};
    const double psi0 = 4.0 * F(ctx, half_pi);
    if (psi0 >= 0.0) {
        // On CR the barycenter itself is the solution.
        if (auto sol = detail::try_finish(ctx, bary, 0.0, tol)) return *sol;
        throw Error(ErrorCode::NotRealizable, "Psi > 0 on the whole feasible set (a + b > 1)");
    }

    Angles4 w{};
    double psi1 = 0.0;
    if (ctx.regime == Regime::Tight) {
        w = {*ctx.U, ctx.m, ctx.m, ctx.m};
        psi1 = max_psi(ctx);
        if (psi1 <= 0.0) {
            // On CL the maximizer itself is the solution.
            if (auto sol = detail::try_finish(ctx, w, 1.0, tol)) return *sol;
            throw Error(ErrorCode::NotRealizable, "max Psi < 0 (G(a, b) < 0)");
        }
    } else {
        // Any u4 < M keeps (2pi - u4)/3 >= m here; it must also stay below M.
        const double lo = std::max(half_pi, kTwoPi - 3.0 * ctx.M);
        double gap = 0.5 * (ctx.M - lo);
        bool found = false;
        for (int iter = 0; iter < tol.max_iter; ++iter) {
            const double u4 = ctx.M - gap;
            if (!(u4 < ctx.M) || !(u4 > lo)) break;
            const double u1 = (kTwoPi - u4) / 3.0;
            w = {u1, u1, u1, kTwoPi - 3.0 * u1};
            if (!(w[3] < ctx.M)) break;
            const double t4 = t_of_u(ctx, w[3]);
            if (!(t4 > 0.0) || !(1.0 - t4 < 1.0)) break;
            psi1 = psi(ctx, w);
            if (psi1 > 0.0) {
                found = true;
                break;
            }
            gap *= 0.5;
        }
        if (!found)
            throw Error(ErrorCode::NoConvergence, "could not bracket a positive Psi toward M");
    }

    double lo = 0.0, hi = 1.0;
    double psi_lo = psi0, psi_hi = psi1;
    // Psi can be very steep near theta = 1 when t(U) is tiny, so bisection continues past
    // bisection_eps until the residual is small enough or the bracket stops shrinking.
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if (hi - lo <= tol.bisection_eps && std::min(std::abs(psi_lo), std::abs(psi_hi)) < 0.01 * tol.eigen_residual)
            break;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double v = psi(ctx, detail::path_point(w, mid));
        if (v == 0.0) {
            lo = hi = mid;
            psi_lo = psi_hi = 0.0;
            break;
        }
        if (v < 0.0) {
            lo = mid;
            psi_lo = v;
        } else {
            hi = mid;
            psi_hi = v;
        }
    }
    const double theta = std::abs(psi_lo) <= std::abs(psi_hi) ? lo : hi;
    return detail::finish(ctx, detail::path_point(w, theta), theta, tol);
}

/// Matrix with alpha_k = 1 - t_k.
inline CycleMatrix4 to_matrix(const CriterionSolution& sol) {
    return make_cycle_matrix(1.0 - sol.t[0], 1.0 - sol.t[1], 1.0 - sol.t[2], 1.0 - sol.t[3]);
}

}  // namespace cyclespectra
