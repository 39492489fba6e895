#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "core.hpp"

namespace cyclespectra {

/// Coefficients of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, highest first.
using QuarticCoeffs = std::array<double, 5>;
using QuarticRoots = std::array<Complex, 4>;

namespace detail {

inline Complex horner(const QuarticCoeffs& c, Complex x) {
    Complex r = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) r = r * x + c[i];
    return r;
}

inline Complex horner_derivative(const QuarticCoeffs& c, Complex x) {
    Complex r = 4.0 * c[0];
    r = r * x + 3.0 * c[1];
    r = r * x + 2.0 * c[2];
    r = r * x + c[3];
    return r;
}

inline bool lex_less(Complex p, Complex q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
}

// Pairs nonreal roots into exact conjugates and snaps near-real roots onto the axis.
inline void enforce_conjugate_symmetry(QuarticRoots& roots, double band) {
    std::vector<Complex> upper, lower;
    std::vector<double> reals;
    for (Complex r : roots) {
        if (std::abs(r.imag()) <= band) {
            reals.push_back(r.real());
        } else if (r.imag() > 0.0) {
            upper.push_back(r);
        } else {
            lower.push_back(r);
        }
    }
    // An unmatched nonreal root can only come from a near-real cluster; demote
    // the one closest to the axis until the halves balance.
    auto demote = [&](std::vector<Complex>& side) {
        auto it = std::min_element(side.begin(), side.end(), [](Complex p, Complex q) {
            return std::abs(p.imag()) < std::abs(q.imag());
        });
        reals.push_back(it->real());
        side.erase(it);
    };
    while (upper.size() > lower.size()) demote(upper);
    while (lower.size() > upper.size()) demote(lower);

    std::size_t k = 0;
    std::vector<bool> used(lower.size(), false);
    std::sort(upper.begin(), upper.end(), lex_less);
    for (Complex u : upper) {
        std::size_t best = lower.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(u - std::conj(lower[j]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        Complex l = lower[best];
        double re = 0.5 * (u.real() + l.real());
        double im = 0.5 * (u.imag() - l.imag());
        roots[k++] = Complex(re, im);
        roots[k++] = Complex(re, -im);
    }
    for (double r : reals) roots[k++] = Complex(r, 0.0);
}

}  // namespace detail

/// Roots of a real quartic via Durand-Kerner (Weierstrass) simultaneous iteration
/// followed by one Newton pass.
///
/// The starting points are fixed, so the output is a deterministic function of the
/// coefficients. Roots are returned with multiplicity, lexicographically sorted by
/// (re, im); roots with |im| <= tol.boundary_band are snapped to the real axis and
/// nonreal roots come in exact conjugate pairs.
inline QuarticRoots solve_quartic(double c4, double c3, double c2, double c1, double c0,
                                  const Tolerance& tol = {}) {
    for (double c : {c4, c3, c2, c1, c0}) require_finite(c, "solve_quartic coefficient");
    if (c4 == 0.0)
        throw Error(ErrorCode::DegenerateLeadingCoefficient, "quartic with c4 = 0");

    const QuarticCoeffs original{c4, c3, c2, c1, c0};
    const QuarticCoeffs monic{1.0, c3 / c4, c2 / c4, c1 / c4, c0 / c4};

    double radius = 0.0;
    for (std::size_t i = 1; i < monic.size(); ++i) radius = std::max(radius, std::abs(monic[i]));
    radius += 1.0;

    QuarticRoots z;
    // 0.4 rad offset keeps the start asymmetric about the real axis.
    for (int k = 0; k < 4; ++k) z[k] = std::polar(radius, 0.4 + k * kTwoPi / 4.0);

    for (int iter = 0; iter < tol.max_iter; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < 4; ++i) {
            Complex denom = 1.0;
            for (int j = 0; j < 4; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == Complex(0.0, 0.0)) denom = Complex(1e-300, 0.0);
            Complex step = detail::horner(monic, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (max_step <= 4.0 * std::numeric_limits<double>::epsilon()) break;
    }

    for (Complex& r : z) {
        Complex d = detail::horner_derivative(monic, r);
        if (std::abs(d) == 0.0) continue;
        Complex polished = r - detail::horner(monic, r) / d;
        if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
            std::abs(detail::horner(monic, polished)) < std::abs(detail::horner(monic, r)))
            r = polished;
    }

    detail::enforce_conjugate_symmetry(z, tol.boundary_band);

    double scale = 0.0;
    for (double c : original) scale += std::abs(c);
    const double bound = tol.eigen_residual * std::max(1.0, scale);
    for (Complex r : z) {
        double res = std::abs(detail::horner(original, r));
        if (!(res <= bound))
            throw Error(ErrorCode::NoConvergence,
                        "quartic root residual " + std::to_string(res) + " above bound");
    }

    std::sort(z.begin(), z.end(), detail::lex_less);
    return z;
}

inline QuarticRoots solve_quartic(const QuarticCoeffs& c, const Tolerance& tol = {}) {
    return solve_quartic(c[0], c[1], c[2], c[3], c[4], tol);
}

}  // namespace cyclespectra
