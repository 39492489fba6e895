#pragma once

#include <array>
#include <cmath>

#include "core.hpp"
#include "quartic.hpp"

namespace cyclespectra {

using Dense4 = std::array<std::array<double, 4>, 4>;

/// Row-stochastic matrix on a directed 4-cycle with self-loops alpha_1..alpha_4:
///
///     | a1  1-a1  0     0    |
///     | 0   a2    1-a2  0    |
///     | 0   0     a3    1-a3 |
///     | 1-a4 0    0     a4   |
///
/// Every alpha lies in [0, 1); construct through make_cycle_matrix.
class CycleMatrix4 {
public:
    const std::array<double, 4>& alpha() const noexcept { return alpha_; }
    double alpha(int k) const { return alpha_.at(static_cast<std::size_t>(k)); }

    /// t_k = 1 - alpha_k, the weight on the cycle edge leaving state k.
    std::array<double, 4> t() const noexcept {
        return {1.0 - alpha_[0], 1.0 - alpha_[1], 1.0 - alpha_[2], 1.0 - alpha_[3]};
    }

    Dense4 dense() const noexcept {
        Dense4 d{};
        for (int k = 0; k < 4; ++k) {
            d[k][k] = alpha_[k];
            d[k][(k + 1) % 4] = 1.0 - alpha_[k];
        }
        return d;
    }

    friend bool operator==(const CycleMatrix4&, const CycleMatrix4&) = default;

private:
    explicit CycleMatrix4(const std::array<double, 4>& a) : alpha_(a) {}
    friend CycleMatrix4 make_cycle_matrix(double, double, double, double);

    std::array<double, 4> alpha_;
};

inline CycleMatrix4 make_cycle_matrix(double a1, double a2, double a3, double a4) {
    const std::array<double, 4> a{a1, a2, a3, a4};
    for (int k = 0; k < 4; ++k) {
        if (!std::isfinite(a[k]) || a[k] < 0.0 || a[k] >= 1.0) throw ParameterOutOfRange(k + 1, a[k]);
    }
    return CycleMatrix4(a);
}

inline CycleMatrix4 make_cycle_matrix(const std::array<double, 4>& a) {
    return make_cycle_matrix(a[0], a[1], a[2], a[3]);
}

/// p(x) = prod(x - alpha_k) - prod(1 - alpha_k), monic, highest degree first.
inline QuarticCoeffs char_poly(const CycleMatrix4& m) {
    // Build prod(x - alpha_k) one factor at a time.
    std::array<double, 5> c{1.0, 0.0, 0.0, 0.0, 0.0};
    int degree = 0;
    for (double a : m.alpha()) {
        ++degree;
        for (int i = degree; i >= 1; --i) c[i] -= a * c[i - 1];
    }
    double prod_t = 1.0;
    for (double t : m.t()) prod_t *= t;
    c[4] -= prod_t;
    return c;
}

/// Absolute defect |prod(lam - alpha_k) - prod(1 - alpha_k)|.
inline double eigen_residual(const CycleMatrix4& m, Complex lam) {
    Complex lhs = 1.0;
    double rhs = 1.0;
    for (double a : m.alpha()) {
        lhs *= lam - a;
        rhs *= 1.0 - a;
    }
    return std::abs(lhs - rhs);
}

/// Eigenvalues, sorted. The quartic is solved in w = lambda - 1, where
/// p(1 + w) = w (w^3 + e1 w^2 + e2 w + e3) with e_k the elementary symmetric polynomials
/// of t = 1 - alpha. Those coefficients carry no cancellation, which keeps eigenvalues
/// clustered near 1 (alpha close to 1) accurate, and the eigenvalue 1 comes out exact.
inline QuarticRoots spectrum(const CycleMatrix4& m, const Tolerance& tol = {}) {
    const auto t = m.t();
    const double e1 = t[0] + t[1] + t[2] + t[3];
    const double e2 = t[0] * t[1] + t[0] * t[2] + t[0] * t[3] + t[1] * t[2] + t[1] * t[3] + t[2] * t[3];
    const double e3 = t[0] * t[1] * t[2] + t[0] * t[1] * t[3] + t[0] * t[2] * t[3] + t[1] * t[2] * t[3];
    try {
        QuarticRoots w = solve_quartic(1.0, e1, e2, e3, 0.0, tol);
        for (Complex& r : w) r += 1.0;
        return w;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoConvergence) throw Error(ErrorCode::SpectrumFailure, e.what());
        throw;
    }
}

}  // namespace cyclespectra
