#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cyclespectra {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Numerical tolerances shared by every module.
struct Tolerance {
    double eigen_residual = 1e-8;
    double boundary_band = 1e-9;
    double bisection_eps = 1e-12;
    int max_iter = 200;

    void validate() const;
};

enum class ErrorCode {
    NonFinite,
    InvalidTolerance,
    ZeroArgument,
    DegenerateLeadingCoefficient,
    NoConvergence,
    ParameterOutOfRange,
    SpectrumFailure,
    LowerHalfPlane,
    NonrealRequired,
    FeasibilityViolation,
    ArgumentOutOfRange,
    InfeasiblePoint,
    NotRealizable,
    NotOnCurve,
    AlphaOutOfRange,
    NotInterior,
    BracketFailure,
    ShrinkOutOfRange,
    OutsideRegion,
    DegreeBound,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::ZeroArgument: return "ZeroArgument";
        case ErrorCode::DegenerateLeadingCoefficient: return "DegenerateLeadingCoefficient";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::SpectrumFailure: return "SpectrumFailure";
        case ErrorCode::LowerHalfPlane: return "LowerHalfPlane";
        case ErrorCode::NonrealRequired: return "NonrealRequired";
        case ErrorCode::FeasibilityViolation: return "FeasibilityViolation";
        case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
        case ErrorCode::InfeasiblePoint: return "InfeasiblePoint";
        case ErrorCode::NotRealizable: return "NotRealizable";
        case ErrorCode::NotOnCurve: return "NotOnCurve";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::NotInterior: return "NotInterior";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::ShrinkOutOfRange: return "ShrinkOutOfRange";
        case ErrorCode::OutsideRegion: return "OutsideRegion";
        case ErrorCode::DegreeBound: return "DegreeBound";
    }
    return "Unknown";
}

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by make_cycle_matrix; index is 1-based to match alpha_1..alpha_4.
class ParameterOutOfRange : public Error {
public:
    ParameterOutOfRange(int index, double value)
        : Error(ErrorCode::ParameterOutOfRange,
                "alpha_" + std::to_string(index) + " = " + std::to_string(value) +
                    " is outside [0, 1)"),
          index_(index),
          value_(value) {}

    int index() const noexcept { return index_; }
    double value() const noexcept { return value_; }

private:
    int index_;
    double value_;
};

inline void Tolerance::validate() const {
    if (!(eigen_residual > 0.0) || !(boundary_band > 0.0) || !(bisection_eps > 0.0) ||
        max_iter < 1) {
        throw Error(ErrorCode::InvalidTolerance, "tolerances must be positive, max_iter >= 1");
    }
}

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, what);
}

inline void require_finite(Complex w, const char* what) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw Error(ErrorCode::NonFinite, what);
}

/// Principal argument in (-pi, pi].
inline double principal_arg(Complex w) {
    require_finite(w, "principal_arg");
    if (w.real() == 0.0 && w.imag() == 0.0)
        throw Error(ErrorCode::ZeroArgument, "argument of 0 is undefined");
    // atan2(+-0, negative) gives +-pi; the branch cut keeps pi.
    if (w.imag() == 0.0 && w.real() < 0.0) return kPi;
    return std::atan2(w.imag(), w.real());
}

}  // namespace cyclespectra
