#pragma once

#include <cmath>

#include <json.hpp>

#include "criterion.hpp"
#include "cycle_matrix.hpp"
#include "region.hpp"
#include "synthesis.hpp"

namespace cyclespectra {

inline nlohmann::json complex_json(Complex w) { return nlohmann::json::array({w.real(), w.imag()}); }

/// {"alpha": [a1, a2, a3, a4]}
inline nlohmann::json to_json(const CycleMatrix4& m) {
    return {{"alpha", m.alpha()}};
}

inline CycleMatrix4 cycle_matrix_from_json(const nlohmann::json& j) {
    const auto& arr = j.at("alpha");
    if (!arr.is_array() || arr.size() != 4)
        throw Error(ErrorCode::ArgumentOutOfRange, "\"alpha\" must be an array of 4 numbers");
    return make_cycle_matrix(arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(),
                             arr[3].get<double>());
}

inline nlohmann::json to_json(Complex lam, const RegionVerdict& v) {
    return {
        {"re", lam.real()},
        {"im", lam.imag()},
        {"status", to_string(v.status)},
        {"binding",
         {{"a", v.binding.a_check}, {"right", v.binding.right_check}, {"G", v.binding.g_check}}},
    };
}

/// {"alpha": [...], "method": "...", "mu": [re, im]?, "l": ?, "residual": ?}
inline nlohmann::json to_json(const Realization& r) {
    nlohmann::json j = to_json(r.matrix);
    j["method"] = to_string(r.method);
    j["lambda"] = complex_json(r.lam);
    if (r.mu) j["mu"] = complex_json(*r.mu);
    if (r.shrink_l) j["l"] = *r.shrink_l;
    j["residual"] = r.residual;
    return j;
}

/// m, M, regime, U and maxPsi ("+inf" in the Unbounded regime).
inline nlohmann::json to_json(const CriterionContext& ctx) {
    nlohmann::json j{
        {"lambda", complex_json(ctx.lam)},
        {"m", ctx.m},
        {"M", ctx.M},
        {"regime", to_string(ctx.regime)},
        {"threeMPlusM", 3.0 * ctx.m + ctx.M},
    };
    j["U"] = ctx.U ? nlohmann::json(*ctx.U) : nlohmann::json(nullptr);
    const double mx = max_psi(ctx);
    j["maxPsi"] = std::isinf(mx) ? nlohmann::json("+inf") : nlohmann::json(mx);
    return j;
}

}  // namespace cyclespectra
