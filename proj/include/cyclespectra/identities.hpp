#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bivar_poly.hpp"

// Polynomial identities behind the region's boundary description, checked exactly
// over Z[a, b]. Each identity is a list of lhs == rhs pairs; it holds when every
// lhs - rhs expands to the zero polynomial.

namespace cyclespectra {

/// The two defining polynomials; swapped out to inject defects in tests.
struct Definitions {
    BivarPoly G;
    BivarPoly N;
};

inline Definitions canonical_definitions() {
    const BivarPoly a = BivarPoly::a();
    const BivarPoly b = BivarPoly::b();
    const BivarPoly q = b * b + a * a + a;
    return {
        q * q + 2 * a * a - b * b,
        4 * a.pow(3) - 3 * a * a - 4 * a * b * b + b * b,
    };
}

struct Identity {
    std::string id;
    std::string statement;
    std::vector<std::pair<BivarPoly, BivarPoly>> sides;
};

enum class IdentityStatus { ZeroPolynomial, Failed };

struct IdentityResult {
    std::string id;
    std::string statement;
    IdentityStatus status = IdentityStatus::Failed;
    std::vector<BivarPoly> residuals;  // lhs - rhs per side pair
};

inline std::vector<Identity> build_identities(const Definitions& defs = canonical_definitions()) {
    const BivarPoly a = BivarPoly::a();
    const BivarPoly b = BivarPoly::b();
    const BivarPoly one(1);
    const BivarPoly r2 = a * a + b * b;

    std::vector<Identity> ids;

    {
        // Quadratic in s, written with s in the b slot and then s := b^2.
        const BivarPoly s = b;
        const BivarPoly in_s = s * s + s * (2 * a * a + 2 * a - 1) + (a * a + a).pow(2) + 2 * a * a;
        ids.push_back({"I1", "G(a,b) = s^2 + s(2a^2+2a-1) + (a^2+a)^2 + 2a^2, s = b^2",
                       {{defs.G, in_s.substitute(BivarPoly::Var::B, b * b)}}});
    }
    ids.push_back({"I2", "(2a^2+2a-1)^2 - 4((a^2+a)^2+2a^2) = -(2a+1)(6a-1)",
                   {{(2 * a * a + 2 * a - 1).pow(2) - 4 * ((a * a + a).pow(2) + 2 * a * a),
                     -((2 * a + 1) * (6 * a - 1))}}});
    ids.push_back({"I3", "(1-2a-8a^2)^2 - (2a+1)(1-6a) = 32a^3 + 64a^4",
                   {{(one - 2 * a - 8 * a * a).pow(2) - (2 * a + 1) * (one - 6 * a),
                     32 * a.pow(3) + 64 * a.pow(4)}}});
    ids.push_back({"I4", "(1-6a+16a^3)^2 - (1-4a)^2(2a+1)(1-6a) = 256a^6",
                   {{(one - 6 * a + 16 * a.pow(3)).pow(2) -
                         (one - 4 * a).pow(2) * (2 * a + 1) * (one - 6 * a),
                     256 * a.pow(6)}}});
    ids.push_back({"I5", "|lam|^6 - N(a,b) = ((a-1)^2 + b^2) G(a,b)",
                   {{r2.pow(3) - defs.N, ((a - 1).pow(2) + b * b) * defs.G}}});
    {
        const ComplexPoly lam{a, b};
        const ComplexPoly prod = (lam.pow(4) - one) * (lam.conj().pow(3) - one);
        ids.push_back({"I6", "Im((lam^4 - 1)(conj(lam)^3 - 1)) = b(|lam|^6 - N(a,b))",
                       {{prod.im, b * (r2.pow(3) - defs.N)}}});
    }
    ids.push_back({"I7", "tan(3m): (3a^2 b - b^3)(3b^2 - a^2) = b(b^2 - 3a^2)(a^2 - 3b^2)",
                   {{(3 * a * a * b - b.pow(3)) * (3 * b * b - a * a),
                     b * (b * b - 3 * a * a) * (a * a - 3 * b * b)}}});
    ids.push_back({"I8", "|lam|^3 sin(3m) = b(3a^2 - b^2), |lam|^3 cos(3m) = a(a^2 - 3b^2)",
                   {{3 * b * r2 - 4 * b.pow(3), b * (3 * a * a - b * b)},
                    {4 * a.pow(3) - 3 * a * r2, a * (a * a - 3 * b * b)}}});
    return ids;
}

inline IdentityResult verify_identity(const Identity& id) {
    IdentityResult r{id.id, id.statement, IdentityStatus::ZeroPolynomial, {}};
    for (const auto& [lhs, rhs] : id.sides) {
        r.residuals.push_back(lhs - rhs);
        if (!r.residuals.back().is_zero()) r.status = IdentityStatus::Failed;
    }
    return r;
}

inline std::vector<IdentityResult> verify_identity_suite(
    const Definitions& defs = canonical_definitions()) {
    std::vector<IdentityResult> out;
    for (const Identity& id : build_identities(defs)) out.push_back(verify_identity(id));
    return out;
}

/// Exact sign checks s_-(a) > 3a^2 and s_-(a) > s_0(a) at a rational a in (0, 1/6).
///
/// With D = (2a+1)(1-6a), s_-(a) = (1 - 2a - 2a^2 - sqrt(D))/2 and
/// s_0(a) = a^2(3-4a)/(1-4a); both comparisons become "L > sqrt(R)", decided as
/// L > 0 and L^2 - R > 0.
struct RootOrderCheck {
    Rational a;
    bool s_minus_above_3a2 = false;
    bool s_minus_above_s0 = false;
};

inline RootOrderCheck check_root_order(const Rational& a) {
    const Rational d = (2 * a + 1) * (1 - 6 * a);
    const Rational l1 = 1 - 2 * a - 8 * a * a;
    const Rational l2 = 1 - 6 * a + 16 * a * a * a;
    const Rational k = 1 - 4 * a;
    RootOrderCheck c{a};
    c.s_minus_above_3a2 = l1 > 0 && l1 * l1 - d > 0;
    c.s_minus_above_s0 = k > 0 && l2 > 0 && l2 * l2 - k * k * d > 0;
    return c;
}

/// a = 1/100, ..., 16/100.
inline std::vector<RootOrderCheck> root_order_suite() {
    std::vector<RootOrderCheck> out;
    for (int k = 1; k <= 16; ++k) out.push_back(check_root_order(Rational(k, 100)));
    return out;
}

}  // namespace cyclespectra
