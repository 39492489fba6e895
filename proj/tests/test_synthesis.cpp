#include <gtest/gtest.h>

#include <random>

#include "cyclespectra/json_io.hpp"
#include "cyclespectra/synthesis.hpp"
#include "test_support.hpp"

namespace cs = cyclespectra;
using cs::Complex;
using cs::RealizationMethod;

namespace {

cs::ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const cs::Error& e) {
        return e.code();
    }
    return cs::ErrorCode::NonFinite;
}

// Multiset distance between two root lists (4! matchings).
double multiset_distance(cs::QuarticRoots x, const cs::QuarticRoots& y) {
    std::array<int, 4> perm{0, 1, 2, 3};
    double best = 1e300;
    do {
        double d = 0;
        for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(x[perm[k]] - y[k]));
        best = std::min(best, d);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST(AlphaL, ImaginaryUnitGivesZero) { EXPECT_EQ(cs::alpha_L_of_mu({0.0, 1.0}), 0.0); }

TEST(AlphaL, RoundTripThroughQuartic) {
    for (double alpha : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        const Complex mu = cs::upper_CL_root(alpha);
        EXPECT_NEAR(cs::alpha_L_of_mu(mu), alpha, 1e-8) << alpha;
    }
}

TEST(AlphaL, OffCurveRejected) {
    EXPECT_EQ(code_of([] { cs::alpha_L_of_mu({0.5, 0.5}); }), cs::ErrorCode::NotOnCurve);
    EXPECT_EQ(code_of([] { cs::alpha_L_of_mu({0.5, -0.5}); }), cs::ErrorCode::NotOnCurve);
}

TEST(RayHit, StrictInteriorOnly) {
    EXPECT_EQ(code_of([] { cs::ray_hit_CL({0.5, 0.5}); }), cs::ErrorCode::NotInterior);
    EXPECT_EQ(code_of([] { cs::ray_hit_CL({0.0, 0.5}); }), cs::ErrorCode::NotInterior);
    EXPECT_EQ(code_of([] { cs::ray_hit_CL({0.05, 0.1}); }), cs::ErrorCode::NotInterior);
}

TEST(RayHit, Examples) {
    // mpmath bisection: s* = 1.0793779193152890, mu = 0.13649766454776877 + 0.32381337579458671i
    const auto hit = cs::ray_hit_CL({0.2, 0.3});
    EXPECT_GT(hit.s_star, 1.0);
    EXPECT_LT(hit.s_star, 1.25);
    EXPECT_NEAR(hit.s_star, 1.07937791931528904, 1e-12);
    EXPECT_NEAR(hit.mu.real(), 0.136497664547768771, 1e-12);
    EXPECT_NEAR(hit.mu.imag(), 0.323813375794586711, 1e-12);
    EXPECT_LT(std::abs(cs::G(hit.mu.real(), hit.mu.imag())), 1e-12);
    EXPECT_GT(hit.mu.real(), 0.0);
    EXPECT_LE(hit.mu.real(), 1.0 / 6);

    const auto far = cs::ray_hit_CL({0.9, 0.05});
    EXPECT_GT(far.s_star, 1.0);
    EXPECT_LT(far.s_star, 10.0);
    EXPECT_NEAR(far.s_star, 8.43438227357038184, 1e-10);
    EXPECT_LT(std::abs(cs::G(far.mu.real(), far.mu.imag())), 1e-12);
}

TEST(Shrink, IdentityAndCornerCase) {
    const auto m = cs::make_cycle_matrix(0.1, 0.2, 0.3, 0.4);
    EXPECT_EQ(cs::shrink(m, 1.0), m);

    const auto half = cs::shrink(cs::make_cycle_matrix(0, 0, 0, 0), 0.5);
    EXPECT_EQ(half, cs::make_cycle_matrix(0.5, 0.5, 0.5, 0.5));
    // i maps to 0.5 + 0.5i, the CR point at x = 0.5
    EXPECT_LT(cs::eigen_residual(half, Complex(0.5, 0.0) + 0.5 * Complex(0, 1)), 1e-15);

    EXPECT_EQ(code_of([&] { cs::shrink(m, 0.0); }), cs::ErrorCode::ShrinkOutOfRange);
    EXPECT_EQ(code_of([&] { cs::shrink(m, 1.5); }), cs::ErrorCode::ShrinkOutOfRange);
}

TEST(Shrink, SpectrumMapsAffinely) {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto m = cs::make_cycle_matrix(d(rng), d(rng), d(rng), d(rng));
        const double l = trial == 0 ? 0.3 : 0.01 + 0.99 * d(rng);
        const auto before = cs::spectrum(m);
        cs::QuarticRoots mapped;
        for (int k = 0; k < 4; ++k) mapped[k] = (1.0 - l) + l * before[k];
        const auto after = cs::spectrum(cs::shrink(m, l));
        ASSERT_LT(multiset_distance(mapped, after), 1e-8) << trial;
    }
}

TEST(Realize, RealPoints) {
    const auto minus_one = cs::realize(-1.0);
    EXPECT_EQ(minus_one.method, RealizationMethod::RealInterval);
    EXPECT_EQ(minus_one.matrix, cs::make_cycle_matrix(0, 0, 0, 0));
    EXPECT_EQ(minus_one.residual, 0.0);

    const auto one = cs::realize(1.0);
    EXPECT_EQ(one.method, RealizationMethod::RealInterval);
    EXPECT_LT(one.residual, 1e-15);

    const auto mid = cs::realize(0.7);
    EXPECT_NEAR(mid.matrix.alpha(0), 0.85, 1e-15);
    EXPECT_LT(mid.residual, 1e-12);
}

TEST(Realize, RightBoundary) {
    const auto r = cs::realize({0.5, 0.5});
    EXPECT_EQ(r.method, RealizationMethod::BoundaryCR);
    EXPECT_EQ(r.matrix, cs::make_cycle_matrix(0.5, 0.5, 0.5, 0.5));
}

TEST(Realize, ImaginaryUnit) {
    const auto r = cs::realize({0.0, 1.0});
    EXPECT_EQ(r.method, RealizationMethod::BoundaryCR);
    EXPECT_EQ(r.matrix, cs::make_cycle_matrix(0, 0, 0, 0));
    EXPECT_EQ(r.residual, 0.0);
}

TEST(Realize, InteriorViaShrink) {
    const Complex lam(0.2, 0.3);
    const auto r = cs::realize(lam);
    EXPECT_EQ(r.method, RealizationMethod::InteriorShrink);
    EXPECT_LT(r.residual, 1e-8);
    ASSERT_TRUE(r.mu && r.shrink_l);
    EXPECT_LT(std::abs((1.0 - *r.shrink_l) + *r.shrink_l * *r.mu - lam), 1e-10);
    EXPECT_LT(std::abs(cs::G(r.mu->real(), r.mu->imag())), 1e-9);

    // independent construction through the criterion
    const auto c = cs::realize_by_criterion(lam);
    EXPECT_EQ(c.method, RealizationMethod::CriterionSolver);
    EXPECT_LT(cs::eigen_residual(c.matrix, lam), 1e-8);
    bool in_spectrum = false;
    for (const Complex& e : cs::spectrum(c.matrix)) in_spectrum = in_spectrum || std::abs(e - lam) < 1e-7;
    EXPECT_TRUE(in_spectrum);
}

TEST(Realize, LowerHalfPlaneUsesSameMatrix) {
    const auto up = cs::realize({0.2, 0.3});
    const auto down = cs::realize({0.2, -0.3});
    EXPECT_EQ(up.matrix, down.matrix);
    EXPECT_EQ(down.lam, Complex(0.2, -0.3));
    EXPECT_LT(cs::eigen_residual(down.matrix, {0.2, -0.3}), 1e-8);
}

TEST(Realize, OutsideRegion) {
    EXPECT_EQ(code_of([] { cs::realize({0.0, 0.05}); }), cs::ErrorCode::OutsideRegion);
    EXPECT_EQ(code_of([] { cs::realize({1.5, 0.0}); }), cs::ErrorCode::OutsideRegion);
    EXPECT_EQ(code_of([] { cs::realize_by_criterion({0.0, 0.05}); }), cs::ErrorCode::OutsideRegion);
}

TEST(Realize, BoundaryTracesAreRealized) {
    for (const Complex& p : cs::trace_CR(51)) {
        const auto r = cs::realize(p);
        if (p.imag() == 0.0) {
            EXPECT_EQ(r.method, RealizationMethod::RealInterval);
        } else {
            EXPECT_EQ(r.method, RealizationMethod::BoundaryCR) << p;
        }
        EXPECT_LT(r.residual, 1e-8);
    }
    for (const auto& p : cs::trace_CL(100)) {
        const auto r = cs::realize(p.lam);
        if (p.alpha == 0.0) continue;  // i, where CR takes precedence
        EXPECT_EQ(r.method, RealizationMethod::BoundaryCL) << p.lam;
        EXPECT_NEAR(r.matrix.alpha(0), p.alpha, 1e-8);
        EXPECT_LT(r.residual, 1e-8);
    }
}

TEST(Realize, RandomInteriorProperty) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 2000; ++i) {
        const Complex lam = cs::test::random_admissible(rng, 1e-9);
        if (cs::membership(lam).status != cs::RegionStatus::InsideNonreal) continue;
        const auto r = cs::realize(lam);
        ASSERT_LT(r.residual, 1e-8) << lam;
        ASSERT_GT(*r.shrink_l, 0.0);
        ASSERT_LE(*r.shrink_l, 1.0);
        if (lam.imag() < cs::test::kCriterionMinImag) continue;
        const auto c = cs::realize_by_criterion(lam);
        ASSERT_LT(c.residual, 1e-8) << lam;
    }
}

TEST(RealizationJson, Fields) {
    const auto j = cs::to_json(cs::realize({0.2, 0.3}));
    EXPECT_EQ(j.at("method"), "InteriorShrink");
    EXPECT_EQ(j.at("alpha").size(), 4u);
    EXPECT_EQ(j.at("mu").size(), 2u);
    EXPECT_TRUE(j.contains("l"));
    EXPECT_LT(j.at("residual").get<double>(), 1e-8);

    const auto b = cs::to_json(cs::realize({0.5, 0.5}));
    EXPECT_FALSE(b.contains("mu"));
    EXPECT_FALSE(b.contains("l"));
}
