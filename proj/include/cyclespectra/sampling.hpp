#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cycle_matrix.hpp"
#include "region.hpp"

namespace cyclespectra {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform double in [0, 1) determined by (seed, counter) alone.
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t counter) noexcept {
    const std::uint64_t h = mix64(mix64(seed) ^ mix64(counter + 0x632be59bd9b4e019ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Parameters of random matrix number `index` under `seed`.
constexpr std::array<double, 4> sample_alpha(std::uint64_t seed, std::uint64_t index) noexcept {
    std::array<double, 4> a{};
    for (std::uint64_t k = 0; k < 4; ++k) a[k] = counter_uniform(seed, 4 * index + k);
    return a;
}

struct SampleRecord {
    std::uint64_t index = 0;
    std::array<double, 4> alpha{};
    Complex eigenvalue;
    RegionVerdict verdict;
};

struct SampleSummary {
    std::size_t counts[6] = {};
    std::size_t outside() const { return counts[static_cast<int>(RegionStatus::Outside)]; }
};

/// All four eigenvalues of matrices index = 0..n-1, in index order.
inline std::vector<SampleRecord> sample_spectra(std::uint64_t n, std::uint64_t seed,
                                                const Tolerance& spectrum_tol,
                                                const Tolerance& membership_tol) {
    std::vector<SampleRecord> out;
    out.reserve(static_cast<std::size_t>(4 * n));
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::array<double, 4> alpha = sample_alpha(seed, i);
        const QuarticRoots eig = spectrum(make_cycle_matrix(alpha), spectrum_tol);
        for (const Complex& lam : eig) out.push_back({i, alpha, lam, membership(lam, membership_tol)});
    }
    return out;
}

inline SampleSummary summarize(const std::vector<SampleRecord>& records) {
    SampleSummary s;
    for (const SampleRecord& r : records) ++s.counts[static_cast<int>(r.verdict.status)];
    return s;
}

}  // namespace cyclespectra
