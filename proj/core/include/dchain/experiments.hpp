#pragma once

// Verification runs built on the exact solver: the double-chain sweep, the
// convex sweep, exhaustive singleton-class checks, and the randomized scan
// for point sets needing fewer colors than the convex configuration.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dchain/coloring.hpp"
#include "dchain/geometry.hpp"
#include "dchain/solver.hpp"

namespace dchain {

struct SweepRow {
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t chi = 0;
    std::size_t expected = 0;
    bool exact = true;

    bool match() const { return exact && chi == expected; }
};

/// Exact chi of D(C_{k,l}) against k + f(l) for 1 <= k <= l, l >= 3,
/// k + l <= max_sum, ordered by (k + l, k).
std::vector<SweepRow> theorem_sweep(std::size_t max_sum, const Budget& budget = {});

/// Exact chi of D(C_n) against f(n); rows have k = 0 and l = n.
std::vector<SweepRow> convex_sweep(std::size_t n_min, std::size_t n_max,
                                   const Budget& budget = {});

/// CSV "k,l,chi,expected,match". Indeterminate rows print chi as "?".
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

inline constexpr std::size_t kDefaultProp4Cap = 6;

struct Prop4Report {
    std::size_t n = 0;
    std::size_t chi = 0;
    std::uint64_t colorings = 0;
    std::size_t max_singletons = 0;
    std::optional<Coloring> counterexample;

    bool holds() const { return max_singletons <= 1; }
};

/// Enumerates every optimal coloring of D(C_n) up to color permutation and
/// records the largest number of single-segment classes. Refuses n outside
/// [4, cap].
Prop4Report prop4_check(std::size_t n, std::size_t cap = kDefaultProp4Cap);

enum class SampleKind { Random, Convex, DoubleChain };

struct ScanConfig {
    std::size_t n = 5;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    SampleKind kind = SampleKind::Random;
    /// Random coordinates are uniform in [0, box]^2.
    Coord box = 10'000;
    /// Redraws allowed per point before a sample is abandoned.
    std::size_t max_redraws = 10'000;
    Budget budget;
};

struct ScanSample {
    PointSet points;
    std::size_t chi = 0;
    std::size_t expected = 0;
};

struct ScanReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    SampleKind kind = SampleKind::Random;
    std::size_t f_n = 0;
    std::size_t min_chi = 0;
    std::size_t max_chi = 0;
    std::size_t indeterminate = 0;
    bool sampling_exhausted = false;
    /// Samples with chi < f(n).
    std::vector<ScanSample> counterexamples;
    /// Forced convex / double-chain samples whose chi differs from the
    /// closed form.
    std::vector<ScanSample> mismatches;

    bool clean() const {
        return counterexamples.empty() && mismatches.empty() && indeterminate == 0 &&
               !sampling_exhausted;
    }
};

/// Requires 4 <= n <= 8. Deterministic for a fixed config.
ScanReport conjecture_scan(const ScanConfig& config);

/// Seeded general-position sample; std::nullopt if redraws run out.
std::optional<PointSet> random_general_position(std::size_t n, std::uint64_t seed, Coord box,
                                                std::size_t max_redraws);

const char* to_string(SampleKind kind);

}  // namespace dchain
