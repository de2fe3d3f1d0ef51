#pragma once

// Exact chromatic number by DSATUR branch-and-bound, with a DSATUR upper
// bound, a greedy clique lower bound, and exhaustive enumeration of optimal
// colorings up to color permutation.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dchain/coloring.hpp"
#include "dchain/disjointness.hpp"

namespace dchain {

struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> time_limit;
};

enum class ChiStatus { Exact, Indeterminate };

struct ChiResult {
    ChiStatus status = ChiStatus::Exact;
    /// The chromatic number; equal to lower == upper when exact.
    std::size_t chi = 0;
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// Best coloring found; uses `upper` colors.
    Coloring witness;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;

    bool exact() const { return status == ChiStatus::Exact; }
};

/// Exact chi with a witness. Deterministic for a given graph. When the
/// budget runs out the result is Indeterminate and carries the bounds
/// proven so far.
ChiResult chromatic_number_exact(const Graph& g, const Budget& budget = {});

/// Greedy coloring by saturation degree, ties by smallest vertex id.
Coloring dsatur_upper(const Graph& g);

struct Clique {
    std::vector<std::size_t> vertices;
    std::size_t size() const { return vertices.size(); }
};

/// Pairwise adjacent vertex set from greedy growth plus 1-for-2 swaps.
Clique clique_lower(const Graph& g);

/// True iff g has a proper coloring with at most k colors. Exhaustive.
bool is_k_colorable(const Graph& g, std::size_t k, std::optional<Coloring>* witness = nullptr);

struct EnumerationSummary {
    std::uint64_t count = 0;
    bool stopped = false;  // the visitor asked to stop
};

/// Visits every proper coloring that uses exactly `chi` colors, once per
/// color permutation orbit: classes are numbered by their smallest vertex.
/// The visitor returns false to stop. Throws std::invalid_argument when no
/// such coloring exists (chi below the chromatic number).
EnumerationSummary enumerate_optimal_colorings(
    const Graph& g, std::size_t chi, const std::function<bool(const Coloring&)>& visit);

/// Convex-chain provider backed by the exact solver. Throws
/// std::runtime_error when the budget is exhausted.
ConvexProvider exact_convex_provider(Budget budget = {});

}  // namespace dchain
