#pragma once

// Exact integer planar primitives and the point configurations studied by
// the library: convex position C_n and the double chain C_{k,l}.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dchain {

using Coord = std::int64_t;

// Coordinates are restricted to |c| <= kCoordLimit so that every difference
// fits in 62 bits and every 2x2 determinant fits in a signed 128-bit value.
inline constexpr Coord kCoordLimit = Coord{1} << 60;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { Clockwise, Counterclockwise, Collinear };

const char* to_string(Orientation o);

/// Sign of the determinant of (q - p, r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// The U/L split of a double chain. Index lists are kept sorted.
struct Partition {
    std::vector<std::size_t> upper;
    std::vector<std::size_t> lower;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// An immutable set of distinct points, optionally split into U and L.
///
/// Construction validates distinctness, the coordinate bound and, when a
/// partition is given, that U and L are disjoint and cover every index.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points,
                      std::optional<Partition> partition = std::nullopt);

    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }

    bool has_partition() const { return partition_.has_value(); }
    const std::optional<Partition>& partition() const { return partition_; }
    /// Throws std::logic_error when no partition is attached.
    const Partition& require_partition() const;

    bool in_upper(std::size_t i) const;
    bool in_lower(std::size_t i) const;

    /// The points at `keep` (in the given order), with the partition
    /// restricted and renumbered accordingly.
    PointSet subset(std::span<const std::size_t> keep) const;
    /// All points except those listed.
    PointSet without(std::span<const std::size_t> removed) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
    std::optional<Partition> partition_;
};

/// Closed-segment intersection test on arbitrary points.
bool closed_segments_intersect(const Point& a, const Point& b,
                               const Point& c, const Point& d);

/// True iff the open segments cross at a single interior point.
bool segments_properly_cross(const Point& a, const Point& b,
                             const Point& c, const Point& d);

/// Convex hull of the points at `subset` (all points when empty), as point
/// indices in counterclockwise order starting from the lowest-leftmost
/// point. Collinear boundary points are dropped.
std::vector<std::size_t> convex_hull(const PointSet& ps,
                                     std::span<const std::size_t> subset = {});

/// No three points collinear, all points distinct.
bool is_general_position(const PointSet& ps);
/// First collinear triple, if any.
std::optional<std::array<std::size_t, 3>> find_collinear_triple(const PointSet& ps);

/// n points on y = x^2 at x = 0..n-1.
PointSet gen_convex(std::size_t n);

/// Canonical (k,l)-double chain. U occupies indices [0,k) and L occupies
/// [k,k+l), each sorted by x. L lies on y = -x^2 at even abscissae, U on
/// y = x^2 + M at odd abscissae, where M is the smallest shift at or above
/// the chord-height bound for which the configuration validates.
PointSet gen_double_chain(std::size_t k, std::size_t l);

/// The vertical shift used by gen_double_chain for (k,l).
Coord double_chain_shift(std::size_t k, std::size_t l);

enum class ChainCondition {
    UpperIsCup,
    LowerIsCap,
    LowerBelowUpper,   // every L point strictly below every U-line
    UpperAboveLower,   // every U point strictly above every L-line
    GeneralPosition,
};

inline constexpr std::array<ChainCondition, 5> kChainConditions = {
    ChainCondition::UpperIsCup, ChainCondition::LowerIsCap,
    ChainCondition::LowerBelowUpper, ChainCondition::UpperAboveLower,
    ChainCondition::GeneralPosition};

const char* to_string(ChainCondition c);

struct ConditionResult {
    ChainCondition condition;
    bool passed = true;
    // Point indices of a violating triple; empty when passed.
    std::vector<std::size_t> witness;
};

struct ValidationReport {
    std::vector<ConditionResult> results;

    bool ok() const;
    const ConditionResult& operator[](ChainCondition c) const;
    std::string summary() const;
};

/// Checks every double-chain condition. Throws std::invalid_argument when
/// the point set has no partition or one side of it is empty.
ValidationReport validate_double_chain(const PointSet& ps);

/// Segments on the boundary of conv(U) and conv(L), as index pairs (i < j).
std::vector<std::array<std::size_t, 2>> chain_hull_segments(const PointSet& ps);

/// A segment that violates one of the double-chain crossing properties,
/// reported as two index pairs.
struct CrossingViolation {
    std::array<std::size_t, 2> first;
    std::array<std::size_t, 2> second;
};

/// No segment on the hull of U or of L is properly crossed by any segment.
std::optional<CrossingViolation> check_hull_segments_uncrossed(const PointSet& ps);

/// A U-L segment and a segment inside U or inside L meet only at a shared
/// endpoint, if at all.
std::optional<CrossingViolation> check_mixed_segments_touch_only_at_endpoints(
    const PointSet& ps);

/// Deleting any proper subsets of U and of L leaves a valid double chain.
/// Returns the first failing (removed-U, removed-L) pair, if any.
std::optional<std::vector<std::size_t>> check_deletion_closure(const PointSet& ps);

}  // namespace dchain
