#pragma once

// Colorings of D(P): verification, star/thrackle classification of color
// classes, the constructive double-chain coloring, and star-apex removal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dchain/disjointness.hpp"
#include "dchain/geometry.hpp"

namespace dchain {

using Color = std::uint32_t;

/// A color per vertex (for D(P): per segment, by rank). Color ids are
/// contiguous: every id in [0, color_count) is used.
class Coloring {
public:
    Coloring() = default;
    /// Throws std::invalid_argument when the ids are not contiguous.
    explicit Coloring(std::vector<Color> colors);

    /// Relabels arbitrary ids by order of first appearance.
    static Coloring canonical(std::span<const Color> colors);

    std::size_t vertex_count() const { return colors_.size(); }
    std::size_t color_count() const { return color_count_; }
    Color operator[](std::size_t v) const { return colors_[v]; }
    std::span<const Color> colors() const { return colors_; }

    /// Vertices of each color class, each list ascending.
    std::vector<std::vector<std::size_t>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    std::size_t color_count_ = 0;
};

struct Verdict {
    bool proper = true;
    /// Adjacent vertex pairs (u < v) that share a color.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Rejects colorings that do not cover exactly the vertices of g.
Verdict verify_coloring(const Graph& g, const Coloring& c);

struct ClassKind {
    enum Kind { Star, Thrackle };
    Kind kind = Thrackle;
    /// Set for stars; for a single segment the smaller endpoint.
    std::optional<std::size_t> apex;

    bool is_star() const { return kind == Star; }
};

/// A class is a star iff all of its segments share one point.
ClassKind classify_class(const PointSet& ps, std::span<const SegmentId> cls);

/// Classification of every color class of a coloring of D(P) on n points.
std::vector<ClassKind> classify_classes(std::size_t n_points, const Coloring& c);

/// Number of classes consisting of exactly one segment.
std::size_t singleton_class_count(const Coloring& c);

/// Sizes of the thrackle classes of a coloring of D(P) on n points.
std::vector<std::size_t> thrackle_class_sizes(std::size_t n_points, const Coloring& c);

/// At most k*n - C(k,2) segments in k thrackles of C_n, k = sizes.size().
bool thrackle_edge_bound_ok(std::size_t n, std::span<const std::size_t> thrackle_sizes);

/// Supplies a proper coloring of D(L) for the lower chain L (given as its
/// own point set, in the order of the partition's lower indices).
using ConvexProvider = std::function<Coloring(const PointSet& lower_chain)>;

/// Colors D(C_{k,l}): L-internal segments take the provider's colors, then
/// every U point, left to right, gives one fresh color to its segments that
/// are still uncolored. Uses (provider colors) + k colors.
Coloring construct_double_chain_coloring(const PointSet& chain, const ConvexProvider& provider);
Coloring construct_double_chain_coloring(std::size_t k, std::size_t l,
                                         const ConvexProvider& provider);

struct ApexRemoval {
    PointSet points;
    Coloring coloring;
};

/// Deletes the apices of distinct star classes and returns the induced
/// coloring on the surviving segments, which uses r fewer colors.
ApexRemoval remove_star_apices(const PointSet& ps, const Coloring& c,
                               std::span<const std::size_t> apices);

/// One apex per star class, distinct, preferring the reported apex and
/// falling back to the other endpoint of a singleton class.
std::vector<std::size_t> star_apices(std::size_t n_points, const Coloring& c);

}  // namespace dchain
