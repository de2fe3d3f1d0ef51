#include "dchain/coloring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dchain {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    Color max_id = 0;
    for (Color c : colors_) max_id = std::max(max_id, c);
    if (colors_.empty()) return;
    std::vector<bool> used(static_cast<std::size_t>(max_id) + 1, false);
    for (Color c : colors_) used[c] = true;
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw std::invalid_argument("coloring: color ids are not contiguous");
    color_count_ = used.size();
}

Coloring Coloring::canonical(std::span<const Color> colors) {
    std::vector<Color> relabel;
    std::vector<Color> out;
    out.reserve(colors.size());
    constexpr Color kUnset = std::numeric_limits<Color>::max();
    Color next = 0;
    for (Color c : colors) {
        if (c >= relabel.size()) relabel.resize(static_cast<std::size_t>(c) + 1, kUnset);
        if (relabel[c] == kUnset) relabel[c] = next++;
        out.push_back(relabel[c]);
    }
    return Coloring(std::move(out));
}

std::vector<std::vector<std::size_t>> Coloring::classes() const {
    std::vector<std::vector<std::size_t>> out(color_count_);
    for (std::size_t v = 0; v < colors_.size(); ++v) out[colors_[v]].push_back(v);
    return out;
}

Verdict verify_coloring(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count()) {
        std::ostringstream msg;
        msg << "verify_coloring: coloring covers " << c.vertex_count() << " vertices, graph has "
            << g.vertex_count();
        throw std::invalid_argument(msg.str());
    }
    Verdict verdict;
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v]) verdict.violations.emplace_back(u, v);
    verdict.proper = verdict.violations.empty();
    return verdict;
}

namespace {

std::vector<SegmentId> class_segments(std::size_t n_points, const std::vector<std::size_t>& cls) {
    std::vector<SegmentId> segs;
    segs.reserve(cls.size());
    for (std::size_t v : cls) segs.push_back(segment_at(v, n_points));
    return segs;
}

void require_segment_coloring(std::size_t n_points, const Coloring& c) {
    if (c.vertex_count() != segment_count(n_points))
        throw std::invalid_argument("coloring does not cover the segments of the point set");
}

// A common point must be an endpoint of the first segment.
ClassKind classify_segments(std::span<const SegmentId> cls) {
    for (std::size_t candidate : {cls.front().i, cls.front().j}) {
        const bool common = std::all_of(cls.begin(), cls.end(), [&](const SegmentId& s) {
            return s.has_endpoint(candidate);
        });
        if (common) return ClassKind{ClassKind::Star, candidate};
    }
    return ClassKind{ClassKind::Thrackle, std::nullopt};
}

}  // namespace

ClassKind classify_class(const PointSet& ps, std::span<const SegmentId> cls) {
    if (cls.empty()) throw std::invalid_argument("classify_class: empty class");
    for (const auto& s : cls)
        if (s.j >= ps.size() || s.i >= s.j)
            throw std::out_of_range("classify_class: segment index out of range");
    return classify_segments(cls);
}

std::vector<ClassKind> classify_classes(std::size_t n_points, const Coloring& c) {
    require_segment_coloring(n_points, c);
    std::vector<ClassKind> out;
    for (const auto& cls : c.classes()) out.push_back(classify_segments(class_segments(n_points, cls)));
    return out;
}

std::size_t singleton_class_count(const Coloring& c) {
    std::size_t count = 0;
    for (const auto& cls : c.classes())
        if (cls.size() == 1) ++count;
    return count;
}

std::vector<std::size_t> thrackle_class_sizes(std::size_t n_points, const Coloring& c) {
    const auto kinds = classify_classes(n_points, c);
    const auto classes = c.classes();
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!kinds[i].is_star()) sizes.push_back(classes[i].size());
    return sizes;
}

bool thrackle_edge_bound_ok(std::size_t n, std::span<const std::size_t> thrackle_sizes) {
    if (n < 3) throw std::invalid_argument("thrackle bound: n must be at least 3");
    std::size_t total = 0;
    for (std::size_t s : thrackle_sizes) {
        if (s == 0) throw std::invalid_argument("thrackle bound: sizes must be positive");
        total += s;
    }
    const auto k = static_cast<long long>(thrackle_sizes.size());
    const long long bound = k * static_cast<long long>(n) - k * (k - 1) / 2;
    return static_cast<long long>(total) <= bound;
}

Coloring construct_double_chain_coloring(const PointSet& chain, const ConvexProvider& provider) {
    const Partition& part = chain.require_partition();
    const std::size_t k = part.upper.size();
    const std::size_t l = part.lower.size();
    if (k < 1 || k > l || l < 3)
        throw std::invalid_argument("double chain coloring needs 1 <= k <= l and l >= 3");

    const PointSet lower = chain.subset(part.lower);
    const Coloring base = provider(lower);
    if (base.vertex_count() != segment_count(l))
        throw std::invalid_argument("provider coloring does not match the lower chain");
    if (!verify_coloring(build_graph(lower), base).proper)
        throw std::invalid_argument("provider coloring of the lower chain is not proper");

    const std::size_t n = chain.size();
    constexpr Color kUnset = std::numeric_limits<Color>::max();
    std::vector<Color> colors(segment_count(n), kUnset);
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = a + 1; b < l; ++b)
            colors[segment_rank(SegmentId(part.lower[a], part.lower[b]), n)] =
                base[segment_rank(SegmentId(a, b), l)];

    std::vector<std::size_t> upper = part.upper;
    std::sort(upper.begin(), upper.end(),
              [&](std::size_t a, std::size_t b) { return chain[a] < chain[b]; });
    auto next = static_cast<Color>(base.color_count());
    for (std::size_t u : upper) {
        for (std::size_t w = 0; w < n; ++w) {
            if (w == u) continue;
            Color& slot = colors[segment_rank(SegmentId(u, w), n)];
            if (slot == kUnset) slot = next;
        }
        ++next;
    }
    return Coloring(std::move(colors));
}

Coloring construct_double_chain_coloring(std::size_t k, std::size_t l,
                                         const ConvexProvider& provider) {
    if (k < 1 || k > l || l < 3)
        throw std::invalid_argument("double chain coloring needs 1 <= k <= l and l >= 3");
    return construct_double_chain_coloring(gen_double_chain(k, l), provider);
}

ApexRemoval remove_star_apices(const PointSet& ps, const Coloring& c,
                               std::span<const std::size_t> apices) {
    const std::size_t n = ps.size();
    require_segment_coloring(n, c);

    std::vector<std::size_t> sorted(apices.begin(), apices.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("remove_star_apices: duplicate apex");
    for (std::size_t a : sorted)
        if (a >= n) throw std::out_of_range("remove_star_apices: apex out of range");

    const auto classes = c.classes();
    std::vector<bool> class_taken(classes.size(), false);
    for (std::size_t a : apices) {
        std::optional<std::size_t> owner;
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            const bool star_at_a = std::all_of(
                classes[ci].begin(), classes[ci].end(),
                [&](std::size_t v) { return segment_at(v, n).has_endpoint(a); });
            if (!star_at_a) continue;
            if (owner)
                throw std::invalid_argument("remove_star_apices: point " + std::to_string(a) +
                                            " is the apex of several star classes");
            owner = ci;
        }
        if (!owner)
            throw std::invalid_argument("remove_star_apices: point " + std::to_string(a) +
                                        " is not the apex of a star class");
        if (class_taken[*owner])
            throw std::invalid_argument("remove_star_apices: two apices name the same class");
        class_taken[*owner] = true;
    }

    PointSet rest = ps.without(sorted);
    std::vector<std::size_t> new_index(n, n);
    for (std::size_t i = 0, next = 0; i < n; ++i)
        if (!std::binary_search(sorted.begin(), sorted.end(), i)) new_index[i] = next++;

    // Surviving colors keep their relative order.
    std::vector<Color> induced(segment_count(rest.size()));
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        const SegmentId s = segment_at(v, n);
        if (new_index[s.i] == n || new_index[s.j] == n) continue;
        induced[segment_rank(SegmentId(new_index[s.i], new_index[s.j]), rest.size())] = c[v];
    }
    std::vector<bool> alive(c.color_count(), false);
    for (Color col : induced) alive[col] = true;
    std::vector<Color> compact(c.color_count(), 0);
    for (std::size_t col = 0, next = 0; col < alive.size(); ++col)
        if (alive[col]) compact[col] = static_cast<Color>(next++);
    for (Color& col : induced) col = compact[col];

    Coloring out(std::move(induced));
    if (out.color_count() + apices.size() != c.color_count() && rest.size() >= 2)
        throw std::invalid_argument(
            "remove_star_apices: deleting the apices also empties a non-star class");
    return ApexRemoval{std::move(rest), std::move(out)};
}

std::vector<std::size_t> star_apices(std::size_t n_points, const Coloring& c) {
    const auto kinds = classify_classes(n_points, c);
    const auto classes = c.classes();
    std::vector<bool> used(n_points, false);
    std::vector<std::size_t> out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        if (!kinds[ci].is_star()) continue;
        std::size_t apex = *kinds[ci].apex;
        if (used[apex] && classes[ci].size() == 1) {
            const SegmentId s = segment_at(classes[ci].front(), n_points);
            apex = s.i == apex ? s.j : s.i;
        }
        if (used[apex]) continue;
        used[apex] = true;
        out.push_back(apex);
    }
    return out;
}

}  // namespace dchain
