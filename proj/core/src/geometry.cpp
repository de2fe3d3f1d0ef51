#include "dchain/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dchain {

namespace {

using Wide = __int128;

Wide cross(const Point& p, const Point& q, const Point& r) {
    const Wide ax = Wide{q.x} - p.x;
    const Wide ay = Wide{q.y} - p.y;
    const Wide bx = Wide{r.x} - p.x;
    const Wide by = Wide{r.y} - p.y;
    return ax * by - ay * bx;
}

// r lies within the bounding box of segment pq (used only when collinear).
bool within_box(const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

std::vector<std::size_t> sorted_by_x(const PointSet& ps, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return ps[a] < ps[b]; });
    return idx;
}

// All triples i<j<m of an x-sorted chain must turn the same way.
ConditionResult check_chain_turns(const PointSet& ps, const std::vector<std::size_t>& chain,
                                  ChainCondition cond, Orientation want) {
    ConditionResult r{cond, true, {}};
    const auto sorted = sorted_by_x(ps, chain);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            for (std::size_t m = j + 1; m < sorted.size(); ++m) {
                if (orientation(ps[sorted[i]], ps[sorted[j]], ps[sorted[m]]) != want) {
                    r.passed = false;
                    r.witness = {sorted[i], sorted[j], sorted[m]};
                    return r;
                }
            }
        }
    }
    return r;
}

// Every point of `others` must lie strictly on the `want` side of each line
// through two points of `chain`, directed left to right.
ConditionResult check_side(const PointSet& ps, const std::vector<std::size_t>& chain,
                           const std::vector<std::size_t>& others, ChainCondition cond,
                           Orientation want) {
    ConditionResult r{cond, true, {}};
    const auto sorted = sorted_by_x(ps, chain);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Point& a = ps[sorted[i]];
            const Point& b = ps[sorted[j]];
            for (std::size_t o : others) {
                // A vertical line has no "above" side.
                if (a.x == b.x || orientation(a, b, ps[o]) != want) {
                    r.passed = false;
                    r.witness = {sorted[i], sorted[j], o};
                    return r;
                }
            }
        }
    }
    return r;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> removed) {
    std::vector<bool> drop(n, false);
    for (std::size_t r : removed) {
        if (r >= n) throw std::out_of_range("point index out of range");
        drop[r] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (!drop[i]) keep.push_back(i);
    return keep;
}

std::vector<std::array<std::size_t, 2>> all_pairs(const std::vector<std::size_t>& idx) {
    std::vector<std::array<std::size_t, 2>> out;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            out.push_back({std::min(idx[a], idx[b]), std::max(idx[a], idx[b])});
    return out;
}

bool share_endpoint(const std::array<std::size_t, 2>& s, const std::array<std::size_t, 2>& t) {
    return s[0] == t[0] || s[0] == t[1] || s[1] == t[0] || s[1] == t[1];
}

}  // namespace

const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::Clockwise: return "CLOCKWISE";
        case Orientation::Counterclockwise: return "COUNTERCLOCKWISE";
        case Orientation::Collinear: return "COLLINEAR";
    }
    return "?";
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    const Wide d = cross(p, q, r);
    if (d > 0) return Orientation::Counterclockwise;
    if (d < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

PointSet::PointSet(std::vector<Point> points, std::optional<Partition> partition)
    : points_(std::move(points)), partition_(std::move(partition)) {
    for (const Point& p : points_) {
        if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit)
            throw std::invalid_argument("coordinate magnitude exceeds 2^60");
    }
    std::vector<Point> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("point set contains duplicate points");

    if (partition_) {
        auto& part = *partition_;
        std::sort(part.upper.begin(), part.upper.end());
        std::sort(part.lower.begin(), part.lower.end());
        std::vector<int> seen(points_.size(), 0);
        for (const auto* side : {&part.upper, &part.lower}) {
            for (std::size_t i : *side) {
                if (i >= points_.size())
                    throw std::invalid_argument("partition index out of range");
                if (seen[i]++)
                    throw std::invalid_argument("partition sides overlap or repeat an index");
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw std::invalid_argument("partition does not cover every point");
    }
}

const Partition& PointSet::require_partition() const {
    if (!partition_) throw std::logic_error("point set has no U/L partition");
    return *partition_;
}

bool PointSet::in_upper(std::size_t i) const {
    return partition_ &&
           std::binary_search(partition_->upper.begin(), partition_->upper.end(), i);
}

bool PointSet::in_lower(std::size_t i) const {
    return partition_ &&
           std::binary_search(partition_->lower.begin(), partition_->lower.end(), i);
}

PointSet PointSet::subset(std::span<const std::size_t> keep) const {
    std::vector<Point> pts;
    pts.reserve(keep.size());
    std::optional<Partition> part;
    if (partition_) part.emplace();
    for (std::size_t pos = 0; pos < keep.size(); ++pos) {
        const std::size_t i = keep[pos];
        if (i >= points_.size()) throw std::out_of_range("point index out of range");
        pts.push_back(points_[i]);
        if (part) (in_upper(i) ? part->upper : part->lower).push_back(pos);
    }
    return PointSet(std::move(pts), std::move(part));
}

PointSet PointSet::without(std::span<const std::size_t> removed) const {
    const auto keep = complement(points_.size(), removed);
    return subset(keep);
}

bool closed_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Orientation o1 = orientation(a, b, c);
    const Orientation o2 = orientation(a, b, d);
    const Orientation o3 = orientation(c, d, a);
    const Orientation o4 = orientation(c, d, b);

    if (o1 != Orientation::Collinear && o2 != Orientation::Collinear && o1 != o2 &&
        o3 != Orientation::Collinear && o4 != Orientation::Collinear && o3 != o4)
        return true;

    if (o1 == Orientation::Collinear && within_box(a, b, c)) return true;
    if (o2 == Orientation::Collinear && within_box(a, b, d)) return true;
    if (o3 == Orientation::Collinear && within_box(c, d, a)) return true;
    if (o4 == Orientation::Collinear && within_box(c, d, b)) return true;
    return false;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Orientation o1 = orientation(a, b, c);
    const Orientation o2 = orientation(a, b, d);
    const Orientation o3 = orientation(c, d, a);
    const Orientation o4 = orientation(c, d, b);
    return o1 != Orientation::Collinear && o2 != Orientation::Collinear && o1 != o2 &&
           o3 != Orientation::Collinear && o4 != Orientation::Collinear && o3 != o4;
}

std::vector<std::size_t> convex_hull(const PointSet& ps, std::span<const std::size_t> subset) {
    std::vector<std::size_t> idx;
    if (subset.empty()) {
        idx.resize(ps.size());
        std::iota(idx.begin(), idx.end(), 0);
    } else {
        idx.assign(subset.begin(), subset.end());
    }
    idx = sorted_by_x(ps, std::move(idx));
    if (idx.size() < 3) return idx;

    // Andrew's monotone chain; strict turns only.
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t h = 0;
    for (std::size_t i : idx) {
        while (h >= 2 && cross(ps[hull[h - 2]], ps[hull[h - 1]], ps[i]) <= 0) --h;
        hull[h++] = i;
    }
    for (std::size_t t = idx.size() - 1, lower = h + 1; t-- > 0;) {
        const std::size_t i = idx[t];
        while (h >= lower && cross(ps[hull[h - 2]], ps[hull[h - 1]], ps[i]) <= 0) --h;
        hull[h++] = i;
    }
    hull.resize(h - 1);
    return hull;
}

std::optional<std::array<std::size_t, 3>> find_collinear_triple(const PointSet& ps) {
    const std::size_t n = ps.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t m = j + 1; m < n; ++m)
                if (orientation(ps[i], ps[j], ps[m]) == Orientation::Collinear)
                    return std::array<std::size_t, 3>{i, j, m};
    return std::nullopt;
}

bool is_general_position(const PointSet& ps) {
    // Distinctness is a PointSet invariant.
    return !find_collinear_triple(ps).has_value();
}

PointSet gen_convex(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gen_convex: n must be at least 1");
    if (n > (std::size_t{1} << 30)) throw std::invalid_argument("gen_convex: n too large");
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<Coord>(i);
        pts.push_back({x, x * x});
    }
    return PointSet(std::move(pts));
}

namespace {

constexpr int kShiftSearchCap = 10'000;

std::vector<Coord> lower_abscissae(std::size_t l) {
    std::vector<Coord> xs;
    const auto half = static_cast<Coord>(l / 2);
    for (std::size_t i = 0; i < l; ++i) xs.push_back(2 * (static_cast<Coord>(i) - half));
    return xs;
}

std::vector<Coord> upper_abscissae(std::size_t k) {
    std::vector<Coord> xs;
    const auto half = static_cast<Coord>(k / 2);
    for (std::size_t i = 0; i < k; ++i) xs.push_back(2 * (static_cast<Coord>(i) - half) + 1);
    return xs;
}

Coord max_abs(const std::vector<Coord>& xs) {
    Coord m = 0;
    for (Coord x : xs) m = std::max(m, x < 0 ? -x : x);
    return m;
}

PointSet build_chain(const std::vector<Coord>& ux, const std::vector<Coord>& lx, Coord shift) {
    std::vector<Point> pts;
    Partition part;
    for (Coord x : ux) {
        part.upper.push_back(pts.size());
        pts.push_back({x, x * x + shift});
    }
    for (Coord x : lx) {
        part.lower.push_back(pts.size());
        pts.push_back({x, -x * x});
    }
    return PointSet(std::move(pts), std::move(part));
}

void check_chain_sizes(std::size_t k, std::size_t l) {
    if (k < 1) throw std::invalid_argument("double chain needs k >= 1");
    if (k > l) throw std::invalid_argument("double chain needs k <= l");
    if (l > 100'000) throw std::invalid_argument("double chain: l too large");
}

}  // namespace

Coord double_chain_shift(std::size_t k, std::size_t l) {
    check_chain_sizes(k, l);
    const auto ux = upper_abscissae(k);
    const auto lx = lower_abscissae(l);
    const Coord a = max_abs(ux);
    const Coord b = max_abs(lx);
    // With |x| <= a on U and |x| <= b on L, every L point is below every
    // U-chord once M > a^2 + 2ab, and every U point is above every L-chord
    // once M > b^2 + 2ab.
    Coord shift = std::max(a * a, b * b) + 2 * a * b + 1;
    for (int step = 0; step <= kShiftSearchCap; ++step, ++shift) {
        if (validate_double_chain(build_chain(ux, lx, shift)).ok()) return shift;
    }
    std::ostringstream msg;
    msg << "gen_double_chain(" << k << "," << l << "): no valid shift within "
        << kShiftSearchCap << " increments";
    throw std::runtime_error(msg.str());
}

PointSet gen_double_chain(std::size_t k, std::size_t l) {
    const Coord shift = double_chain_shift(k, l);
    return build_chain(upper_abscissae(k), lower_abscissae(l), shift);
}

const char* to_string(ChainCondition c) {
    switch (c) {
        case ChainCondition::UpperIsCup: return "upper_is_cup";
        case ChainCondition::LowerIsCap: return "lower_is_cap";
        case ChainCondition::LowerBelowUpper: return "lower_below_upper_lines";
        case ChainCondition::UpperAboveLower: return "upper_above_lower_lines";
        case ChainCondition::GeneralPosition: return "general_position";
    }
    return "?";
}

bool ValidationReport::ok() const {
    return std::all_of(results.begin(), results.end(),
                       [](const ConditionResult& r) { return r.passed; });
}

const ConditionResult& ValidationReport::operator[](ChainCondition c) const {
    for (const auto& r : results)
        if (r.condition == c) return r;
    throw std::out_of_range("condition not in report");
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& r : results) {
        os << to_string(r.condition) << ": " << (r.passed ? "pass" : "FAIL");
        if (!r.passed) {
            os << " witness=(";
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                os << (i ? "," : "") << r.witness[i];
            os << ")";
        }
        os << '\n';
    }
    return os.str();
}

ValidationReport validate_double_chain(const PointSet& ps) {
    if (!ps.has_partition()) throw std::invalid_argument("double chain needs a U/L partition");
    const Partition& part = ps.require_partition();
    if (part.upper.empty() || part.lower.empty())
        throw std::invalid_argument("double chain needs non-empty U and L");

    ValidationReport report;
    // A cup turns left along increasing x; a cap turns right.
    report.results.push_back(check_chain_turns(ps, part.upper, ChainCondition::UpperIsCup,
                                               Orientation::Counterclockwise));
    report.results.push_back(check_chain_turns(ps, part.lower, ChainCondition::LowerIsCap,
                                               Orientation::Clockwise));
    report.results.push_back(check_side(ps, part.upper, part.lower,
                                        ChainCondition::LowerBelowUpper, Orientation::Clockwise));
    report.results.push_back(check_side(ps, part.lower, part.upper,
                                        ChainCondition::UpperAboveLower,
                                        Orientation::Counterclockwise));
    ConditionResult gp{ChainCondition::GeneralPosition, true, {}};
    if (auto t = find_collinear_triple(ps)) {
        gp.passed = false;
        gp.witness.assign(t->begin(), t->end());
    }
    report.results.push_back(std::move(gp));
    return report;
}

std::vector<std::array<std::size_t, 2>> chain_hull_segments(const PointSet& ps) {
    const Partition& part = ps.require_partition();
    std::vector<std::array<std::size_t, 2>> out;
    for (const auto* side : {&part.upper, &part.lower}) {
        if (side->size() < 2) continue;
        const auto hull = convex_hull(ps, *side);
        if (hull.size() == 2) {
            out.push_back({std::min(hull[0], hull[1]), std::max(hull[0], hull[1])});
            continue;
        }
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const std::size_t a = hull[i];
            const std::size_t b = hull[(i + 1) % hull.size()];
            out.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    return out;
}

std::optional<CrossingViolation> check_hull_segments_uncrossed(const PointSet& ps) {
    std::vector<std::size_t> all(ps.size());
    std::iota(all.begin(), all.end(), 0);
    const auto segments = all_pairs(all);
    for (const auto& e : chain_hull_segments(ps)) {
        for (const auto& s : segments) {
            if (share_endpoint(e, s)) continue;
            if (segments_properly_cross(ps[e[0]], ps[e[1]], ps[s[0]], ps[s[1]]))
                return CrossingViolation{e, s};
        }
    }
    return std::nullopt;
}

std::optional<CrossingViolation> check_mixed_segments_touch_only_at_endpoints(
    const PointSet& ps) {
    const Partition& part = ps.require_partition();
    auto same_side = all_pairs(part.upper);
    const auto lower_pairs = all_pairs(part.lower);
    same_side.insert(same_side.end(), lower_pairs.begin(), lower_pairs.end());

    for (std::size_t u : part.upper) {
        for (std::size_t v : part.lower) {
            const std::array<std::size_t, 2> g{std::min(u, v), std::max(u, v)};
            for (const auto& f : same_side) {
                if (share_endpoint(g, f)) continue;
                if (closed_segments_intersect(ps[g[0]], ps[g[1]], ps[f[0]], ps[f[1]]))
                    return CrossingViolation{g, f};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> check_deletion_closure(const PointSet& ps) {
    const Partition& part = ps.require_partition();
    const std::size_t k = part.upper.size();
    const std::size_t l = part.lower.size();
    if (k >= 20 || l >= 20) throw std::invalid_argument("deletion closure: chain too long");

    const std::uint32_t full_u = (1u << k) - 1;
    const std::uint32_t full_l = (1u << l) - 1;
    std::vector<std::size_t> removed;
    for (std::uint32_t mu = 0; mu < full_u; ++mu) {
        for (std::uint32_t ml = 0; ml < full_l; ++ml) {
            removed.clear();
            for (std::size_t i = 0; i < k; ++i)
                if (mu >> i & 1u) removed.push_back(part.upper[i]);
            for (std::size_t i = 0; i < l; ++i)
                if (ml >> i & 1u) removed.push_back(part.lower[i]);
            if (!validate_double_chain(ps.without(removed)).ok()) return removed;
        }
    }
    return std::nullopt;
}

}  // namespace dchain
