#include "dchain/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dchain {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::vector<std::uint32_t>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        g.row(u).for_each([&](std::size_t v) { adj[u].push_back(static_cast<std::uint32_t>(v)); });
    return adj;
}

struct BudgetExhausted {};

// Backtracking k-coloring in DSATUR order with forward checking. A vertex
// may only open the next unused color, so every coloring is visited once per
// permutation orbit.
class KColorSearch {
public:
    KColorSearch(const Graph& g, std::size_t k, const Budget& budget, Clock::time_point start,
                 std::uint64_t& nodes)
        : n_(g.vertex_count()),
          k_(k),
          adj_(adjacency_lists(g)),
          color_(n_, kNone),
          forbid_(n_ * k, 0),
          sat_(n_, 0),
          budget_(budget),
          start_(start),
          nodes_(nodes) {
        degree_.reserve(n_);
        for (const auto& a : adj_) degree_.push_back(a.size());
    }

    // Throws BudgetExhausted.
    std::optional<std::vector<Color>> run() {
        if (k_ == 0) return n_ == 0 ? std::optional<std::vector<Color>>{std::vector<Color>{}}
                                    : std::nullopt;
        if (search(0, 0)) {
            std::vector<Color> out(color_.begin(), color_.end());
            return out;
        }
        return std::nullopt;
    }

private:
    static constexpr Color kNone = std::numeric_limits<Color>::max();

    std::size_t select() const {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != kNone) continue;
            if (best == n_ || sat_[v] > sat_[best] ||
                (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    // Returns false when some uncolored neighbor is left without colors.
    bool assign(std::size_t v, Color c) {
        color_[v] = c;
        bool alive = true;
        for (std::uint32_t u : adj_[v]) {
            if (color_[u] != kNone) continue;
            if (forbid_[u * k_ + c]++ == 0 && ++sat_[u] == k_) alive = false;
        }
        return alive;
    }

    void unassign(std::size_t v, Color c) {
        for (std::uint32_t u : adj_[v]) {
            if (color_[u] != kNone) continue;
            if (--forbid_[u * k_ + c] == 0) --sat_[u];
        }
        color_[v] = kNone;
    }

    void charge_node() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) throw BudgetExhausted{};
        if (budget_.time_limit && (nodes_ & 0xfff) == 0 &&
            Clock::now() - start_ > *budget_.time_limit)
            throw BudgetExhausted{};
    }

    bool search(std::size_t colored, std::size_t used) {
        if (colored == n_) return true;
        const std::size_t v = select();
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbid_[v * k_ + c]) continue;
            charge_node();
            const bool alive = assign(v, static_cast<Color>(c));
            if (alive && search(colored + 1, std::max(used, c + 1))) return true;
            unassign(v, static_cast<Color>(c));
        }
        return false;
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::vector<std::size_t> degree_;
    std::vector<Color> color_;
    std::vector<std::uint16_t> forbid_;
    std::vector<std::size_t> sat_;
    const Budget& budget_;
    Clock::time_point start_;
    std::uint64_t& nodes_;
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Coloring dsatur_upper(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr Color kNone = std::numeric_limits<Color>::max();
    std::vector<Color> color(n, kNone);
    // neighbor_colors[v] has bit c set when a neighbor of v holds color c.
    std::vector<std::vector<bool>> neighbor_colors(n);
    std::vector<std::size_t> sat(n, 0);
    const auto adj = adjacency_lists(g);

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t v = n;
        for (std::size_t u = 0; u < n; ++u)
            if (color[u] == kNone && (v == n || sat[u] > sat[v])) v = u;
        Color c = 0;
        while (c < neighbor_colors[v].size() && neighbor_colors[v][c]) ++c;
        color[v] = c;
        for (std::uint32_t u : adj[v]) {
            auto& nc = neighbor_colors[u];
            if (nc.size() <= c) nc.resize(c + 1, false);
            if (!nc[c]) {
                nc[c] = true;
                ++sat[u];
            }
        }
    }
    return Coloring::canonical(color);
}

Clique clique_lower(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};

    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

    // Grows `clique` greedily inside the common neighborhood.
    auto extend = [&](std::vector<std::size_t>& clique) {
        Bitset cand(n);
        for (std::size_t v = 0; v < n; ++v) cand.set(v);
        for (std::size_t c : clique) {
            cand &= g.row(c);
        }
        while (cand.any()) {
            std::size_t pick = n;
            std::size_t best = 0;
            cand.for_each([&](std::size_t v) {
                const std::size_t score = g.row(v).count_and(cand);
                if (pick == n || score > best) {
                    pick = v;
                    best = score;
                }
            });
            clique.push_back(pick);
            cand &= g.row(pick);
        }
    };

    // Replaces one member by two adjacent outsiders when possible.
    auto improve = [&](std::vector<std::size_t>& clique) {
        for (std::size_t drop = 0; drop < clique.size(); ++drop) {
            Bitset cand(n);
            for (std::size_t v = 0; v < n; ++v) cand.set(v);
            for (std::size_t i = 0; i < clique.size(); ++i)
                if (i != drop) cand &= g.row(clique[i]);
            cand.reset(clique[drop]);
            std::optional<std::pair<std::size_t, std::size_t>> swap;
            cand.for_each([&](std::size_t a) {
                if (swap) return;
                cand.for_each([&](std::size_t b) {
                    if (!swap && b > a && g.adjacent(a, b)) swap.emplace(a, b);
                });
            });
            if (swap) {
                clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(drop));
                clique.push_back(swap->first);
                clique.push_back(swap->second);
                return true;
            }
        }
        return false;
    };

    constexpr std::size_t kMaxSeeds = 64;
    Clique best;
    for (std::size_t s = 0; s < std::min(n, kMaxSeeds); ++s) {
        std::vector<std::size_t> clique{order[s]};
        extend(clique);
        while (improve(clique)) extend(clique);
        if (clique.size() > best.size()) best.vertices = clique;
    }
    std::sort(best.vertices.begin(), best.vertices.end());
    return best;
}

bool is_k_colorable(const Graph& g, std::size_t k, std::optional<Coloring>* witness) {
    std::uint64_t nodes = 0;
    KColorSearch search(g, k, Budget{}, Clock::now(), nodes);
    auto found = search.run();
    if (found && witness) *witness = Coloring::canonical(*found);
    return found.has_value();
}

ChiResult chromatic_number_exact(const Graph& g, const Budget& budget) {
    const auto start = Clock::now();
    ChiResult result;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        result.elapsed_ms = elapsed_ms(start);
        return result;
    }

    result.witness = dsatur_upper(g);
    result.upper = result.witness.color_count();
    result.lower = std::max<std::size_t>(1, clique_lower(g).size());

    try {
        while (result.lower < result.upper) {
            const std::size_t k = result.upper - 1;
            KColorSearch search(g, k, budget, start, result.nodes);
            if (auto found = search.run()) {
                result.witness = Coloring::canonical(*found);
                result.upper = result.witness.color_count();
            } else {
                result.lower = k + 1;
            }
        }
        result.status = ChiStatus::Exact;
        result.chi = result.upper;
    } catch (const BudgetExhausted&) {
        result.status = ChiStatus::Indeterminate;
        result.chi = 0;
    }
    result.elapsed_ms = elapsed_ms(start);
    return result;
}

EnumerationSummary enumerate_optimal_colorings(
    const Graph& g, std::size_t chi, const std::function<bool(const Coloring&)>& visit) {
    const std::size_t n = g.vertex_count();
    if (chi == 0 || chi > n) throw std::invalid_argument("enumerate: chi out of range");
    const auto adj = adjacency_lists(g);

    std::vector<Color> color(n, 0);
    // forbid[v * chi + c]: earlier neighbors of v holding c.
    std::vector<std::uint16_t> forbid(n * chi, 0);
    EnumerationSummary summary;

    // Vertices are colored in id order, so opening color `used` at the
    // smallest vertex of each class gives the canonical labeling.
    auto recurse = [&](auto&& self, std::size_t v, std::size_t used) -> bool {
        if (n - v < chi - used) return true;  // cannot open the remaining colors
        if (v == n) {
            ++summary.count;
            if (!visit(Coloring(color))) {
                summary.stopped = true;
                return false;
            }
            return true;
        }
        const std::size_t limit = std::min(used + 1, chi);
        for (std::size_t c = 0; c < limit; ++c) {
            if (forbid[v * chi + c]) continue;
            color[v] = static_cast<Color>(c);
            for (std::uint32_t u : adj[v])
                if (u > v) ++forbid[u * chi + c];
            const bool go_on = self(self, v + 1, std::max(used, c + 1));
            for (std::uint32_t u : adj[v])
                if (u > v) --forbid[u * chi + c];
            if (!go_on) return false;
        }
        return true;
    };
    recurse(recurse, 0, 0);

    if (summary.count == 0)
        throw std::invalid_argument("enumerate: no proper coloring uses exactly " +
                                    std::to_string(chi) +
                                    " colors; chi is below the chromatic number");
    return summary;
}

ConvexProvider exact_convex_provider(Budget budget) {
    return [budget](const PointSet& lower) {
        const ChiResult r = chromatic_number_exact(build_graph(lower), budget);
        if (!r.exact())
            throw std::runtime_error("exact convex provider: budget exhausted on " +
                                     std::to_string(lower.size()) + " points");
        return r.witness;
    };
}

}  // namespace dchain
