#include "dchain/experiments.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "dchain/formulas.hpp"

namespace dchain {

std::vector<SweepRow> theorem_sweep(std::size_t max_sum, const Budget& budget) {
    std::vector<SweepRow> rows;
    for (std::size_t sum = 4; sum <= max_sum; ++sum) {
        for (std::size_t k = 1; 2 * k <= sum; ++k) {
            const std::size_t l = sum - k;
            if (l < 3) continue;
            const ChiResult r = chromatic_number_exact(build_graph(gen_double_chain(k, l)), budget);
            rows.push_back(SweepRow{k, l, r.chi, static_cast<std::size_t>(theorem_value(k, l)),
                                    r.exact()});
        }
    }
    return rows;
}

std::vector<SweepRow> convex_sweep(std::size_t n_min, std::size_t n_max, const Budget& budget) {
    if (n_min < 3) throw std::invalid_argument("convex sweep starts at n = 3");
    std::vector<SweepRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        const ChiResult r = chromatic_number_exact(build_graph(gen_convex(n)), budget);
        rows.push_back(SweepRow{0, n, r.chi, static_cast<std::size_t>(f_of(n)), r.exact()});
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "k,l,chi,expected,match\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.l << ',';
        if (r.exact)
            out << r.chi;
        else
            out << '?';
        out << ',' << r.expected << ',' << (r.match() ? "true" : "false") << '\n';
    }
}

Prop4Report prop4_check(std::size_t n, std::size_t cap) {
    if (n < 4) throw std::invalid_argument("prop4_check: n must be at least 4");
    if (n > cap)
        throw std::invalid_argument("prop4_check: n = " + std::to_string(n) +
                                    " exceeds the enumeration cap of " + std::to_string(cap));
    const DisjointnessGraph g = build_graph(gen_convex(n));
    const ChiResult r = chromatic_number_exact(g);

    Prop4Report report;
    report.n = n;
    report.chi = r.chi;
    const auto summary = enumerate_optimal_colorings(g, r.chi, [&](const Coloring& c) {
        const std::size_t singles = singleton_class_count(c);
        if (singles > report.max_singletons) report.max_singletons = singles;
        if (singles > 1 && !report.counterexample) report.counterexample = c;
        return true;
    });
    report.colorings = summary.count;
    return report;
}

const char* to_string(SampleKind kind) {
    switch (kind) {
        case SampleKind::Random: return "random";
        case SampleKind::Convex: return "convex";
        case SampleKind::DoubleChain: return "double-chain";
    }
    return "?";
}

namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

std::optional<PointSet> draw_general_position(std::size_t n, std::mt19937_64& rng, Coord box,
                                              std::size_t max_redraws) {
    std::uniform_int_distribution<Coord> coord(0, box);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt <= max_redraws && !placed; ++attempt) {
            const Point p{coord(rng), coord(rng)};
            placed = std::find(pts.begin(), pts.end(), p) == pts.end();
            for (std::size_t a = 0; placed && a < pts.size(); ++a)
                for (std::size_t b = a + 1; placed && b < pts.size(); ++b)
                    if (orientation(pts[a], pts[b], p) == Orientation::Collinear) placed = false;
            if (placed) pts.push_back(p);
        }
        if (!placed) return std::nullopt;
    }
    return PointSet(std::move(pts));
}

PointSet draw_convex(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Coord> coord(0, 100);
    std::set<Coord> xs;
    while (xs.size() < n) xs.insert(coord(rng));
    std::vector<Point> pts;
    for (Coord x : xs) pts.push_back({x, x * x});
    return PointSet(std::move(pts));
}

}  // namespace

std::optional<PointSet> random_general_position(std::size_t n, std::uint64_t seed, Coord box,
                                                std::size_t max_redraws) {
    auto rng = trial_engine(seed, 0);
    return draw_general_position(n, rng, box, max_redraws);
}

ScanReport conjecture_scan(const ScanConfig& config) {
    const std::size_t n = config.n;
    if (n < 4 || n > 8) throw std::invalid_argument("conjecture_scan: n must be in [4, 8]");
    if (config.box < 2) throw std::invalid_argument("conjecture_scan: box too small");

    ScanReport report;
    report.n = n;
    report.seed = config.seed;
    report.kind = config.kind;
    report.f_n = static_cast<std::size_t>(f_of(n));
    report.min_chi = std::numeric_limits<std::size_t>::max();

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        auto rng = trial_engine(config.seed, trial);
        std::optional<PointSet> sample;
        std::size_t expected = report.f_n;
        switch (config.kind) {
            case SampleKind::Random:
                sample = draw_general_position(n, rng, config.box, config.max_redraws);
                break;
            case SampleKind::Convex:
                sample = draw_convex(n, rng);
                break;
            case SampleKind::DoubleChain: {
                // Every k with 1 <= k <= n - k and n - k >= 3.
                const std::size_t k_max = std::min(n / 2, n - 3);
                std::uniform_int_distribution<std::size_t> pick(1, k_max);
                const std::size_t k = pick(rng);
                sample = gen_double_chain(k, n - k);
                expected = static_cast<std::size_t>(theorem_value(k, n - k));
                break;
            }
        }
        if (!sample) {
            report.sampling_exhausted = true;
            break;
        }
        ++report.trials;

        const ChiResult r = chromatic_number_exact(build_graph(*sample), config.budget);
        if (!r.exact()) {
            ++report.indeterminate;
            // An upper bound below f(n) is already a counterexample.
            if (r.upper < report.f_n)
                report.counterexamples.push_back(ScanSample{*sample, r.upper, expected});
            continue;
        }
        report.min_chi = std::min(report.min_chi, r.chi);
        report.max_chi = std::max(report.max_chi, r.chi);
        if (r.chi < report.f_n) report.counterexamples.push_back(ScanSample{*sample, r.chi, expected});
        if (config.kind != SampleKind::Random && r.chi != expected)
            report.mismatches.push_back(ScanSample{*sample, r.chi, expected});
    }
    if (report.min_chi == std::numeric_limits<std::size_t>::max()) report.min_chi = 0;
    return report;
}

}  // namespace dchain
