#include "dchain/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dchain {

using nlohmann::json;

namespace {

json points_json(const PointSet& ps) {
    json j;
    j["n"] = ps.size();
    j["points"] = json::array();
    for (const Point& p : ps.points()) j["points"].push_back({p.x, p.y});
    if (const auto& part = ps.partition()) {
        j["partition"] = {{"U", part->upper}, {"L", part->lower}};
    } else {
        j["partition"] = nullptr;
    }
    return j;
}

json coloring_json(std::size_t n_points, const Coloring& c) {
    if (c.vertex_count() != segment_count(n_points))
        throw std::invalid_argument("coloring does not match the point count");
    json j;
    j["n_points"] = n_points;
    j["colors"] = json::array();
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        const SegmentId s = segment_at(v, n_points);
        j["colors"].push_back({s.i, s.j, c[v]});
    }
    return j;
}

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

}  // namespace

std::string points_to_json(const PointSet& ps) { return points_json(ps).dump() + "\n"; }

PointSet points_from_json(const std::string& text) {
    const json j = parse(text, "points JSON");
    try {
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) {
            if (!p.is_array() || p.size() != 2)
                throw std::invalid_argument("points JSON: each point must be [x, y]");
            pts.push_back({p[0].get<Coord>(), p[1].get<Coord>()});
        }
        if (j.contains("n") && j.at("n").get<std::size_t>() != pts.size())
            throw std::invalid_argument("points JSON: n does not match the number of points");
        std::optional<Partition> part;
        if (j.contains("partition") && !j.at("partition").is_null()) {
            part.emplace();
            part->upper = j.at("partition").at("U").get<std::vector<std::size_t>>();
            part->lower = j.at("partition").at("L").get<std::vector<std::size_t>>();
        }
        return PointSet(std::move(pts), std::move(part));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("points JSON: ") + e.what());
    }
}

std::string coloring_to_json(std::size_t n_points, const Coloring& c) {
    return coloring_json(n_points, c).dump() + "\n";
}

std::pair<std::size_t, Coloring> coloring_from_json(const std::string& text) {
    const json j = parse(text, "coloring JSON");
    try {
        const auto n_points = j.at("n_points").get<std::size_t>();
        const std::size_t m = segment_count(n_points);
        constexpr Color kUnset = std::numeric_limits<Color>::max();
        std::vector<Color> colors(m, kUnset);
        for (const auto& e : j.at("colors")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument("coloring JSON: entries must be [i, j, color]");
            const SegmentId s(e[0].get<std::size_t>(), e[1].get<std::size_t>());
            if (s.j >= n_points) throw std::invalid_argument("coloring JSON: point index out of range");
            Color& slot = colors[segment_rank(s, n_points)];
            if (slot != kUnset)
                throw std::invalid_argument("coloring JSON: segment listed twice");
            slot = e[2].get<Color>();
            if (slot == kUnset) throw std::invalid_argument("coloring JSON: color id too large");
        }
        if (std::find(colors.begin(), colors.end(), kUnset) != colors.end())
            throw std::invalid_argument("coloring JSON: some segments are uncolored");
        return {n_points, Coloring(std::move(colors))};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("coloring JSON: ") + e.what());
    }
}

std::string verdict_to_json(const Verdict& v) {
    json j;
    j["proper"] = v.proper;
    j["violations"] = json::array();
    for (const auto& [a, b] : v.violations) j["violations"].push_back({a, b});
    return j.dump() + "\n";
}

std::string chi_result_to_json(std::size_t n_points, const ChiResult& r) {
    json j;
    j["status"] = r.exact() ? "exact" : "indeterminate";
    if (r.exact())
        j["chi"] = r.chi;
    else
        j["chi"] = nullptr;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["witness"] = coloring_json(n_points, r.witness);
    j["nodes"] = r.nodes;
    j["ms"] = r.elapsed_ms;
    return j.dump() + "\n";
}

std::string validation_to_json(const ValidationReport& report) {
    json j;
    j["ok"] = report.ok();
    j["conditions"] = json::array();
    for (const auto& r : report.results)
        j["conditions"].push_back(
            {{"name", to_string(r.condition)}, {"passed", r.passed}, {"witness", r.witness}});
    return j.dump() + "\n";
}

std::string prop4_to_json(const Prop4Report& report) {
    json j;
    j["n"] = report.n;
    j["chi"] = report.chi;
    j["colorings"] = report.colorings;
    j["max_singleton_classes"] = report.max_singletons;
    j["holds"] = report.holds();
    if (report.counterexample)
        j["counterexample"] = coloring_json(report.n, *report.counterexample);
    return j.dump() + "\n";
}

std::string scan_report_to_json(const ScanReport& report) {
    auto samples = [](const std::vector<ScanSample>& list) {
        json arr = json::array();
        for (const auto& s : list)
            arr.push_back({{"chi", s.chi}, {"expected", s.expected}, {"points", points_json(s.points)}});
        return arr;
    };
    json j;
    j["n"] = report.n;
    j["kind"] = to_string(report.kind);
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["f_n"] = report.f_n;
    j["min_chi"] = report.min_chi;
    j["max_chi"] = report.max_chi;
    j["indeterminate"] = report.indeterminate;
    j["sampling_exhausted"] = report.sampling_exhausted;
    j["counterexamples"] = samples(report.counterexamples);
    j["mismatches"] = samples(report.mismatches);
    return j.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace dchain
