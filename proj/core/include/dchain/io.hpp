#pragma once

// JSON interchange formats.
//
//   points:   {"n": N, "points": [[x, y], ...], "partition": {"U": [...], "L": [...]} | null}
//   coloring: {"n_points": N, "colors": [[i, j, color], ...]}   (sorted by segment rank)
//   verdict:  {"proper": bool, "violations": [[u, v], ...]}     (0-based vertex ids)
//   chi:      {"status": ..., "chi": c, "witness": <coloring>, "nodes": m, "ms": t, ...}

#include <cstddef>
#include <string>

#include "dchain/coloring.hpp"
#include "dchain/experiments.hpp"
#include "dchain/geometry.hpp"
#include "dchain/solver.hpp"

namespace dchain {

std::string points_to_json(const PointSet& ps);
/// Throws std::invalid_argument on malformed input.
PointSet points_from_json(const std::string& text);

std::string coloring_to_json(std::size_t n_points, const Coloring& c);
/// Rejects assignments that miss a segment or list one twice.
/// Returns the point count and the coloring.
std::pair<std::size_t, Coloring> coloring_from_json(const std::string& text);

std::string verdict_to_json(const Verdict& v);
std::string chi_result_to_json(std::size_t n_points, const ChiResult& r);
std::string validation_to_json(const ValidationReport& report);
std::string prop4_to_json(const Prop4Report& report);
std::string scan_report_to_json(const ScanReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace dchain
