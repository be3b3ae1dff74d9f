#pragma once

// Point and edge files, and JSON reports.
//
//   points, CSV:  one "x,y" row per point; an optional non-numeric header row.
//   points, JSON: [[x, y], ...]
//   edges, JSON:  {"family": ..., "k": ..., "n": ...,
//                  "edges": [{"tail": i, "head": j, "length": d}, ...]}
//
// Coordinates are written with 17 significant digits so they read back
// bit-identical.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conespan/analysis.hpp"
#include "conespan/graph_build.hpp"
#include "conespan/span_paths.hpp"

namespace conespan {

enum class PointFormat { csv, json };

std::optional<PointFormat> parse_point_format(std::string_view name);
/// Guess from the file extension (.csv / .json).
std::optional<PointFormat> format_from_path(const std::filesystem::path& path);

/// Malformed input. `line()` is 1-based for CSV; for JSON it is 0 and
/// `offset()` holds the byte offset reported by the parser.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t offset = 0);
  std::size_t line() const { return line_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Point> parse_points_csv(std::string_view text);
std::vector<Point> parse_points_json(std::string_view text);
std::string format_points_csv(const std::vector<Point>& points);
std::string format_points_json(const std::vector<Point>& points);

std::vector<Point> read_points(const std::filesystem::path& path,
                               PointFormat format);
void write_points(const std::filesystem::path& path,
                  const std::vector<Point>& points, PointFormat format);

std::string format_edges_json(const ConeGraph& graph);
/// Accepts the object form above or a bare array of edge records. Indices are
/// checked against `n_points`.
std::vector<DirectedEdge> parse_edges_json(std::string_view text,
                                           int n_points);
std::vector<DirectedEdge> read_edges(const std::filesystem::path& path,
                                     int n_points);
void write_edges(const std::filesystem::path& path, const ConeGraph& graph);

/// Provenance stamped into every report.
struct ReportMeta {
  std::string command;
  std::string family;
  int k = 0;
  std::optional<std::uint64_t> seed;
  std::string input;
  int n = 0;
};

std::string tool_version();

std::string format_stretch_report(const SpannerReport& report,
                                  const ReportMeta& meta);
std::string format_path_report(const PathTrace& trace, const ReportMeta& meta);
std::string format_descent_report(const DescentTrace& trace,
                                  const DescentFrame& frame, int start,
                                  const ReportMeta& meta);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace conespan
