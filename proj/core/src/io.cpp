#include "conespan/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace conespan {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON has no infinity; unreachable values are written as null.
json finite_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json meta_json(const ReportMeta& meta) {
  json j;
  j["command"] = meta.command;
  j["family"] = meta.family;
  j["k"] = meta.k;
  j["seed"] = meta.seed ? json(*meta.seed) : json(nullptr);
  j["input"] = meta.input;
  j["n"] = meta.n;
  j["tool_version"] = tool_version();
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON at offset ") +
                         std::to_string(e.byte) + ": " + e.what(),
                     0, e.byte);
  }
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t offset)
    : std::runtime_error(std::move(message)), line_(line), offset_(offset) {}

std::optional<PointFormat> parse_point_format(std::string_view name) {
  if (name == "csv") return PointFormat::csv;
  if (name == "json") return PointFormat::json;
  return std::nullopt;
}

std::optional<PointFormat> format_from_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext == ".csv" || ext == ".txt") return PointFormat::csv;
  if (ext == ".json") return PointFormat::json;
  return std::nullopt;
}

std::vector<Point> parse_points_csv(std::string_view text) {
  std::vector<Point> points;
  std::size_t line_no = 0;
  bool first_content = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    const bool header_candidate = first_content;
    first_content = false;
    if (comma == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two comma-separated values",
                       line_no);
    }
    const auto x = to_double(line.substr(0, comma));
    const auto y = to_double(line.substr(comma + 1));
    if (!x || !y) {
      // A header has no numeric field at all.
      if (header_candidate && !x && !y) continue;
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected numeric \"x,y\", got \"" +
                           std::string(line) + "\"",
                       line_no);
    }
    if (!std::isfinite(*x) || !std::isfinite(*y)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": coordinates must be finite",
                       line_no);
    }
    points.push_back({*x, *y});
  }
  return points;
}

std::vector<Point> parse_points_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) {
    throw ParseError("points JSON must be an array of [x, y] pairs", 0);
  }
  std::vector<Point> points;
  points.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& e = doc[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number()) {
      throw ParseError("points JSON element " + std::to_string(i) +
                           " is not an [x, y] pair of numbers",
                       0);
    }
    const double x = e[0].get<double>();
    const double y = e[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw ParseError("points JSON element " + std::to_string(i) +
                           " has non-finite coordinates",
                       0);
    }
    points.push_back({x, y});
  }
  return points;
}

std::string format_points_csv(const std::vector<Point>& points) {
  std::string out = "x,y\n";
  for (const auto& p : points) {
    out += fmt17(p.x);
    out += ',';
    out += fmt17(p.y);
    out += '\n';
  }
  return out;
}

std::string format_points_json(const std::vector<Point>& points) {
  json doc = json::array();
  for (const auto& p : points) doc.push_back({p.x, p.y});
  return doc.dump() + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<Point> read_points(const std::filesystem::path& path,
                               PointFormat format) {
  const std::string text = read_text(path);
  return format == PointFormat::csv ? parse_points_csv(text)
                                    : parse_points_json(text);
}

void write_points(const std::filesystem::path& path,
                  const std::vector<Point>& points, PointFormat format) {
  write_text(path, format == PointFormat::csv ? format_points_csv(points)
                                              : format_points_json(points));
}

std::string format_edges_json(const ConeGraph& graph) {
  json doc;
  doc["family"] = to_string(graph.family());
  doc["k"] = graph.k();
  doc["n"] = graph.size();
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"length", e.length}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(1) + "\n";
}

std::vector<DirectedEdge> parse_edges_json(std::string_view text,
                                           int n_points) {
  const json doc = parse_json(text);
  const json* records = &doc;
  if (doc.is_object()) {
    if (!doc.contains("edges")) {
      throw ParseError("edges JSON object has no \"edges\" member", 0);
    }
    records = &doc["edges"];
  }
  if (!records->is_array()) {
    throw ParseError("edges JSON must hold an array of edge records", 0);
  }
  std::vector<DirectedEdge> edges;
  for (std::size_t i = 0; i < records->size(); ++i) {
    const auto& r = (*records)[i];
    if (!r.is_object() || !r.contains("tail") || !r.contains("head") ||
        !r["tail"].is_number_integer() || !r["head"].is_number_integer()) {
      throw ParseError("edge record " + std::to_string(i) +
                           " needs integer \"tail\" and \"head\"",
                       0);
    }
    const auto tail = r["tail"].get<long long>();
    const auto head = r["head"].get<long long>();
    if (tail < 0 || tail >= n_points || head < 0 || head >= n_points ||
        tail == head) {
      throw ParseError("edge record " + std::to_string(i) +
                           " references an invalid vertex pair",
                       0);
    }
    double length = 0.0;
    if (r.contains("length") && r["length"].is_number()) {
      length = r["length"].get<double>();
    }
    edges.push_back({static_cast<int>(tail), static_cast<int>(head), length});
  }
  return edges;
}

std::vector<DirectedEdge> read_edges(const std::filesystem::path& path,
                                     int n_points) {
  return parse_edges_json(read_text(path), n_points);
}

void write_edges(const std::filesystem::path& path, const ConeGraph& graph) {
  write_text(path, format_edges_json(graph));
}

std::string tool_version() {
#ifdef CONESPAN_VERSION
  return CONESPAN_VERSION;
#else
  return "unknown";
#endif
}

std::string format_stretch_report(const SpannerReport& report,
                                  const ReportMeta& meta) {
  json doc = meta_json(meta);
  doc["path_model"] = "undirected";
  doc["stretch"] = finite_or_null(report.stretch);
  doc["witness"] = {report.witness.first, report.witness.second};
  doc["max_degree"] = report.max_degree;
  doc["connected"] = report.connected;
  doc["bound"] = report.bound ? json(*report.bound) : json(nullptr);
  doc["bound_satisfied"] =
      report.bound_satisfied ? json(*report.bound_satisfied) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::string format_path_report(const PathTrace& trace, const ReportMeta& meta) {
  json doc = meta_json(meta);
  doc["vertices"] = trace.vertices;
  doc["total_length"] = trace.total_length;
  return doc.dump(2) + "\n";
}

std::string format_descent_report(const DescentTrace& trace,
                                  const DescentFrame& frame, int start,
                                  const ReportMeta& meta) {
  json doc = meta_json(meta);
  doc["frame"] = {{"apex", frame.apex},
                  {"cone", frame.cone},
                  {"reflected", frame.reflected},
                  {"scale", frame.scale}};
  doc["start"] = start;
  doc["start_local"] = {trace.start_local.x, trace.start_local.y};
  doc["vertices"] = trace.path.vertices;
  doc["total_length"] = trace.path.total_length;
  doc["bound"] = trace.bound;
  doc["tau"] = trace.tau;
  doc["max_phi_increase"] = trace.max_phi_increase;
  doc["stayed_in_lower_half"] = trace.stayed_in_lower_half;
  doc["edges_shorter_than_start"] = trace.edges_shorter_than_start;
  json steps = json::array();
  for (const auto& s : trace.path.steps) {
    steps.push_back({{"kind", to_string(s.kind)},
                     {"from", s.from},
                     {"to", s.to},
                     {"length", s.length},
                     {"phi_before", s.phi_before},
                     {"phi_after", s.phi_after},
                     {"psi", finite_or_null(s.psi)}});
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

}  // namespace conespan
