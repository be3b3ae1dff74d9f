#pragma once

// Seeded point-set generators. Output is bit-identical for equal GenSpec
// values on every platform (see random.hpp for the exact conversions).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conespan/geometry.hpp"

namespace conespan {

enum class GenKind { uniform_square, grid, co_circular, clustered };

std::string to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::uniform_square;
  int n = 100;
  std::uint64_t seed = 1;
  double side = 1.0;    // uniform_square, clustered: bounding square
  double pitch = 1.0;   // grid
  double radius = 1.0;  // co_circular
  double jitter = 0.0;  // co_circular: angular jitter, fraction of 2*pi/n
  int clusters = 4;     // clustered
  double spread = 0.05; // clustered: normal standard deviation
};

/// Deterministic, pairwise-distinct points. A random draw that collides with
/// an earlier point is discarded and redrawn from the same stream.
std::vector<Point> gen_points(const GenSpec& spec);

}  // namespace conespan
