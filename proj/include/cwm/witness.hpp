#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "cwm/core.hpp"
#include "cwm/partition.hpp"

namespace cwm {

using Vec2 = std::array<double, 2>;

/// A planar polygon p_1..p_n; edge i runs from p_i to p_{i+1} (p_{n+1} = p_1).
struct PlanarConfiguration {
  std::vector<Vec2> points;

  int size() const { return static_cast<int>(points.size()); }
  Vec2 edge(int i) const;  // 1-based
  double edge_length(int i) const;
};

inline constexpr double kSlopeTolerance = 1e-7;
inline constexpr double kLengthTolerance = 1e-9;

/// Convex counterclockwise polygon with the given edge lengths in the given
/// cyclic order, inscribed in a circle. Throws DomainError if some length is
/// at least half the perimeter.
PlanarConfiguration convex_polygon(const std::vector<double>& lengths);

/// Circumradius of the inscribed polygon built by convex_polygon.
double circumradius(const std::vector<double>& lengths);

/// Cyclic order of edge directions with codirected edges grouped.
CyclicPartition label_of(const PlanarConfiguration& config, const Linkage& linkage);

/// A configuration of the linkage whose label is `label`: each part becomes
/// one collinear pseudo-edge of a convex polygon. Checks the round trip.
PlanarConfiguration witness_of(const CyclicPartition& label, const Linkage& linkage);

/// A nearby witness in the same cell: the direction of one pseudo-edge is
/// turned by `delta` radians and two others re-solve closure. Needs a label
/// with at least four parts.
PlanarConfiguration flexed_witness(const CyclicPartition& label, const Linkage& linkage, double delta);

/// max_i | |p_i p_{i+1}| - l_i | / perimeter.
double length_residual(const PlanarConfiguration& config, const Linkage& linkage);

/// SVG polyline of the configuration (presentation only).
void write_svg(const PlanarConfiguration& config, std::ostream& out);

}  // namespace cwm
