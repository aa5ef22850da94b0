#include "cwm/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>

#include "cwm/error.hpp"

namespace cwm {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double chord_angle(double length, double radius) { return 2 * std::asin(std::min(1.0, length / (2 * radius))); }

// Bisection to machine precision for a sign change of f on [lo, hi].
template <typename F>
double bisect(F f, double lo, double hi) {
  const bool rising = f(hi) > 0;
  for (int it = 0; it < 400; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) > 0) == rising)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

struct Inscribed {
  double radius = 0;
  std::vector<double> angles;  // signed central angle of each edge
};

Inscribed inscribe(const std::vector<double>& lengths) {
  const int n = static_cast<int>(lengths.size());
  if (n < 3) throw DomainError("a polygon needs at least 3 edges");
  for (double l : lengths)
    if (!(l > 0) || !std::isfinite(l)) throw DomainError("edge lengths must be positive and finite");
  const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  const int longest = static_cast<int>(std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
  const double lmax = lengths[longest];
  if (2 * lmax >= total) throw DomainError("an edge is at least half the perimeter; no convex polygon exists");

  const double r0 = lmax / 2;
  auto total_angle = [&](double r) {
    double s = 0;
    for (double l : lengths) s += chord_angle(l, r);
    return s;
  };
  Inscribed out;
  if (total_angle(r0) >= kTwoPi) {
    // Center inside (or on) the polygon.
    out.radius = bisect([&](double r) { return total_angle(r) - kTwoPi; }, r0, total);
    for (double l : lengths) out.angles.push_back(chord_angle(l, out.radius));
  } else {
    // Center beyond the longest edge: the other arcs add up to its arc.
    auto balance = [&](double r) {
      double s = 0;
      for (int i = 0; i < n; ++i)
        if (i != longest) s += std::asin(lengths[i] / (2 * r));
      return s - std::asin(std::min(1.0, lmax / (2 * r)));
    };
    double hi = total;
    while (balance(hi) <= 0) hi *= 2;
    out.radius = bisect(balance, r0, hi);
    for (int i = 0; i < n; ++i) {
      double a = chord_angle(lengths[i], out.radius);
      out.angles.push_back(i == longest ? -a : a);
    }
  }
  return out;
}

double direction(const Vec2& v) { return std::atan2(v[1], v[0]); }

}  // namespace

Vec2 PlanarConfiguration::edge(int i) const {
  const Vec2& a = points[i - 1];
  const Vec2& b = points[i % size()];
  return {b[0] - a[0], b[1] - a[1]};
}

double PlanarConfiguration::edge_length(int i) const {
  Vec2 e = edge(i);
  return std::hypot(e[0], e[1]);
}

double circumradius(const std::vector<double>& lengths) { return inscribe(lengths).radius; }

PlanarConfiguration convex_polygon(const std::vector<double>& lengths) {
  const auto ins = inscribe(lengths);
  const int n = static_cast<int>(lengths.size());
  const int longest = static_cast<int>(std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
  // Walk from the vertex after the longest edge so that edge closes the loop.
  PlanarConfiguration config;
  config.points.resize(n);
  double alpha = 0;
  for (int t = 0; t < n; ++t) {
    int vertex = (longest + 1 + t) % n;  // 0-based vertex index
    config.points[vertex] = {ins.radius * std::cos(alpha), ins.radius * std::sin(alpha)};
    alpha += ins.angles[vertex];
  }
  return config;
}

double length_residual(const PlanarConfiguration& config, const Linkage& linkage) {
  double worst = 0;
  for (int i = 1; i <= linkage.size(); ++i)
    worst = std::max(worst, std::abs(config.edge_length(i) - to_double(linkage.length(i))));
  return worst / to_double(linkage.perimeter());
}

CyclicPartition label_of(const PlanarConfiguration& config, const Linkage& linkage) {
  const int n = linkage.size();
  if (config.size() != n) throw DomainError("configuration and linkage sizes differ");
  if (length_residual(config, linkage) > 1e-6) throw DomainError("configuration does not match the linkage lengths");
  std::vector<std::pair<double, int>> dirs;
  for (int i = 1; i <= n; ++i) {
    Vec2 e = config.edge(i);
    if (std::hypot(e[0], e[1]) == 0) throw DomainError("zero-length edge " + std::to_string(i));
    dirs.emplace_back(direction(e), i);
  }
  std::sort(dirs.begin(), dirs.end());

  std::vector<std::vector<std::pair<double, int>>> groups;
  for (const auto& d : dirs) {
    if (!groups.empty() && d.first - groups.back().back().first <= kSlopeTolerance)
      groups.back().push_back(d);
    else
      groups.push_back({d});
  }
  if (groups.size() > 1 && dirs.front().first + kTwoPi - dirs.back().first <= kSlopeTolerance) {
    for (auto& d : groups.front()) groups.back().push_back(d);
    groups.erase(groups.begin());
  }
  for (const auto& g : groups) {
    double spread = g.back().first - g.front().first;
    if (spread < 0) spread += kTwoPi;
    if (spread > 100 * kSlopeTolerance) throw InvariantViolation("edge directions chain across a wide angle");
  }
  if (groups.size() < 3) throw DomainError("degenerate configuration: all edges lie on one line");

  std::vector<IndexSet> parts;
  for (const auto& g : groups) {
    IndexSet s = 0;
    for (const auto& d : g) s |= element_bit(d.second);
    parts.push_back(s);
  }
  return CyclicPartition::canonicalize(n, std::move(parts));
}

namespace {

std::vector<double> pseudo_lengths(const CyclicPartition& label, const Linkage& linkage) {
  if (!is_admissible(label, linkage)) throw DomainError("label " + label.to_string() + " is not admissible");
  std::vector<double> out;
  for (IndexSet part : label.parts()) {
    if (2 * linkage.sum(part) >= linkage.perimeter())
      throw DomainError("part of label " + label.to_string() + " is half the perimeter");
    out.push_back(to_double(linkage.sum(part)));
  }
  return out;
}

PlanarConfiguration assemble(const CyclicPartition& label, const Linkage& linkage, const std::vector<Vec2>& unit) {
  const int n = linkage.size();
  PlanarConfiguration config;
  config.points.resize(n);
  Vec2 p{0, 0};
  for (int i = 1; i <= n; ++i) {
    config.points[i - 1] = p;
    const Vec2& u = unit[label.part_of(i)];
    const double l = to_double(linkage.length(i));
    p = {p[0] + l * u[0], p[1] + l * u[1]};
  }
  return config;
}

void check_round_trip(const PlanarConfiguration& config, const CyclicPartition& label, const Linkage& linkage) {
  if (length_residual(config, linkage) > kLengthTolerance)
    throw InvariantViolation("witness for " + label.to_string() + " misses the edge lengths");
  auto back = label_of(config, linkage);
  if (back != label)
    throw InvariantViolation("witness for " + label.to_string() + " reads back as " + back.to_string());
}

}  // namespace

PlanarConfiguration witness_of(const CyclicPartition& label, const Linkage& linkage) {
  const auto lengths = pseudo_lengths(label, linkage);
  const auto polygon = convex_polygon(lengths);
  std::vector<Vec2> unit;
  for (int k = 1; k <= polygon.size(); ++k) {
    Vec2 e = polygon.edge(k);
    double len = std::hypot(e[0], e[1]);
    unit.push_back({e[0] / len, e[1] / len});
  }
  auto config = assemble(label, linkage, unit);
  check_round_trip(config, label, linkage);
  return config;
}

PlanarConfiguration flexed_witness(const CyclicPartition& label, const Linkage& linkage, double delta) {
  if (label.size() < 4) throw DomainError("flexing needs a label with at least four parts");
  const auto lengths = pseudo_lengths(label, linkage);
  const auto polygon = convex_polygon(lengths);
  const int m = label.size();
  std::vector<double> theta;
  for (int k = 1; k <= m; ++k) theta.push_back(direction(polygon.edge(k)));
  theta[0] += delta;
  // Re-solve pseudo-edges 1 and 2 against the rest.
  Vec2 target{0, 0};
  for (int k = 0; k < m; ++k) {
    if (k == 1 || k == 2) continue;
    target[0] -= lengths[k] * std::cos(theta[k]);
    target[1] -= lengths[k] * std::sin(theta[k]);
  }
  const double d = std::hypot(target[0], target[1]);
  const double a = lengths[1], b = lengths[2];
  const double c = (a * a + d * d - b * b) / (2 * a * d);
  if (!(std::abs(c) <= 1)) throw DomainError("flex too large: closure cannot be restored");
  const double beta = std::atan2(target[1], target[0]);
  double best = 0, best_err = 1e300;
  for (double s : {1.0, -1.0}) {
    double phi = beta + s * std::acos(c);
    double err = std::abs(std::remainder(phi - theta[1], kTwoPi));
    if (err < best_err) {
      best_err = err;
      best = phi;
    }
  }
  theta[1] = best;
  Vec2 rest{target[0] - a * std::cos(best), target[1] - a * std::sin(best)};
  theta[2] = std::atan2(rest[1], rest[0]);

  std::vector<Vec2> unit;
  for (double t : theta) unit.push_back({std::cos(t), std::sin(t)});
  auto config = assemble(label, linkage, unit);
  if (length_residual(config, linkage) > kLengthTolerance)
    throw InvariantViolation("flexed witness misses the edge lengths");
  return config;
}

void write_svg(const PlanarConfiguration& config, std::ostream& out) {
  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& p : config.points) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  const double pad = 0.05 * std::max(maxx - minx, maxy - miny);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx - pad << ' ' << -(maxy + pad) << ' '
      << (maxx - minx + 2 * pad) << ' ' << (maxy - miny + 2 * pad) << "\">\n";
  out << "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"" << pad / 5 << "\" points=\"";
  for (std::size_t i = 0; i < config.points.size(); ++i)
    out << (i ? " " : "") << config.points[i][0] << ',' << -config.points[i][1];
  out << "\"/>\n";
  for (std::size_t i = 0; i < config.points.size(); ++i)
    out << "  <text x=\"" << config.points[i][0] << "\" y=\"" << -config.points[i][1] << "\" font-size=\"" << pad
        << "\">p" << i + 1 << "</text>\n";
  out << "</svg>\n";
}

}  // namespace cwm
