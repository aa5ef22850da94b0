#include "cwm/realization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <set>

#include "cwm/error.hpp"

namespace cwm {

std::vector<int> psi(const CyclicPartition& facet_label) {
  const int n = facet_label.ground_size();
  if (!facet_label.all_singletons()) throw DomainError("psi needs an all-singleton label, got " + facet_label.to_string());
  std::vector<int> order;
  order.reserve(n - 1);
  for (int k = 0; k + 1 < n; ++k) order.push_back(min_element(facet_label.part(k)));
  return permutohedron_vertex_coords(order);
}

Point q_vector(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n - 1)) throw DomainError("q_vector needs 1 <= i < j <= n-1");
  Point v(n - 1, Rational(0));
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

Point r_vector(int i, int n) {
  if (!(1 <= i && i <= n - 1)) throw DomainError("r_vector needs 1 <= i <= n-1");
  Point v(n - 1, Rational(1));
  v[i - 1] = 2 - n;
  return v;
}

std::vector<std::pair<Point, int>> GeneratorSet::weighted_vectors() const {
  std::vector<std::pair<Point, int>> out;
  for (auto [i, j] : positives) out.emplace_back(q_vector(i, j, n), +1);
  for (int i : negatives) out.emplace_back(r_vector(i, n), -1);
  return out;
}

int GeneratorSet::span_dimension() const {
  std::vector<RationalVector> rows;
  for (auto& [v, w] : weighted_vectors()) rows.push_back(v);
  return rank(std::move(rows));
}

GeneratorSet generators(const CyclicPartition& label) {
  GeneratorSet g;
  g.n = label.ground_size();
  for (IndexSet part : label.parts()) {
    auto elems = elements_of(part);
    const bool has_n = contains(part, g.n);
    for (std::size_t a = 0; a < elems.size(); ++a) {
      if (elems[a] == g.n) continue;
      if (has_n) g.negatives.push_back(elems[a]);
      for (std::size_t b = a + 1; b < elems.size(); ++b)
        if (elems[b] != g.n) g.positives.emplace_back(elems[a], elems[b]);
    }
  }
  std::sort(g.positives.begin(), g.positives.end());
  std::sort(g.negatives.begin(), g.negatives.end());
  return g;
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

using Mask = std::uint64_t;

int rank_of(const std::vector<RationalVector>& h, Mask set) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (set >> i & 1) rows.push_back(h[i]);
  return rank(std::move(rows));
}

Mask closure_of(const std::vector<RationalVector>& h, Mask set, int set_rank) {
  Mask out = set;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!(set >> i & 1) && rank_of(h, set | Mask{1} << i) == set_rank) out |= Mask{1} << i;
  return out;
}

// Topes of the arrangement of normals h (spanning Q^k) in coordinates.
// Every region of an essential central arrangement with k >= 2 has an
// extreme ray r; its sign vector is sign<r,h> off the flat through r and a
// tope of the restricted arrangement on the flat.
std::set<std::vector<int>> topes_in_span(const std::vector<RationalVector>& h, int k) {
  std::set<std::vector<int>> out;
  const std::size_t m = h.size();
  if (k == 1) {
    std::vector<int> s(m), t(m);
    for (std::size_t i = 0; i < m; ++i) {
      s[i] = sign_of(h[i][0]);
      t[i] = -s[i];
    }
    out.insert(s);
    out.insert(t);
    return out;
  }
  // Flats of rank k-1, grown one generator at a time.
  std::set<Mask> level{closure_of(h, 0, 0)};
  for (int r = 1; r < k; ++r) {
    std::set<Mask> next;
    for (Mask x : level)
      for (std::size_t i = 0; i < m; ++i)
        if (!(x >> i & 1)) next.insert(closure_of(h, x | Mask{1} << i, r));
    level = std::move(next);
  }
  for (Mask flat : level) {
    std::vector<RationalVector> rows;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < m; ++i)
      if (flat >> i & 1) {
        rows.push_back(h[i]);
        members.push_back(i);
      }
    auto ray_basis = nullspace(rows, k);
    if (ray_basis.size() != 1) throw InvariantViolation("arrangement flat of rank k-1 is not a ray");
    const RationalVector& ray = ray_basis.front();
    const auto perp = nullspace({ray}, k);
    std::vector<RationalVector> restricted;
    for (std::size_t i : members) {
      RationalVector coords;
      for (const auto& b : perp) coords.push_back(dot(b, h[i]));
      restricted.push_back(std::move(coords));
    }
    const auto sub = topes_in_span(restricted, k - 1);
    for (int direction : {1, -1}) {
      std::vector<int> base(m, 0);
      for (std::size_t i = 0; i < m; ++i)
        if (!(flat >> i & 1)) base[i] = direction * sign_of(dot(ray, h[i]));
      for (const auto& t : sub) {
        auto s = base;
        for (std::size_t a = 0; a < members.size(); ++a) s[members[a]] = t[a];
        out.insert(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> arrangement_topes(const std::vector<Point>& normals) {
  if (normals.empty()) return {{}};
  if (normals.size() > 64) throw DomainError("arrangement too large");
  for (const auto& v : normals)
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
      throw DomainError("arrangement normal is zero");
  const auto basis = row_space_basis(normals);
  const int k = static_cast<int>(basis.size());
  std::vector<RationalVector> h;
  for (const auto& v : normals) {
    RationalVector coords;
    for (const auto& b : basis) coords.push_back(dot(b, v));
    h.push_back(std::move(coords));
  }
  auto topes = topes_in_span(h, k);
  return {topes.begin(), topes.end()};
}

std::vector<Point> virtual_zonotope_vertices(const GeneratorSet& g, std::optional<int> expected_dim) {
  const auto weighted = g.weighted_vectors();
  const int dim = g.span_dimension();
  if (expected_dim && *expected_dim != dim)
    throw InvariantViolation("generators span dimension " + std::to_string(dim) + ", expected " +
                             std::to_string(*expected_dim));
  std::vector<Point> normals;
  for (const auto& [v, w] : weighted) normals.push_back(v);
  std::set<Point> points;
  for (const auto& tope : arrangement_topes(normals)) {
    Point p(g.n - 1, Rational(0));
    for (std::size_t i = 0; i < weighted.size(); ++i)
      if (tope[i] > 0)
        for (int c = 0; c < g.n - 1; ++c) p[c] += weighted[i].second * weighted[i].first[c];
    points.insert(std::move(p));
  }
  return {points.begin(), points.end()};
}

std::vector<Point> dual_cell_images(const CellComplex& k, int cell_id) {
  std::vector<Point> images;
  for (int f : k.star_facets(cell_id)) {
    auto coords = psi(k.cell(f).label);
    images.emplace_back(coords.begin(), coords.end());
  }
  std::sort(images.begin(), images.end());
  return images;
}

std::optional<std::string> diagnose_cell_realization(const CellComplex& k, int cell_id) {
  const auto& label = k.cell(cell_id).label;
  const int dual_dim = k.top_dimension() - label.dimension();
  const auto images = dual_cell_images(k, cell_id);
  if (images.empty()) return "cell " + label.to_string() + " lies in no top cell";
  std::vector<RationalVector> diffs;
  for (const auto& p : images) {
    RationalVector d(p.size());
    for (std::size_t c = 0; c < p.size(); ++c) d[c] = p[c] - images.front()[c];
    diffs.push_back(std::move(d));
  }
  if (int r = rank(diffs); r != dual_dim)
    return "cell " + label.to_string() + ": images span an affine " + std::to_string(r) + "-plane, expected " +
           std::to_string(dual_dim);
  std::vector<Point> zonotope;
  try {
    zonotope = virtual_zonotope_vertices(generators(label), dual_dim);
  } catch (const InvariantViolation& e) {
    return "cell " + label.to_string() + ": " + e.what();
  }
  if (zonotope.size() != images.size())
    return "cell " + label.to_string() + ": zonotope has " + std::to_string(zonotope.size()) + " vertices, cell has " +
           std::to_string(images.size());
  // Both lists are sorted, so their lexicographic minima lead.
  Point shift(images.front().size());
  for (std::size_t c = 0; c < shift.size(); ++c) shift[c] = images.front()[c] - zonotope.front()[c];
  for (std::size_t a = 0; a < zonotope.size(); ++a)
    for (std::size_t c = 0; c < shift.size(); ++c)
      if (zonotope[a][c] + shift[c] != images[a][c])
        return "cell " + label.to_string() + ": images are not a translate of the virtual zonotope";
  return std::nullopt;
}

bool verify_cell_realization(const CellComplex& k, int cell_id) { return !diagnose_cell_realization(k, cell_id); }

std::string to_string(FaceOrigin origin) { return origin == FaceOrigin::kept ? "kept" : "patched"; }

std::vector<long long> GeometricComplex::face_counts() const {
  std::vector<long long> counts(std::max(n - 2, 1), 0);
  for (const auto& f : faces) ++counts[f.dim];
  return counts;
}

long long GeometricComplex::count(FaceOrigin origin, int dim) const {
  return std::count_if(faces.begin(), faces.end(), [&](const GeometricFace& f) { return f.origin == origin && f.dim == dim; });
}

long long GeometricComplex::removed_count(int dim) const {
  return std::count_if(removed.begin(), removed.end(), [&](const OrderedPartition& f) { return f.dimension() == dim; });
}

namespace {

std::vector<int> walk_cycle(const CellComplex& k, int cell_id) {
  std::map<int, std::vector<int>> adjacent;
  for (int edge : k.cofaces(cell_id)) {
    auto ends = k.star_facets(edge);
    if (ends.size() != 2) throw InvariantViolation("dual edge without two endpoints");
    adjacent[ends[0]].push_back(ends[1]);
    adjacent[ends[1]].push_back(ends[0]);
  }
  std::vector<int> cycle;
  if (adjacent.empty()) return cycle;
  for (auto& [v, nb] : adjacent) {
    if (nb.size() != 2) throw InvariantViolation("dual 2-cell boundary is not a cycle");
    std::sort(nb.begin(), nb.end());
  }
  int prev = -1, cur = adjacent.begin()->first;
  do {
    cycle.push_back(cur);
    const auto& nb = adjacent[cur];
    int next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  } while (cur != cycle.front());
  if (cycle.size() != adjacent.size()) throw InvariantViolation("dual 2-cell boundary is disconnected");
  return cycle;
}

std::set<Point> permutohedron_face_vertices(const OrderedPartition& face) {
  std::set<Point> out;
  std::vector<std::vector<int>> blocks;
  for (IndexSet b : face.parts) blocks.push_back(elements_of(b));
  std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t idx, std::vector<int>& order) {
    if (idx == blocks.size()) {
      auto coords = permutohedron_vertex_coords(order);
      out.emplace(coords.begin(), coords.end());
      return;
    }
    auto block = blocks[idx];
    do {
      order.insert(order.end(), block.begin(), block.end());
      rec(idx + 1, order);
      order.resize(order.size() - block.size());
    } while (std::next_permutation(block.begin(), block.end()));
  };
  std::vector<int> order;
  rec(0, order);
  return out;
}

}  // namespace

GeometricComplex surgery(const CellComplex& k) {
  const int n = k.ground_size();
  GeometricComplex g;
  g.n = n;
  for (const auto& c : k.cells_of_dim(k.top_dimension())) {
    auto coords = psi(c.label);
    g.points.emplace(c.id, Point(coords.begin(), coords.end()));
  }

  // Step 3 from the permutohedron side.
  long long kept_by_polytope = 0;
  const auto lattice = permutohedron_lattice(n - 1);
  for (int dim = 0; dim + 1 < n - 1; ++dim)
    for (const auto& face : lattice.faces_by_dim[dim]) {
      std::vector<IndexSet> parts = face.parts;
      parts.push_back(element_bit(n));
      auto extended = CyclicPartition::canonicalize(n, std::move(parts));
      if (is_admissible(extended, k.linkage())) {
        if (!k.find(extended)) throw InvariantViolation("kept face " + extended.to_string() + " has no cell");
        ++kept_by_polytope;
      } else {
        g.removed.push_back(face);
      }
    }

  for (const auto& c : k.cells()) {
    GeometricFace face;
    face.cell = c.id;
    face.dim = k.top_dimension() - c.dim();
    face.vertices = k.star_facets(c.id);
    const IndexSet n_part = c.label.parts().back();
    if (n_part == element_bit(n)) {
      face.origin = FaceOrigin::kept;
      OrderedPartition op{n - 1, std::vector<IndexSet>(c.label.parts().begin(), c.label.parts().end() - 1)};
      std::set<Point> images;
      for (int v : face.vertices) images.insert(g.points.at(v));
      if (images != permutohedron_face_vertices(op))
        throw InvariantViolation("kept cell " + c.label.to_string() + " does not sit on permutohedron face " + op.to_string());
      face.permutohedron_label = std::move(op);
    } else {
      face.origin = FaceOrigin::patched;
      if (auto why = diagnose_cell_realization(k, c.id)) throw InvariantViolation("surgery: " + *why);
    }
    if (face.dim == 2) face.boundary_cycle = walk_cycle(k, c.id);
    g.faces.push_back(std::move(face));
  }
  const auto kept_cells = std::count_if(g.faces.begin(), g.faces.end(),
                                        [](const GeometricFace& f) { return f.origin == FaceOrigin::kept; });
  if (kept_by_polytope != kept_cells)
    throw InvariantViolation("kept permutohedron faces do not match cells with singleton {n}");
  return g;
}

void export_off(const GeometricComplex& g, std::ostream& out) {
  if (g.n != 5) throw DomainError("OFF export needs n = 5 (use JSON for other sizes)");
  // Orthonormal basis of the sum-zero hyperplane in R^4.
  const double basis[3][4] = {{1, -1, 0, 0}, {1, 1, -2, 0}, {1, 1, 1, -3}};
  const double norms[3] = {std::sqrt(2.0), std::sqrt(6.0), std::sqrt(12.0)};
  std::map<int, int> index;
  for (const auto& [id, p] : g.points) index.emplace(id, static_cast<int>(index.size()));
  std::vector<const GeometricFace*> two_faces;
  for (const auto& f : g.faces)
    if (f.dim == 2) two_faces.push_back(&f);

  out << "OFF\n" << g.points.size() << ' ' << two_faces.size() << " 0\n";
  char buf[64];
  for (const auto& [id, p] : g.points) {
    for (int a = 0; a < 3; ++a) {
      Rational s = 0;
      for (int c = 0; c < 4; ++c) s += p[c] * static_cast<int>(basis[a][c]);
      std::snprintf(buf, sizeof buf, "%.17g", to_double(s) / norms[a]);
      out << (a ? " " : "") << buf;
    }
    out << '\n';
  }
  for (const auto* f : two_faces) {
    out << f->boundary_cycle.size();
    for (int v : f->boundary_cycle) out << ' ' << index.at(v);
    out << '\n';
  }
}

}  // namespace cwm
