#include "cwm/polytopes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cwm/error.hpp"

namespace cwm {

std::string OrderedPartition::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out << '|';
    bool first = true;
    for (int i : elements_of(parts[k])) {
      if (!first) out << ',';
      out << i;
      first = false;
    }
  }
  return out.str();
}

bool ordered_refines(const OrderedPartition& fine, const OrderedPartition& coarse) {
  if (fine.m != coarse.m) return false;
  std::size_t j = 0;
  IndexSet acc = 0;
  for (IndexSet f : fine.parts) {
    if (j >= coarse.parts.size() || (f & ~coarse.parts[j]) != 0) return false;
    acc |= f;
    if (acc == coarse.parts[j]) {
      ++j;
      acc = 0;
    }
  }
  return j == coarse.parts.size();
}

namespace {

void collect_ordered(IndexSet remaining, int blocks_left, std::vector<IndexSet>& prefix, int m,
                     std::vector<OrderedPartition>& out) {
  if (blocks_left == 1) {
    prefix.push_back(remaining);
    out.push_back(OrderedPartition{m, prefix});
    prefix.pop_back();
    return;
  }
  for (IndexSet s = (remaining - 1) & remaining; s != 0; s = (s - 1) & remaining) {
    if (set_size(remaining & ~s) < blocks_left - 1) continue;
    prefix.push_back(s);
    collect_ordered(remaining & ~s, blocks_left - 1, prefix, m, out);
    prefix.pop_back();
  }
}

}  // namespace

std::strong_ordering operator<=>(const OrderedPartition& a, const OrderedPartition& b) {
  if (a.m != b.m) return a.m <=> b.m;
  const std::size_t common = std::min(a.parts.size(), b.parts.size());
  for (std::size_t k = 0; k < common; ++k)
    if (int c = compare_as_lists(a.parts[k], b.parts[k]); c != 0) return c <=> 0;
  return a.parts.size() <=> b.parts.size();
}

std::vector<OrderedPartition> ordered_partitions(int m, int parts) {
  if (m < 1 || m > kMaxGroundSize) throw DomainError("permutohedron size out of range");
  if (parts < 1 || parts > m) throw DomainError("parts count out of range");
  std::vector<OrderedPartition> out;
  std::vector<IndexSet> prefix;
  collect_ordered(full_set(m), parts, prefix, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> PermutohedronFaceLattice::f_vector() const {
  std::vector<long long> f;
  for (const auto& faces : faces_by_dim) f.push_back(static_cast<long long>(faces.size()));
  return f;
}

PermutohedronFaceLattice permutohedron_lattice(int m) {
  if (m < 1) throw DomainError("permutohedron needs m >= 1");
  PermutohedronFaceLattice lattice{m, {}};
  for (int dim = 0; dim < m; ++dim) lattice.faces_by_dim.push_back(ordered_partitions(m, m - dim));
  return lattice;
}

std::vector<int> permutohedron_vertex_coords(std::span<const int> perm) {
  const int m = static_cast<int>(perm.size());
  std::vector<int> coords(m, 0);
  for (int j = 0; j < m; ++j) {
    int p = perm[j];
    if (p < 1 || p > m || coords[p - 1] != 0) throw DomainError("not a permutation of 1.." + std::to_string(m));
    coords[p - 1] = j + 1;
  }
  return coords;
}

bool gale_evenness(IndexSet subset, int n) {
  int last_outside = 0;
  int between = 0;
  for (int i = 1; i <= n; ++i) {
    if (contains(subset, i)) {
      ++between;
    } else {
      if (last_outside != 0 && between % 2 != 0) return false;
      last_outside = i;
      between = 0;
    }
  }
  return true;
}

CyclicPolytopeFacets cyclic_facets(int n, int d) {
  if (!(n > d && d >= 2)) throw DomainError("cyclic polytope needs n > d >= 2");
  if (n > kMaxGroundSize) throw DomainError("cyclic polytope size out of range");
  CyclicPolytopeFacets out{n, d, {}};
  // Gosper's hack over d-subsets.
  IndexSet s = full_set(d);
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (static_cast<std::uint64_t>(s) < limit) {
    if (gale_evenness(s, n)) out.facets.push_back(s);
    IndexSet c = s & -s;
    IndexSet r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  std::sort(out.facets.begin(), out.facets.end(), [](IndexSet a, IndexSet b) { return compare_as_lists(a, b) < 0; });
  return out;
}

std::vector<CyclicPartition> starlike_bijection(const CyclicPartition& facet) {
  const int n = facet.ground_size();
  if (!facet.all_singletons()) throw DomainError("starlike bijection needs an all-singleton facet label");
  if (n % 2 == 0 || n < 5) throw DomainError("starlike bijection needs odd n >= 5");
  const int k = (n - 1) / 2;
  std::vector<CyclicPartition> phi;
  for (int j = 1; j <= n; ++j) {
    int i = (j - 1) * k % n;  // 0-based position of the first merged part
    std::vector<IndexSet> parts(facet.parts().begin(), facet.parts().end());
    parts[i] |= parts[(i + 1) % n];
    parts.erase(parts.begin() + (i + 1) % n);
    phi.push_back(CyclicPartition::canonicalize(n, std::move(parts)));
  }
  return phi;
}

bool closed_cell_dual_to_cyclic_face(const CyclicPartition& facet, const CyclicPartition& cell) {
  const int n = facet.ground_size();
  if (n % 2 == 0) throw DomainError("equilateral duality needs an odd number of edges");
  if (!facet.all_singletons() || !refines(facet, cell)) throw DomainError("cell is not a face of the facet");
  if (n == 3) return true;
  const int half = (n - 1) / 2;
  auto admissible = [half](const CyclicPartition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [half](IndexSet s) { return set_size(s) <= half; });
  };
  if (!admissible(cell) || cell.size() < 3) return false;

  std::vector<CyclicPartition> faces{cell};
  for (auto& q : coarsenings(cell))
    if (q.size() >= 3 && admissible(q)) faces.push_back(std::move(q));

  const auto phi = starlike_bijection(facet);
  auto support = [&](const CyclicPartition& g) {
    IndexSet s = 0;
    for (int j = 0; j < n; ++j)
      if (refines(phi[j], g)) s |= element_bit(j + 1);
    return s;
  };

  const auto polytope = cyclic_facets(n, n - 3);
  const IndexSet base = support(cell);
  std::set<IndexSet> target;
  std::set<IndexSet> facets_over_base;
  for (IndexSet f : polytope.facets) {
    if ((f & base) != base) continue;
    facets_over_base.insert(f);
    const IndexSet free = f & ~base;
    for (IndexSet sub = free;; sub = (sub - 1) & free) {
      target.insert(base | sub);
      if (sub == 0) break;
    }
  }
  if (!target.count(base)) return false;

  std::vector<IndexSet> supports;
  std::set<IndexSet> vertex_supports;
  for (const auto& g : faces) {
    IndexSet s = support(g);
    supports.push_back(s);
    if (g.size() == 3) vertex_supports.insert(s);
  }
  std::set<IndexSet> image(supports.begin(), supports.end());
  if (image.size() != faces.size() || image != target) return false;
  // Vertices of the cell correspond exactly to the polytope facets over the base.
  if (vertex_supports != facets_over_base) return false;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = 0; b < faces.size(); ++b) {
      bool cell_order = refines(faces[b], faces[a]);  // faces[a] <= faces[b]
      bool support_order = (supports[a] & supports[b]) == supports[b];
      if (cell_order != support_order) return false;
    }
  return true;
}

bool equilateral_facet_duality_check(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("equilateral facet duality needs odd n >= 3");
  if (n == 3) return true;
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  do {
    std::vector<IndexSet> parts;
    for (int i : order) parts.push_back(element_bit(i));
    parts.push_back(element_bit(n));
    auto facet = CyclicPartition::canonicalize(n, std::move(parts));
    if (!closed_cell_dual_to_cyclic_face(facet, facet)) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

bool cell_is_dual_cyclic_face(const CellComplex& k, int cell_id) {
  const EquilateralEmbedding embedding(k.linkage());
  const auto& label = k.cell(cell_id).label;
  const auto image = embedding.map(label);
  if (!embedding.admissible_in_target(image)) return false;

  // The embedding must carry the closed cell onto the closed image cell.
  std::set<CyclicPartition> mapped;
  for (int c : k.closure(cell_id)) mapped.insert(embedding.map(k.cell(c).label));
  std::set<CyclicPartition> image_faces{image};
  for (auto& q : coarsenings(image))
    if (q.size() >= 3 && embedding.admissible_in_target(q)) image_faces.insert(std::move(q));
  if (mapped != image_faces) return false;

  if (embedding.total() < 5) return embedding.total() == 3;
  std::vector<IndexSet> singletons;
  for (IndexSet p : image.parts())
    for (int i : elements_of(p)) singletons.push_back(element_bit(i));
  auto facet = CyclicPartition::canonicalize(embedding.total(), std::move(singletons));
  return closed_cell_dual_to_cyclic_face(facet, image);
}

bool anti_isomorphic_to_permutohedron(const CellComplex& k) {
  const int n = k.ground_size();
  const int m = n - 1;
  std::map<OrderedPartition, int> cell_of;
  std::vector<OrderedPartition> face_of(k.size());
  for (const auto& c : k.cells()) {
    const auto parts = c.label.parts();
    if (parts.back() != element_bit(n)) return false;
    OrderedPartition op{m, std::vector<IndexSet>(parts.begin(), parts.end() - 1)};
    if (!cell_of.emplace(op, c.id).second) return false;
    face_of[c.id] = std::move(op);
  }
  const auto lattice = permutohedron_lattice(m);
  long long proper = 0, covers = 0;
  for (int dim = 0; dim + 1 < m; ++dim) {
    for (const auto& f : lattice.faces_by_dim[dim]) {
      ++proper;
      if (!cell_of.count(f)) return false;
      // Covers of f among proper faces: merges of adjacent blocks leaving >= 2 blocks.
      if (f.parts.size() > 2) covers += static_cast<long long>(f.parts.size()) - 1;
    }
  }
  if (proper != k.size()) return false;
  long long incidences = 0;
  for (const auto& c : k.cells()) {
    for (int f : k.faces(c.id)) {
      ++incidences;
      const auto& a = face_of[c.id];
      const auto& b = face_of[f];
      if (a.parts.size() != b.parts.size() + 1 || !ordered_refines(a, b)) return false;
    }
  }
  return incidences == covers;
}

}  // namespace cwm
