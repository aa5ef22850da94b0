#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cwm/complex.hpp"
#include "cwm/core.hpp"
#include "cwm/partition.hpp"

namespace cwm {

/// A linearly ordered partition of {1..m}: a face label of the permutohedron.
struct OrderedPartition {
  int m = 0;
  std::vector<IndexSet> parts;

  int dimension() const { return m - static_cast<int>(parts.size()); }
  std::string to_string() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  /// Lexicographic on the block sequence, each block read as an ascending list.
  friend std::strong_ordering operator<=>(const OrderedPartition& a, const OrderedPartition& b);
};

/// True iff consecutive runs of `fine` union to the parts of `coarse`, in
/// order (face inclusion in the permutohedron).
bool ordered_refines(const OrderedPartition& fine, const OrderedPartition& coarse);

/// Faces of the permutohedron on {1..m}, grouped by dimension, including
/// the polytope itself.
struct PermutohedronFaceLattice {
  int m = 0;
  std::vector<std::vector<OrderedPartition>> faces_by_dim;

  std::vector<long long> f_vector() const;
  bool leq(const OrderedPartition& a, const OrderedPartition& b) const { return ordered_refines(a, b); }
};

PermutohedronFaceLattice permutohedron_lattice(int m);

/// All ordered partitions of {1..m} into exactly `parts` blocks, sorted.
std::vector<OrderedPartition> ordered_partitions(int m, int parts);

/// The permutohedron vertex labeled by `perm` (a sequence listing 1..m):
/// the coordinate at position perm[j] equals j+1.
std::vector<int> permutohedron_vertex_coords(std::span<const int> perm);

struct CyclicPolytopeFacets {
  int n = 0;
  int d = 0;
  std::vector<IndexSet> facets;  // sorted as ascending element lists
};

/// Gale evenness: any two indices outside the set are separated by an even
/// number of its elements (endpoints not counted).
bool gale_evenness(IndexSet subset, int n);

CyclicPolytopeFacets cyclic_facets(int n, int d);

/// The starlike bijection from the vertices x_1..x_N of C(N, N-3) to the
/// codimension-one faces of an all-singleton facet label: x_j goes to the
/// merge of the i-th and (i+1)-th parts of the facet, i = 1 + (j-1)k mod N,
/// N = 2k+1.
std::vector<CyclicPartition> starlike_bijection(const CyclicPartition& facet);

/// For a face `cell` of the all-singleton `facet` in the equilateral
/// N-linkage (N odd): true iff the starlike bijection identifies the closed
/// cell's face poset with the reversed interval above the matching face of
/// C(N, N-3).
bool closed_cell_dual_to_cyclic_face(const CyclicPartition& facet, const CyclicPartition& cell);

/// Runs the facet duality for every facet of the equilateral n-linkage,
/// relabeling the starlike bijection along each facet's cyclic order.
bool equilateral_facet_duality_check(int n);

/// Boundary complex of a cell of an integer, odd-perimeter linkage versus a
/// face of the dual cyclic polytope, through the equilateral embedding.
bool cell_is_dual_cyclic_face(const CellComplex& k, int cell_id);

/// True iff dropping the last part {n} maps the cells bijectively onto the
/// proper faces of the permutohedron on {1..n-1}, reversing incidences.
bool anti_isomorphic_to_permutohedron(const CellComplex& k);

}  // namespace cwm
