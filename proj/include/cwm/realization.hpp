#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwm/complex.hpp"
#include "cwm/linalg.hpp"
#include "cwm/partition.hpp"
#include "cwm/polytopes.hpp"

namespace cwm {

using Point = RationalVector;

/// Maps an all-singleton label (n last) to the vertex of the permutohedron
/// on {1..n-1} labeled by the linear order read before n.
std::vector<int> psi(const CyclicPartition& facet_label);

/// e_i - e_j in R^{n-1}.
Point q_vector(int i, int j, int n);
/// 1 everywhere except 2-n at position i, in R^{n-1}.
Point r_vector(int i, int n);

/// Segments of the virtual zonotope Z(C) = sum q_ij - sum r_i for a label.
struct GeneratorSet {
  int n = 0;
  std::vector<std::pair<int, int>> positives;  // (i, j), i < j < n, same part
  std::vector<int> negatives;                  // i < n sharing a part with n

  bool empty() const { return positives.empty() && negatives.empty(); }
  /// Generator vectors with weights (+1 for q, -1 for r), positives first.
  std::vector<std::pair<Point, int>> weighted_vectors() const;
  int span_dimension() const;
};

GeneratorSet generators(const CyclicPartition& label);

/// Sign vectors (+1/-1) of all regions of the central arrangement of
/// hyperplanes orthogonal to `normals` inside their span. Exact.
std::vector<std::vector<int>> arrangement_topes(const std::vector<Point>& normals);

/// Gradient vertices sum_{<c,q> > 0} q - sum_{<c,r> > 0} r over generic
/// directions c in the span of the generators, sorted and deduplicated.
/// Throws InvariantViolation if the span dimension differs from
/// `expected_dim` when one is given.
std::vector<Point> virtual_zonotope_vertices(const GeneratorSet& g, std::optional<int> expected_dim = std::nullopt);

/// Images under psi of the vertices of the dual cell of C (the facets
/// containing C), sorted.
std::vector<Point> dual_cell_images(const CellComplex& k, int cell_id);

/// Affine hull of the dual cell's psi-images has the dual dimension, and
/// the images are a single translate of the virtual zonotope of C.
bool verify_cell_realization(const CellComplex& k, int cell_id);

/// Why verify_cell_realization failed, or nullopt when it holds.
std::optional<std::string> diagnose_cell_realization(const CellComplex& k, int cell_id);

enum class FaceOrigin { kept, patched };

std::string to_string(FaceOrigin origin);

struct GeometricFace {
  int cell = 0;   // id of the dual cell of the moduli-space complex
  int dim = 0;    // dimension in the dual complex
  std::vector<int> vertices;  // point ids, sorted
  FaceOrigin origin = FaceOrigin::kept;
  std::optional<OrderedPartition> permutohedron_label;  // kept faces only
  std::vector<int> boundary_cycle;                       // 2-faces only
};

/// The dual complex realized on the vertices of the permutohedron on
/// {1..n-1}; point ids are the ids of the top cells of the source complex.
struct GeometricComplex {
  int n = 0;
  std::map<int, Point> points;
  std::vector<GeometricFace> faces;
  std::vector<OrderedPartition> removed;  // permutohedron faces dropped

  std::vector<long long> face_counts() const;  // per dual dimension
  long long count(FaceOrigin origin, int dim) const;
  long long removed_count(int dim) const;
};

/// Surgery on the permutohedron: keep faces whose label plus {n} is
/// admissible, patch zonotope faces for the cells whose n-part is larger.
/// Throws InvariantViolation on any failed cell realization.
GeometricComplex surgery(const CellComplex& k);

/// Writes the 2-skeleton for n = 5 as OFF after an isometry of the
/// permutohedron's affine hull onto R^3. Throws DomainError for n != 5.
void export_off(const GeometricComplex& g, std::ostream& out);

}  // namespace cwm
