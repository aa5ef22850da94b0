#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwm/core.hpp"
#include "cwm/gf2.hpp"
#include "cwm/partition.hpp"

namespace cwm {

struct Cell {
  int id = 0;
  CyclicPartition label;

  int dim() const { return label.dimension(); }
};

struct BuildOptions {
  /// Build even when the linkage has aligned configurations. The result uses
  /// the nonsingular admissibility rule and is not a manifold decomposition.
  bool allow_nongeneric = false;
};

inline constexpr int kMaxComplexSize = 16;

/// The face poset of the regular cell complex on the moduli space M(L).
/// Cells are ordered by dimension, then lexicographically by label; ids are
/// dense. Only codimension-one incidences are stored.
class CellComplex {
 public:
  static CellComplex build(const Linkage& linkage, BuildOptions options = {});

  const Linkage& linkage() const { return linkage_; }
  int ground_size() const { return linkage_.size(); }
  int top_dimension() const { return linkage_.size() - 3; }
  int size() const { return static_cast<int>(cells_.size()); }

  const Cell& cell(int id) const { return cells_[id]; }
  std::span<const Cell> cells() const { return cells_; }
  std::span<const Cell> cells_of_dim(int dim) const;

  /// Codimension-one faces (sorted ids).
  std::span<const int> faces(int id) const;
  /// Cells having `id` as a codimension-one face (sorted ids).
  std::span<const int> cofaces(int id) const;

  std::optional<int> find(const CyclicPartition& label) const;

  /// All cells C' <= C (the closed cell), including C, sorted.
  std::vector<int> closure(int id) const;
  /// 0-cells of the closed cell.
  std::vector<int> closure_vertices(int id) const;
  /// All cells C' >= C, including C, sorted.
  std::vector<int> star(int id) const;
  /// Top-dimensional cells containing C.
  std::vector<int> star_facets(int id) const;

  /// Boundary matrix from dim-cells to (dim-1)-cells, indices local to each
  /// dimension.
  SparseMatrixGF2 boundary_matrix(int dim) const;

  /// Copy with one codim-1 incidence dropped. Fault-injection hook for tests.
  CellComplex with_incidence_removed(int id, int face) const;

 private:
  explicit CellComplex(Linkage linkage) : linkage_(std::move(linkage)) {}
  void index_cofaces();

  Linkage linkage_;
  std::vector<Cell> cells_;
  std::vector<int> dim_offsets_;  // cells of dim d are [dim_offsets_[d], dim_offsets_[d+1])
  std::vector<int> face_offsets_, face_ids_;
  std::vector<int> coface_offsets_, coface_ids_;
  std::unordered_map<std::uint64_t, int> index_;
};

inline CellComplex build_complex(const Linkage& linkage, BuildOptions options = {}) {
  return CellComplex::build(linkage, options);
}

std::vector<long long> f_vector(const CellComplex& k);
long long euler_characteristic(const CellComplex& k);
int connected_components(const CellComplex& k);

/// Ranks of cellular homology over GF(2). Throws InvariantViolation when the
/// boundary does not square to zero.
std::vector<long long> betti_mod2(const CellComplex& k);

/// First violation of d∘d = 0, if any.
std::optional<std::string> check_boundary_squared(const CellComplex& k);

/// First violation of the diamond property (every codim-2 pair has exactly
/// two cells in between; every 1-cell has exactly two vertices), if any.
std::optional<std::string> check_diamond(const CellComplex& k);

/// First cell whose stored faces differ from the refinement description
/// (one fewer part, refined by the label), if any. Quadratic; small n only.
std::optional<std::string> check_incidence_by_refinement(const CellComplex& k);

struct VertexFigure {
  std::array<int, 3> part_sizes{};
  long long facet_count = 0;
};

/// Part sizes (k,l,m) of a vertex label and the number of facets containing
/// it. Throws InvariantViolation unless the count is k!l!m! and the star is
/// the face lattice of a product of three permutohedra.
VertexFigure vertex_figure_signature(const CellComplex& k, int vertex_id);

/// True iff the cells above C form the (reversed) face lattice of the
/// product of permutohedra on C's parts.
bool face_figure_check(const CellComplex& k, int cell_id);

struct ForgetfulProjection {
  /// image[id'] = id of pi(cell id') in the smaller complex.
  std::vector<int> image;
  bool monotone = false;
  bool surjective_on_facets = false;
};

/// The map deleting index n+1 from every label of `extended`, where the
/// extended linkage is `base` with one short edge appended. Throws
/// DomainError if an image is not a cell (the extra edge is not short enough).
ForgetfulProjection forget_projection(const CellComplex& extended, const CellComplex& base);

/// Block substitution of an integer linkage into the equilateral linkage
/// with sum(l_i) unit edges: index i becomes l_i consecutive unit indices.
class EquilateralEmbedding {
 public:
  explicit EquilateralEmbedding(const Linkage& linkage);

  int total() const { return total_; }
  IndexSet block(int i) const { return blocks_[i - 1]; }
  CyclicPartition map(const CyclicPartition& label) const;
  /// Admissibility for the equilateral linkage: every part has at most
  /// (total-1)/2 elements.
  bool admissible_in_target(const CyclicPartition& image) const;

 private:
  int n_ = 0;
  int total_ = 0;
  std::vector<IndexSet> blocks_;
};

inline EquilateralEmbedding embed_into_equilateral(const Linkage& linkage) { return EquilateralEmbedding(linkage); }

/// Images of every cell under the block embedding. Throws InvariantViolation
/// unless images are admissible, distinct, and incidences map to incidences.
std::vector<CyclicPartition> embed_complex(const CellComplex& k, const EquilateralEmbedding& embedding);

}  // namespace cwm
