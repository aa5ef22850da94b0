#include "cwm/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cwm/error.hpp"

namespace cwm {

namespace {

long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Number of ordered set partitions of a k-set (ordered Bell numbers).
long long fubini(int k) {
  std::vector<long long> a(k + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= k; ++i) {
    long long binom = 1;
    for (int j = 1; j <= i; ++j) {
      binom = binom * (i - j + 1) / j;
      a[i] += binom * a[i - j];
    }
  }
  return a[k];
}

std::vector<int> csr_build(const std::vector<std::vector<int>>& lists, std::vector<int>& ids) {
  std::vector<int> offsets(lists.size() + 1, 0);
  for (std::size_t i = 0; i < lists.size(); ++i) offsets[i + 1] = offsets[i] + static_cast<int>(lists[i].size());
  ids.clear();
  ids.reserve(offsets.back());
  for (const auto& l : lists) ids.insert(ids.end(), l.begin(), l.end());
  return offsets;
}

}  // namespace

CellComplex CellComplex::build(const Linkage& linkage, BuildOptions options) {
  const int n = linkage.size();
  if (n > kMaxComplexSize)
    throw DomainError("complex construction supports n <= " + std::to_string(kMaxComplexSize));
  if (!options.allow_nongeneric) {
    if (auto split = find_aligned_split(linkage))
      throw DomainError("non-generic linkage: the edges " + CyclicPartition::canonicalize(n, {*split, full_set(n) & ~*split}).to_string() +
                        " split the perimeter in half");
  }
  CellComplex k(linkage);
  k.dim_offsets_.push_back(0);
  for (int m = 3; m <= n; ++m) {
    for (auto& label : enumerate_admissible(linkage, m)) {
      int id = static_cast<int>(k.cells_.size());
      k.index_.emplace(label.key(), id);
      k.cells_.push_back(Cell{id, std::move(label)});
    }
    k.dim_offsets_.push_back(static_cast<int>(k.cells_.size()));
  }

  std::vector<std::vector<int>> faces(k.cells_.size());
  for (const auto& c : k.cells_) {
    const int m = c.label.size();
    if (m <= 3) continue;
    for (int g = 0; g < m; ++g) {
      std::vector<IndexSet> parts(c.label.parts().begin(), c.label.parts().end());
      parts[g] |= parts[(g + 1) % m];
      parts.erase(parts.begin() + (g + 1) % m);
      auto merged = CyclicPartition::canonicalize(n, std::move(parts));
      if (!is_admissible(merged, linkage)) continue;
      auto id = k.find(merged);
      if (!id) throw InvariantViolation("admissible face " + merged.to_string() + " missing from enumeration");
      faces[c.id].push_back(*id);
    }
    auto& f = faces[c.id];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  k.face_offsets_ = csr_build(faces, k.face_ids_);
  k.index_cofaces();
  return k;
}

void CellComplex::index_cofaces() {
  std::vector<std::vector<int>> cofaces(cells_.size());
  for (int id = 0; id < size(); ++id)
    for (int f : faces(id)) cofaces[f].push_back(id);
  coface_offsets_ = csr_build(cofaces, coface_ids_);
}

std::span<const Cell> CellComplex::cells_of_dim(int dim) const {
  if (dim < 0 || dim > top_dimension()) return {};
  return std::span<const Cell>(cells_).subspan(dim_offsets_[dim], dim_offsets_[dim + 1] - dim_offsets_[dim]);
}

std::span<const int> CellComplex::faces(int id) const {
  return std::span<const int>(face_ids_).subspan(face_offsets_[id], face_offsets_[id + 1] - face_offsets_[id]);
}

std::span<const int> CellComplex::cofaces(int id) const {
  return std::span<const int>(coface_ids_).subspan(coface_offsets_[id], coface_offsets_[id + 1] - coface_offsets_[id]);
}

std::optional<int> CellComplex::find(const CyclicPartition& label) const {
  if (label.ground_size() != ground_size()) return std::nullopt;
  auto it = index_.find(label.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <typename Next>
std::vector<int> reach(int start, int count, Next next) {
  std::vector<char> seen(count, 0);
  std::vector<int> stack{start}, out;
  seen[start] = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    out.push_back(c);
    for (int d : next(c))
      if (!seen[d]) {
        seen[d] = 1;
        stack.push_back(d);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> CellComplex::closure(int id) const {
  return reach(id, size(), [this](int c) { return faces(c); });
}

std::vector<int> CellComplex::closure_vertices(int id) const {
  auto all = closure(id);
  std::erase_if(all, [this](int c) { return cells_[c].dim() != 0; });
  return all;
}

std::vector<int> CellComplex::star(int id) const {
  return reach(id, size(), [this](int c) { return cofaces(c); });
}

std::vector<int> CellComplex::star_facets(int id) const {
  auto all = star(id);
  std::erase_if(all, [this](int c) { return cells_[c].dim() != top_dimension(); });
  return all;
}

SparseMatrixGF2 CellComplex::boundary_matrix(int dim) const {
  auto cols = cells_of_dim(dim);
  auto rows = cells_of_dim(dim - 1);
  SparseMatrixGF2 m{static_cast<int>(rows.size()), static_cast<int>(cols.size()), {}};
  m.columns.reserve(cols.size());
  const int row_base = dim >= 1 ? dim_offsets_[dim - 1] : 0;
  for (const auto& c : cols) {
    std::vector<int> col;
    for (int f : faces(c.id)) col.push_back(f - row_base);
    m.columns.push_back(std::move(col));
  }
  return m;
}

CellComplex CellComplex::with_incidence_removed(int id, int face) const {
  CellComplex copy = *this;
  std::vector<std::vector<int>> faces_list(cells_.size());
  for (int c = 0; c < size(); ++c)
    for (int f : faces(c))
      if (!(c == id && f == face)) faces_list[c].push_back(f);
  copy.face_offsets_ = csr_build(faces_list, copy.face_ids_);
  copy.index_cofaces();
  return copy;
}

std::vector<long long> f_vector(const CellComplex& k) {
  std::vector<long long> f;
  for (int d = 0; d <= k.top_dimension(); ++d) f.push_back(static_cast<long long>(k.cells_of_dim(d).size()));
  return f;
}

long long euler_characteristic(const CellComplex& k) {
  long long chi = 0, sign = 1;
  for (long long count : f_vector(k)) {
    chi += sign * count;
    sign = -sign;
  }
  return chi;
}

int connected_components(const CellComplex& k) {
  std::vector<int> parent(k.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < k.size(); ++c)
    for (int f : k.faces(c)) parent[root(c)] = root(f);
  int components = 0;
  for (int c = 0; c < k.size(); ++c)
    if (root(c) == c) ++components;
  return components;
}

std::optional<std::string> check_boundary_squared(const CellComplex& k) {
  for (int d = 2; d <= k.top_dimension(); ++d) {
    for (const auto& c : k.cells_of_dim(d)) {
      std::map<int, int> parity;
      for (int f : k.faces(c.id))
        for (int g : k.faces(f)) parity[g] ^= 1;
      for (auto [g, p] : parity)
        if (p) return "d∘d != 0: cell " + c.label.to_string() + " reaches " + k.cell(g).label.to_string() + " an odd number of times";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_diamond(const CellComplex& k) {
  for (const auto& c : k.cells_of_dim(1))
    if (k.faces(c.id).size() != 2)
      return "diamond: 1-cell " + c.label.to_string() + " has " + std::to_string(k.faces(c.id).size()) + " vertices";
  for (int d = 2; d <= k.top_dimension(); ++d) {
    for (const auto& c : k.cells_of_dim(d)) {
      std::map<int, int> between;
      for (int f : k.faces(c.id))
        for (int g : k.faces(f)) ++between[g];
      for (auto [g, count] : between)
        if (count != 2)
          return "diamond: " + std::to_string(count) + " cells between " + k.cell(g).label.to_string() + " and " +
                 c.label.to_string();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_incidence_by_refinement(const CellComplex& k) {
  for (const auto& c : k.cells()) {
    std::vector<int> expected;
    for (const auto& f : k.cells_of_dim(c.dim() - 1))
      if (refines(c.label, f.label)) expected.push_back(f.id);
    auto stored = k.faces(c.id);
    if (!std::equal(expected.begin(), expected.end(), stored.begin(), stored.end()))
      return "incidence: faces of " + c.label.to_string() + " differ from its refinement faces";
  }
  return std::nullopt;
}

std::vector<long long> betti_mod2(const CellComplex& k) {
  if (auto violation = check_boundary_squared(k)) throw InvariantViolation(*violation);
  const int top = k.top_dimension();
  std::vector<long long> rank(top + 2, 0);  // rank[d] = rank of boundary from dim d
  for (int d = 1; d <= top; ++d) rank[d] = rank_gf2(k.boundary_matrix(d));
  auto f = f_vector(k);
  std::vector<long long> betti;
  for (int d = 0; d <= top; ++d) betti.push_back(f[d] - rank[d] - rank[d + 1]);
  return betti;
}

namespace {

// For each cell in the star of C, its tuple of ordered partitions of C's parts.
using ProductFace = std::vector<std::vector<IndexSet>>;

std::vector<ProductFace> product_merges(const ProductFace& t) {
  std::vector<ProductFace> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j + 1 < t[i].size(); ++j) {
      ProductFace u = t;
      u[i][j] |= u[i][j + 1];
      u[i].erase(u[i].begin() + j + 1);
      out.push_back(std::move(u));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool face_figure_check(const CellComplex& k, int cell_id) {
  const auto& base = k.cell(cell_id).label;
  auto above = k.star(cell_id);
  std::map<ProductFace, int> by_tuple;
  std::map<int, ProductFace> tuple_of;
  for (int d : above) {
    auto runs = refinement_runs(k.cell(d).label, base);
    if (!runs) return false;
    if (!by_tuple.emplace(*runs, d).second) return false;
    tuple_of.emplace(d, std::move(*runs));
  }
  long long expected = 1;
  for (IndexSet part : base.parts()) expected *= fubini(set_size(part));
  if (static_cast<long long>(above.size()) != expected) return false;

  // Covering relations inside the star must be exactly the single merges of
  // adjacent blocks within one component.
  for (int d : above) {
    std::vector<ProductFace> stored;
    for (int f : k.faces(d))
      if (auto it = tuple_of.find(f); it != tuple_of.end()) stored.push_back(it->second);
    std::sort(stored.begin(), stored.end());
    if (stored != product_merges(tuple_of.at(d))) return false;
  }
  return true;
}

VertexFigure vertex_figure_signature(const CellComplex& k, int vertex_id) {
  const auto& label = k.cell(vertex_id).label;
  if (label.size() != 3) throw DomainError("vertex_figure_signature needs a 0-cell, got " + label.to_string());
  VertexFigure fig;
  for (int i = 0; i < 3; ++i) fig.part_sizes[i] = set_size(label.part(i));
  fig.facet_count = static_cast<long long>(k.star_facets(vertex_id).size());
  long long expected = factorial(fig.part_sizes[0]) * factorial(fig.part_sizes[1]) * factorial(fig.part_sizes[2]);
  if (fig.facet_count != expected)
    throw InvariantViolation("vertex " + label.to_string() + " lies in " + std::to_string(fig.facet_count) +
                             " facets, expected " + std::to_string(expected));
  if (!face_figure_check(k, vertex_id))
    throw InvariantViolation("star of vertex " + label.to_string() + " is not a product of permutohedra");
  return fig;
}

ForgetfulProjection forget_projection(const CellComplex& extended, const CellComplex& base) {
  const int n = base.ground_size();
  if (extended.ground_size() != n + 1) throw DomainError("forget_projection: extended linkage must have n+1 edges");
  for (int i = 1; i <= n; ++i)
    if (extended.linkage().length(i) != base.linkage().length(i))
      throw DomainError("forget_projection: extended linkage must extend the base linkage");

  ForgetfulProjection proj;
  proj.image.resize(extended.size());
  for (const auto& c : extended.cells()) {
    std::vector<IndexSet> parts;
    for (IndexSet p : c.label.parts()) {
      IndexSet q = p & full_set(n);
      if (q) parts.push_back(q);
    }
    auto label = CyclicPartition::canonicalize(n, std::move(parts));
    auto id = base.find(label);
    if (!id)
      throw DomainError("projection of " + c.label.to_string() + " is " + label.to_string() +
                        ", not a cell; the appended edge is not short enough");
    proj.image[c.id] = *id;
  }
  proj.monotone = true;
  for (const auto& c : extended.cells())
    for (int f : extended.faces(c.id))
      if (!refines(base.cell(proj.image[c.id]).label, base.cell(proj.image[f]).label)) proj.monotone = false;
  if (!proj.monotone) throw InvariantViolation("forgetful projection is not monotone");

  std::set<int> hit;
  for (const auto& c : extended.cells_of_dim(extended.top_dimension())) hit.insert(proj.image[c.id]);
  proj.surjective_on_facets = std::all_of(base.cells_of_dim(base.top_dimension()).begin(),
                                          base.cells_of_dim(base.top_dimension()).end(),
                                          [&](const Cell& c) { return hit.count(c.id) > 0; });
  return proj;
}

EquilateralEmbedding::EquilateralEmbedding(const Linkage& linkage) : n_(linkage.size()) {
  if (!linkage.has_integer_lengths()) throw DomainError("equilateral embedding needs integer lengths");
  BigInt total = 0;
  for (const auto& l : linkage.lengths()) total += boost::multiprecision::numerator(l);
  if (total % 2 == 0) throw DomainError("equilateral embedding needs an odd total length");
  if (total > kMaxGroundSize)
    throw DomainError("equilateral embedding supports total length <= " + std::to_string(kMaxGroundSize));
  total_ = total.convert_to<int>();
  int next = 1;
  for (const auto& l : linkage.lengths()) {
    int len = boost::multiprecision::numerator(l).convert_to<int>();
    IndexSet block = 0;
    for (int j = 0; j < len; ++j) block |= element_bit(next++);
    blocks_.push_back(block);
  }
}

CyclicPartition EquilateralEmbedding::map(const CyclicPartition& label) const {
  if (label.ground_size() != n_) throw DomainError("embedding applied to a partition of the wrong ground set");
  std::vector<IndexSet> parts;
  for (IndexSet p : label.parts()) {
    IndexSet q = 0;
    for (int i : elements_of(p)) q |= blocks_[i - 1];
    parts.push_back(q);
  }
  return CyclicPartition::canonicalize(total_, std::move(parts));
}

bool EquilateralEmbedding::admissible_in_target(const CyclicPartition& image) const {
  return std::all_of(image.parts().begin(), image.parts().end(),
                     [this](IndexSet p) { return 2 * set_size(p) <= total_; });
}

std::vector<CyclicPartition> embed_complex(const CellComplex& k, const EquilateralEmbedding& embedding) {
  std::vector<CyclicPartition> images;
  images.reserve(k.size());
  for (const auto& c : k.cells()) {
    auto image = embedding.map(c.label);
    if (!embedding.admissible_in_target(image))
      throw InvariantViolation("embedded label " + image.to_string() + " is not admissible");
    images.push_back(std::move(image));
  }
  std::set<CyclicPartition> distinct(images.begin(), images.end());
  if (distinct.size() != images.size()) throw InvariantViolation("equilateral embedding is not injective");
  for (const auto& c : k.cells())
    for (int f : k.faces(c.id))
      if (images[f].size() + 1 != images[c.id].size() || !refines(images[c.id], images[f]))
        throw InvariantViolation("embedding breaks the incidence " + c.label.to_string() + " > " +
                                 k.cell(f).label.to_string());
  return images;
}

}  // namespace cwm
