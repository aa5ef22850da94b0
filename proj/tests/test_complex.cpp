#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cwm/complex.hpp"
#include "cwm/error.hpp"
#include "helpers.hpp"

using cwm::CellComplex;
using testing::label;

namespace {

CellComplex build(const std::string& text) { return cwm::build_complex(testing::linkage(text)); }

using LongVec = std::vector<long long>;

}  // namespace

TEST_CASE("two circles") {
  auto k = build("1,1,1,1/2");
  CHECK(cwm::f_vector(k) == LongVec{6, 6});
  CHECK(cwm::euler_characteristic(k) == 0);
  CHECK(cwm::connected_components(k) == 2);
  CHECK(cwm::betti_mod2(k) == LongVec{2, 2});
}

TEST_CASE("long edge sphere") {
  auto k = build("1,1,1,1,7/2");
  CHECK(cwm::f_vector(k) == LongVec{14, 36, 24});
  CHECK(cwm::euler_characteristic(k) == 2);
  CHECK(cwm::connected_components(k) == 1);
  CHECK(cwm::betti_mod2(k) == LongVec{1, 0, 1});
}

TEST_CASE("equilateral pentagon") {
  auto k = build("1,1,1,1,1");
  CHECK(cwm::f_vector(k) == LongVec{30, 60, 24});
  CHECK(cwm::euler_characteristic(k) == -6);
  CHECK(cwm::connected_components(k) == 1);
  CHECK(cwm::betti_mod2(k) == LongVec{1, 8, 1});
}

TEST_CASE("torus") {
  auto k = build("1.2,1,1,0.8,2.2");
  CHECK(cwm::f_vector(k) == LongVec{18, 42, 24});
  CHECK(cwm::euler_characteristic(k) == 0);
  CHECK(cwm::connected_components(k) == 1);
  CHECK(cwm::betti_mod2(k) == LongVec{1, 2, 1});
}

TEST_CASE("topology agrees with the enumeration oracle") {
  for (const auto& text : testing::sweep_linkages()) {
    CAPTURE(text);
    auto k = build(text);
    auto t = oracle::topology(testing::lengths_of(k.linkage()));
    CHECK(cwm::f_vector(k) == t.f);
    CHECK(cwm::euler_characteristic(k) == t.euler);
    CHECK(cwm::connected_components(k) == t.components);
    CHECK(cwm::betti_mod2(k) == t.betti);
  }
}

TEST_CASE("structural invariants on the sweep") {
  for (const auto& text : testing::sweep_linkages()) {
    CAPTURE(text);
    auto k = build(text);
    const int n = k.ground_size();
    CHECK_FALSE(cwm::check_boundary_squared(k).has_value());
    CHECK_FALSE(cwm::check_diamond(k).has_value());
    CHECK_FALSE(cwm::check_incidence_by_refinement(k).has_value());
    CHECK(static_cast<long long>(k.cells_of_dim(n - 3).size()) == oracle::factorial(n - 1));
    // Poincare duality mod 2 for a closed manifold.
    auto betti = cwm::betti_mod2(k);
    for (std::size_t d = 0; d < betti.size(); ++d) CHECK(betti[d] == betti[betti.size() - 1 - d]);
    // Cells sorted by dimension then label, ids dense.
    for (int id = 0; id < k.size(); ++id) {
      CHECK(k.cell(id).id == id);
      CHECK(k.find(k.cell(id).label) == id);
      if (id > 0) {
        const auto& a = k.cell(id - 1);
        const auto& b = k.cell(id);
        CHECK((a.dim() < b.dim() || (a.dim() == b.dim() && a.label < b.label)));
      }
    }
  }
}

TEST_CASE("faces and cofaces are mutually inverse") {
  auto k = build("6/5,1,1,4/5,11/5");
  for (int id = 0; id < k.size(); ++id) {
    for (int f : k.faces(id)) {
      auto co = k.cofaces(f);
      CHECK(std::find(co.begin(), co.end(), id) != co.end());
      CHECK(k.cell(f).dim() == k.cell(id).dim() - 1);
      CHECK(cwm::refines(k.cell(id).label, k.cell(f).label));
    }
  }
}

TEST_CASE("closure and star") {
  auto k = build("1,1,1,1,1");
  auto facet = *k.find(label("1|2|3|4|5", 5));
  auto closure = k.closure(facet);
  CHECK(closure.size() == 11);  // pentagon: 5 vertices, 5 edges, itself
  CHECK(k.closure_vertices(facet).size() == 5);
  auto vertex = *k.find(label("1,2|3,4|5", 5));
  CHECK(k.star_facets(vertex).size() == 4);
  CHECK(k.star(vertex).size() == 1 + 4 + 4);
  for (int c : closure) {
    auto st = k.star(c);
    CHECK(std::binary_search(st.begin(), st.end(), facet));
  }
}

TEST_CASE("non-generic linkages are refused unless forced") {
  auto square = testing::linkage("1,1,1,1");
  CHECK_THROWS_AS(cwm::build_complex(square), cwm::DomainError);
  try {
    cwm::build_complex(square);
  } catch (const cwm::DomainError& e) {
    CHECK(std::string(e.what()).find("non-generic") != std::string::npos);
  }
  auto forced = cwm::build_complex(square, {.allow_nongeneric = true});
  CHECK(forced.size() > 0);
}

TEST_CASE("vertex figures") {
  auto eq = build("1,1,1,1,1");
  for (const auto& v : eq.cells_of_dim(0)) {
    auto fig = cwm::vertex_figure_signature(eq, v.id);
    CHECK(fig.facet_count == 4);
    auto sizes = fig.part_sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::array<int, 3>{1, 2, 2});
    CHECK(eq.cofaces(v.id).size() == 4);  // 4 edges
  }
  auto sphere = build("1,1,1,1,7/2");
  CHECK(cwm::vertex_figure_signature(sphere, *sphere.find(label("1,2|3,4|5", 5))).facet_count == 4);
  auto point = build("1,1,1");
  CHECK(cwm::vertex_figure_signature(point, 0).facet_count == 1);
}

TEST_CASE("vertex figures on the sweep are k! l! m!") {
  for (const auto& text : testing::sweep_linkages()) {
    auto k = build(text);
    for (const auto& v : k.cells_of_dim(0)) {
      auto fig = cwm::vertex_figure_signature(k, v.id);
      long long expected = 1;
      for (int s : fig.part_sizes) expected *= oracle::factorial(s);
      CHECK(fig.facet_count == expected);
      CHECK(static_cast<long long>(k.star_facets(v.id).size()) == expected);
    }
  }
}

TEST_CASE("face figures") {
  auto hex = build("3,1,1,4,4");
  auto cell = *hex.find(label("1|4|2,3,5", 5));
  CHECK(cwm::face_figure_check(hex, cell));
  CHECK(hex.star_facets(cell).size() == 6);

  auto eq = build("1,1,1,1,1");
  for (const auto& e : eq.cells_of_dim(1)) {
    CHECK(cwm::face_figure_check(eq, e.id));
    CHECK(eq.star_facets(e.id).size() == 2);
  }
  for (const auto& f : eq.cells_of_dim(2)) CHECK(cwm::face_figure_check(eq, f.id));
}

TEST_CASE("forgetting projection") {
  auto base = build("1,1,1,1/2");
  auto ext = build("1,1,1,1/2,1/100");
  auto pi = cwm::forget_projection(ext, base);
  CHECK(pi.monotone);
  CHECK(pi.surjective_on_facets);
  CHECK(pi.image.size() == static_cast<std::size_t>(ext.size()));
  auto img = [&](const std::string& text) { return base.cell(pi.image[*ext.find(label(text, 5))]).label; };
  CHECK(img("1|2|3|4|5") == label("1|2|3|4", 4));
  CHECK(img("1|2|3|4,5") == label("1|2|3|4", 4));

  // A long appended edge makes some image inadmissible.
  auto long_ext = build("1,1,1,1/2,5/4");
  CHECK_THROWS_AS(cwm::forget_projection(long_ext, base), cwm::DomainError);
}

TEST_CASE("equilateral embedding") {
  auto l = testing::linkage("2,2,2,1");
  cwm::EquilateralEmbedding e(l);
  CHECK(e.total() == 7);
  CHECK(e.map(label("1|2|3|4", 4)) == label("1,2|3,4|5,6|7", 7));

  auto hex = testing::linkage("3,1,1,4,4");
  cwm::EquilateralEmbedding h(hex);
  CHECK(h.map(label("1|4|2,3,5", 5)) == label("1,2,3|6,7,8,9|4,5,10,11,12,13", 13));

  auto eq = testing::linkage("1,1,1,1,1");
  cwm::EquilateralEmbedding id(eq);
  for (auto& c : cwm::enumerate_admissible(eq, 4)) CHECK(id.map(c) == c);

  auto k = cwm::build_complex(l);
  auto images = cwm::embed_complex(k, e);
  CHECK(images.size() == static_cast<std::size_t>(k.size()));
  for (auto& img : images) CHECK(e.admissible_in_target(img));

  CHECK_THROWS_AS(cwm::EquilateralEmbedding(testing::linkage("1,1,1,1/2")), cwm::DomainError);
  CHECK_THROWS_AS(cwm::EquilateralEmbedding(testing::linkage("1,2,2,1")), cwm::DomainError);
}

namespace {

// The relabeling acts on cells; returns true iff it is a poset automorphism.
bool is_automorphism(const CellComplex& k, const std::vector<int>& sigma) {
  std::vector<int> image(k.size());
  for (int id = 0; id < k.size(); ++id) {
    auto found = k.find(k.cell(id).label.relabeled(sigma));
    if (!found) return false;
    image[id] = *found;
  }
  std::set<int> distinct(image.begin(), image.end());
  if (static_cast<int>(distinct.size()) != k.size()) return false;
  for (int id = 0; id < k.size(); ++id) {
    std::vector<int> mapped;
    for (int f : k.faces(id)) mapped.push_back(image[f]);
    std::sort(mapped.begin(), mapped.end());
    auto target = k.faces(image[id]);
    if (!std::equal(mapped.begin(), mapped.end(), target.begin(), target.end())) return false;
  }
  return true;
}

std::set<cwm::CyclicPartition> facet_orbit(const CellComplex& k, const std::vector<std::vector<int>>& generators,
                                           bool with_reversal) {
  std::set<cwm::CyclicPartition> seen{k.cells_of_dim(k.top_dimension()).front().label};
  std::vector<cwm::CyclicPartition> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto cur = todo.back();
    todo.pop_back();
    std::vector<cwm::CyclicPartition> next;
    for (const auto& g : generators) next.push_back(cur.relabeled(g));
    if (with_reversal) next.push_back(cur.reversed());
    for (auto& x : next)
      if (seen.insert(x).second) todo.push_back(x);
  }
  return seen;
}

}  // namespace

TEST_CASE("equilateral pentagon symmetries") {
  auto k = build("1,1,1,1,1");
  std::vector<int> rotation = {2, 3, 4, 5, 1};
  std::vector<int> reflection = {5, 4, 3, 2, 1};
  std::vector<int> transposition = {2, 1, 3, 4, 5};
  CHECK(is_automorphism(k, rotation));
  CHECK(is_automorphism(k, reflection));
  CHECK(is_automorphism(k, transposition));

  // Relabeling by the dihedral group moves the standard facet only within a
  // small orbit; the symmetric group with reversal reaches every facet.
  auto dihedral = facet_orbit(k, {rotation, reflection}, false);
  CHECK(dihedral.size() < 24);
  auto full = facet_orbit(k, {rotation, transposition}, true);
  CHECK(full.size() == 24);
}

TEST_CASE("fault injection breaks an invariant") {
  auto k = build("1,1,1,1,1");
  const int facet = k.size() - 1;
  auto broken = k.with_incidence_removed(facet, k.faces(facet).front());
  CHECK(cwm::check_boundary_squared(broken).has_value());
  CHECK(cwm::check_diamond(broken).has_value());
  CHECK_THROWS_AS(cwm::betti_mod2(broken), cwm::InvariantViolation);

  auto circles = build("1,1,1,1/2");
  auto edge = circles.size() - 1;
  auto cut = circles.with_incidence_removed(edge, circles.faces(edge).front());
  CHECK(cwm::check_diamond(cut).has_value());
}

TEST_CASE("larger complexes keep their invariants") {
  for (const char* text : {"1,1,1,1,1,1,1", "1,1,1,1,1,1,3/2", "1,2,3,4,5,6,8"}) {
    CAPTURE(text);
    auto k = build(text);
    CHECK(static_cast<long long>(k.cells_of_dim(k.top_dimension()).size()) == oracle::factorial(6));
    CHECK_FALSE(cwm::check_boundary_squared(k).has_value());
    CHECK_FALSE(cwm::check_diamond(k).has_value());
    auto betti = cwm::betti_mod2(k);
    long long alt = 0;
    for (std::size_t d = 0; d < betti.size(); ++d) alt += (d % 2 ? -1 : 1) * betti[d];
    CHECK(alt == cwm::euler_characteristic(k));
  }
}
