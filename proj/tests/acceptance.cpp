// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwm/complex.hpp"
#include "cwm/polytopes.hpp"
#include "cwm/realization.hpp"
#include "cwm/verify.hpp"
#include "helpers.hpp"

namespace {

using LongVec = std::vector<long long>;
using testing::label;

// Wall-clock limits in seconds.
constexpr double kTwoCirclesLimit = 1.0;
constexpr double kLongEdgeLimit = 1.0;
constexpr double kGenusFourLimit = 1.0;
constexpr double kTorusLimit = 2.0;
constexpr double kHexagonLimit = 1.0;
constexpr double kCyclicDualityLimit = 30.0;
constexpr double kPropertySweepLimit = 300.0;
constexpr double kForgetLimit = 2.0;

// Collects failed expectations with a short description each.
struct Report {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

cwm::CellComplex build(const std::string& text) { return cwm::build_complex(testing::linkage(text)); }

std::string tuple(const LongVec& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

void topology(Report& r, const cwm::CellComplex& k, const LongVec& f, long long chi, int components,
              const LongVec& betti) {
  r.expect(cwm::f_vector(k) == f, "f-vector " + tuple(cwm::f_vector(k)));
  r.expect(cwm::euler_characteristic(k) == chi, "euler characteristic " + std::to_string(cwm::euler_characteristic(k)));
  r.expect(cwm::connected_components(k) == components,
           "components " + std::to_string(cwm::connected_components(k)));
  r.expect(cwm::betti_mod2(k) == betti, "betti " + tuple(cwm::betti_mod2(k)));
}

void two_circles(Report& r) { topology(r, build("1,1,1,1/2"), {6, 6}, 0, 2, {2, 2}); }

void long_edge(Report& r) {
  auto k = build("1,1,1,1,7/2");
  topology(r, k, {14, 36, 24}, 2, 1, {1, 0, 1});
  r.expect(cwm::anti_isomorphic_to_permutohedron(k), "not anti-isomorphic to the permutohedron lattice");
}

void genus_four(Report& r) {
  auto k = build("1,1,1,1,1");
  topology(r, k, {30, 60, 24}, -6, 1, {1, 8, 1});
  for (const auto& f : k.cells_of_dim(2))
    r.expect(k.closure_vertices(f.id).size() == 5, "facet " + f.label.to_string() + " is not a pentagon");
  for (const auto& v : k.cells_of_dim(0)) {
    r.expect(k.star_facets(v.id).size() == 4, "vertex " + v.label.to_string() + " not in 4 facets");
    r.expect(k.cofaces(v.id).size() == 4, "vertex " + v.label.to_string() + " not in 4 edges");
  }
}

void torus(Report& r) {
  auto k = build("1.2,1,1,0.8,2.2");
  topology(r, k, {18, 42, 24}, 0, 1, {1, 2, 1});
  auto g = cwm::surgery(k);
  std::set<std::string> removed;
  for (const auto& f : g.removed) removed.insert(f.to_string());
  cwm::OrderedPartition first{4, {cwm::make_set({1, 2, 3}), cwm::make_set({4})}};
  cwm::OrderedPartition second{4, {cwm::make_set({4}), cwm::make_set({1, 2, 3})}};
  r.expect(removed == std::set<std::string>{first.to_string(), second.to_string()},
           "removed faces differ from the two hexagons");

  std::set<cwm::CyclicPartition> quads, edges;
  for (const auto& f : g.faces) {
    if (f.origin != cwm::FaceOrigin::patched) continue;
    if (f.dim == 2) {
      quads.insert(k.cell(f.cell).label);
      r.expect(f.vertices.size() == 4, "patched face is not a quadrilateral");
    }
    if (f.dim == 1) edges.insert(k.cell(f.cell).label);
  }
  std::set<cwm::CyclicPartition> expected_edges;
  for (const char* text : {"1|2|3|4,5", "1|3|2|4,5", "2|1|3|4,5", "2|3|1|4,5", "3|1|2|4,5", "3|2|1|4,5"})
    expected_edges.insert(label(text, 5));
  std::set<cwm::CyclicPartition> expected_quads;
  for (const char* text : {"1|2,3|4,5", "2,3|1|4,5", "2|1,3|4,5", "1,3|2|4,5", "3|1,2|4,5", "1,2|3|4,5"})
    expected_quads.insert(label(text, 5));
  r.expect(edges == expected_edges, "patched edge labels differ from the listed six");
  r.expect(quads == expected_quads, "patched quadrilaterals differ from the expected six");

  std::ostringstream off;
  cwm::export_off(g, off);
  std::istringstream in(off.str());
  std::string magic;
  long long vertices = 0, faces = 0;
  in >> magic >> vertices >> faces;
  r.expect(magic == "OFF" && vertices == 24 && faces == 18,
           "OFF header " + std::to_string(vertices) + " " + std::to_string(faces));
}

void hexagon(Report& r) {
  auto k = build("3,1,1,4,4");
  auto id = k.find(label("1|4|2,3,5", 5));
  if (!id) {
    r.expect(false, "cell 1|4|2,3,5 missing");
    return;
  }
  auto g = cwm::generators(k.cell(*id).label);
  r.expect(g.positives == std::vector<std::pair<int, int>>{{2, 3}}, "positive generators differ from {Q23}");
  r.expect(g.negatives == std::vector<int>{2, 3}, "negative generators differ from {R2, R3}");

  auto images = cwm::dual_cell_images(k, *id);
  auto zonotope = cwm::virtual_zonotope_vertices(g, 2);
  bool matched = images.size() == zonotope.size() && !images.empty();
  if (matched) {
    const std::size_t dim = images.front().size();
    cwm::Point shift(dim);
    for (std::size_t c = 0; c < dim; ++c) shift[c] = images.front()[c] - zonotope.front()[c];
    std::set<cwm::Point> remaining(images.begin(), images.end());
    for (const auto& z : zonotope) {
      cwm::Point moved(dim);
      for (std::size_t c = 0; c < dim; ++c) moved[c] = z[c] + shift[c];
      matched = matched && remaining.erase(moved) == 1;
    }
  }
  r.expect(matched, "zonotope vertices do not match the images under one translation");
  r.expect(images.size() == 6 && k.cofaces(*id).size() == 6 && k.star_facets(*id).size() == 6,
           "dual face is not a hexagon");
  r.expect(cwm::verify_cell_realization(k, *id), "realization check fails");
}

void cyclic_duality(Report& r) {
  r.expect(cwm::equilateral_facet_duality_check(5), "n = 5 facets not dual to C(5,2)");
  r.expect(cwm::equilateral_facet_duality_check(7), "n = 7 facets not dual to C(7,4)");
  std::vector<cwm::IndexSet> gale;
  for (cwm::IndexSet s = 0; s < cwm::element_bit(6); ++s)
    if (std::popcount(s) == 3 && cwm::gale_evenness(s, 5)) gale.push_back(s);
  auto facets = cwm::cyclic_facets(5, 3).facets;
  std::sort(gale.begin(), gale.end());
  std::sort(facets.begin(), facets.end());
  r.expect(gale.size() == 6, std::to_string(gale.size()) + " Gale-even triples");
  r.expect(facets == gale, "C(5,3) facets differ from the Gale-even triples");
}

void property_sweep(Report& r) {
  for (const auto& text : testing::sweep_linkages()) {
    auto k = build(text);
    for (const auto& c : cwm::run_checks(k, cwm::VerifyLevel::full))
      r.expect(c.passed, text + ": " + c.name + " " + c.detail);
  }
}

void forget(Report& r) {
  auto base = build("1,1,1,1/2");
  auto ext = build("1,1,1,1/2,1/100");
  auto pi = cwm::forget_projection(ext, base);
  r.expect(pi.image.size() == static_cast<std::size_t>(ext.size()), "projection not defined on every cell");
  bool labels = true;
  for (const auto& c : ext.cells()) {
    std::vector<cwm::IndexSet> parts;
    for (auto p : c.label.parts())
      if (auto q = p & ~cwm::element_bit(5)) parts.push_back(q);
    labels = labels && base.cell(pi.image[c.id]).label == cwm::CyclicPartition::canonicalize(4, parts);
  }
  r.expect(labels, "projection does not delete index 5");
  r.expect(pi.monotone, "projection is not monotone");
  r.expect(pi.surjective_on_facets, "projection is not surjective on facets");
}

struct Criterion {
  std::string name;
  double limit;
  std::function<void(Report&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"two circles (1,1,1,1/2)", kTwoCirclesLimit, two_circles},
      {"long-edge sphere (1,1,1,1,7/2)", kLongEdgeLimit, long_edge},
      {"genus-4 surface (1,1,1,1,1)", kGenusFourLimit, genus_four},
      {"torus surgery (1.2,1,1,0.8,2.2)", kTorusLimit, torus},
      {"hexagonal diagonal face (3,1,1,4,4)", kHexagonLimit, hexagon},
      {"cyclic polytope duality n = 5, 7", kCyclicDualityLimit, cyclic_duality},
      {"property sweep n <= 6", kPropertySweepLimit, property_sweep},
      {"forgetting projection (1,1,1,1/2,1/100)", kForgetLimit, forget},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit)
      report.failures.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit) + " s");
    const bool ok = report.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << c.name << " (" << seconds << " s)";
    if (!ok) std::cout << ": " << report.failures.front();
    if (report.failures.size() > 1) std::cout << " (+" << report.failures.size() - 1 << " more)";
    std::cout << '\n';
  }
  std::cout << (failed ? "acceptance: fail" : "acceptance: pass") << '\n';
  return failed ? 1 : 0;
}
