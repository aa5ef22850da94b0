#include "cwm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iterator>
#include <mutex>
#include <optional>

#include "cwm/error.hpp"
#include "cwm/export.hpp"
#include "cwm/parallel.hpp"
#include "cwm/realization.hpp"
#include "cwm/witness.hpp"

namespace cwm {

namespace {

using Check = std::function<std::optional<std::string>(const CellComplex&)>;

// First failure over cells [0, count) in id order, evaluated in parallel.
std::optional<std::string> first_failure(int count, const std::function<std::optional<std::string>(int)>& test) {
  std::vector<std::optional<std::string>> results(count);
  parallel_for(count, [&](int i) {
    try {
      results[i] = test(i);
    } catch (const std::exception& e) {
      results[i] = e.what();
    }
  });
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

std::optional<std::string> facet_count(const CellComplex& k) {
  const long long expected = factorial(k.ground_size() - 1);
  const long long got = static_cast<long long>(k.cells_of_dim(k.top_dimension()).size());
  if (got != expected) return "expected " + std::to_string(expected) + " facets, found " + std::to_string(got);
  return std::nullopt;
}

std::optional<std::string> euler_betti(const CellComplex& k) {
  auto betti = betti_mod2(k);
  long long alternating = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) alternating += (d % 2 ? -1 : 1) * betti[d];
  if (alternating != euler_characteristic(k)) return std::string("alternating Betti sum differs from Euler characteristic");
  return std::nullopt;
}

std::optional<std::string> vertex_figures(const CellComplex& k) {
  auto vertices = k.cells_of_dim(0);
  return first_failure(static_cast<int>(vertices.size()), [&](int i) -> std::optional<std::string> {
    vertex_figure_signature(k, vertices[i].id);
    return std::nullopt;
  });
}

std::optional<std::string> witness_round_trip(const CellComplex& k) {
  return first_failure(k.size(), [&](int id) -> std::optional<std::string> {
    const auto& label = k.cell(id).label;
    auto config = witness_of(label, k.linkage());
    auto back = label_of(config, k.linkage());
    if (back != label) return "cell " + label.to_string() + " reads back as " + back.to_string();
    return std::nullopt;
  });
}

std::optional<std::string> face_figures(const CellComplex& k) {
  return first_failure(k.size(), [&](int id) -> std::optional<std::string> {
    if (!face_figure_check(k, id)) return "cell " + k.cell(id).label.to_string() + " has a wrong star";
    return std::nullopt;
  });
}

std::optional<std::string> meets(const CellComplex& k) {
  std::vector<std::vector<int>> verts(k.size());
  for (int id = 0; id < k.size(); ++id) verts[id] = k.closure_vertices(id);
  return first_failure(k.size(), [&](int a) -> std::optional<std::string> {
    for (int b = a; b < k.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                            std::back_inserter(common));
      auto m = meet(k.cell(a).label, k.cell(b).label, k.linkage());
      std::vector<int> got;
      if (m) {
        auto id = k.find(*m);
        if (!id) return "meet " + m->to_string() + " is not a cell";
        got = verts[*id];
      }
      if (got != common)
        return "meet of " + k.cell(a).label.to_string() + " and " + k.cell(b).label.to_string() +
               " differs from the common vertices";
    }
    return std::nullopt;
  });
}

std::optional<std::string> realization(const CellComplex& k) {
  return first_failure(k.size(), [&](int id) { return diagnose_cell_realization(k, id); });
}

std::optional<std::string> surgery_counts(const CellComplex& k) {
  auto g = surgery(k);
  auto counts = g.face_counts();
  auto f = f_vector(k);
  std::reverse(f.begin(), f.end());
  if (counts != f) return std::string("surgery face counts differ from the reversed f-vector");
  return std::nullopt;
}

std::optional<std::string> json_round_trip(const CellComplex& k) {
  auto doc = document_of(k);
  auto text = dump(to_json(doc));
  auto back = parse_complex(Json::parse(text));
  if (!(back == doc)) return std::string("complex JSON does not parse back to the same document");
  if (dump(to_json(back)) != text) return std::string("complex JSON is not stable under re-serialization");
  return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_checks(const CellComplex& k, VerifyLevel level) {
  std::vector<std::pair<std::string, Check>> checks = {
      {"boundary-squared", check_boundary_squared},
      {"diamond", check_diamond},
      {"facet-count", facet_count},
      {"euler-betti", euler_betti},
      {"vertex-figures", vertex_figures},
      {"witness-round-trip", witness_round_trip},
  };
  if (level == VerifyLevel::full) {
    checks.insert(checks.end(), {
                                    {"incidence-by-refinement", check_incidence_by_refinement},
                                    {"face-figures", face_figures},
                                    {"meet", meets},
                                    {"realization", realization},
                                    {"surgery", surgery_counts},
                                    {"json-round-trip", json_round_trip},
                                });
  }
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    std::optional<std::string> failure;
    try {
      failure = check(k);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    results.push_back({name, !failure, failure.value_or("")});
    if (failure) break;
  }
  return results;
}

}  // namespace cwm
