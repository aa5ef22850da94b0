#include "cwm/export.hpp"

#include <algorithm>

#include "cwm/error.hpp"
#include "cwm/rational.hpp"

namespace cwm {

namespace {

std::vector<std::vector<int>> lists_of(std::span<const IndexSet> parts) {
  std::vector<std::vector<int>> out;
  for (IndexSet p : parts) out.push_back(elements_of(p));
  return out;
}

std::vector<std::string> length_strings(const Linkage& linkage) {
  std::vector<std::string> out;
  for (const auto& l : linkage.lengths()) out.push_back(to_fraction_string(l));
  return out;
}

Json faces_json(const std::vector<LabeledFace>& cells) {
  Json arr = Json::array();
  for (const auto& c : cells) {
    Json e;
    e["id"] = c.id;
    e["dim"] = c.dim;
    e["label"] = c.label;
    arr.push_back(std::move(e));
  }
  return arr;
}

// Wraps nlohmann type errors as domain errors naming the document kind.
template <typename F>
auto parse_guarded(const char* what, F body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw DomainError(std::string(what) + " JSON must be an object");
  for (const char* k : keys)
    if (!j.contains(k)) throw DomainError(std::string(what) + " JSON lacks field '" + k + "'");
  if (j.size() != keys.size()) throw DomainError(std::string(what) + " JSON has unknown fields");
}

std::vector<LabeledFace> parse_faces(const Json& arr, const char* what) {
  std::vector<LabeledFace> out;
  for (const auto& e : arr.at("cells")) {
    require_keys(e, {"id", "dim", "label"}, what);
    LabeledFace f{e.at("id").get<int>(), e.at("dim").get<int>(), e.at("label").get<std::vector<std::vector<int>>>()};
    if (f.id != static_cast<int>(out.size())) throw DomainError(std::string(what) + " JSON: ids must be dense");
    out.push_back(std::move(f));
  }
  return out;
}

void check_incidence(const std::vector<std::vector<int>>& incidence, std::size_t count, const char* what) {
  if (incidence.size() != count) throw DomainError(std::string(what) + " JSON: incidence length differs from cells");
  for (const auto& row : incidence)
    for (int f : row)
      if (f < 0 || f >= static_cast<int>(count)) throw DomainError(std::string(what) + " JSON: face id out of range");
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ComplexDocument document_of(const CellComplex& k) {
  ComplexDocument doc;
  doc.n = k.ground_size();
  doc.lengths = length_strings(k.linkage());
  for (const auto& c : k.cells()) {
    doc.cells.push_back({c.id, c.dim(), c.label.to_lists()});
    auto faces = k.faces(c.id);
    doc.incidence.emplace_back(faces.begin(), faces.end());
  }
  return doc;
}

Json to_json(const ComplexDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["lengths"] = doc.lengths;
  j["cells"] = faces_json(doc.cells);
  j["incidence"] = doc.incidence;
  return j;
}

ComplexDocument parse_complex(const Json& j) {
  return parse_guarded("complex", [&] {
    require_keys(j, {"n", "lengths", "cells", "incidence"}, "complex");
    ComplexDocument doc;
    doc.n = j.at("n").get<int>();
    doc.lengths = j.at("lengths").get<std::vector<std::string>>();
    if (static_cast<int>(doc.lengths.size()) != doc.n) throw DomainError("complex JSON: n differs from lengths");
    for (const auto& s : doc.lengths) parse_rational(s);
    doc.cells = parse_faces(j, "complex");
    for (const auto& c : doc.cells) {
      auto label = CyclicPartition::canonicalize(doc.n, c.label);
      if (label.to_lists() != c.label) throw DomainError("complex JSON: label not canonical");
      if (label.dimension() != c.dim) throw DomainError("complex JSON: dim differs from label");
    }
    doc.incidence = j.at("incidence").get<std::vector<std::vector<int>>>();
    check_incidence(doc.incidence, doc.cells.size(), "complex");
    return doc;
  });
}

LatticeDocument document_of(const PermutohedronFaceLattice& lattice) {
  LatticeDocument doc;
  doc.m = lattice.m;
  std::map<OrderedPartition, int> ids;
  std::vector<const OrderedPartition*> faces;
  for (const auto& level : lattice.faces_by_dim)
    for (const auto& f : level) {
      ids.emplace(f, static_cast<int>(faces.size()));
      faces.push_back(&f);
    }
  doc.incidence.resize(faces.size());
  for (std::size_t id = 0; id < faces.size(); ++id) {
    const auto& f = *faces[id];
    doc.cells.push_back({static_cast<int>(id), f.dimension(), lists_of(f.parts)});
    // Merging two consecutive blocks gives each codimension-one coface.
    for (std::size_t i = 0; i + 1 < f.parts.size(); ++i) {
      OrderedPartition up{f.m, {}};
      for (std::size_t t = 0; t < f.parts.size(); ++t) {
        if (t == i + 1) continue;
        up.parts.push_back(t == i ? (f.parts[i] | f.parts[i + 1]) : f.parts[t]);
      }
      doc.incidence[ids.at(up)].push_back(static_cast<int>(id));
    }
  }
  for (auto& row : doc.incidence) std::sort(row.begin(), row.end());
  return doc;
}

Json to_json(const LatticeDocument& doc) {
  Json j;
  j["m"] = doc.m;
  j["cells"] = faces_json(doc.cells);
  j["incidence"] = doc.incidence;
  return j;
}

LatticeDocument parse_lattice(const Json& j) {
  return parse_guarded("lattice", [&] {
    require_keys(j, {"m", "cells", "incidence"}, "lattice");
    LatticeDocument doc;
    doc.m = j.at("m").get<int>();
    doc.cells = parse_faces(j, "lattice");
    for (const auto& c : doc.cells) {
      IndexSet seen = 0;
      for (const auto& part : c.label) {
        if (part.empty()) throw DomainError("lattice JSON: empty block");
        for (int e : part) {
          if (e < 1 || e > doc.m || contains(seen, e)) throw DomainError("lattice JSON: label is not a partition");
          seen |= element_bit(e);
        }
      }
      if (seen != full_set(doc.m)) throw DomainError("lattice JSON: label is not a partition");
      if (doc.m - static_cast<int>(c.label.size()) != c.dim) throw DomainError("lattice JSON: dim differs from label");
    }
    doc.incidence = j.at("incidence").get<std::vector<std::vector<int>>>();
    check_incidence(doc.incidence, doc.cells.size(), "lattice");
    return doc;
  });
}

CyclicDocument document_of(const CyclicPolytopeFacets& facets) {
  CyclicDocument doc{facets.n, facets.d, {}};
  for (IndexSet f : facets.facets) doc.facets.push_back(elements_of(f));
  return doc;
}

Json to_json(const CyclicDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["d"] = doc.d;
  j["facets"] = doc.facets;
  return j;
}

CyclicDocument parse_cyclic(const Json& j) {
  return parse_guarded("cyclic polytope", [&] {
    require_keys(j, {"n", "d", "facets"}, "cyclic polytope");
    CyclicDocument doc{j.at("n").get<int>(), j.at("d").get<int>(),
                       j.at("facets").get<std::vector<std::vector<int>>>()};
    for (const auto& f : doc.facets) {
      if (static_cast<int>(f.size()) != doc.d) throw DomainError("cyclic polytope JSON: facet of wrong size");
      for (int e : f)
        if (e < 1 || e > doc.n) throw DomainError("cyclic polytope JSON: vertex out of range");
    }
    return doc;
  });
}

GeometryDocument document_of(const GeometricComplex& g) {
  GeometryDocument doc;
  doc.n = g.n;
  for (const auto& [id, p] : g.points) {
    auto& coords = doc.points[id];
    for (const auto& x : p) coords.push_back(to_fraction_string(x));
  }
  for (const auto& f : g.faces) doc.faces.push_back({f.cell, f.vertices, to_string(f.origin)});
  return doc;
}

Json to_json(const GeometryDocument& doc) {
  Json j;
  j["n"] = doc.n;
  Json points = Json::object();
  for (const auto& [id, coords] : doc.points) points[std::to_string(id)] = coords;
  j["points"] = std::move(points);
  Json faces = Json::array();
  for (const auto& f : doc.faces) {
    Json e;
    e["cell"] = f.cell;
    e["vertices"] = f.vertices;
    e["origin"] = f.origin;
    faces.push_back(std::move(e));
  }
  j["faces"] = std::move(faces);
  return j;
}

GeometryDocument parse_geometry(const Json& j) {
  return parse_guarded("geometry", [&] {
    require_keys(j, {"n", "points", "faces"}, "geometry");
    GeometryDocument doc;
    doc.n = j.at("n").get<int>();
    for (const auto& [key, value] : j.at("points").items()) {
      std::size_t used = 0;
      int id = std::stoi(key, &used);
      if (used != key.size()) throw DomainError("geometry JSON: point id '" + key + "' is not an integer");
      auto coords = value.get<std::vector<std::string>>();
      if (static_cast<int>(coords.size()) != doc.n - 1) throw DomainError("geometry JSON: point of wrong dimension");
      for (const auto& s : coords) parse_rational(s);
      doc.points[id] = std::move(coords);
    }
    for (const auto& e : j.at("faces")) {
      require_keys(e, {"cell", "vertices", "origin"}, "geometry face");
      GeometryDocument::Face f{e.at("cell").get<int>(), e.at("vertices").get<std::vector<int>>(),
                               e.at("origin").get<std::string>()};
      if (f.origin != "kept" && f.origin != "patched") throw DomainError("geometry JSON: unknown origin " + f.origin);
      for (int v : f.vertices)
        if (!doc.points.contains(v)) throw DomainError("geometry JSON: face uses unknown point");
      doc.faces.push_back(std::move(f));
    }
    return doc;
  });
}

WitnessDocument document_of(const Linkage& linkage, const CyclicPartition& label, const PlanarConfiguration& config) {
  return {linkage.size(), length_strings(linkage), label.to_lists(), config.points};
}

Json to_json(const WitnessDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["lengths"] = doc.lengths;
  j["label"] = doc.label;
  j["points"] = doc.points;
  return j;
}

WitnessDocument parse_witness(const Json& j) {
  return parse_guarded("witness", [&] {
    require_keys(j, {"n", "lengths", "label", "points"}, "witness");
    WitnessDocument doc{j.at("n").get<int>(), j.at("lengths").get<std::vector<std::string>>(),
                        j.at("label").get<std::vector<std::vector<int>>>(), j.at("points").get<std::vector<Vec2>>()};
    if (static_cast<int>(doc.lengths.size()) != doc.n || static_cast<int>(doc.points.size()) != doc.n)
      throw DomainError("witness JSON: n differs from lengths or points");
    CyclicPartition::canonicalize(doc.n, doc.label);
    return doc;
  });
}

AnalysisDocument analyze(const CellComplex& k) {
  AnalysisDocument doc;
  doc.n = k.ground_size();
  doc.lengths = length_strings(k.linkage());
  doc.generic = is_generic(k.linkage());
  doc.f_vector = f_vector(k);
  doc.euler_characteristic = euler_characteristic(k);
  doc.components = connected_components(k);
  doc.betti_mod2 = betti_mod2(k);
  return doc;
}

Json to_json(const AnalysisDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["lengths"] = doc.lengths;
  j["generic"] = doc.generic;
  j["f_vector"] = doc.f_vector;
  j["euler_characteristic"] = doc.euler_characteristic;
  j["components"] = doc.components;
  j["betti_mod2"] = doc.betti_mod2;
  return j;
}

AnalysisDocument parse_analysis(const Json& j) {
  return parse_guarded("analysis", [&] {
    require_keys(j, {"n", "lengths", "generic", "f_vector", "euler_characteristic", "components", "betti_mod2"},
                 "analysis");
    AnalysisDocument doc;
    doc.n = j.at("n").get<int>();
    doc.lengths = j.at("lengths").get<std::vector<std::string>>();
    doc.generic = j.at("generic").get<bool>();
    doc.f_vector = j.at("f_vector").get<std::vector<long long>>();
    doc.euler_characteristic = j.at("euler_characteristic").get<long long>();
    doc.components = j.at("components").get<int>();
    doc.betti_mod2 = j.at("betti_mod2").get<std::vector<long long>>();
    long long chi = 0;
    for (std::size_t d = 0; d < doc.f_vector.size(); ++d) chi += (d % 2 ? -1 : 1) * doc.f_vector[d];
    if (chi != doc.euler_characteristic) throw DomainError("analysis JSON: Euler characteristic differs from f-vector");
    return doc;
  });
}

}  // namespace cwm
