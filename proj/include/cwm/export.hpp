#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "cwm/complex.hpp"
#include "cwm/polytopes.hpp"
#include "cwm/realization.hpp"
#include "cwm/witness.hpp"

namespace cwm {

using Json = nlohmann::ordered_json;

// Each writer has a matching parser into a plain document struct. Parsers
// throw DomainError on schema violations.

struct LabeledFace {
  int id = 0;
  int dim = 0;
  std::vector<std::vector<int>> label;
  friend bool operator==(const LabeledFace&, const LabeledFace&) = default;
};

/// {n, lengths, cells:[{id, dim, label}], incidence:[[face ids]]}
struct ComplexDocument {
  int n = 0;
  std::vector<std::string> lengths;  // "p/q"
  std::vector<LabeledFace> cells;
  std::vector<std::vector<int>> incidence;
  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

ComplexDocument document_of(const CellComplex& k);
Json to_json(const ComplexDocument& doc);
ComplexDocument parse_complex(const Json& j);

/// {m, cells:[{id, dim, label}], incidence:[[face ids]]}, the top face included.
struct LatticeDocument {
  int m = 0;
  std::vector<LabeledFace> cells;
  std::vector<std::vector<int>> incidence;
  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

LatticeDocument document_of(const PermutohedronFaceLattice& lattice);
Json to_json(const LatticeDocument& doc);
LatticeDocument parse_lattice(const Json& j);

/// {n, d, facets:[[ints]]}
struct CyclicDocument {
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> facets;
  friend bool operator==(const CyclicDocument&, const CyclicDocument&) = default;
};

CyclicDocument document_of(const CyclicPolytopeFacets& facets);
Json to_json(const CyclicDocument& doc);
CyclicDocument parse_cyclic(const Json& j);

/// {n, points:{id:["p/q", ...]}, faces:[{cell, vertices, origin}]}
struct GeometryDocument {
  struct Face {
    int cell = 0;
    std::vector<int> vertices;
    std::string origin;
    friend bool operator==(const Face&, const Face&) = default;
  };
  int n = 0;
  std::map<int, std::vector<std::string>> points;
  std::vector<Face> faces;
  friend bool operator==(const GeometryDocument&, const GeometryDocument&) = default;
};

GeometryDocument document_of(const GeometricComplex& g);
Json to_json(const GeometryDocument& doc);
GeometryDocument parse_geometry(const Json& j);

/// {n, lengths, label, points:[[x, y]]}
struct WitnessDocument {
  int n = 0;
  std::vector<std::string> lengths;
  std::vector<std::vector<int>> label;
  std::vector<Vec2> points;
  friend bool operator==(const WitnessDocument&, const WitnessDocument&) = default;
};

WitnessDocument document_of(const Linkage& linkage, const CyclicPartition& label, const PlanarConfiguration& config);
Json to_json(const WitnessDocument& doc);
WitnessDocument parse_witness(const Json& j);

/// {n, lengths, generic, f_vector, euler_characteristic, components, betti_mod2}
struct AnalysisDocument {
  int n = 0;
  std::vector<std::string> lengths;
  bool generic = true;
  std::vector<long long> f_vector;
  long long euler_characteristic = 0;
  int components = 0;
  std::vector<long long> betti_mod2;
  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

AnalysisDocument analyze(const CellComplex& k);
Json to_json(const AnalysisDocument& doc);
AnalysisDocument parse_analysis(const Json& j);

/// Compact form used by every writer: 2-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace cwm
