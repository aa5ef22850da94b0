// cwm: command-line front end for the linkage moduli-space toolkit.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cwm/complex.hpp"
#include "cwm/error.hpp"
#include "cwm/export.hpp"
#include "cwm/polytopes.hpp"
#include "cwm/realization.hpp"
#include "cwm/verify.hpp"
#include "cwm/witness.hpp"

namespace {

constexpr int kDeskScaleLimit = 9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lengths;
  bool json = false;
  bool force = false;
  bool allow_large = false;
  int dim = -1;
  std::string out;
  std::string label;
  std::string svg;
  std::string level = "fast";
  bool inject_fault = false;
  int m = 0;
  int n = 0;
  int d = 0;
};

template <typename T>
std::string tuple_text(const std::vector<T>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << ')';
  return s.str();
}

cwm::CellComplex build(const Options& o) {
  auto linkage = cwm::parse_lengths(o.lengths);
  if (linkage.size() > kDeskScaleLimit && !o.allow_large)
    throw cwm::DomainError("n = " + std::to_string(linkage.size()) + " exceeds the desk-scale limit of " +
                           std::to_string(kDeskScaleLimit) + "; pass --allow-large");
  return cwm::build_complex(linkage, {.allow_nongeneric = o.force});
}

std::string extension_of(const std::string& path) { return std::filesystem::path(path).extension().string(); }

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cwm::DomainError("cannot write " + path);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  open_output(path) << text;
}

int cmd_analyze(const Options& o) {
  auto k = build(o);
  auto doc = cwm::analyze(k);
  if (o.json) {
    std::cout << cwm::dump(cwm::to_json(doc));
    return 0;
  }
  std::cout << "n = " << doc.n << '\n'
            << "lengths = " << k.linkage().to_string() << '\n'
            << "generic = " << (doc.generic ? "yes" : "no (forced)") << '\n'
            << "f-vector = " << tuple_text(doc.f_vector) << '\n'
            << "euler characteristic = " << doc.euler_characteristic << '\n'
            << "components = " << doc.components << '\n'
            << "betti mod 2 = " << tuple_text(doc.betti_mod2) << '\n';
  return 0;
}

int cmd_homology(const Options& o) {
  auto k = build(o);
  auto doc = cwm::analyze(k);
  if (o.json) {
    std::cout << cwm::dump(cwm::to_json(doc));
    return 0;
  }
  std::cout << "betti mod 2 = " << tuple_text(doc.betti_mod2) << '\n'
            << "euler characteristic = " << doc.euler_characteristic << '\n'
            << "components = " << doc.components << '\n';
  return 0;
}

int cmd_cells(const Options& o) {
  auto k = build(o);
  if (o.dim < 0 || o.dim > k.top_dimension())
    throw UsageError("--dim must lie in [0, " + std::to_string(k.top_dimension()) + "]");
  for (const auto& c : k.cells_of_dim(o.dim)) std::cout << c.label.to_string() << '\n';
  return 0;
}

int cmd_surgery(const Options& o) {
  std::string ext;
  if (!o.out.empty()) {
    ext = extension_of(o.out);
    if (ext != ".off" && ext != ".json") throw UsageError("--out must end in .off or .json");
  }
  auto k = build(o);
  if (ext == ".off" && k.ground_size() != 5) throw cwm::DomainError("OFF export needs n = 5; JSON required");
  auto g = cwm::surgery(k);
  const int top = k.top_dimension();
  std::vector<long long> kept, removed, patched;
  for (int d = 0; d <= top; ++d) {
    kept.push_back(g.count(cwm::FaceOrigin::kept, d));
    removed.push_back(g.removed_count(d));
    patched.push_back(g.count(cwm::FaceOrigin::patched, d));
  }
  std::cout << "kept " << kept[top] << ", removed " << removed[top] << ", patched " << patched[top] << '\n'
            << "by dimension: kept " << tuple_text(kept) << ", removed " << tuple_text(removed) << ", patched "
            << tuple_text(patched) << '\n';
  if (ext == ".off") {
    auto out = open_output(o.out);
    cwm::export_off(g, out);
  } else if (ext == ".json") {
    write_text(o.out, cwm::dump(cwm::to_json(cwm::document_of(g))));
  }
  if (!ext.empty()) std::cout << "wrote " << o.out << '\n';
  return 0;
}

int cmd_witness(const Options& o) {
  auto linkage = cwm::parse_lengths(o.lengths);
  auto label = cwm::CyclicPartition::parse(o.label, linkage.size());
  auto config = cwm::witness_of(label, linkage);
  std::cout << cwm::dump(cwm::to_json(cwm::document_of(linkage, label, config)));
  if (!o.svg.empty()) {
    auto out = open_output(o.svg);
    cwm::write_svg(config, out);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  auto k = build(o);
  if (o.inject_fault) {
    const int facet = k.size() - 1;
    k = k.with_incidence_removed(facet, k.faces(facet).front());
  }
  auto level = o.level == "full" ? cwm::VerifyLevel::full : cwm::VerifyLevel::fast;
  auto results = cwm::run_checks(k, level);
  bool ok = true;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << '\n';
    } else {
      std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
      ok = false;
    }
  }
  std::cout << (ok ? "verify: pass" : "verify: fail") << '\n';
  return ok ? 0 : 1;
}

int cmd_export(const Options& o) {
  if (!o.out.empty() && extension_of(o.out) != ".json") throw UsageError("--out must end in .json");
  auto k = build(o);
  write_text(o.out, cwm::dump(cwm::to_json(cwm::document_of(k))));
  return 0;
}

int cmd_permutohedron(const Options& o) {
  std::cout << cwm::dump(cwm::to_json(cwm::document_of(cwm::permutohedron_lattice(o.m))));
  return 0;
}

int cmd_cyclic(const Options& o) {
  std::cout << cwm::dump(cwm::to_json(cwm::document_of(cwm::cyclic_facets(o.n, o.d))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell structure of planar polygon linkage moduli spaces"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  auto add_lengths = [&](CLI::App* sub) {
    sub->add_option("--lengths", o.lengths, "Edge lengths, comma-separated (integers, p/q or decimals)")->required();
  };
  auto add_build_flags = [&](CLI::App* sub) {
    add_lengths(sub);
    sub->add_flag("--force", o.force, "Build even if the linkage is not generic");
    sub->add_flag("--allow-large", o.allow_large, "Allow n above the desk-scale limit");
  };

  auto* analyze = app.add_subcommand("analyze", "f-vector, Euler characteristic, components, mod-2 Betti numbers");
  add_build_flags(analyze);
  analyze->add_flag("--json", o.json, "Machine-readable output");
  analyze->callback([&] { action = cmd_analyze; });

  auto* cells = app.add_subcommand("cells", "List cell labels of one dimension");
  add_build_flags(cells);
  cells->add_option("--dim", o.dim, "Cell dimension")->required();
  cells->callback([&] { action = cmd_cells; });

  auto* homology = app.add_subcommand("homology", "Mod-2 homology");
  add_build_flags(homology);
  homology->add_flag("--json", o.json, "Machine-readable output");
  homology->callback([&] { action = cmd_homology; });

  auto* surgery = app.add_subcommand("surgery", "Realize the dual complex on the permutohedron");
  add_build_flags(surgery);
  surgery->add_option("--out", o.out, "Output file (.off for n = 5, or .json)");
  surgery->callback([&] { action = cmd_surgery; });

  auto* witness = app.add_subcommand("witness", "Planar configuration realizing a cell label");
  add_lengths(witness);
  witness->add_option("--label", o.label, "Cell label such as 1|2|3|4,5")->required();
  witness->add_option("--svg", o.svg, "Also write an SVG drawing");
  witness->callback([&] { action = cmd_witness; });

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  add_build_flags(verify);
  verify->add_option("--level", o.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_flag("--inject-fault", o.inject_fault)->group("");
  verify->callback([&] { action = cmd_verify; });

  auto* polytope = app.add_subcommand("polytope", "Reference polytopes as JSON");
  polytope->require_subcommand(1);
  auto* perm = polytope->add_subcommand("permutohedron", "Face lattice of the permutohedron");
  perm->add_option("--m", o.m, "Ground size")->required()->check(CLI::Range(1, 8));
  perm->callback([&] { action = cmd_permutohedron; });
  auto* cyclic = polytope->add_subcommand("cyclic", "Facets of the cyclic polytope C(n, d)");
  cyclic->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(3, 32));
  cyclic->add_option("--d", o.d, "Dimension")->required()->check(CLI::Range(2, 31));
  cyclic->callback([&] { action = cmd_cyclic; });

  auto* exp = app.add_subcommand("export", "Complex as JSON");
  add_build_flags(exp);
  exp->add_option("--out", o.out, "Output .json file (default: stdout)");
  exp->callback([&] { action = cmd_export; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const cwm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cwm::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
