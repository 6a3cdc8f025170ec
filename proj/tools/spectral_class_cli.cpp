// Command-line front end: spectra, classification, catalog instances,
// cospectral mates and exhaustive verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectral_class/classifier.hpp"
#include "spectral_class/cospectral.hpp"
#include "spectral_class/families.hpp"
#include "spectral_class/graph6.hpp"
#include "spectral_class/harness.hpp"
#include "spectral_class/json_io.hpp"

namespace sc = spectral_class;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  bool json = false;

  void emit(const sc::Json& doc) const {
    if (json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << sc::to_text(doc);
    }
  }
};

// A graph6 argument, or @path for a file of graph6 lines. "@" alone is K1.
std::vector<sc::Graph> resolve_graphs(const std::string& arg) {
  if (arg.size() > 1 && arg[0] == '@') {
    const std::string path = arg.substr(1);
    const auto in = sc::ingest_graph6(path, true);
    if (in.graphs.empty()) throw UsageError("no graph6 records in " + path);
    return in.graphs;
  }
  try {
    return {sc::from_graph6(arg)};
  } catch (const sc::Graph6Error& e) {
    throw UsageError("'" + arg + "': " + e.what());
  }
}

// A single document for one graph, an array for several. With several
// graphs a per-graph failure is recorded in place instead of aborting.
template <class F>
sc::Json per_graph(const std::string& arg, F f) {
  const auto graphs = resolve_graphs(arg);
  if (graphs.size() == 1) return f(graphs.front());
  sc::Json all = sc::Json::array();
  for (const auto& g : graphs) {
    try {
      all.push_back(f(g));
    } catch (const std::invalid_argument& e) {
      all.push_back({{"graph6", sc::to_graph6(g)}, {"error", e.what()}});
    }
  }
  return all;
}

sc::FamilyInstance parse_instance(const std::string& id, const std::vector<int>& params) {
  const auto family = sc::parse_family_name(id);
  if (!family) throw UsageError("unknown family '" + id + "' (expected G0..G12 or CP)");
  sc::FamilyInstance f{*family, params};
  try {
    sc::validate(f);
  } catch (const sc::FamilyError& e) {
    throw UsageError(e.what());
  }
  return f;
}

sc::Json instance_json(const sc::FamilyInstance& f) {
  const sc::Graph g = sc::construct(f);
  const auto spectrum = sc::symbolic_spectrum(f);
  sc::Json j;
  j["instance"] = f.to_string();
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["graph6"] = sc::to_graph6(g);
  j["spectrum"] = spectrum.to_string();
  j["eigenvalues"] = sc::rounded(spectrum.numeric());
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs with at most two adjacency eigenvalues outside {-2, 0}"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_text = false;
  auto* json_flag = app.add_flag("--json", as_json, "JSON output");
  auto* text_flag = app.add_flag("--text", as_text, "plain text output (default)");
  json_flag->excludes(text_flag);

  std::string graph_arg;

  auto* spectrum = app.add_subcommand("spectrum", "exact char poly, spectrum shape, numeric eigenvalues");
  spectrum->add_option("graph6", graph_arg, "graph6 string or @file")->required();

  bool scan_forbidden = false;
  auto* classify = app.add_subcommand("classify", "membership report");
  classify->add_option("graph6", graph_arg, "graph6 string or @file")->required();
  classify->add_flag("--scan-forbidden", scan_forbidden, "search for forbidden induced subgraphs");

  auto* family = app.add_subcommand("family", "catalog instances");
  family->require_subcommand(1);
  std::string family_id;
  std::vector<int> family_params;
  auto* make = family->add_subcommand("make", "build one instance");
  make->add_option("id", family_id, "G0..G12 or CP")->required();
  make->add_option("params", family_params, "family parameters");
  int list_n = 0;
  auto* list = family->add_subcommand("list", "all instances on n vertices");
  list->add_option("--n", list_n, "vertex count")->required()->check(CLI::Range(1, sc::kMaxCanonicalVertices));

  auto* cospectral = app.add_subcommand("cospectral", "cospectral mates and DS verdict");
  cospectral->add_option("graph6", graph_arg, "graph6 string or @file")->required();

  int max_n = 0;
  std::string input_path;
  bool long_run = false;
  auto* verify = app.add_subcommand("verify", "exhaustive classification check");
  verify->add_option("--max-n", max_n, "largest order")->check(CLI::Range(1, sc::kMaxLongEnumerationOrder));
  verify->add_option("--input", input_path, "graph6 file to check instead of enumerating");
  verify->add_flag("--long", long_run, "allow n = 8");

  int enum_n = 0;
  bool in_h_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "one graph6 line per isomorphism class");
  enumerate->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(0, sc::kMaxLongEnumerationOrder));
  enumerate->add_flag("--in-h-only", in_h_only, "keep only class members");
  enumerate->add_flag("--long", long_run, "allow n = 8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Output out{as_json};
  const int threads = sc::default_thread_count();

  try {
    if (*spectrum) {
      out.emit(per_graph(graph_arg, [](const sc::Graph& g) { return sc::spectrum_json(g); }));
    } else if (*classify) {
      out.emit(per_graph(graph_arg, [&](const sc::Graph& g) {
        sc::Json j;
        j["graph6"] = sc::to_graph6(g);
        j.update(sc::to_json(sc::membership(g, {scan_forbidden})));
        return j;
      }));
    } else if (*make) {
      const auto f = parse_instance(family_id, family_params);
      if (sc::vertex_count(f) > sc::kMaxVertices)
        throw UsageError(f.to_string() + " has more than " + std::to_string(sc::kMaxVertices) + " vertices");
      out.emit(instance_json(f));
    } else if (*list) {
      sc::Json all = sc::Json::array();
      for (const auto& f : sc::catalog_instances(list_n)) all.push_back(instance_json(f));
      out.emit(all);
    } else if (*cospectral) {
      out.emit(per_graph(graph_arg, [](const sc::Graph& g) {
        sc::Json j;
        j["graph6"] = sc::to_graph6(g);
        j.update(sc::to_json(sc::ds_verdict(g)));
        return j;
      }));
    } else if (*verify) {
      if (input_path.empty() == (max_n == 0))
        throw UsageError("verify needs exactly one of --max-n or --input");
      if (max_n > sc::kMaxEnumerationOrder && !long_run)
        throw UsageError("--max-n " + std::to_string(max_n) + " needs --long");
      sc::VerificationSummary summary;
      if (!input_path.empty()) {
        const auto in = sc::ingest_graph6(input_path);
        for (const auto& issue : in.errors) std::cerr << issue.message << "\n";
        if (!in.errors.empty()) return kExitUsage;
        summary = sc::verify_graphs(in.graphs);
      } else {
        summary = sc::verify_classification(max_n, {long_run, threads});
      }
      out.emit(sc::to_json(summary));
      return summary.total_failures() > 0 ? kExitVerifyFailed : kExitOk;
    } else if (*enumerate) {
      const auto graphs = sc::enumerate_nonisomorphic(enum_n, {long_run, in_h_only, threads});
      if (as_json) {
        sc::Json all = sc::Json::array();
        for (const auto& g : graphs) all.push_back(sc::to_graph6(g));
        out.emit(all);
      } else {
        for (const auto& g : graphs) std::cout << sc::to_graph6(g) << "\n";
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
