// zdglab: command-line front end for the ring laboratory.
//
// Subcommands: analyze, graph, clique, verify, search-ortho, catalog.
// Exit codes: 0 success, 1 check failure, 2 usage/parse error,
// 3 resource bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdg/bilinear.hpp"
#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/json_io.hpp"
#include "zdg/presentation.hpp"
#include "zdg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts either a path to a zdglab-ring-v1 file or an inline
// presentation string.
zdg::FiniteAlgebra load_ring(const std::string& input) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    nlohmann::json j;
    in >> j;
    return zdg::ring_from_json(j);
  }
  return zdg::compile_presentation(input);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

void print_invariants(const zdg::FiniteAlgebra& r) {
  const auto& inv = r.invariants();
  std::cout << "p = " << r.prime().p << ", dim_Fp = " << r.dim() << "\n";
  std::cout << "local: " << (inv.is_local ? "yes" : "no") << "\n";
  if (!inv.is_local) {
    std::cout << "length over F_p: " << inv.length << "\n";
    auto factors = zdg::local_decomposition(r);
    std::cout << "local factors: " << factors.size() << " (dims:";
    for (const auto& f : factors) std::cout << " " << f.dim();
    std::cout << ")\n";
    return;
  }
  std::cout << "residue degree: " << inv.residue_degree << "\n";
  std::cout << "length: " << inv.length << "\n";
  std::cout << "hilbert: (";
  for (std::size_t i = 0; i < inv.hilbert.size(); ++i)
    std::cout << (i ? "," : "") << inv.hilbert[i];
  std::cout << ")\n";
  std::cout << "embdim: " << inv.embdim << ", socle_dim: " << inv.socle_dim
            << ", gorenstein: " << (inv.is_gorenstein ? "yes" : "no")
            << ", nilpotency index: " << inv.nilpotency_index << "\n";
  if (inv.length == 5)
    std::cout << "length-5 case: " << zdg::to_string(zdg::classify_length5(inv)) << "\n";
  try {
    zdg::PhiConstruction phi = zdg::PhiConstruction::build(r);
    const zdg::Matrix& g = phi.space().gram();
    std::cout << "bilinear form on m/m^2 (dim " << g.rows() << "), Gram:\n";
    for (std::size_t i = 0; i < g.rows(); ++i) {
      std::cout << " ";
      for (std::size_t j = 0; j < g.cols(); ++j) std::cout << " " << g.at(i, j);
      std::cout << "\n";
    }
    std::cout << "radical dimension: " << phi.space().radical().dim() << "\n";
  } catch (const zdg::PhiConstructionError& e) {
    std::cout << "bilinear form: not applicable (" << zdg::to_string(e.code) << ")\n";
  }
}

int cmd_analyze(const std::string& input, const std::string& out_path) {
  zdg::FiniteAlgebra r = load_ring(input);
  print_invariants(r);
  if (!out_path.empty())
    write_file(out_path, zdg::to_canonical_string(zdg::ring_to_json(r)));
  return kExitOk;
}

int cmd_graph(const std::string& input, const std::string& format,
              const std::string& out_path, bool with_clique) {
  zdg::FiniteAlgebra r = load_ring(input);
  if (r.element_count() > zdg::max_enumeration_bound())
    throw BoundExceeded("ring exceeds the enumeration bound (set ZDGLAB_MAX_ELEMS)");
  zdg::CompressedGraph g = zdg::build_gamma_e(r);
  if (g.vertex_count() == 0)
    std::cerr << "warning: graph is empty (no nonzero zero-divisors)\n";
  std::string text;
  if (format == "dot") {
    text = zdg::export_dot(g, r);
  } else if (format == "json") {
    zdg::GraphReport rep;
    rep.vertex_count = g.vertex_count();
    rep.edge_count = g.edge_count();
    if (with_clique) rep = zdg::clique_number(g);
    text = zdg::to_canonical_string(zdg::graph_to_json(g, r, rep));
  } else {
    std::cerr << "unknown format: " << format << "\n";
    return kExitUsage;
  }
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  if (with_clique && format == "dot") {
    zdg::GraphReport rep = zdg::clique_number(g);
    std::cout << "clique number: " << rep.clique_number << "\n";
  }
  return kExitOk;
}

int cmd_clique(const std::string& input) {
  zdg::FiniteAlgebra r = load_ring(input);
  if (r.element_count() > zdg::max_enumeration_bound())
    throw BoundExceeded("ring exceeds the enumeration bound (set ZDGLAB_MAX_ELEMS)");
  zdg::GraphReport rep = zdg::clique_number(zdg::build_gamma_e(r));
  std::cout << "vertices: " << rep.vertex_count << ", edges: " << rep.edge_count
            << ", clique number: " << rep.clique_number << "\nwitness:";
  for (std::size_t v : rep.witness_clique) std::cout << " " << v;
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& names, const std::string& out_path) {
  std::vector<zdg::Suite> suites;
  if (names.empty()) {
    suites = zdg::all_suites();
  } else {
    for (const auto& n : names) {
      auto s = zdg::suite_from_string(n);
      if (!s) {
        std::cerr << "unknown suite: " << n << "\n";
        return kExitUsage;
      }
      suites.push_back(*s);
    }
  }
  std::vector<zdg::SuiteResult> results;
  bool all_pass = true;
  for (zdg::Suite s : suites) {
    zdg::SuiteResult res = zdg::run_suite(s);
    for (const auto& item : res.items)
      std::cout << (item.pass ? "PASS" : "FAIL") << " [" << zdg::to_string(s) << "] "
                << item.id << " -- " << item.citation
                << (item.details.empty() ? "" : " (" + item.details + ")") << "\n";
    std::cout << "suite " << zdg::to_string(s) << ": "
              << (res.passed() ? "PASS" : "FAIL") << "\n";
    all_pass = all_pass && res.passed();
    results.push_back(std::move(res));
  }
  if (!out_path.empty())
    write_file(out_path, zdg::to_canonical_string(zdg::report_to_json(results)));
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_search_ortho(zdg::u32 p, std::size_t dim, std::size_t size, bool nonparallel,
                     std::uint64_t budget) {
  std::vector<zdg::Matrix> forms;
  if (p == 2)
    forms = zdg::all_nondegenerate_symmetric_grams(zdg::Prime(p), dim);
  else
    forms = zdg::congruence_representative_grams(zdg::Prime(p), dim);
  bool any_budget_hit = false;
  for (std::size_t fi = 0; fi < forms.size(); ++fi) {
    zdg::BilinearSpace space(forms[fi]);
    auto res = zdg::search_orthogonal_sets(space, size, nonparallel, budget);
    std::cout << "form " << fi << ": ";
    if (!res.witnesses.empty()) {
      std::cout << res.witnesses.size() << " witness set(s); first:";
      for (const auto& v : res.witnesses.front()) {
        std::cout << " (";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")";
      }
      std::cout << "\n";
    } else if (res.budget_exceeded) {
      std::cout << "budget exceeded after " << res.candidates_checked
                << " candidates; existence undecided\n";
      any_budget_hit = true;
    } else {
      std::cout << "none (exhaustive, " << res.candidates_checked << " candidates)\n";
    }
  }
  return any_budget_hit ? kExitBound : kExitOk;
}

int cmd_catalog(bool list, const std::string& emit, zdg::u32 p, std::size_t n,
                const std::string& out_path) {
  if (list) {
    for (zdg::Family f : zdg::all_families()) {
      zdg::FamilySpec spec{f, zdg::Prime(2), f == zdg::Family::CHAIN ? std::size_t{5}
                                                                    : std::size_t{0}};
      std::string pres = zdg::family_presentation(spec);
      std::cout << zdg::to_string(f) << "\t"
                << (pres.empty() ? "(construction)" : pres) << "\n";
    }
    return kExitOk;
  }
  auto fam = zdg::family_from_string(emit);
  if (!fam) {
    std::cerr << "unknown family: " << emit << "\n";
    return kExitUsage;
  }
  zdg::CatalogRing r = zdg::generate(zdg::FamilySpec{*fam, zdg::Prime(p), n});
  std::string text =
      zdg::to_canonical_string(zdg::ring_to_json(r.ring, r.presentation));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zdglab: zero-divisor graphs and bilinear forms of finite local rings"};
  app.require_subcommand(1);

  std::string input, out_path, format = "dot";
  bool with_clique = false;
  std::vector<std::string> suite_names;
  zdg::u32 p = 3;
  std::size_t dim = 3, size = 4, chain_n = 0;
  bool nonparallel = false, list = false;
  std::uint64_t budget = 1'000'000'000ull;
  std::string emit;

  auto* analyze = app.add_subcommand("analyze", "print ring invariants");
  analyze->add_option("input", input, "ring JSON file or presentation string")->required();
  analyze->add_option("--out", out_path, "write ring JSON here");

  auto* graph = app.add_subcommand("graph", "export the compressed zero-divisor graph");
  graph->add_option("input", input)->required();
  graph->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out_path);
  graph->add_flag("--clique", with_clique, "also compute the clique number");
  graph->add_flag("--compressed", [](std::int64_t) {},
                  "accepted for symmetry; the graph is always compressed");

  auto* clique = app.add_subcommand("clique", "exact maximum clique of Gamma_E");
  clique->add_option("input", input)->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suites", suite_names,
                     "suite names (default: all): LEN4 LEN5 PROP_PHI LEMMA_ORTHO "
                     "LEMMA_SOCLE ORACLE_EQUIV HILBERT TRIVEXT_GROWTH");
  verify->add_option("--out", out_path, "write a zdglab-report-v1 JSON here");

  auto* search = app.add_subcommand("search-ortho", "search for orthogonal vector sets");
  search->add_option("--p", p, "field characteristic")->required();
  search->add_option("--dim", dim, "space dimension")->required();
  search->add_option("--size", size, "set size sought")->required();
  search->add_flag("--nonparallel", nonparallel, "require pairwise non-parallel vectors");
  search->add_option("--budget", budget, "candidate budget");

  auto* catalog = app.add_subcommand("catalog", "list or emit catalog rings");
  catalog->add_flag("--list", list, "print the family table");
  catalog->add_option("--emit", emit, "family name to emit");
  catalog->add_option("--p", p, "field characteristic");
  catalog->add_option("--n", chain_n, "chain length (CHAIN only)");
  catalog->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, out_path);
    if (graph->parsed()) return cmd_graph(input, format, out_path, with_clique);
    if (clique->parsed()) return cmd_clique(input);
    if (verify->parsed()) return cmd_verify(suite_names, out_path);
    if (search->parsed()) return cmd_search_ortho(p, dim, size, nonparallel, budget);
    if (catalog->parsed()) {
      if (!list && emit.empty()) {
        std::cerr << "catalog requires --list or --emit\n";
        return kExitUsage;
      }
      std::size_t n = chain_n;
      if (emit == "CHAIN" && n == 0) n = 5;
      return cmd_catalog(list, emit, p, n, out_path);
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const zdg::ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
