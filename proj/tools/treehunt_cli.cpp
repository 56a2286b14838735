// treehunt: generate graphs, color them, and hunt for induced T(t,2,1).
//
// Exit status: 0 success/found, 1 not_found/step_failed/invalid, 2 bad input
// or premise violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treehunt/treehunt.hpp"

using namespace treehunt;
using nlohmann::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  try {
    return parse_graph_file(read_file(path));
  } catch (const GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + output + "'");
  out << text;
}

TreeSpec parse_spec(const std::string& text) {
  TreeSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int d = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      spec.level_degrees.push_back(d);
    } catch (const std::exception&) {
      throw InputError("bad --spec entry '" + item + "'");
    }
  }
  if (!spec.valid()) throw InputError("--spec needs positive degrees, e.g. 2,1 or 3,2,1");
  return spec;
}

json one_based_map(const Embedding& e) {
  auto arr = json::array();
  for (std::size_t i = 0; i < e.map.size(); ++i) arr.push_back({static_cast<int>(i) + 1, e.map[i] + 1});
  return arr;
}

int run_color(const std::string& input, std::uint64_t budget) {
  const Graph g = load_graph(input);
  const auto res = chromatic_number(g, budget);
  json j;
  j["n"] = g.order();
  j["lower"] = res.lower;
  j["upper"] = res.upper;
  j["exact"] = res.exact;
  if (res.exact) j["chromatic_number"] = res.upper;
  j["coloring"] = res.witness.assignment;
  j["search_nodes"] = res.search_nodes;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_oracle(const std::string& spec_text, const std::string& input) {
  const TreeSpec spec = parse_spec(spec_text);
  const Graph g = load_graph(input);
  const auto e = find_induced_copy(g, spec);
  json j;
  j["pattern"] = spec.name();
  j["found"] = e.has_value();
  if (e) j["mapping"] = one_based_map(*e);
  std::cout << j.dump(2) << "\n";
  return e ? 0 : 1;
}

int run_hunt(int t, const std::string& input, bool no_fallback, int jobs, const std::string& output) {
  if (t < 1) throw InputError("--t must be at least 1");
  const Graph g = load_graph(input);
  HuntOptions opts;
  opts.oracle_fallback = !no_fallback;
  opts.jobs = jobs;
  const HuntOutcome out = hunt(g, t, opts);
  emit(serialize_certificate(out, t), output);
  switch (out.status) {
    case HuntStatus::found: return 0;
    case HuntStatus::premise_violated: return 2;
    default: return 1;
  }
}

int run_verify(const std::string& cert_path, const std::string& input) {
  const Graph g = load_graph(input);
  ParsedCertificate pc;
  try {
    pc = parse_certificate(read_file(cert_path));
  } catch (const GraphError& e) {
    throw InputError(cert_path + ": " + e.what());
  }
  const TreeSpec spec = TreeSpec::spider(pc.t);
  if (pc.outcome.status != HuntStatus::found || !pc.outcome.certificate) {
    std::cout << "invalid: certificate has status " << to_string(pc.outcome.status) << " and no mapping\n";
    return 1;
  }
  if (!verify_embedding(g, spec, *pc.outcome.certificate)) {
    std::cout << "invalid: mapping is not an induced " << spec.name() << "\n";
    return 1;
  }
  std::cout << "valid: induced " << spec.name() << " rooted at " << pc.outcome.certificate->map[0] + 1 << "\n";
  return 0;
}

int run_stats(const std::string& input) {
  const Graph g = load_graph(input);
  json j;
  j["n"] = g.order();
  j["m"] = g.size();
  j["triangle_free"] = is_triangle_free(g);
  try {
    const auto info = eccentricity_and_radius(g);
    j["radius"] = info.radius;
    j["center"] = info.center + 1;
  } catch (const GraphError&) {
    j["radius"] = nullptr;
    j["center"] = nullptr;
  }
  std::map<std::size_t, int> hist;
  for (Vertex v = 0; v < g.order(); ++v) ++hist[g.degree(v)];
  json h = json::object();
  for (auto [d, c] : hist) h[std::to_string(d)] = c;
  j["degree_histogram"] = h;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced T(t,2,1) search in triangle-free radius-two graphs"};
  app.require_subcommand(1);

  std::string output;
  auto* gen = app.add_subcommand("generate", "Write a generated graph in DIMACS edge format");
  gen->require_subcommand(1);
  gen->add_option("--output,-o", output, "Output file (default stdout)");
  int cyc_n = 0;
  auto* gen_cycle = gen->add_subcommand("cycle", "Cycle C_n");
  gen_cycle->add_option("--n", cyc_n, "Length")->required();
  int myc_k = 0;
  auto* gen_myc = gen->add_subcommand("mycielski", "k-fold Mycielskian of C5");
  gen_myc->add_option("--k", myc_k, "Iterations")->required();
  int kn_n = 0;
  int kn_k = 0;
  auto* gen_kn = gen->add_subcommand("kneser", "Kneser graph K(n,k)");
  gen_kn->add_option("--n", kn_n, "Ground set size")->required();
  gen_kn->add_option("--k", kn_k, "Subset size")->required();
  int rnd_n = 0;
  std::size_t rnd_edges = 0;
  std::uint64_t rnd_seed = 0;
  auto* gen_rnd = gen->add_subcommand("random", "Seeded greedy triangle-free graph");
  gen_rnd->add_option("--n", rnd_n, "Vertices")->required();
  gen_rnd->add_option("--edges", rnd_edges, "Target edge count")->required();
  gen_rnd->add_option("--seed", rnd_seed, "PRNG seed")->required();
  for (auto* family : {gen_cycle, gen_myc, gen_kn, gen_rnd}) family->fallthrough();

  std::string input;
  std::uint64_t budget = kDefaultNodeBudget;
  auto* color = app.add_subcommand("color", "Exact chromatic number");
  color->add_option("--input,-i", input, "Graph file")->required();
  color->add_option("--budget", budget, "Search node budget");

  std::string spec_text;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive induced tree search");
  oracle->add_option("--spec", spec_text, "Level degrees, e.g. 2,1 or 3,2,1")->required();
  oracle->add_option("--input,-i", input, "Graph file")->required();

  int t = 0;
  bool no_fallback = false;
  int jobs = 1;
  std::string cert_out;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for an induced T(t,2,1)");
  hunt_cmd->add_option("--t", t, "Number of branches")->required();
  hunt_cmd->add_option("--input,-i", input, "Graph file")->required();
  hunt_cmd->add_flag("--no-fallback", no_fallback, "Do not fall back to exhaustive search");
  hunt_cmd->add_option("--jobs", jobs, "Centers explored in parallel")->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--output,-o", cert_out, "Certificate file (default stdout)");

  std::string cert_in;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("--cert", cert_in, "Certificate JSON")->required();
  verify->add_option("--input,-i", input, "Graph file")->required();

  auto* stats = app.add_subcommand("stats", "Basic graph statistics");
  stats->add_option("--input,-i", input, "Graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (*gen) {
      Graph g;
      if (*gen_cycle) g = cycle(cyc_n);
      else if (*gen_myc) g = iterated_mycielski(myc_k);
      else if (*gen_kn) g = kneser(kn_n, kn_k);
      else g = random_triangle_free(rnd_n, rnd_edges, rnd_seed);
      emit(write_graph_file(g), output);
      return 0;
    }
    if (*color) return run_color(input, budget);
    if (*oracle) return run_oracle(spec_text, input);
    if (*hunt_cmd) return run_hunt(t, input, no_fallback, jobs, cert_out);
    if (*verify) return run_verify(cert_in, input);
    if (*stats) return run_stats(input);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
