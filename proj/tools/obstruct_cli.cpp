// obstruct: command-line front end.  One JSON document per run on stdout.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "obstruct/commands.hpp"
#include "obstruct/errors.hpp"

using namespace obstruct;
using report::Json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("obstruct");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("OBSTRUCT_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Human-readable summary on stderr.
void pretty(const std::string& command, const Json& result) {
  auto& err = std::cerr;
  if (command == "census-2odd") {
    err << "  a   b   slope  status      sigma\n";
    for (const auto& row : result["rows"]) {
      err << std::setw(3) << row["a"].get<i64>() << ' ' << std::setw(3) << row["b"].get<i64>() << ' '
          << std::setw(7) << row["slope"].get<i64>() << "  " << std::setw(10) << std::left
          << row["status"].get<std::string>() << std::right << "  "
          << (row.contains("witness") ? row["witness"]["sigma"].dump() : "") << '\n';
    }
    return;
  }
  if (command == "cable") {
    err << result["knot"].get<std::string>() << '\n';
    for (const auto& s : result["slopes"]) err << "  " << cell(s["slope"]) << " -> " << cell(s["manifold"]) << '\n';
    return;
  }
  for (const auto& [key, value] : result.items()) err << key << ": " << cell(value) << '\n';
}

} // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Exact obstructions to realizing torus-knot splices by Dehn surgery"};
  app.require_subcommand(1);
  bool pretty_flag = false, timing = false;
  app.add_flag("--pretty", pretty_flag, "Also print a readable summary to stderr");
  app.add_flag("--timing", timing, "Add wall-clock seconds to the report");

  i64 a = 0, b = 0, c = 0, d = 0;
  bool with_cm = false;
  auto* splice = app.add_subcommand("splice", "Verdict pipeline for Y(T_{a,b}, T_{c,d})");
  splice->add_option("--a", a)->required();
  splice->add_option("--b", b)->required();
  splice->add_option("--c", c)->required();
  splice->add_option("--d", d)->required();
  splice->add_flag("--changemaker", with_cm, "Run the lattice obstruction when a builtin form exists");

  i64 max_product = 341;
  int jobs = 1;
  auto* census = app.add_subcommand("census-2odd", "Changemaker census for Y(T_{2,2a+1}, T_{2,2b+1}) at slope -n");
  census->add_option("--max-product", max_product, "Bound on (2a+1)(2b+1)")->capture_default_str();
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* cm = app.add_subcommand("changemaker", "Changemaker enumeration and lattice embeddings");
  cm->require_subcommand(1);
  int length = 0;
  i64 norm = 0;
  auto* cm_enum = cm->add_subcommand("enum", "List changemakers of a length and norm");
  cm_enum->add_option("--len", length)->required();
  cm_enum->add_option("--norm", norm)->required();
  std::string gram_file;
  i64 p_norm = 0;
  bool all = false, no_pruning = false;
  auto* cm_embed = cm->add_subcommand("embed", "Search for embeddings into changemaker complements");
  cm_embed->add_option("--gram", gram_file, "Gram matrix file")->required();
  cm_embed->add_option("--p", p_norm, "Changemaker norm")->required();
  cm_embed->add_flag("--all", all, "Test every changemaker instead of stopping at the first witness");
  cm_embed->add_flag("--no-pruning", no_pruning, "Disable symmetry pruning");

  i64 l = 0, m = 0, n = 0, p = 0;
  auto* em = app.add_subcommand("em", "Eudave-Munoz knot k(l,m,n,p) report");
  em->add_option("--l", l)->required();
  em->add_option("--m", m)->required();
  em->add_option("--n", n)->required();
  em->add_option("--p", p)->required();

  std::string set_name;
  i64 limit = 0;
  bool bound = false;
  int bound_k = 3;
  auto* dens = app.add_subcommand("density", "Exact density of a residue set on 1..N");
  dens->add_option("--set", set_name, "S, Sprime, Sk:k, Tk:k or all")->required();
  dens->add_option("--limit", limit)->required();
  dens->add_flag("--bound", bound, "Report the product bound");
  dens->add_option("--bound-k", bound_k, "k of the S_k bound used for S")->capture_default_str();

  std::string knot_spec;
  auto* cable = app.add_subcommand("cable", "SU(2)-cyclic slopes of an iterated torus knot");
  cable->add_option("--knot", knot_spec, "e.g. \"C(13,2);T(2,3)\"")->required();

  std::string graph_file, builtin;
  int basepoint = 0;
  auto* goer = app.add_subcommand("goeritz", "Goeritz matrix of a checkerboard graph");
  auto* gf = goer->add_option("--graph", graph_file, "Graph file");
  auto* gb = goer->add_option("--builtin", builtin, "L35-white or fig3-black(a0,a1,b0,b1)");
  gf->excludes(gb);
  goer->add_option("--basepoint", basepoint)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  Json inputs, result;
  try {
    if (*splice) {
      command = "splice";
      inputs = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"changemaker", with_cm}};
      result = commands::splice(a, b, c, d, with_cm);
    } else if (*census) {
      command = "census-2odd";
      if (max_product < 0) throw DomainError("--max-product must be nonnegative");
      inputs = {{"max_product", max_product}};
      result = commands::census_2odd(max_product, jobs);
    } else if (*cm_enum) {
      command = "changemaker enum";
      inputs = {{"len", length}, {"norm", norm}};
      result = commands::changemaker_enum(length, norm);
    } else if (*cm_embed) {
      command = "changemaker embed";
      auto g = parse_gram(read_file(gram_file));
      if (!g.is_negative_definite()) throw DomainError("Gram matrix is not negative definite");
      inputs = {{"gram", report::to_json(g)}, {"p", p_norm}, {"all", all}, {"pruning", !no_pruning}};
      result = commands::changemaker_embed(g, p_norm, all, !no_pruning);
    } else if (*em) {
      command = "em";
      inputs = {{"l", l}, {"m", m}, {"n", n}, {"p", p}};
      result = commands::em(l, m, n, p);
    } else if (*dens) {
      command = "density";
      inputs = {{"set", set_name}, {"limit", limit}, {"bound", bound}};
      result = commands::density(set_name, limit, bound, bound_k);
    } else if (*cable) {
      command = "cable";
      inputs = {{"knot", knot_spec}};
      result = commands::cable(knot_spec);
    } else if (*goer) {
      command = "goeritz";
      goeritz::CheckerboardGraph g;
      if (!builtin.empty()) {
        auto found = goeritz::builtin_diagram(builtin);
        if (!found) throw DomainError("unknown builtin diagram '" + builtin + "'");
        g = *found;
        inputs = {{"builtin", builtin}, {"basepoint", basepoint}};
      } else if (!graph_file.empty()) {
        g = goeritz::parse_graph(read_file(graph_file));
        inputs = {{"graph", graph_file}, {"basepoint", basepoint}};
      } else {
        throw DomainError("goeritz needs --graph or --builtin");
      }
      result = commands::goeritz(g, basepoint);
    }
  } catch (const ResourceError& e) {
    spdlog::error("{}", e.what());
    return kExitResource;
  } catch (const std::domain_error& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const std::range_error& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  }

  Json doc = report::envelope(command, inputs, result);
  if (timing)
    doc["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << doc.dump(2) << '\n';
  if (pretty_flag) pretty(command, result);
  spdlog::info("{} finished", command);
  return 0;
}
