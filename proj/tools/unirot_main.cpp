// unirot: exact rotation numbers and curvature invariants of unimodular
// lattice cycles.
//
// Exit codes: 0 success, 1 verification campaign failure, 2 input
// validation failure, 3 internal invariant violation, 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "unirot/generation.hpp"
#include "unirot/higher_dim.hpp"
#include "unirot/invariants.hpp"
#include "unirot/json_io.hpp"
#include "unirot/reduction.hpp"
#include "unirot/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitCampaignFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw unirot::ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unirot::UnimodularCycle load_cycle(const std::string& path) {
  return unirot::cycle_from_json(unirot::parse_json(slurp(path)));
}

int cmd_invariants(const std::string& input, bool as_json) {
  const unirot::UnimodularCycle cycle = load_cycle(input);
  const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(cycle.size());
  std::vector<unirot::i64> mu_windows, nu_edges;
  for (std::ptrdiff_t i = 0; i < d; ++i) {
    mu_windows.push_back(
        unirot::mu_local(cycle.cyclic(i - 1), cycle.cyclic(i), cycle.cyclic(i + 1)));
    nu_edges.push_back(unirot::det2(cycle.cyclic(i), cycle.cyclic(i + 1)));
  }
  const unirot::i64 mu = unirot::mu_global(cycle);
  const unirot::i64 nuv = unirot::nu_global(cycle);
  const unirot::Twelfths twelfths = unirot::rot_formula_twelfths(cycle);
  const unirot::i64 rot = unirot::rot_formula(cycle);
  if (as_json) {
    nlohmann::json out{{"d", cycle.size()},   {"mu_windows", mu_windows},
                       {"nu_edges", nu_edges}, {"mu", mu},
                       {"nu", nuv},            {"rot", rot},
                       {"rot_twelfths", twelfths.num}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "d: " << cycle.size() << "\n";
    std::cout << "window mu:";
    for (const auto m : mu_windows) std::cout << " " << m;
    std::cout << "\nedge nu:";
    for (const auto s : nu_edges) std::cout << " " << s;
    std::cout << "\nmu(L): " << mu << "\nnu(L): " << nuv << "\n";
    std::cout << "rot: " << rot << " (= " << unirot::to_string(twelfths) << ")\n";
  }
  return kExitSuccess;
}

int cmd_rot(const std::string& input, const std::string& method, bool as_json) {
  const unirot::UnimodularCycle cycle = load_cycle(input);
  nlohmann::json out;
  if (method == "winding" || method == "all")
    out["winding"] = unirot::rot_winding_exact(cycle);
  if (method == "formula" || method == "all") {
    out["formula"] = unirot::rot_formula(cycle);
    out["formula_twelfths"] = unirot::rot_formula_twelfths(cycle).num;
  }
  if (method == "reduce" || method == "all")
    out["reduction"] = unirot::rot_by_reduction(cycle).rot;

  bool mismatch = false;
  if (method == "all") {
    const unirot::i64 w = out["winding"].get<unirot::i64>();
    mismatch = w != out["formula"].get<unirot::i64>() || w != out["reduction"].get<unirot::i64>();
    out["agreement"] = !mismatch;
    if (mismatch) out["cycle"] = unirot::to_json(cycle);
  }
  if (as_json) {
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [key, value] : out.items()) std::cout << key << ": " << value << "\n";
  }
  if (mismatch) {
    std::cerr << "error: rotation methods disagree on " << unirot::to_json(cycle).dump()
              << "\n";
    return kExitInvariant;
  }
  return kExitSuccess;
}

int cmd_reduce(const std::string& input) {
  const unirot::UnimodularCycle cycle = load_cycle(input);
  const unirot::ReductionResult result = unirot::rot_by_reduction(cycle);
  nlohmann::json out = unirot::to_json(result.trace);
  out["rot"] = result.rot;
  std::cout << out.dump() << "\n";
  return kExitSuccess;
}

int cmd_generate(std::uint64_t seed, std::size_t length, unirot::i64 shear_bound, bool fan) {
  unirot::GeneratorParams params;
  params.seed = seed;
  params.target_length = length;
  params.shear_bound = shear_bound;
  params.fan = fan;
  std::cout << unirot::to_json(unirot::random_cycle(params)).dump() << "\n";
  return kExitSuccess;
}

int cmd_reconstruct(const std::string& input) {
  const unirot::CurvatureData data =
      unirot::curvature_from_json(unirot::parse_json(slurp(input)));
  std::cout << unirot::to_json(unirot::reconstruct(data)).dump() << "\n";
  return kExitSuccess;
}

int cmd_degree(const std::string& input) {
  const unirot::Triangulation t =
      unirot::triangulation_from_json(unirot::parse_json(slurp(input)));
  std::cout << unirot::degree(t) << "\n";
  return kExitSuccess;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, std::size_t max_length,
               unirot::i64 shear_bound) {
  unirot::CampaignParams params;
  params.seed = seed;
  params.trials = trials;
  params.max_length = max_length;
  params.shear_bound = shear_bound;
  const unirot::CampaignReport report = unirot::run_campaign(params);
  std::cout << unirot::to_json(report).dump() << "\n";
  return report.failures == 0 ? kExitSuccess : kExitCampaignFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rotation numbers and discrete curvature invariants of "
               "unimodular lattice cycles"};
  app.require_subcommand(1);

  std::string input = "-";
  bool as_json = false;
  std::string method = "all";
  std::uint64_t seed = 0;
  std::size_t length = 12;
  std::size_t trials = 0;
  std::size_t max_length = 100;
  unirot::i64 shear_bound = 4;
  bool fan = false;

  auto* invariants = app.add_subcommand(
      "invariants", "per-window mu, per-edge nu, their totals and the rotation number");
  invariants->add_option("--input", input, "cycle JSON file, or - for stdin");
  invariants->add_flag("--json", as_json, "machine-readable output");

  auto* rot = app.add_subcommand("rot", "rotation number of a cycle");
  rot->add_option("--input", input, "cycle JSON file, or - for stdin");
  rot->add_option("--method", method, "formula, reduce, winding or all")
      ->check(CLI::IsMember({"formula", "reduce", "winding", "all"}));
  rot->add_flag("--json", as_json, "machine-readable output");

  auto* reduce = app.add_subcommand("reduce", "reduction trace of a cycle as JSON");
  reduce->add_option("--input", input, "cycle JSON file, or - for stdin");

  auto* generate = app.add_subcommand("generate", "emit a random valid cycle as JSON");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--length", length, "number of vectors")->check(CLI::Range(2u, 1000000u));
  generate->add_option("--shear-bound", shear_bound, "backtrack coefficient bound")
      ->check(CLI::Range(0, 1000000));
  generate->add_flag("--fan", fan, "convex-fan mode (all edge signs +1, winding 1)");

  auto* reconstruct =
      app.add_subcommand("reconstruct", "rebuild a sequence from curvature data JSON");
  reconstruct->add_option("--input", input, "curvature JSON file, or - for stdin");

  auto* degree = app.add_subcommand("degree", "degree of a triangulated unimodular map");
  degree->add_option("--input", input, "triangulation JSON file, or - for stdin");

  auto* verify = app.add_subcommand("verify", "randomized verification campaign");
  verify->add_option("--seed", seed, "campaign seed");
  verify->add_option("--trials", trials, "number of random cycles")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  verify->add_option("--max-length", max_length, "cycle lengths drawn from [2, N]")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  verify->add_option("--shear-bound", shear_bound, "backtrack coefficient bound")
      ->check(CLI::Range(0, 1000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(invariants)) return cmd_invariants(input, as_json);
    if (app.got_subcommand(rot)) return cmd_rot(input, method, as_json);
    if (app.got_subcommand(reduce)) return cmd_reduce(input);
    if (app.got_subcommand(generate)) return cmd_generate(seed, length, shear_bound, fan);
    if (app.got_subcommand(reconstruct)) return cmd_reconstruct(input);
    if (app.got_subcommand(degree)) return cmd_degree(input);
    if (app.got_subcommand(verify)) return cmd_verify(seed, trials, max_length, shear_bound);
  } catch (const unirot::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const unirot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
