#include "unirot/verify.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "unirot/generation.hpp"
#include "unirot/json_io.hpp"
#include "unirot/reduction.hpp"
#include "unirot/rng.hpp"

namespace unirot {

namespace {

constexpr std::size_t kMaxFailureSamples = 16;

void check_trial(const UnimodularCycle& cycle) {
  const i64 winding = rot_winding_exact(cycle);
  const i64 formula = rot_formula(cycle);
  const ReductionResult reduced = rot_by_reduction(cycle);
  if (winding != formula || winding != reduced.rot)
    throw InternalInconsistencyError(
        "rotation methods disagree: winding " + std::to_string(winding) + ", formula " +
        std::to_string(formula) + ", reduction " + std::to_string(reduced.rot));
  replay_trace_checked(cycle, reduced.trace);
  const double angle = rot_angle_float(cycle);
  if (std::abs(angle - static_cast<double>(winding)) >= 1e-6)
    throw InternalInconsistencyError("angle sum " + std::to_string(angle) +
                                     " too far from exact value " + std::to_string(winding));
}

}  // namespace

CampaignReport run_campaign(const CampaignParams& params) {
  if (params.trials < 1) throw ValidationError("campaign needs at least one trial");
  if (params.max_length < 2) throw ValidationError("campaign needs max length >= 2");

  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.seed = params.seed;
  report.trials = params.trials;

  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    const std::uint64_t trial_seed = params.seed ^ static_cast<std::uint64_t>(trial);
    GeneratorParams gen;
    gen.seed = trial_seed;
    gen.shear_bound = params.shear_bound;
    {
      Rng length_rng(trial_seed);
      gen.target_length = 2 + length_rng.index(params.max_length - 1);
    }
    nlohmann::json cycle_json;
    try {
      const UnimodularCycle cycle = random_cycle(gen);
      cycle_json = to_json(cycle);
      check_trial(cycle);
    } catch (const Error& e) {
      report.failures += 1;
      if (report.failure_samples.size() < kMaxFailureSamples)
        report.failure_samples.push_back(nlohmann::json{{"trial", trial},
                                                        {"seed", trial_seed},
                                                        {"cycle", cycle_json},
                                                        {"reason", e.what()}});
    }
  }

  const auto end = std::chrono::steady_clock::now();
  report.elapsed_seconds = std::chrono::duration<double>(end - start).count();
  return report;
}

nlohmann::json to_json(const CampaignReport& report) {
  return nlohmann::json{{"seed", report.seed},
                        {"trials", report.trials},
                        {"failures", report.failures},
                        {"failure_samples", report.failure_samples},
                        {"elapsed", report.elapsed_seconds}};
}

}  // namespace unirot
