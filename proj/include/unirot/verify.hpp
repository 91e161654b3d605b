#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "unirot/checked.hpp"

namespace unirot {

struct CampaignParams {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t max_length = 100;  // lengths drawn from [2, max_length]
  i64 shear_bound = 4;
};

struct CampaignReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<nlohmann::json> failure_samples;  // capped; nonempty iff failures > 0
  double elapsed_seconds = 0.0;
};

/// Runs `trials` independent random cycles (trial i uses seed ^ i) and
/// checks, for each: agreement of the winding, closed-formula and reduction
/// rotation numbers; additivity of curvature sums and exact edge-cycle
/// decomposition for every executed reduction step; and the floating-point
/// angle sum within 1e-6. Deterministic up to elapsed time.
CampaignReport run_campaign(const CampaignParams& params);

nlohmann::json to_json(const CampaignReport& report);

}  // namespace unirot
