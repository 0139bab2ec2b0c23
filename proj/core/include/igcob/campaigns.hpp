#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "igcob/report.hpp"

namespace igcob {

struct CampaignOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 8;
  /// Largest boundary size for exhaustive campaigns (per object for the
  /// category laws and functoriality, |A|+|B| for faithfulness).
  std::size_t exhaustive_bound = 3;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// Campaign names accepted by run_campaign.
const std::vector<std::string>& campaign_names();

/// Runs the named campaign; the report is deterministic for fixed options.
/// Throws PreconditionViolation for an unknown name.
Report run_campaign(std::string_view name, const CampaignOptions& options);

Report run_associativity_campaign(const CampaignOptions& options);
Report run_trefoil_campaign(const CampaignOptions& options);
Report run_cob0_laws_campaign(const CampaignOptions& options);
Report run_functoriality_campaign(const CampaignOptions& options);
Report run_faithfulness_campaign(const CampaignOptions& options);
Report run_bimod_degeneracy_campaign(const CampaignOptions& options);
Report run_bimod_well_defined_campaign(const CampaignOptions& options);

/// Re-checks the instance(s) in a replay document (as printed in campaign
/// counterexamples) for the named property.
Report replay_campaign(std::string_view name, std::string_view document_text);

}  // namespace igcob
