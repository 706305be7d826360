// Table rendering: ranking tables (Markdown and CSV), significance reports,
// metric reports and the dual-reference comparison.
#pragma once

#include <string>
#include <vector>

#include "mteval/campaign.hpp"
#include "mteval/pipeline.hpp"

namespace mteval {

// Table/report display name (BLEU, chrF, TER, BEER, hTER).
std::string display_name(MetricId id);

// One decimal on the 0-100 scale, three decimals on the 0-1 scale.
std::string format_score(const MetricScore& score);

// RFC-4180 style quoting: wrap in quotes when the field holds a comma, quote
// or newline, doubling embedded quotes.
std::string csv_escape(const std::string& field);

// One Markdown table per (language_pair, scenario): Rank, Team, Description,
// then a direction-arrowed column per metric. Rows of dashes separate
// clusters; unranked systems show "-" in the Rank column.
std::string render_ranking_markdown(const CampaignReport& report);

// Same content as CSV rows:
// language_pair,scenario,rank,cluster,team,description,<metric...>.
std::string render_ranking_csv(const CampaignReport& report);

// system_a,system_b,metric,observed_delta,p_value,repetitions,seed.
std::string render_significance_csv(const std::vector<PairwiseTest>& tests);

// metric,value,scale — one row per computed corpus score.
std::string render_metric_report_csv(const std::vector<MetricScore>& scores);

// Side-by-side scores against a reference and its post-edited version.
std::string render_dual_reference_markdown(
    const std::vector<DualReferenceRow>& rows);

}  // namespace mteval
