// Shared-task orchestration: ingest submission files, score them against
// references, run adjacent significance tests and build ranking tables.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mteval/corpus_metric.hpp"
#include "mteval/significance.hpp"

namespace mteval {

struct Submission {
  std::string team;
  std::string description;
  std::string scenario;       // "constrained" or "unconstrained"
  std::string language_pair;  // e.g. "en-de"
  std::vector<std::string> hypotheses;
  bool unranked = false;  // baseline rows shown with a "-" rank
};

struct IngestResult {
  std::vector<Submission> submissions;
  std::vector<std::string> diagnostics;  // skipped files and why
};

// Walk `root/<language_pair>/<scenario>/<team>.<description>.txt`. Files with
// malformed names, unknown scenarios, or line counts that do not match the
// reference for that pair are skipped with a diagnostic. `baseline_keys`
// holds `<team>.<description>` entries to flag as unranked.
IngestResult ingest_submissions(
    const std::string& root,
    const std::map<std::string, std::size_t>& ref_line_counts,
    const std::set<std::string>& baseline_keys = {});

struct ArtConfig {
  std::uint64_t repetitions = 10000;
  double alpha = 0.05;  // significant iff p <= alpha
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct PairwiseTest {
  std::string system_a;  // "<team>.<description>"
  std::string system_b;
  MetricId metric = MetricId::bleu;
  SignificanceResult result;
};

struct TableReport {
  std::string language_pair;
  std::string scenario;
  std::vector<MetricId> metrics;  // column order
  ClusterRanking ranking;
  std::vector<PairwiseTest> adjacent_tests;
  std::vector<PairwiseTest> all_pairs_tests;  // optional audit
};

struct CampaignReport {
  std::vector<TableReport> tables;
};

// Score every submission on every metric, order by the primary metric
// (direction-aware), test adjacent systems with ART on the primary metric's
// per-segment statistics, and cluster. `all_pairs` additionally fills the
// audit tests between every system pair. Pairs without a reference are
// skipped with a diagnostic.
CampaignReport evaluate_all(
    const std::vector<Submission>& submissions,
    const std::map<std::string, std::vector<std::string>>& references,
    const std::vector<MetricId>& metrics, MetricId primary,
    const MetricOptions& options, const ArtConfig& art, bool all_pairs,
    std::vector<std::string>* diagnostics);

}  // namespace mteval
