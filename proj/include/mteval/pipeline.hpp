// Bitext filtering battery, stratified train/validation/test splitting, and
// score-based diagnostics over aligned segment pairs.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mteval/corpus_metric.hpp"

namespace mteval {

struct SegmentPair {
  std::string source_text;
  std::string target_text;
  double align_score = 0.0;  // higher is better
  std::string provenance;    // source-collection label
};

struct SplitConfig {
  std::size_t max_words = 100;      // outlier cutoff, strict "more than"
  double min_align_score = 1.04;    // filter threshold
  double ratio_low = 0.7;           // length window, inclusive bounds
  double ratio_high = 1.3;
  std::size_t round1_test_size = 2000;
  std::size_t round2_quota = 8000;  // validation + test
  std::size_t val_size = 4000;
  std::size_t test_size = 4000;
  std::uint64_t seed = 0;
  bool dedup_eval_vs_train = false;  // drop train pairs whose source appears
                                     // in validation/test
};

struct FilterAudit {
  std::size_t input = 0;
  std::size_t removed_low_score = 0;
  std::size_t removed_identical = 0;  // source == target normalized, or an
                                      // empty side
  std::size_t removed_exact_duplicate = 0;
  std::size_t removed_near_duplicate = 0;
  std::size_t kept = 0;
};

struct QuotaAudit {
  std::string provenance;
  double fraction = 0.0;     // share of the pre-window corpus
  std::size_t quota = 0;     // seats after largest-remainder rounding and
                             // exhaustion redistribution
  std::size_t available = 0; // stratum size inside the window
  std::size_t taken = 0;     // actually selected (< quota only on shortfall)
};

struct SplitAudit {
  FilterAudit filter;  // filled by the caller when the battery ran first
  std::size_t removed_outliers = 0;  // likewise
  double avg_source_words = 0.0;
  std::size_t in_window = 0;
  std::vector<QuotaAudit> quotas;  // ordered by provenance
  std::size_t selected = 0;
  bool shortfall = false;
  std::size_t validation_size = 0;
  std::size_t test_size = 0;
  std::size_t train_dedup_removed = 0;
  std::uint64_t seed = 0;
};

struct SplitResult {
  std::vector<SegmentPair> train;
  std::vector<SegmentPair> validation;
  std::vector<SegmentPair> test;
  SplitAudit audit;
};

// The four-stage cleaning battery, applied in order: drop pairs under the
// score threshold; drop pairs whose normalized source equals target or with
// an empty side; drop exact (source, target) duplicates keeping the first;
// drop near-duplicates by case-folded punctuation-stripped key, keeping the
// first. Idempotent on its own output.
std::pair<std::vector<SegmentPair>, FilterAudit> filter_battery(
    const std::vector<SegmentPair>& pairs, const SplitConfig& cfg);

// Keep pairs with at most max_words words on both sides (strict "more than"
// removal).
std::vector<SegmentPair> remove_outliers(const std::vector<SegmentPair>& pairs,
                                         const SplitConfig& cfg);

// Keep pairs whose source word count lies in [ratio_low*avg, ratio_high*avg],
// bounds inclusive. avg must be positive.
std::vector<SegmentPair> length_window(const std::vector<SegmentPair>& pairs,
                                       double avg, const SplitConfig& cfg);

// Mean source word count; empty input rejected.
double mean_source_words(const std::vector<SegmentPair>& pairs);

struct Round1Selection {
  std::vector<SegmentPair> test;
  bool shortfall = false;  // pool ran out before round1_test_size
};

// Sort the candidate pool best-to-worst by score (stable), keep pairs inside
// the length window around the training average, take the first
// round1_test_size.
Round1Selection round1_select_test(const std::vector<SegmentPair>& pool,
                                   double train_avg_words,
                                   const SplitConfig& cfg);

// provenance -> fraction of pairs; fractions sum to 1. Empty input rejected.
std::map<std::string, double> source_proportions(
    const std::vector<SegmentPair>& pairs);

// The six-step stratified split: provenance fractions, mean source length,
// length window, best-to-worst sort, largest-remainder provenance quotas over
// round2_quota seats, seeded shuffle and half/half validation/test cut.
// Everything not selected stays in train.
SplitResult round2_split(const std::vector<SegmentPair>& pairs,
                         const SplitConfig& cfg);

// The k lowest-scoring pairs, ascending by score, stable on ties.
std::vector<SegmentPair> worst_k_by_score(const std::vector<SegmentPair>& pairs,
                                          std::size_t k = 500);

// One ranking row scored against a raw reference and its post-edited version.
struct DualReferenceRow {
  std::string system;
  MetricScore bleu_reference;
  MetricScore chrf_reference;
  MetricScore bleu_postedit;
  MetricScore chrf_postedit;
};

// BLEU and chrF for every system against both reference versions. All line
// vectors must have the same nonzero length.
std::vector<DualReferenceRow> dual_reference_report(
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        systems,
    const std::vector<std::string>& reference,
    const std::vector<std::string>& postedited_reference,
    const MetricOptions& options = {});

}  // namespace mteval
