// Corpus BLEU: geometric mean of clipped n-gram precisions times a brevity
// penalty, computed from additive per-segment sufficient statistics.
#pragma once

#include <cstdint>
#include <vector>

#include "mteval/metrics.hpp"
#include "mteval/text.hpp"

namespace mteval {

// Per-segment sufficient statistics. Fieldwise addition of segment stats
// yields the corpus stats, which is what makes randomization tests over
// segment swaps exact for BLEU.
struct BleuStats {
  std::size_t max_order = 4;
  std::vector<std::int64_t> clipped_matches;  // index k-1 = order k
  std::vector<std::int64_t> hyp_totals;
  std::int64_t hyp_len = 0;
  std::int64_t ref_len = 0;

  BleuStats() = default;
  explicit BleuStats(std::size_t order)
      : max_order(order), clipped_matches(order, 0), hyp_totals(order, 0) {}

  BleuStats& operator+=(const BleuStats& other);
};

struct BleuOptions {
  std::size_t max_order = 4;
  // Add-k smoothing of the precision fractions; 0 disables it. Only intended
  // for segment-level scores, where zero counts are routine.
  double smooth_k = 0.0;
};

BleuStats bleu_segment_stats(const TokenSequence& hyp, const TokenSequence& ref,
                             std::size_t max_order = 4);

// Score from already-summed statistics, on the 0-100 scale.
double bleu_score_from_sums(const BleuStats& totals, double smooth_k = 0.0);

// Sums the per-segment statistics and scores them. Empty list rejected; all
// entries must share max_order.
MetricScore corpus_bleu(const std::vector<BleuStats>& stats,
                        const BleuOptions& options = {});

}  // namespace mteval
