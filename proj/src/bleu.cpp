#include "mteval/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mteval {

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  if (other.max_order != max_order) {
    throw std::invalid_argument("BleuStats: mixed max_order in sum");
  }
  for (std::size_t k = 0; k < max_order; ++k) {
    clipped_matches[k] += other.clipped_matches[k];
    hyp_totals[k] += other.hyp_totals[k];
  }
  hyp_len += other.hyp_len;
  ref_len += other.ref_len;
  return *this;
}

BleuStats bleu_segment_stats(const TokenSequence& hyp, const TokenSequence& ref,
                             std::size_t max_order) {
  if (max_order < 1) {
    throw std::invalid_argument("bleu_segment_stats: max_order must be >= 1");
  }
  BleuStats stats(max_order);
  stats.hyp_len = static_cast<std::int64_t>(hyp.size());
  stats.ref_len = static_cast<std::int64_t>(ref.size());
  for (std::size_t k = 1; k <= max_order; ++k) {
    if (hyp.size() < k) break;
    auto hyp_ngrams = ngrams(hyp, k);
    auto ref_ngrams = ngrams(ref, k);
    stats.hyp_totals[k - 1] = hyp_ngrams.total();
    std::int64_t matched = 0;
    for (const auto& [gram, count] : hyp_ngrams.counts) {
      auto it = ref_ngrams.counts.find(gram);
      if (it != ref_ngrams.counts.end()) {
        matched += std::min(count, it->second);
      }
    }
    stats.clipped_matches[k - 1] = matched;
  }
  return stats;
}

double bleu_score_from_sums(const BleuStats& totals, double smooth_k) {
  if (totals.hyp_totals.empty() || totals.hyp_totals[0] == 0) return 0.0;

  double log_precision_sum = 0.0;
  for (std::size_t k = 0; k < totals.max_order; ++k) {
    double matches = static_cast<double>(totals.clipped_matches[k]) + smooth_k;
    double total = static_cast<double>(totals.hyp_totals[k]) + smooth_k;
    if (matches <= 0.0 || total <= 0.0) return 0.0;
    log_precision_sum += std::log(matches / total);
  }

  double brevity = 1.0;
  if (totals.hyp_len <= totals.ref_len) {
    brevity = std::exp(1.0 - static_cast<double>(totals.ref_len) /
                                 static_cast<double>(totals.hyp_len));
  }
  return brevity *
         std::exp(log_precision_sum / static_cast<double>(totals.max_order)) *
         100.0;
}

MetricScore corpus_bleu(const std::vector<BleuStats>& stats,
                        const BleuOptions& options) {
  if (stats.empty()) {
    throw std::invalid_argument("corpus_bleu: empty statistics list");
  }
  BleuStats totals(stats.front().max_order);
  for (const BleuStats& s : stats) totals += s;
  return {MetricId::bleu, bleu_score_from_sums(totals, options.smooth_k),
          Scale::zero_to_100};
}

}  // namespace mteval
