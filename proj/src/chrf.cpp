#include "mteval/chrf.hpp"

#include <algorithm>
#include <stdexcept>

#include "mteval/text.hpp"

namespace mteval {

std::vector<NgramOverlap> char_ngram_overlaps(const std::string& hyp_norm,
                                              const std::string& ref_norm,
                                              std::size_t max_order) {
  if (max_order < 1) {
    throw std::invalid_argument("char_ngram_overlaps: order must be >= 1");
  }
  std::vector<char32_t> hyp_points = to_code_points(hyp_norm);
  std::vector<char32_t> ref_points = to_code_points(ref_norm);

  std::vector<NgramOverlap> overlaps(max_order);
  for (std::size_t k = 1; k <= max_order; ++k) {
    auto hyp_ngrams = ngrams(hyp_points, k);
    auto ref_ngrams = ngrams(ref_points, k);
    NgramOverlap& o = overlaps[k - 1];
    o.hyp_total = hyp_ngrams.total();
    o.ref_total = ref_ngrams.total();
    for (const auto& [gram, count] : hyp_ngrams.counts) {
      auto it = ref_ngrams.counts.find(gram);
      if (it != ref_ngrams.counts.end()) {
        o.matched += std::min(count, it->second);
      }
    }
  }
  return overlaps;
}

double fscore(const NgramOverlap& overlap, double beta) {
  double precision =
      overlap.hyp_total > 0
          ? static_cast<double>(overlap.matched) / overlap.hyp_total
          : 0.0;
  double recall = overlap.ref_total > 0
                      ? static_cast<double>(overlap.matched) / overlap.ref_total
                      : 0.0;
  if (precision == 0.0 && recall == 0.0) return 0.0;
  double b2 = beta * beta;
  double denom = b2 * precision + recall;
  if (denom == 0.0) return 0.0;
  return (1.0 + b2) * precision * recall / denom;
}

MetricScore chrf(const std::string& hyp, const std::string& ref,
                 const ChrfOptions& options) {
  std::string hyp_norm = normalize(hyp);
  std::string ref_norm = normalize(ref);
  if (ref_norm.empty()) {
    throw std::invalid_argument("chrf: empty reference");
  }
  auto overlaps = char_ngram_overlaps(hyp_norm, ref_norm, options.max_order);
  double sum = 0.0;
  std::size_t orders = 0;
  for (const NgramOverlap& o : overlaps) {
    if (o.ref_total == 0) continue;  // no reference n-grams at this order
    sum += fscore(o, options.beta);
    ++orders;
  }
  double score = orders > 0 ? sum / static_cast<double>(orders) : 0.0;
  return {MetricId::chrf, score, Scale::zero_to_1};
}

}  // namespace mteval
