// chrF: character n-gram F-score, averaged arithmetically over n-gram orders.
#pragma once

#include <vector>

#include "mteval/metrics.hpp"

namespace mteval {

struct ChrfOptions {
  std::size_t max_order = 6;
  double beta = 2.0;  // recall weight
};

// Clipped character n-gram precision/recall for one order.
struct NgramOverlap {
  std::int64_t matched = 0;
  std::int64_t hyp_total = 0;
  std::int64_t ref_total = 0;
};

// Overlap per order 1..max_order, computed over code points of the
// already-normalized strings (internal single spaces included).
std::vector<NgramOverlap> char_ngram_overlaps(const std::string& hyp_norm,
                                              const std::string& ref_norm,
                                              std::size_t max_order);

// F-beta from one overlap; 0 when precision and recall are both 0.
double fscore(const NgramOverlap& overlap, double beta);

// Segment chrF on the 0-1 scale. Orders whose reference n-gram set is empty
// are excluded from the average. Inputs are normalized internally; a
// reference that normalizes to the empty string is rejected.
MetricScore chrf(const std::string& hyp, const std::string& ref,
                 const ChrfOptions& options = {});

}  // namespace mteval
