// Linear sentence-level metric over character and word match features.
#pragma once

#include <string>
#include <vector>

#include "mteval/metrics.hpp"

namespace mteval {

// Fixed feature vector, in order:
//   char_f1_1 .. char_f1_6   character n-gram F1, orders 1..6
//   word_precision            word unigram precision
//   word_recall               word unigram recall
//   word_f1                   word unigram F1
//   length_ratio              hypothesis/reference token ratio, clamped [0,2]
struct BeerModel {
  std::vector<std::string> feature_names;
  std::vector<double> weights;

  // The ten canonical feature names, in scoring order.
  static const std::vector<std::string>& canonical_features();
  // Uniform weights (1/10 each) over the canonical features.
  static BeerModel uniform_default();
  // Parse `feature_name<TAB>weight` lines; names must list the canonical
  // features in order and weights must be finite.
  static BeerModel load(const std::string& path);
};

// Feature values for a normalized hypothesis/reference pair, in model order.
std::vector<double> beer_features(const std::string& hyp,
                                  const std::string& ref);

// clamp(w . f, 0, 1) * 100. Empty normalized reference and malformed models
// are rejected.
MetricScore beer(const std::string& hyp, const std::string& ref,
                 const BeerModel& model);

}  // namespace mteval
