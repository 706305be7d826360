// Uniform corpus-level view of all metrics: each segment contributes a fixed
// width vector of sufficient statistics, and the corpus score is a function
// of their componentwise sum. This is what makes paired randomization tests
// exact for every metric in the suite.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mteval/beer.hpp"
#include "mteval/bleu.hpp"
#include "mteval/chrf.hpp"
#include "mteval/metrics.hpp"
#include "mteval/ter.hpp"

namespace mteval {

struct MetricOptions {
  BleuOptions bleu;
  ChrfOptions chrf;
  TerOptions ter;
  BeerModel beer_model = BeerModel::uniform_default();
  bool fold_case = false;  // case-insensitive scoring
};

class CorpusMetric {
 public:
  explicit CorpusMetric(MetricId id, MetricOptions options = {});

  MetricId id() const { return id_; }
  std::size_t width() const;

  // Sufficient statistics for one raw hypothesis/reference line pair.
  // Normalization and tokenization happen here.
  std::vector<double> segment_stats(const std::string& hyp,
                                    const std::string& ref) const;

  // Corpus score on the metric's reporting scale, from summed statistics.
  double reduce(const std::vector<double>& sums) const;

  std::function<double(const std::vector<double>&)> reducer() const;

  // Convenience: stats for every segment, summed in input order, reduced.
  // Line counts must match and be nonzero.
  MetricScore score_corpus(const std::vector<std::string>& hyps,
                           const std::vector<std::string>& refs) const;

 private:
  MetricId id_;
  MetricOptions options_;
};

}  // namespace mteval
