// Approximate randomization testing over paired per-segment statistics, and
// grouping of ranked systems into significance clusters.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mteval/metrics.hpp"

namespace mteval {

// Per-segment sufficient statistics for two systems over the same test set,
// stored row-major (segment-count rows of `width` values each). Row i of both
// systems refers to the same source/reference segment. The corpus score of a
// system is a function of the componentwise sum of its rows.
struct PairedSystemStats {
  std::size_t width = 0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const { return width == 0 ? 0 : a.size() / width; }
};

// Maps the componentwise sum of per-segment statistics to a corpus score.
using CorpusReducer = std::function<double(const std::vector<double>&)>;

struct SignificanceResult {
  double p_value = 1.0;
  double observed_delta = 0.0;  // score_A - score_B
  std::uint64_t repetitions = 0;
  std::uint64_t seed = 0;
};

// Two-sided paired approximate randomization test: each repetition swaps each
// segment's A/B statistics independently with probability 1/2 and recomputes
// both corpus scores; p = (#{|delta| >= |observed|} + 1) / (repetitions + 1).
// Bit-identical for a given seed regardless of `threads`.
SignificanceResult art_pvalue(const PairedSystemStats& paired,
                              const CorpusReducer& reduce,
                              std::uint64_t repetitions, std::uint64_t seed,
                              unsigned threads = 1);

// Exhaustive version over all 2^n swap assignments (n <= 20 segments);
// p = #{|delta| >= |observed|} / 2^n. The identity assignment keeps p > 0.
SignificanceResult exact_randomization_pvalue(const PairedSystemStats& paired,
                                              const CorpusReducer& reduce);

// A system row in a ranking table, ordered by the primary metric.
struct RankedSystem {
  std::string team;
  std::string description;
  std::vector<MetricScore> scores;
  bool unranked = false;  // scored and placed, but shown with a "-" rank
};

struct Cluster {
  int rank = 0;  // 0 when the cluster holds only unranked systems
  std::vector<RankedSystem> systems;
};

struct ClusterRanking {
  std::vector<Cluster> clusters;
};

// Walk the pre-sorted systems; system i joins the current cluster unless
// significant(i-1, i) holds, in which case it opens a new one. Clusters made
// only of unranked systems consume no rank number.
ClusterRanking cluster_rank(
    const std::vector<RankedSystem>& ordered,
    const std::function<bool(std::size_t, std::size_t)>& significant);

}  // namespace mteval
