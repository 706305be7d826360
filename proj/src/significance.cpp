#include "mteval/significance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "mteval/rng.hpp"

namespace mteval {
namespace {

void check_paired(const PairedSystemStats& paired) {
  if (paired.width == 0 || paired.a.empty())
    throw std::invalid_argument("significance: empty paired statistics");
  if (paired.a.size() != paired.b.size() ||
      paired.a.size() % paired.width != 0)
    throw std::invalid_argument("significance: misshapen paired statistics");
}

std::vector<double> column_sums(const std::vector<double>& rows,
                                std::size_t width) {
  std::vector<double> sums(width, 0.0);
  for (std::size_t i = 0; i < rows.size(); i += width)
    for (std::size_t k = 0; k < width; ++k) sums[k] += rows[i + k];
  return sums;
}

}  // namespace

SignificanceResult art_pvalue(const PairedSystemStats& paired,
                              const CorpusReducer& reduce,
                              std::uint64_t repetitions, std::uint64_t seed,
                              unsigned threads) {
  check_paired(paired);
  if (repetitions == 0)
    throw std::invalid_argument("art_pvalue: repetitions must be >= 1");
  const std::size_t n = paired.size();
  const std::size_t w = paired.width;

  const std::vector<double> sum_a = column_sums(paired.a, w);
  const std::vector<double> sum_b = column_sums(paired.b, w);
  const double observed = reduce(sum_a) - reduce(sum_b);
  const double target = std::abs(observed);

  const KeyedRng rng(seed);
  // One repetition = one RNG stream, so the work can be split across threads
  // at any granularity without changing a single draw. Hits are integers, so
  // the cross-thread reduction is exact.
  auto count_hits = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::uint64_t hits = 0;
    std::vector<double> shift(w);
    std::vector<double> ra(w), rb(w);
    for (std::uint64_t rep = lo; rep < hi; ++rep) {
      std::fill(shift.begin(), shift.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (!rng.flip(rep, i)) continue;
        const std::size_t off = i * w;
        for (std::size_t k = 0; k < w; ++k)
          shift[k] += paired.b[off + k] - paired.a[off + k];
      }
      for (std::size_t k = 0; k < w; ++k) {
        ra[k] = sum_a[k] + shift[k];
        rb[k] = sum_b[k] - shift[k];
      }
      const double delta = reduce(ra) - reduce(rb);
      if (std::abs(delta) >= target) ++hits;
    }
    return hits;
  };

  std::uint64_t hits = 0;
  if (threads <= 1) {
    hits = count_hits(0, repetitions);
  } else {
    const std::uint64_t workers =
        std::min<std::uint64_t>(threads, repetitions);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t t = 0; t < workers; ++t) {
      const std::uint64_t lo = repetitions * t / workers;
      const std::uint64_t hi = repetitions * (t + 1) / workers;
      pool.emplace_back(
          [&, t, lo, hi]() { partial[t] = count_hits(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t t = 0; t < workers; ++t) hits += partial[t];
  }

  SignificanceResult out;
  out.p_value = static_cast<double>(hits + 1) /
                static_cast<double>(repetitions + 1);
  out.observed_delta = observed;
  out.repetitions = repetitions;
  out.seed = seed;
  return out;
}

SignificanceResult exact_randomization_pvalue(const PairedSystemStats& paired,
                                              const CorpusReducer& reduce) {
  check_paired(paired);
  const std::size_t n = paired.size();
  if (n > 20)
    throw std::invalid_argument(
        "exact_randomization_pvalue: more than 20 segments");
  const std::size_t w = paired.width;

  const std::vector<double> sum_a = column_sums(paired.a, w);
  const std::vector<double> sum_b = column_sums(paired.b, w);
  const double observed = reduce(sum_a) - reduce(sum_b);
  const double target = std::abs(observed);

  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t hits = 0;
  std::vector<double> ra(w), rb(w);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::copy(sum_a.begin(), sum_a.end(), ra.begin());
    std::copy(sum_b.begin(), sum_b.end(), rb.begin());
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      const std::size_t off = i * w;
      for (std::size_t k = 0; k < w; ++k) {
        const double d = paired.b[off + k] - paired.a[off + k];
        ra[k] += d;
        rb[k] -= d;
      }
    }
    const double delta = reduce(ra) - reduce(rb);
    if (std::abs(delta) >= target) ++hits;
  }

  SignificanceResult out;
  out.p_value = static_cast<double>(hits) / static_cast<double>(total);
  out.observed_delta = observed;
  out.repetitions = total;
  out.seed = 0;
  return out;
}

ClusterRanking cluster_rank(
    const std::vector<RankedSystem>& ordered,
    const std::function<bool(std::size_t, std::size_t)>& significant) {
  if (ordered.empty())
    throw std::invalid_argument("cluster_rank: empty system list");
  ClusterRanking out;
  out.clusters.push_back(Cluster{});
  out.clusters.back().systems.push_back(ordered[0]);
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (significant(i - 1, i)) out.clusters.push_back(Cluster{});
    out.clusters.back().systems.push_back(ordered[i]);
  }
  int next_rank = 1;
  for (auto& cluster : out.clusters) {
    const bool any_ranked =
        std::any_of(cluster.systems.begin(), cluster.systems.end(),
                    [](const RankedSystem& s) { return !s.unranked; });
    cluster.rank = any_ranked ? next_rank++ : 0;
  }
  return out;
}

}  // namespace mteval
