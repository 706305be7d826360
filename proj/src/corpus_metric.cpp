#include "mteval/corpus_metric.hpp"

#include <cmath>
#include <stdexcept>

#include "mteval/text.hpp"

namespace mteval {
namespace {

std::vector<double> bleu_stats_row(const BleuStats& s) {
  std::vector<double> row;
  row.reserve(2 * s.max_order + 2);
  for (std::int64_t m : s.clipped_matches)
    row.push_back(static_cast<double>(m));
  for (std::int64_t t : s.hyp_totals) row.push_back(static_cast<double>(t));
  row.push_back(static_cast<double>(s.hyp_len));
  row.push_back(static_cast<double>(s.ref_len));
  return row;
}

BleuStats bleu_stats_from_row(const std::vector<double>& row,
                              std::size_t max_order) {
  BleuStats s(max_order);
  for (std::size_t k = 0; k < max_order; ++k) {
    s.clipped_matches[k] = static_cast<std::int64_t>(std::llround(row[k]));
    s.hyp_totals[k] =
        static_cast<std::int64_t>(std::llround(row[max_order + k]));
  }
  s.hyp_len = static_cast<std::int64_t>(std::llround(row[2 * max_order]));
  s.ref_len = static_cast<std::int64_t>(std::llround(row[2 * max_order + 1]));
  return s;
}

}  // namespace

CorpusMetric::CorpusMetric(MetricId id, MetricOptions options)
    : id_(id), options_(std::move(options)) {}

std::size_t CorpusMetric::width() const {
  switch (id_) {
    case MetricId::bleu:
      return 2 * options_.bleu.max_order + 2;
    case MetricId::chrf:
    case MetricId::beer:
      return 2;  // segment score, segment count
    case MetricId::ter:
    case MetricId::hter:
      return 2;  // edits, reference length
  }
  throw std::logic_error("unknown metric id");
}

std::vector<double> CorpusMetric::segment_stats(const std::string& hyp,
                                                const std::string& ref) const {
  const auto preprocess = [this](const std::string& line) {
    const std::string n = normalize(line);
    return options_.fold_case ? fold_case(n) : n;
  };
  const std::string h_line = preprocess(hyp);
  const std::string r_line = preprocess(ref);
  switch (id_) {
    case MetricId::bleu: {
      const TokenSequence h = tokenize_words(h_line);
      const TokenSequence r = tokenize_words(r_line);
      return bleu_stats_row(
          bleu_segment_stats(h, r, options_.bleu.max_order));
    }
    case MetricId::chrf:
      return {chrf(h_line, r_line, options_.chrf).value, 1.0};
    case MetricId::beer:
      return {beer(h_line, r_line, options_.beer_model).value / 100.0, 1.0};
    case MetricId::ter:
    case MetricId::hter: {
      const TokenSequence h = tokenize_words(h_line);
      const TokenSequence r = tokenize_words(r_line);
      const TerResult t = id_ == MetricId::ter ? ter(h, r, options_.ter)
                                               : hter(h, r, options_.ter);
      return {static_cast<double>(t.edits), static_cast<double>(t.ref_len)};
    }
  }
  throw std::logic_error("unknown metric id");
}

double CorpusMetric::reduce(const std::vector<double>& sums) const {
  if (sums.size() != width())
    throw std::invalid_argument("corpus metric: wrong statistics width");
  switch (id_) {
    case MetricId::bleu:
      return bleu_score_from_sums(
          bleu_stats_from_row(sums, options_.bleu.max_order),
          options_.bleu.smooth_k);
    case MetricId::chrf:
      return sums[1] == 0.0 ? 0.0 : sums[0] / sums[1];
    case MetricId::beer:
      return sums[1] == 0.0 ? 0.0 : 100.0 * sums[0] / sums[1];
    case MetricId::ter:
    case MetricId::hter:
      return sums[1] == 0.0 ? 0.0 : 100.0 * sums[0] / sums[1];
  }
  throw std::logic_error("unknown metric id");
}

std::function<double(const std::vector<double>&)> CorpusMetric::reducer()
    const {
  return [metric = *this](const std::vector<double>& sums) {
    return metric.reduce(sums);
  };
}

MetricScore CorpusMetric::score_corpus(
    const std::vector<std::string>& hyps,
    const std::vector<std::string>& refs) const {
  if (hyps.size() != refs.size())
    throw std::invalid_argument("corpus metric: line count mismatch");
  if (hyps.empty())
    throw std::invalid_argument("corpus metric: empty corpus");
  std::vector<double> sums(width(), 0.0);
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    const std::vector<double> row = segment_stats(hyps[i], refs[i]);
    for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += row[k];
  }
  return MetricScore{id_, reduce(sums), reporting_scale(id_)};
}

}  // namespace mteval
