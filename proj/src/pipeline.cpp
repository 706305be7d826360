#include "mteval/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "mteval/rng.hpp"
#include "mteval/text.hpp"

namespace mteval {
namespace {

std::string pair_key(const SegmentPair& p) {
  return p.source_text + '\t' + p.target_text;
}

std::string near_dup_key(const std::string& normalized_src,
                         const std::string& normalized_tgt) {
  return dedup_key_normalized(normalized_src) + '\t' +
         dedup_key_normalized(normalized_tgt);
}

// Stable indices of `pairs` sorted by score descending.
std::vector<std::size_t> indices_by_score_desc(
    const std::vector<SegmentPair>& pairs) {
  std::vector<std::size_t> idx(pairs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].align_score > pairs[b].align_score;
  });
  return idx;
}

bool in_window(std::size_t words, double avg, const SplitConfig& cfg) {
  const double w = static_cast<double>(words);
  return w >= cfg.ratio_low * avg && w <= cfg.ratio_high * avg;
}

}  // namespace

std::pair<std::vector<SegmentPair>, FilterAudit> filter_battery(
    const std::vector<SegmentPair>& pairs, const SplitConfig& cfg) {
  FilterAudit audit;
  audit.input = pairs.size();
  std::vector<SegmentPair> kept;
  kept.reserve(pairs.size());
  std::unordered_set<std::string> exact_seen;
  std::unordered_set<std::string> near_seen;
  for (const SegmentPair& p : pairs) {
    if (p.align_score < cfg.min_align_score) {
      ++audit.removed_low_score;
      continue;
    }
    const std::string src = normalize(p.source_text);
    const std::string tgt = normalize(p.target_text);
    if (src.empty() || tgt.empty() || src == tgt) {
      ++audit.removed_identical;
      continue;
    }
    if (!exact_seen.insert(pair_key(p)).second) {
      ++audit.removed_exact_duplicate;
      continue;
    }
    if (!near_seen.insert(near_dup_key(src, tgt)).second) {
      ++audit.removed_near_duplicate;
      continue;
    }
    kept.push_back(p);
  }
  audit.kept = kept.size();
  return {std::move(kept), audit};
}

std::vector<SegmentPair> remove_outliers(const std::vector<SegmentPair>& pairs,
                                         const SplitConfig& cfg) {
  std::vector<SegmentPair> kept;
  kept.reserve(pairs.size());
  for (const SegmentPair& p : pairs) {
    if (word_count(p.source_text) <= cfg.max_words &&
        word_count(p.target_text) <= cfg.max_words) {
      kept.push_back(p);
    }
  }
  return kept;
}

std::vector<SegmentPair> length_window(const std::vector<SegmentPair>& pairs,
                                       double avg, const SplitConfig& cfg) {
  if (!(avg > 0.0))
    throw std::invalid_argument("length_window: average must be positive");
  std::vector<SegmentPair> kept;
  kept.reserve(pairs.size());
  for (const SegmentPair& p : pairs) {
    if (in_window(word_count(p.source_text), avg, cfg)) kept.push_back(p);
  }
  return kept;
}

double mean_source_words(const std::vector<SegmentPair>& pairs) {
  if (pairs.empty())
    throw std::invalid_argument("mean_source_words: empty input");
  std::size_t total = 0;
  for (const SegmentPair& p : pairs) total += word_count(p.source_text);
  return static_cast<double>(total) / static_cast<double>(pairs.size());
}

Round1Selection round1_select_test(const std::vector<SegmentPair>& pool,
                                   double train_avg_words,
                                   const SplitConfig& cfg) {
  if (!(train_avg_words > 0.0))
    throw std::invalid_argument("round1_select_test: average must be positive");
  Round1Selection out;
  const std::vector<std::size_t> order = indices_by_score_desc(pool);
  for (std::size_t idx : order) {
    if (out.test.size() == cfg.round1_test_size) break;
    if (in_window(word_count(pool[idx].source_text), train_avg_words, cfg))
      out.test.push_back(pool[idx]);
  }
  out.shortfall = out.test.size() < cfg.round1_test_size;
  return out;
}

std::map<std::string, double> source_proportions(
    const std::vector<SegmentPair>& pairs) {
  if (pairs.empty())
    throw std::invalid_argument("source_proportions: empty input");
  std::map<std::string, double> fractions;
  for (const SegmentPair& p : pairs) fractions[p.provenance] += 1.0;
  for (auto& [provenance, value] : fractions)
    value /= static_cast<double>(pairs.size());
  return fractions;
}

SplitResult round2_split(const std::vector<SegmentPair>& pairs,
                         const SplitConfig& cfg) {
  if (pairs.empty())
    throw std::invalid_argument("round2_split: empty input");

  SplitResult result;
  result.audit.seed = cfg.seed;

  // Steps 1-2: provenance fractions and mean source length over the full set.
  const std::map<std::string, double> fractions = source_proportions(pairs);
  std::vector<std::size_t> source_words(pairs.size());
  std::size_t total_words = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    source_words[i] = word_count(pairs[i].source_text);
    total_words += source_words[i];
  }
  const double avg =
      static_cast<double>(total_words) / static_cast<double>(pairs.size());
  result.audit.avg_source_words = avg;

  // Step 3: length window (tracked by index so unselected pairs return to
  // train in input order).
  std::vector<std::size_t> windowed;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (in_window(source_words[i], avg, cfg)) windowed.push_back(i);
  }
  result.audit.in_window = windowed.size();

  // Step 4: best-to-worst by alignment score, stable.
  std::stable_sort(windowed.begin(), windowed.end(),
                   [&](std::size_t a, std::size_t b) {
                     return pairs[a].align_score > pairs[b].align_score;
                   });

  // Step 5: largest-remainder quotas over round2_quota seats.
  struct Stratum {
    std::string provenance;
    double remainder = 0.0;
    std::size_t quota = 0;
    std::size_t available = 0;
    std::size_t taken = 0;
  };
  std::map<std::string, std::size_t> stratum_index;
  std::vector<Stratum> strata;
  for (const auto& [provenance, fraction] : fractions) {
    const double ideal = fraction * static_cast<double>(cfg.round2_quota);
    Stratum s;
    s.provenance = provenance;
    s.quota = static_cast<std::size_t>(std::floor(ideal));
    s.remainder = ideal - std::floor(ideal);
    stratum_index[provenance] = strata.size();
    strata.push_back(std::move(s));
  }
  for (std::size_t idx : windowed)
    ++strata[stratum_index[pairs[idx].provenance]].available;

  std::size_t assigned = 0;
  for (const Stratum& s : strata) assigned += s.quota;

  // Seat-distribution order: largest remainder first, provenance on ties.
  std::vector<std::size_t> remainder_order(strata.size());
  std::iota(remainder_order.begin(), remainder_order.end(), std::size_t{0});
  std::sort(remainder_order.begin(), remainder_order.end(),
            [&](std::size_t a, std::size_t b) {
              if (strata[a].remainder != strata[b].remainder)
                return strata[a].remainder > strata[b].remainder;
              return strata[a].provenance < strata[b].provenance;
            });

  const std::size_t total_available = windowed.size();
  const std::size_t grand_quota = std::min(cfg.round2_quota, total_available);
  // Hand out leftover seats from rounding, then soak up any stratum deficits,
  // one seat at a time in remainder order across strata with spare capacity.
  auto spare = [&](const Stratum& s) { return s.available > s.quota; };
  std::size_t deficit = cfg.round2_quota - assigned;
  for (Stratum& s : strata) {
    if (s.quota > s.available) {
      deficit += s.quota - s.available;
      s.quota = s.available;
    }
  }
  while (deficit > 0) {
    bool gave = false;
    for (std::size_t idx : remainder_order) {
      if (deficit == 0) break;
      if (!spare(strata[idx])) continue;
      ++strata[idx].quota;
      --deficit;
      gave = true;
    }
    if (!gave) break;  // every stratum exhausted
  }
  result.audit.shortfall = deficit > 0 || grand_quota < cfg.round2_quota;

  // Take the best pairs per stratum in global score order.
  std::vector<std::size_t> selected;
  selected.reserve(grand_quota);
  std::vector<bool> is_selected(pairs.size(), false);
  for (std::size_t idx : windowed) {
    Stratum& s = strata[stratum_index[pairs[idx].provenance]];
    if (s.taken == s.quota) continue;
    ++s.taken;
    selected.push_back(idx);
    is_selected[idx] = true;
  }
  result.audit.selected = selected.size();
  for (const Stratum& s : strata) {
    QuotaAudit q;
    q.provenance = s.provenance;
    q.fraction = fractions.at(s.provenance);
    q.quota = s.quota;
    q.available = s.available;
    q.taken = s.taken;
    result.audit.quotas.push_back(std::move(q));
  }

  // Step 6: seeded shuffle, first half validation, second half test.
  const KeyedRng rng(cfg.seed);
  RngStream stream(rng, 0);
  deterministic_shuffle(selected, stream);
  const std::size_t eval_total = cfg.val_size + cfg.test_size;
  const std::size_t val_take = selected.size() * cfg.val_size / eval_total;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (i < val_take)
      result.validation.push_back(pairs[selected[i]]);
    else
      result.test.push_back(pairs[selected[i]]);
  }
  result.audit.validation_size = result.validation.size();
  result.audit.test_size = result.test.size();

  std::unordered_set<std::string> eval_sources;
  if (cfg.dedup_eval_vs_train) {
    for (std::size_t idx : selected)
      eval_sources.insert(normalize(pairs[idx].source_text));
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (is_selected[i]) continue;
    if (cfg.dedup_eval_vs_train &&
        eval_sources.count(normalize(pairs[i].source_text))) {
      ++result.audit.train_dedup_removed;
      continue;
    }
    result.train.push_back(pairs[i]);
  }
  return result;
}

std::vector<SegmentPair> worst_k_by_score(const std::vector<SegmentPair>& pairs,
                                          std::size_t k) {
  if (k == 0) throw std::invalid_argument("worst_k_by_score: k must be >= 1");
  std::vector<std::size_t> idx(pairs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].align_score < pairs[b].align_score;
  });
  const std::size_t take = std::min(k, pairs.size());
  std::vector<SegmentPair> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(pairs[idx[i]]);
  return out;
}

std::vector<DualReferenceRow> dual_reference_report(
    const std::vector<std::pair<std::string, std::vector<std::string>>>&
        systems,
    const std::vector<std::string>& reference,
    const std::vector<std::string>& postedited_reference,
    const MetricOptions& options) {
  if (reference.empty())
    throw std::invalid_argument("dual_reference_report: empty reference");
  if (postedited_reference.size() != reference.size())
    throw std::invalid_argument(
        "dual_reference_report: post-edit/reference length mismatch");
  const CorpusMetric bleu_metric(MetricId::bleu, options);
  const CorpusMetric chrf_metric(MetricId::chrf, options);
  std::vector<DualReferenceRow> rows;
  rows.reserve(systems.size());
  for (const auto& [name, hyps] : systems) {
    if (hyps.size() != reference.size())
      throw std::invalid_argument(
          "dual_reference_report: hypothesis length mismatch for " + name);
    DualReferenceRow row;
    row.system = name;
    row.bleu_reference = bleu_metric.score_corpus(hyps, reference);
    row.chrf_reference = chrf_metric.score_corpus(hyps, reference);
    row.bleu_postedit = bleu_metric.score_corpus(hyps, postedited_reference);
    row.chrf_postedit = chrf_metric.score_corpus(hyps, postedited_reference);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mteval
