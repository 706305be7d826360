#include "mteval/beer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "mteval/chrf.hpp"
#include "mteval/text.hpp"

namespace mteval {
namespace {

constexpr std::size_t kCharOrders = 6;

void validate(const BeerModel& model) {
  const auto& canon = BeerModel::canonical_features();
  if (model.feature_names.size() != model.weights.size())
    throw std::invalid_argument("beer model: feature/weight length mismatch");
  if (model.feature_names != canon)
    throw std::invalid_argument("beer model: unexpected feature list");
  for (double w : model.weights)
    if (!std::isfinite(w))
      throw std::invalid_argument("beer model: non-finite weight");
}

double f1(const NgramOverlap& o) {
  // Orders beyond both strings' length carry no evidence either way; treat
  // agreement in emptiness as a perfect match so identity scores stay 1.
  if (o.hyp_total == 0 && o.ref_total == 0) return 1.0;
  if (o.hyp_total == 0 || o.ref_total == 0) return 0.0;
  const double p = static_cast<double>(o.matched) / o.hyp_total;
  const double r = static_cast<double>(o.matched) / o.ref_total;
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

}  // namespace

const std::vector<std::string>& BeerModel::canonical_features() {
  static const std::vector<std::string> names = {
      "char_f1_1", "char_f1_2",     "char_f1_3",   "char_f1_4",
      "char_f1_5", "char_f1_6",     "word_precision", "word_recall",
      "word_f1",   "length_ratio"};
  return names;
}

BeerModel BeerModel::uniform_default() {
  BeerModel m;
  m.feature_names = canonical_features();
  m.weights.assign(m.feature_names.size(), 1.0 / m.feature_names.size());
  return m;
}

BeerModel BeerModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("beer model: cannot open " + path);
  BeerModel m;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error("beer model: missing tab in line: " + line);
    const std::string name = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(value, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("beer model: bad weight: " + value);
    }
    if (used != value.size())
      throw std::runtime_error("beer model: bad weight: " + value);
    m.feature_names.push_back(name);
    m.weights.push_back(w);
  }
  validate(m);
  return m;
}

std::vector<double> beer_features(const std::string& hyp,
                                  const std::string& ref) {
  const std::string hyp_norm = normalize(hyp);
  const std::string ref_norm = normalize(ref);
  if (ref_norm.empty()) throw std::invalid_argument("beer: empty reference");

  std::vector<double> features;
  features.reserve(kCharOrders + 4);

  const auto overlaps = char_ngram_overlaps(hyp_norm, ref_norm, kCharOrders);
  for (const auto& o : overlaps) features.push_back(f1(o));

  const TokenSequence hyp_words = tokenize_words(hyp_norm);
  const TokenSequence ref_words = tokenize_words(ref_norm);
  std::unordered_map<std::string, std::int64_t> ref_counts;
  for (const auto& w : ref_words) ++ref_counts[w];
  std::int64_t matched = 0;
  {
    std::unordered_map<std::string, std::int64_t> hyp_counts;
    for (const auto& w : hyp_words) ++hyp_counts[w];
    for (const auto& [word, count] : hyp_counts) {
      const auto it = ref_counts.find(word);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
  }
  const double p = hyp_words.empty()
                       ? 0.0
                       : static_cast<double>(matched) / hyp_words.size();
  const double r = static_cast<double>(matched) / ref_words.size();
  features.push_back(p);
  features.push_back(r);
  features.push_back(p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r));

  const double ratio =
      static_cast<double>(hyp_words.size()) / ref_words.size();
  features.push_back(std::clamp(ratio, 0.0, 2.0));
  return features;
}

MetricScore beer(const std::string& hyp, const std::string& ref,
                 const BeerModel& model) {
  validate(model);
  const std::vector<double> f = beer_features(hyp, ref);
  double dot = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) dot += model.weights[i] * f[i];
  const double score = std::clamp(dot, 0.0, 1.0);
  return MetricScore{MetricId::beer, score * 100.0, Scale::zero_to_100};
}

}  // namespace mteval
