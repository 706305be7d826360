// Shared metric vocabulary: identifiers, reporting scales and score values.
#pragma once

#include <optional>
#include <string>

namespace mteval {

enum class MetricId { bleu, chrf, ter, beer, hter };

enum class Scale { zero_to_100, zero_to_1 };

struct MetricScore {
  MetricId metric = MetricId::bleu;
  double value = 0.0;
  Scale scale = Scale::zero_to_100;
};

// Lower scores are better for error-rate metrics, higher for the rest.
inline bool lower_is_better(MetricId id) {
  return id == MetricId::ter || id == MetricId::hter;
}

inline Scale reporting_scale(MetricId id) {
  return id == MetricId::chrf ? Scale::zero_to_1 : Scale::zero_to_100;
}

std::string metric_name(MetricId id);
std::optional<MetricId> parse_metric(const std::string& name);

}  // namespace mteval
