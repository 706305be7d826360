#include "mteval/metrics.hpp"

#include <stdexcept>

namespace mteval {

std::string metric_name(MetricId id) {
  switch (id) {
    case MetricId::bleu:
      return "bleu";
    case MetricId::chrf:
      return "chrf";
    case MetricId::ter:
      return "ter";
    case MetricId::beer:
      return "beer";
    case MetricId::hter:
      return "hter";
  }
  throw std::logic_error("unknown metric id");
}

std::optional<MetricId> parse_metric(const std::string& name) {
  if (name == "bleu") return MetricId::bleu;
  if (name == "chrf") return MetricId::chrf;
  if (name == "ter") return MetricId::ter;
  if (name == "beer") return MetricId::beer;
  if (name == "hter") return MetricId::hter;
  return std::nullopt;
}

}  // namespace mteval
