#include "mteval/report.hpp"

#include <cstdio>
#include <sstream>

namespace mteval {
namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string arrow(MetricId id) { return lower_is_better(id) ? "↓" : "↑"; }

std::string metric_header(MetricId id) {
  return display_name(id) + " [" + arrow(id) + "]";
}

std::string scale_label(Scale scale) {
  return scale == Scale::zero_to_100 ? "0-100" : "0-1";
}

void markdown_row(std::ostringstream& out,
                  const std::vector<std::string>& cells) {
  out << '|';
  for (const std::string& cell : cells) out << ' ' << cell << " |";
  out << '\n';
}

void markdown_rule(std::ostringstream& out, std::size_t columns) {
  out << '|';
  for (std::size_t i = 0; i < columns; ++i) out << " --- |";
  out << '\n';
}

}  // namespace

std::string display_name(MetricId id) {
  switch (id) {
    case MetricId::bleu:
      return "BLEU";
    case MetricId::chrf:
      return "chrF";
    case MetricId::ter:
      return "TER";
    case MetricId::beer:
      return "BEER";
    case MetricId::hter:
      return "hTER";
  }
  return "?";
}

std::string format_score(const MetricScore& score) {
  return fixed(score.value, score.scale == Scale::zero_to_1 ? 3 : 1);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string render_ranking_markdown(const CampaignReport& report) {
  std::ostringstream out;
  bool first = true;
  for (const TableReport& table : report.tables) {
    if (!first) out << '\n';
    first = false;
    out << "## " << table.language_pair << " " << table.scenario << "\n\n";
    std::vector<std::string> header = {"Rank", "Team", "Description"};
    for (MetricId metric : table.metrics)
      header.push_back(metric_header(metric));
    markdown_row(out, header);
    markdown_rule(out, header.size());
    bool first_cluster = true;
    for (const Cluster& cluster : table.ranking.clusters) {
      if (!first_cluster) {
        // Cluster separator, mirroring the "lines indicate clusters"
        // presentation.
        std::vector<std::string> rule(header.size(), "---");
        markdown_row(out, rule);
      }
      first_cluster = false;
      for (const RankedSystem& system : cluster.systems) {
        std::vector<std::string> cells;
        cells.push_back(system.unranked || cluster.rank == 0
                            ? "-"
                            : std::to_string(cluster.rank));
        cells.push_back(system.team);
        cells.push_back(system.description);
        for (const MetricScore& score : system.scores)
          cells.push_back(format_score(score));
        markdown_row(out, cells);
      }
    }
  }
  return out.str();
}

std::string render_ranking_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "language_pair,scenario,rank,cluster,team,description";
  if (!report.tables.empty())
    for (MetricId metric : report.tables.front().metrics)
      out << ',' << metric_name(metric);
  out << '\n';
  for (const TableReport& table : report.tables) {
    int cluster_ordinal = 0;
    for (const Cluster& cluster : table.ranking.clusters) {
      ++cluster_ordinal;
      for (const RankedSystem& system : cluster.systems) {
        out << csv_escape(table.language_pair) << ','
            << csv_escape(table.scenario) << ',';
        if (system.unranked || cluster.rank == 0)
          out << '-';
        else
          out << cluster.rank;
        out << ',' << cluster_ordinal << ',' << csv_escape(system.team) << ','
            << csv_escape(system.description);
        for (const MetricScore& score : system.scores)
          out << ',' << format_score(score);
        out << '\n';
      }
    }
  }
  return out.str();
}

std::string render_significance_csv(const std::vector<PairwiseTest>& tests) {
  std::ostringstream out;
  out << "system_a,system_b,metric,observed_delta,p_value,repetitions,seed\n";
  for (const PairwiseTest& test : tests) {
    out << csv_escape(test.system_a) << ',' << csv_escape(test.system_b) << ','
        << metric_name(test.metric) << ','
        << fixed(test.result.observed_delta, 6) << ','
        << fixed(test.result.p_value, 6) << ',' << test.result.repetitions
        << ',' << test.result.seed << '\n';
  }
  return out.str();
}

std::string render_metric_report_csv(const std::vector<MetricScore>& scores) {
  std::ostringstream out;
  out << "metric,value,scale\n";
  for (const MetricScore& score : scores) {
    out << metric_name(score.metric) << ',' << fixed(score.value, 4) << ','
        << scale_label(score.scale) << '\n';
  }
  return out.str();
}

std::string render_dual_reference_markdown(
    const std::vector<DualReferenceRow>& rows) {
  std::ostringstream out;
  std::vector<std::string> header = {
      "System", "BLEU [↑] reference", "chrF [↑] reference",
      "BLEU [↑] post-edition", "chrF [↑] post-edition"};
  markdown_row(out, header);
  markdown_rule(out, header.size());
  for (const DualReferenceRow& row : rows) {
    markdown_row(out, {row.system, format_score(row.bleu_reference),
                       format_score(row.chrf_reference),
                       format_score(row.bleu_postedit),
                       format_score(row.chrf_postedit)});
  }
  return out.str();
}

}  // namespace mteval
