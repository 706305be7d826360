#include "mteval/campaign.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "mteval/io.hpp"

namespace fs = std::filesystem;

namespace mteval {
namespace {

std::vector<fs::path> sorted_entries(const fs::path& dir,
                                     bool directories_only) {
  std::vector<fs::path> entries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (directories_only ? entry.is_directory() : entry.is_regular_file())
      entries.push_back(entry.path());
  }
  // Directory iteration order is unspecified; sort for reproducible output.
  std::sort(entries.begin(), entries.end());
  return entries;
}

std::string system_key(const Submission& s) {
  return s.team + "." + s.description;
}

}  // namespace

IngestResult ingest_submissions(
    const std::string& root,
    const std::map<std::string, std::size_t>& ref_line_counts,
    const std::set<std::string>& baseline_keys) {
  IngestResult out;
  const fs::path root_path(root);
  if (!fs::is_directory(root_path))
    throw std::runtime_error("submission root is not a directory: " + root);

  for (const fs::path& pair_dir : sorted_entries(root_path, true)) {
    const std::string language_pair = pair_dir.filename().string();
    for (const fs::path& scenario_dir : sorted_entries(pair_dir, true)) {
      const std::string scenario = scenario_dir.filename().string();
      if (scenario != "constrained" && scenario != "unconstrained") {
        out.diagnostics.push_back(scenario_dir.string() +
                                  ": unknown scenario directory");
        continue;
      }
      for (const fs::path& file : sorted_entries(scenario_dir, false)) {
        const std::string name = file.filename().string();
        if (file.extension() != ".txt") {
          out.diagnostics.push_back(file.string() + ": not a .txt file");
          continue;
        }
        const std::string stem = name.substr(0, name.size() - 4);
        const std::size_t dot = stem.find('.');
        if (dot == std::string::npos || dot == 0 || dot + 1 == stem.size()) {
          out.diagnostics.push_back(
              file.string() + ": expected <team>.<description>.txt");
          continue;
        }
        Submission s;
        s.team = stem.substr(0, dot);
        s.description = stem.substr(dot + 1);
        s.scenario = scenario;
        s.language_pair = language_pair;
        s.hypotheses = read_lines(file.string());
        s.unranked = baseline_keys.count(stem) > 0;
        const auto ref = ref_line_counts.find(language_pair);
        if (ref == ref_line_counts.end()) {
          out.diagnostics.push_back(file.string() + ": no reference for " +
                                    language_pair);
          continue;
        }
        if (s.hypotheses.size() != ref->second) {
          out.diagnostics.push_back(
              file.string() + ": " + std::to_string(s.hypotheses.size()) +
              " lines, reference has " + std::to_string(ref->second));
          continue;
        }
        out.submissions.push_back(std::move(s));
      }
    }
  }
  return out;
}

CampaignReport evaluate_all(
    const std::vector<Submission>& submissions,
    const std::map<std::string, std::vector<std::string>>& references,
    const std::vector<MetricId>& metrics, MetricId primary,
    const MetricOptions& options, const ArtConfig& art, bool all_pairs,
    std::vector<std::string>* diagnostics) {
  // Group submissions per (language_pair, scenario) table, in first-seen
  // order.
  std::vector<std::pair<std::string, std::string>> table_keys;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>>
      groups;
  for (std::size_t i = 0; i < submissions.size(); ++i) {
    const auto key = std::make_pair(submissions[i].language_pair,
                                    submissions[i].scenario);
    auto [it, inserted] = groups.emplace(key, std::vector<std::size_t>{});
    if (inserted) table_keys.push_back(key);
    it->second.push_back(i);
  }

  const CorpusMetric primary_metric(primary, options);
  CampaignReport report;
  for (const auto& key : table_keys) {
    const auto& [language_pair, scenario] = key;
    const auto ref = references.find(language_pair);
    if (ref == references.end()) {
      if (diagnostics)
        diagnostics->push_back("no reference for " + language_pair +
                               "; skipping " + language_pair + "/" + scenario);
      continue;
    }
    const std::vector<std::string>& ref_lines = ref->second;

    struct Row {
      const Submission* submission = nullptr;
      RankedSystem ranked;
      std::vector<double> primary_stats;  // per-segment, row-major
      double primary_value = 0.0;
    };
    std::vector<Row> rows;
    for (std::size_t idx : groups.at(key)) {
      const Submission& s = submissions[idx];
      if (s.hypotheses.size() != ref_lines.size()) {
        if (diagnostics)
          diagnostics->push_back(system_key(s) + " (" + language_pair + "/" +
                                 scenario + "): line count mismatch");
        continue;
      }
      Row row;
      row.submission = &s;
      row.ranked.team = s.team;
      row.ranked.description = s.description;
      row.ranked.unranked = s.unranked;
      for (MetricId metric : metrics) {
        const CorpusMetric cm(metric, options);
        row.ranked.scores.push_back(
            cm.score_corpus(s.hypotheses, ref_lines));
      }
      const std::size_t w = primary_metric.width();
      row.primary_stats.reserve(ref_lines.size() * w);
      std::vector<double> sums(w, 0.0);
      for (std::size_t i = 0; i < ref_lines.size(); ++i) {
        const std::vector<double> stats =
            primary_metric.segment_stats(s.hypotheses[i], ref_lines[i]);
        for (std::size_t k = 0; k < w; ++k) {
          row.primary_stats.push_back(stats[k]);
          sums[k] += stats[k];
        }
      }
      row.primary_value = primary_metric.reduce(sums);
      rows.push_back(std::move(row));
    }
    if (rows.empty()) continue;

    const bool ascending = lower_is_better(primary);
    std::stable_sort(rows.begin(), rows.end(), [&](const Row& a,
                                                   const Row& b) {
      if (a.primary_value != b.primary_value)
        return ascending ? a.primary_value < b.primary_value
                         : a.primary_value > b.primary_value;
      if (a.ranked.team != b.ranked.team) return a.ranked.team < b.ranked.team;
      return a.ranked.description < b.ranked.description;
    });

    auto paired_stats = [&](const Row& a, const Row& b) {
      PairedSystemStats paired;
      paired.width = primary_metric.width();
      paired.a = a.primary_stats;
      paired.b = b.primary_stats;
      return paired;
    };

    TableReport table;
    table.language_pair = language_pair;
    table.scenario = scenario;
    table.metrics = metrics;

    std::vector<bool> boundary(rows.size(), false);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const SignificanceResult r =
          art_pvalue(paired_stats(rows[i - 1], rows[i]),
                     primary_metric.reducer(), art.repetitions, art.seed,
                     art.threads);
      boundary[i] = r.p_value <= art.alpha;
      PairwiseTest test;
      test.system_a = system_key(*rows[i - 1].submission);
      test.system_b = system_key(*rows[i].submission);
      test.metric = primary;
      test.result = r;
      table.adjacent_tests.push_back(std::move(test));
    }
    if (all_pairs) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          PairwiseTest test;
          test.system_a = system_key(*rows[i].submission);
          test.system_b = system_key(*rows[j].submission);
          test.metric = primary;
          test.result = art_pvalue(paired_stats(rows[i], rows[j]),
                                   primary_metric.reducer(), art.repetitions,
                                   art.seed, art.threads);
          table.all_pairs_tests.push_back(std::move(test));
        }
      }
    }

    std::vector<RankedSystem> ordered;
    ordered.reserve(rows.size());
    for (const Row& row : rows) ordered.push_back(row.ranked);
    table.ranking = cluster_rank(
        ordered, [&](std::size_t, std::size_t b) { return boundary[b]; });
    report.tables.push_back(std::move(table));
  }
  return report;
}

}  // namespace mteval
