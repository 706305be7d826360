#include "mteval/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mteval {
namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void write_pair_files(const std::string& dir, const std::string& stem,
                      const std::vector<SegmentPair>& pairs) {
  std::ofstream src = open_out(dir + "/" + stem + ".src");
  std::ofstream tgt = open_out(dir + "/" + stem + ".tgt");
  for (const SegmentPair& p : pairs) {
    src << p.source_text << '\n';
    tgt << p.target_text << '\n';
  }
}

}  // namespace

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out = open_out(path);
  for (const std::string& line : lines) out << line << '\n';
}

std::vector<SegmentPair> read_pairs_tsv(const std::string& path, bool header) {
  const std::vector<std::string> lines = read_lines(path);
  std::vector<SegmentPair> pairs;
  pairs.reserve(lines.size());
  for (std::size_t i = header ? 1 : 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    const std::string where = path + ":" + std::to_string(i + 1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (fields.size() != 4)
      throw std::runtime_error(where + ": expected 4 tab-separated columns, got " +
                               std::to_string(fields.size()));
    SegmentPair p;
    p.source_text = fields[0];
    p.target_text = fields[1];
    std::size_t used = 0;
    try {
      p.align_score = std::stod(fields[2], &used);
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": bad align_score: " + fields[2]);
    }
    if (used != fields[2].size() || !std::isfinite(p.align_score))
      throw std::runtime_error(where + ": bad align_score: " + fields[2]);
    p.provenance = fields[3];
    if (p.provenance.empty())
      throw std::runtime_error(where + ": empty provenance");
    pairs.push_back(std::move(p));
  }
  return pairs;
}

void write_pairs_tsv(const std::string& path,
                     const std::vector<SegmentPair>& pairs) {
  std::ofstream out = open_out(path);
  char buf[64];
  for (const SegmentPair& p : pairs) {
    // Shortest representation that round-trips the score exactly.
    const auto ptr =
        std::to_chars(buf, buf + sizeof(buf), p.align_score).ptr;
    out << p.source_text << '\t' << p.target_text << '\t'
        << std::string_view(buf, static_cast<std::size_t>(ptr - buf)) << '\t'
        << p.provenance << '\n';
  }
}

std::string audit_json(const SplitResult& result, const SplitConfig& cfg) {
  ordered_json j;
  j["config"] = {{"max_words", cfg.max_words},
                 {"min_align_score", cfg.min_align_score},
                 {"ratio_low", cfg.ratio_low},
                 {"ratio_high", cfg.ratio_high},
                 {"round1_test_size", cfg.round1_test_size},
                 {"round2_quota", cfg.round2_quota},
                 {"val_size", cfg.val_size},
                 {"test_size", cfg.test_size},
                 {"seed", cfg.seed},
                 {"dedup_eval_vs_train", cfg.dedup_eval_vs_train}};
  const FilterAudit& f = result.audit.filter;
  j["filter"] = {{"input", f.input},
                 {"removed_low_score", f.removed_low_score},
                 {"removed_identical", f.removed_identical},
                 {"removed_exact_duplicate", f.removed_exact_duplicate},
                 {"removed_near_duplicate", f.removed_near_duplicate},
                 {"kept", f.kept}};
  j["removed_outliers"] = result.audit.removed_outliers;
  j["split"] = {{"avg_source_words", result.audit.avg_source_words},
                {"in_window", result.audit.in_window},
                {"selected", result.audit.selected},
                {"shortfall", result.audit.shortfall},
                {"validation_size", result.audit.validation_size},
                {"test_size", result.audit.test_size},
                {"train_size", result.train.size()},
                {"train_dedup_removed", result.audit.train_dedup_removed},
                {"seed", result.audit.seed}};
  ordered_json quotas = ordered_json::array();
  for (const QuotaAudit& q : result.audit.quotas) {
    quotas.push_back({{"provenance", q.provenance},
                      {"fraction", q.fraction},
                      {"quota", q.quota},
                      {"available", q.available},
                      {"taken", q.taken}});
  }
  j["split"]["quotas"] = std::move(quotas);
  return j.dump(2) + "\n";
}

void write_split(const std::string& out_dir, const SplitResult& result,
                 const SplitConfig& cfg) {
  std::filesystem::create_directories(out_dir);
  write_pair_files(out_dir, "train", result.train);
  write_pair_files(out_dir, "valid", result.validation);
  write_pair_files(out_dir, "test", result.test);
  std::ofstream audit = open_out(out_dir + "/audit.json");
  audit << audit_json(result, cfg);
}

}  // namespace mteval
