// mteval: evaluation toolkit CLI. Subcommands: evaluate, rank, significance,
// split, stats, worst-k. Exit codes: 0 success, 1 usage error, 2 data
// contract violation.
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mteval/campaign.hpp"
#include "mteval/corpus_metric.hpp"
#include "mteval/io.hpp"
#include "mteval/pipeline.hpp"
#include "mteval/report.hpp"
#include "mteval/significance.hpp"
#include "mteval/text.hpp"

namespace {

using namespace mteval;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<MetricId> parse_metric_list(const std::string& csv) {
  std::vector<MetricId> metrics;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    const auto id = parse_metric(name);
    if (!id) throw UsageError("unknown metric: " + name);
    metrics.push_back(*id);
  }
  if (metrics.empty()) throw UsageError("no metrics given");
  return metrics;
}

std::string file_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

struct EvaluateArgs {
  std::string hyp, ref, beer_model;
  std::string metrics = "bleu,chrf,ter,beer";
  std::size_t max_order = 4;
  std::size_t chrf_order = 6;
  double chrf_beta = 2.0;
  double smooth_k = 0.0;
  bool fold_case = false;
};

int run_evaluate(const EvaluateArgs& args) {
  MetricOptions options;
  options.bleu.max_order = args.max_order;
  options.bleu.smooth_k = args.smooth_k;
  options.chrf.max_order = args.chrf_order;
  options.chrf.beta = args.chrf_beta;
  options.fold_case = args.fold_case;
  if (!args.beer_model.empty())
    options.beer_model = BeerModel::load(args.beer_model);

  const std::vector<std::string> hyps = read_lines(args.hyp);
  const std::vector<std::string> refs = read_lines(args.ref);
  std::vector<MetricScore> scores;
  for (MetricId id : parse_metric_list(args.metrics)) {
    const CorpusMetric metric(id, options);
    scores.push_back(metric.score_corpus(hyps, refs));
  }
  std::cout << render_metric_report_csv(scores);
  return kExitOk;
}

struct SignificanceArgs {
  std::string hyp_a, hyp_b, ref;
  std::string metric = "bleu";
  std::uint64_t reps = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

int run_significance(const SignificanceArgs& args) {
  const auto id = parse_metric(args.metric);
  if (!id) throw UsageError("unknown metric: " + args.metric);
  const CorpusMetric metric(*id, MetricOptions{});

  const std::vector<std::string> hyp_a = read_lines(args.hyp_a);
  const std::vector<std::string> hyp_b = read_lines(args.hyp_b);
  const std::vector<std::string> refs = read_lines(args.ref);
  if (hyp_a.size() != refs.size() || hyp_b.size() != refs.size())
    throw std::runtime_error("hypothesis/reference line count mismatch");
  if (refs.empty()) throw std::runtime_error("empty reference file");

  PairedSystemStats paired;
  paired.width = metric.width();
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (double v : metric.segment_stats(hyp_a[i], refs[i]))
      paired.a.push_back(v);
    for (double v : metric.segment_stats(hyp_b[i], refs[i]))
      paired.b.push_back(v);
  }

  PairwiseTest test;
  test.system_a = file_stem(args.hyp_a);
  test.system_b = file_stem(args.hyp_b);
  test.metric = *id;
  test.result = art_pvalue(paired, metric.reducer(), args.reps, args.seed,
                           args.threads);
  std::cout << render_significance_csv({test});
  return kExitOk;
}

struct RankArgs {
  std::string submissions, refs, baselines, sig_report;
  std::string metrics = "bleu,chrf";
  std::string primary = "bleu";
  std::string format = "markdown";
  std::string beer_model;
  double alpha = 0.05;
  std::uint64_t reps = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool all_pairs = false;
};

int run_rank(const RankArgs& args) {
  if (args.format != "markdown" && args.format != "csv")
    throw UsageError("unknown format: " + args.format);
  const auto primary = parse_metric(args.primary);
  if (!primary) throw UsageError("unknown metric: " + args.primary);
  const std::vector<MetricId> metrics = parse_metric_list(args.metrics);

  MetricOptions options;
  if (!args.beer_model.empty())
    options.beer_model = BeerModel::load(args.beer_model);

  std::map<std::string, std::vector<std::string>> references;
  std::map<std::string, std::size_t> ref_counts;
  for (const auto& entry :
       std::filesystem::directory_iterator(args.refs)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt")
      continue;
    const std::string pair = entry.path().stem().string();
    references[pair] = read_lines(entry.path().string());
    ref_counts[pair] = references[pair].size();
  }
  if (references.empty())
    throw std::runtime_error("no reference .txt files in " + args.refs);

  std::set<std::string> baseline_keys;
  if (!args.baselines.empty()) {
    for (const std::string& line : read_lines(args.baselines)) {
      if (!line.empty()) baseline_keys.insert(line);
    }
  }

  const IngestResult ingested =
      ingest_submissions(args.submissions, ref_counts, baseline_keys);
  for (const std::string& diagnostic : ingested.diagnostics)
    std::cerr << "warning: " << diagnostic << '\n';
  if (ingested.submissions.empty())
    throw std::runtime_error("no usable submissions under " +
                             args.submissions);

  ArtConfig art;
  art.repetitions = args.reps;
  art.alpha = args.alpha;
  art.seed = args.seed;
  art.threads = args.threads;

  std::vector<std::string> diagnostics;
  const CampaignReport report =
      evaluate_all(ingested.submissions, references, metrics, *primary,
                   options, art, args.all_pairs, &diagnostics);
  for (const std::string& diagnostic : diagnostics)
    std::cerr << "warning: " << diagnostic << '\n';

  std::cout << (args.format == "markdown" ? render_ranking_markdown(report)
                                          : render_ranking_csv(report));

  if (!args.sig_report.empty()) {
    std::vector<PairwiseTest> tests;
    for (const TableReport& table : report.tables) {
      tests.insert(tests.end(), table.adjacent_tests.begin(),
                   table.adjacent_tests.end());
      tests.insert(tests.end(), table.all_pairs_tests.begin(),
                   table.all_pairs_tests.end());
    }
    write_text(args.sig_report, render_significance_csv(tests));
  }
  return kExitOk;
}

struct SplitArgs {
  std::string input, out;
  std::string mode = "round2";
  bool header = false;
  SplitConfig cfg;
  bool seed_set = false;
  bool test_size_set = false;
};

int run_split(SplitArgs args) {
  if (args.mode != "round1" && args.mode != "round2")
    throw UsageError("unknown split mode: " + args.mode);
  if (args.mode == "round2") {
    if (!args.seed_set)
      throw UsageError("--seed is required (round-2 split is randomized)");
    if (args.cfg.val_size + args.cfg.test_size != args.cfg.round2_quota)
      throw UsageError("--val-size + --test-size must equal --quota");
  } else if (args.test_size_set) {
    // In round-1 mode --test-size names the single selected set.
    args.cfg.round1_test_size = args.cfg.test_size;
  }

  const std::vector<SegmentPair> raw = read_pairs_tsv(args.input, args.header);
  auto [filtered, filter_audit] = filter_battery(raw, args.cfg);
  const std::vector<SegmentPair> kept = remove_outliers(filtered, args.cfg);

  SplitResult result;
  if (args.mode == "round2") {
    result = round2_split(kept, args.cfg);
  } else {
    const double avg = mean_source_words(kept);
    const Round1Selection selection =
        round1_select_test(kept, avg, args.cfg);
    std::set<std::string> test_keys;
    for (const SegmentPair& p : selection.test)
      test_keys.insert(p.source_text + '\t' + p.target_text);
    for (const SegmentPair& p : kept) {
      // Exact duplicates were removed by the battery, so the text pair
      // identifies a segment uniquely.
      if (test_keys.count(p.source_text + '\t' + p.target_text))
        result.test.push_back(p);
      else
        result.train.push_back(p);
    }
    result.audit.avg_source_words = avg;
    result.audit.shortfall = selection.shortfall;
    result.audit.test_size = result.test.size();
    result.audit.seed = args.cfg.seed;
  }
  result.audit.filter = filter_audit;
  result.audit.removed_outliers = filtered.size() - kept.size();
  write_split(args.out, result, args.cfg);

  std::cerr << "train " << result.train.size() << ", valid "
            << result.validation.size() << ", test " << result.test.size()
            << (result.audit.shortfall ? " (shortfall)" : "") << '\n';
  return kExitOk;
}

int run_stats(const std::string& corpus) {
  const std::vector<std::string> lines = read_lines(corpus);
  std::vector<Segment> segments;
  segments.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    segments.push_back(Segment{i, lines[i]});
  const CorpusStats stats = corpus_stats(segments);
  std::cout << "sentences\t" << stats.num_sentences << '\n'
            << "tokens\t" << stats.num_tokens << '\n'
            << "vocabulary\t" << stats.vocab_size << '\n';
  return kExitOk;
}

int run_worst_k(const std::string& input, bool header, std::size_t k,
                const std::string& out_path) {
  const std::vector<SegmentPair> pairs = read_pairs_tsv(input, header);
  const std::vector<SegmentPair> worst = worst_k_by_score(pairs, k);
  if (!out_path.empty()) {
    write_pairs_tsv(out_path, worst);
    return kExitOk;
  }
  char buf[64];
  for (const SegmentPair& p : worst) {
    const auto ptr = std::to_chars(buf, buf + sizeof(buf), p.align_score).ptr;
    std::cout << p.source_text << '\t' << p.target_text << '\t'
              << std::string_view(buf, static_cast<std::size_t>(ptr - buf))
              << '\t' << p.provenance << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Machine-translation evaluation toolkit"};
  app.require_subcommand(1);

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score a hypothesis file against a reference file");
  evaluate->add_option("--hyp", eval_args.hyp, "Hypothesis file")->required();
  evaluate->add_option("--ref", eval_args.ref, "Reference file")->required();
  evaluate->add_option("--metrics", eval_args.metrics,
                       "Comma-separated metric list");
  evaluate->add_option("--beer-model", eval_args.beer_model,
                       "BEER weight file (feature<TAB>weight)");
  evaluate->add_option("--max-order", eval_args.max_order,
                       "BLEU n-gram order");
  evaluate->add_option("--chrf-order", eval_args.chrf_order,
                       "chrF n-gram order");
  evaluate->add_option("--chrf-beta", eval_args.chrf_beta,
                       "chrF recall weight");
  evaluate->add_option("--smooth-k", eval_args.smooth_k,
                       "BLEU add-k smoothing");
  evaluate->add_flag("--fold-case", eval_args.fold_case,
                     "Case-insensitive scoring");

  SignificanceArgs sig_args;
  CLI::App* significance = app.add_subcommand(
      "significance",
      "Approximate randomization test between two hypothesis files");
  significance->add_option("--hyp-a", sig_args.hyp_a, "System A file")
      ->required();
  significance->add_option("--hyp-b", sig_args.hyp_b, "System B file")
      ->required();
  significance->add_option("--ref", sig_args.ref, "Reference file")
      ->required();
  significance->add_option("--metric", sig_args.metric, "Metric to test");
  significance->add_option("--reps", sig_args.reps, "Repetitions");
  significance->add_option("--seed", sig_args.seed, "Random seed")
      ->required();
  significance->add_option("--threads", sig_args.threads, "Worker threads");

  RankArgs rank_args;
  CLI::App* rank = app.add_subcommand(
      "rank", "Rank submissions with significance clustering");
  rank->add_option("--submissions", rank_args.submissions,
                   "Root directory <pair>/<scenario>/<team>.<description>.txt")
      ->required();
  rank->add_option("--refs", rank_args.refs,
                   "Directory of <language_pair>.txt reference files")
      ->required();
  rank->add_option("--metrics", rank_args.metrics,
                   "Comma-separated metric list");
  rank->add_option("--primary", rank_args.primary, "Ranking metric");
  rank->add_option("--alpha", rank_args.alpha, "Significance level");
  rank->add_option("--reps", rank_args.reps, "ART repetitions");
  rank->add_option("--seed", rank_args.seed, "Random seed")->required();
  rank->add_option("--format", rank_args.format, "markdown or csv");
  rank->add_option("--baselines", rank_args.baselines,
                   "Manifest of <team>.<description> rows shown unranked");
  rank->add_option("--beer-model", rank_args.beer_model, "BEER weight file");
  rank->add_option("--threads", rank_args.threads, "Worker threads");
  rank->add_option("--sig-report", rank_args.sig_report,
                   "Write significance CSV here");
  rank->add_flag("--all-pairs", rank_args.all_pairs,
                 "Audit every system pair, not just adjacent ones");

  SplitArgs split_args;
  CLI::App* split = app.add_subcommand(
      "split", "Filter a scored bitext TSV and split it");
  split->add_option("--input", split_args.input, "Input TSV")->required();
  split->add_option("--out", split_args.out, "Output directory")->required();
  split->add_flag("--header", split_args.header, "Skip a TSV header line");
  split->add_option("--mode", split_args.mode, "round1 or round2");
  split->add_option("--min-score", split_args.cfg.min_align_score,
                    "Alignment score threshold");
  split->add_option("--max-words", split_args.cfg.max_words,
                    "Outlier word-count cutoff");
  split->add_option("--ratio-low", split_args.cfg.ratio_low,
                    "Length window lower multiplier");
  split->add_option("--ratio-high", split_args.cfg.ratio_high,
                    "Length window upper multiplier");
  split->add_option("--quota", split_args.cfg.round2_quota,
                    "Validation+test seats (round 2)");
  split->add_option("--val-size", split_args.cfg.val_size,
                    "Validation size (round 2)");
  auto* test_size_opt =
      split->add_option("--test-size", split_args.cfg.test_size,
                        "Test size (round 2) or round-1 test size");
  auto* seed_opt =
      split->add_option("--seed", split_args.cfg.seed, "Shuffle seed");
  split->add_flag("--dedup-eval-vs-train", split_args.cfg.dedup_eval_vs_train,
                  "Drop train pairs whose source appears in validation/test");

  std::string stats_corpus;
  CLI::App* stats =
      app.add_subcommand("stats", "Sentence/token/vocabulary counts");
  stats->add_option("--corpus", stats_corpus, "Text file")->required();

  std::string worst_input, worst_out;
  bool worst_header = false;
  std::size_t worst_k = 500;
  CLI::App* worst =
      app.add_subcommand("worst-k", "Lowest-scoring pairs from a TSV");
  worst->add_option("--input", worst_input, "Input TSV")->required();
  worst->add_flag("--header", worst_header, "Skip a TSV header line");
  worst->add_option("--k", worst_k, "How many pairs");
  worst->add_option("--out", worst_out, "Write TSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*evaluate) return run_evaluate(eval_args);
    if (*significance) return run_significance(sig_args);
    if (*rank) return run_rank(rank_args);
    if (*split) {
      split_args.seed_set = seed_opt->count() > 0;
      split_args.test_size_set = test_size_opt->count() > 0;
      return run_split(split_args);
    }
    if (*stats) return run_stats(stats_corpus);
    if (*worst) return run_worst_k(worst_input, worst_header, worst_k,
                                   worst_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
