// End-to-end acceptance gauntlet. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails. Library
// behaviour is checked in-process; command-line behaviour through the tool
// binary passed via --tool.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mteval/beer.hpp"
#include "mteval/bleu.hpp"
#include "mteval/campaign.hpp"
#include "mteval/chrf.hpp"
#include "mteval/corpus_metric.hpp"
#include "mteval/io.hpp"
#include "mteval/pipeline.hpp"
#include "mteval/report.hpp"
#include "mteval/significance.hpp"
#include "mteval/ter.hpp"
#include "mteval/text.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace mteval;

namespace {

struct Context {
  std::string tool;      // path to the CLI binary
  fs::path data;         // checked-in fixtures (golden files)
  fs::path work;         // scratch directory
  bool write_golden = false;
};

using Failures = std::vector<std::string>;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::string("<unreadable: ") + path.string() + ">";
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
}

TokenSequence random_tokens(std::mt19937_64& rng, std::size_t min_len,
                            std::size_t max_len, int vocab) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> pick(0, vocab - 1);
  TokenSequence out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::string(1, static_cast<char>('a' + pick(rng))));
  return out;
}

std::string random_sentence(std::mt19937_64& rng, std::size_t min_words,
                            std::size_t max_words, int vocab) {
  std::uniform_int_distribution<std::size_t> len(min_words, max_words);
  std::uniform_int_distribution<int> pick(0, vocab - 1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += "w" + std::to_string(pick(rng));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1: TER equals the exhaustive optimum on small instances; BLEU and
// chrF match independent brute-force oracles.
Failures criterion_metric_oracles(Context&) {
  Failures failures;
  std::mt19937_64 rng(4101);

  std::size_t ter_mismatches = 0;
  const int ter_instances = 250;
  for (int i = 0; i < ter_instances; ++i) {
    const TokenSequence hyp = random_tokens(rng, 0, 6, 4);
    const TokenSequence ref = random_tokens(rng, 1, 6, 4);
    const TerResult result = ter(hyp, ref);
    const std::size_t oracle = oracles::ter_edits(hyp, ref);
    if (result.edits != oracle) ++ter_mismatches;
  }
  if (ter_mismatches != 0)
    failures.push_back("ter mismatched the exhaustive oracle on " +
                       std::to_string(ter_mismatches) + "/" +
                       std::to_string(ter_instances) + " instances");

  int bleu_bad = 0;
  for (int c = 0; c < 60; ++c) {
    std::uniform_int_distribution<std::size_t> corpus_len(1, 5);
    std::vector<std::pair<oracles::Tokens, oracles::Tokens>> corpus;
    std::vector<BleuStats> stats;
    const std::size_t n = corpus_len(rng);
    for (std::size_t s = 0; s < n; ++s) {
      const TokenSequence hyp = random_tokens(rng, 0, 12, 4);
      const TokenSequence ref = random_tokens(rng, 1, 12, 4);
      stats.push_back(bleu_segment_stats(hyp, ref, 4));
      corpus.emplace_back(hyp, ref);
    }
    const double lib = corpus_bleu(stats).value;
    const double oracle = oracles::corpus_bleu(corpus, 4);
    if (std::fabs(lib - oracle) > 1e-9) ++bleu_bad;
  }
  if (bleu_bad != 0)
    failures.push_back("corpus_bleu drifted beyond 1e-9 from the oracle on " +
                       std::to_string(bleu_bad) + "/60 corpora");

  int chrf_bad = 0;
  static const std::string alphabet = "abcd ";
  std::uniform_int_distribution<std::size_t> slen(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  auto random_string = [&](bool nonempty) {
    std::string out;
    do {
      out.clear();
      const std::size_t n = slen(rng);
      for (std::size_t i = 0; i < n; ++i) out += alphabet[pick(rng)];
    } while (nonempty && normalize(out).empty());
    return out;
  };
  for (int i = 0; i < 60; ++i) {
    const std::string hyp = random_string(false);
    const std::string ref = random_string(true);
    const double lib = chrf(hyp, ref).value;
    const double oracle = oracles::chrf(to_code_points(normalize(hyp)),
                                        to_code_points(normalize(ref)), 6, 2.0);
    if (std::fabs(lib - oracle) > 1e-9) ++chrf_bad;
  }
  if (chrf_bad != 0)
    failures.push_back("chrf drifted beyond 1e-9 from the oracle on " +
                       std::to_string(chrf_bad) + "/60 fixtures");
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 2: identity/zero properties on random nonempty inputs.
Failures criterion_identity_properties(Context&) {
  Failures failures;
  std::mt19937_64 rng(4202);
  const CorpusMetric bleu_metric(MetricId::bleu, {});
  const BeerModel uniform = BeerModel::uniform_default();
  for (int i = 0; i < 100 && failures.empty(); ++i) {
    // At least max_order words so the identity corpus has 4-gram mass;
    // unsmoothed BLEU is 0 by definition when any order has no n-grams.
    const std::string text = random_sentence(rng, 4, 10, 8);
    const TokenSequence tokens = tokenize_words(normalize(text));

    const double bleu_value =
        bleu_metric.score_corpus({text}, {text}).value;
    if (std::fabs(bleu_value - 100.0) > 1e-9)
      failures.push_back("BLEU(h,h) = " + std::to_string(bleu_value) +
                         " for \"" + text + "\"");
    const double chrf_value = chrf(text, text).value;
    if (std::fabs(chrf_value - 1.0) > 1e-12)
      failures.push_back("chrf(x,x) = " + std::to_string(chrf_value));
    const TerResult t = ter(tokens, tokens);
    if (t.edits != 0 || t.score != 0.0)
      failures.push_back("ter(h,h) nonzero for \"" + text + "\"");
    const TerResult h = hter(tokens, tokens);
    if (h.edits != 0 || h.score != 0.0)
      failures.push_back("hter(h,h) nonzero for \"" + text + "\"");
    const double beer_value = beer(text, text, uniform).value;
    if (std::fabs(beer_value - 100.0) > 1e-9)
      failures.push_back("beer identity = " + std::to_string(beer_value));
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 3: sampled ART p-values converge to the exact enumeration.
Failures criterion_art_convergence(Context&) {
  Failures failures;
  std::mt19937_64 rng(4303);
  std::uniform_int_distribution<std::size_t> seg_count(2, 10);

  int fixtures = 0;
  const std::vector<MetricId> metric_ids = {MetricId::bleu, MetricId::ter,
                                            MetricId::chrf};
  for (MetricId id : metric_ids) {
    const CorpusMetric metric(id, {});
    for (int f = 0; f < 7; ++f) {
      const std::size_t n = seg_count(rng);
      PairedSystemStats paired;
      paired.width = metric.width();
      for (std::size_t s = 0; s < n; ++s) {
        const std::string ref = random_sentence(rng, 2, 8, 5);
        const std::string hyp_a = random_sentence(rng, 1, 8, 5);
        const std::string hyp_b = random_sentence(rng, 1, 8, 5);
        const auto sa = metric.segment_stats(hyp_a, ref);
        const auto sb = metric.segment_stats(hyp_b, ref);
        paired.a.insert(paired.a.end(), sa.begin(), sa.end());
        paired.b.insert(paired.b.end(), sb.begin(), sb.end());
      }
      ++fixtures;
      const double exact =
          exact_randomization_pvalue(paired, metric.reducer()).p_value;
      for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        const double sampled =
            art_pvalue(paired, metric.reducer(), 10000, seed).p_value;
        if (std::fabs(sampled - exact) > 0.02) {
          failures.push_back(
              metric_name(id) + " fixture " + std::to_string(f) + " seed " +
              std::to_string(seed) + ": |" + std::to_string(sampled) + " - " +
              std::to_string(exact) + "| > 0.02");
        }
      }
    }
  }
  if (fixtures < 20)
    failures.push_back("only " + std::to_string(fixtures) + " fixtures");

  // Identical systems: p must be exactly 1 for any seed.
  PairedSystemStats same;
  same.width = 1;
  for (int i = 0; i < 10; ++i) {
    same.a.push_back(0.1 * i);
    same.b.push_back(0.1 * i);
  }
  const auto mean_reduce = [](const std::vector<double>& sums) {
    return sums[0];
  };
  for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
    const double p = art_pvalue(same, mean_reduce, 10000, seed).p_value;
    if (p != 1.0)
      failures.push_back("identical systems gave p = " + std::to_string(p));
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Shared fixtures for the CLI determinism checks.
void write_small_split_tsv(const fs::path& path) {
  std::mt19937_64 rng(4404);
  std::ostringstream out;
  for (int i = 0; i < 3000; ++i) {
    const char* prov = i % 3 ? "X" : "Y";
    std::uniform_int_distribution<int> len(8, 16);
    const int n = len(rng);
    std::string src, tgt;
    for (int j = 0; j < n; ++j) {
      if (j) {
        src += ' ';
        tgt += ' ';
      }
      src += "r" + std::to_string(i) + "s" + std::to_string(j);
      tgt += "r" + std::to_string(i) + "t" + std::to_string(j);
    }
    out << src << '\t' << tgt << '\t' << 1.05 + 0.0001 * (i % 500) << '\t'
        << prov << '\n';
  }
  write_file(path, out.str());
}

std::vector<std::string> rank_reference_lines() {
  std::vector<std::string> refs;
  for (int i = 0; i < 25; ++i)
    refs.push_back("shared reference line " + std::to_string(i) +
                   " alpha beta gamma delta");
  return refs;
}

std::vector<std::string> rank_tweaked_lines() {
  auto lines = rank_reference_lines();
  for (std::size_t i = 0; i < lines.size(); ++i)
    lines[i] = lines[i].substr(0, lines[i].rfind(' ')) + " omega" +
               std::to_string(i);
  return lines;
}

std::vector<std::string> rank_garbage_lines() {
  std::vector<std::string> lines;
  for (int i = 0; i < 25; ++i)
    lines.push_back("junk" + std::to_string(i) + " qq ww ee rr tt yy uu");
  return lines;
}

void write_lines_file(const fs::path& path,
                      const std::vector<std::string>& lines) {
  std::ostringstream out;
  for (const auto& line : lines) out << line << '\n';
  write_file(path, out.str());
}

void write_rank_fixture(const fs::path& root) {
  write_lines_file(root / "refs" / "en-xx.txt", rank_reference_lines());
  const fs::path subs = root / "submissions" / "en-xx" / "constrained";
  write_lines_file(subs / "acme.copy.txt", rank_reference_lines());
  write_lines_file(subs / "beta.tweak.txt", rank_tweaked_lines());
  write_lines_file(subs / "gamma.weak.txt", rank_garbage_lines());
  write_lines_file(subs / "old.base.txt", rank_garbage_lines());
  write_file(root / "baselines.txt", "old.base\n");
}

// Criterion 4: byte-identical reruns and thread-count independence.
Failures criterion_determinism(Context& ctx) {
  Failures failures;

  // split: same seed, two runs, every output file byte-identical.
  const fs::path tsv = ctx.work / "det_split.tsv";
  write_small_split_tsv(tsv);
  for (const char* out_name : {"det_out_a", "det_out_b"}) {
    std::ostringstream cmd;
    cmd << '"' << ctx.tool << "\" split --input \"" << tsv.string()
        << "\" --out \"" << (ctx.work / out_name).string()
        << "\" --mode round2 --quota 400 --val-size 200 --test-size 200"
        << " --seed 5 > \"" << (ctx.work / out_name).string() << ".log\" 2>&1";
    const int rc = run_command(cmd.str());
    if (rc != 0)
      failures.push_back(std::string("split run into ") + out_name +
                         " exited with " + std::to_string(rc));
  }
  for (const char* file :
       {"train.src", "train.tgt", "valid.src", "valid.tgt", "test.src",
        "test.tgt", "audit.json"}) {
    if (read_file(ctx.work / "det_out_a" / file) !=
        read_file(ctx.work / "det_out_b" / file))
      failures.push_back(std::string("split outputs differ in ") + file);
  }

  // rank: same seed, two runs, identical stdout and significance report.
  const fs::path rank_root = ctx.work / "det_rank";
  write_rank_fixture(rank_root);
  for (const char* fmt : {"markdown", "csv"}) {
    std::vector<std::string> outputs;
    for (int run = 0; run < 2; ++run) {
      const fs::path out_file =
          rank_root / (std::string(fmt) + std::to_string(run) + ".out");
      const fs::path sig_file =
          rank_root / (std::string(fmt) + std::to_string(run) + ".sig.csv");
      std::ostringstream cmd;
      cmd << '"' << ctx.tool << "\" rank --submissions \""
          << (rank_root / "submissions").string() << "\" --refs \""
          << (rank_root / "refs").string()
          << "\" --metrics bleu,chrf,ter --primary bleu --reps 3000"
          << " --seed 9 --format " << fmt << " --baselines \""
          << (rank_root / "baselines.txt").string() << "\" --sig-report \""
          << sig_file.string() << "\" > \"" << out_file.string() << "\" 2> \""
          << out_file.string() << ".err\"";
      const int rc = run_command(cmd.str());
      if (rc != 0)
        failures.push_back(std::string("rank (") + fmt + ") run " +
                           std::to_string(run) + " exited with " +
                           std::to_string(rc));
      outputs.push_back(read_file(out_file) + "\x1f" + read_file(sig_file));
    }
    if (outputs.size() == 2 && outputs[0] != outputs[1])
      failures.push_back(std::string("rank --format ") + fmt +
                         " not byte-identical across same-seed reruns");
  }

  // art_pvalue: identical across 1/4/8 worker threads, bit for bit.
  std::mt19937_64 rng(4455);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  PairedSystemStats paired;
  paired.width = 2;
  for (int i = 0; i < 300; ++i) {
    paired.a.push_back(value(rng));
    paired.a.push_back(1.0);
    paired.b.push_back(value(rng));
    paired.b.push_back(1.0);
  }
  const auto ratio_reduce = [](const std::vector<double>& sums) {
    return sums[0] / sums[1];
  };
  const SignificanceResult r1 = art_pvalue(paired, ratio_reduce, 10007, 77, 1);
  const SignificanceResult r4 = art_pvalue(paired, ratio_reduce, 10007, 77, 4);
  const SignificanceResult r8 = art_pvalue(paired, ratio_reduce, 10007, 77, 8);
  if (r1.p_value != r4.p_value || r1.p_value != r8.p_value)
    failures.push_back("art_pvalue p differs across thread counts");
  if (r1.observed_delta != r4.observed_delta ||
      r1.observed_delta != r8.observed_delta)
    failures.push_back("art_pvalue delta differs across thread counts");
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 5: clustering fixtures and order preservation.
std::vector<RankedSystem> synthetic_systems(std::size_t n) {
  std::vector<RankedSystem> systems(n);
  for (std::size_t i = 0; i < n; ++i) {
    systems[i].team = "team" + std::to_string(i);
    systems[i].description = "run";
    systems[i].scores = {
        {MetricId::bleu, 100.0 - static_cast<double>(i), Scale::zero_to_100}};
  }
  return systems;
}

Failures criterion_clustering(Context&) {
  Failures failures;

  const auto split_all = cluster_rank(
      synthetic_systems(4), [](std::size_t, std::size_t) { return true; });
  if (split_all.clusters.size() != 4)
    failures.push_back("maximal split did not give singleton clusters");
  else
    for (std::size_t i = 0; i < 4; ++i)
      if (split_all.clusters[i].rank != static_cast<int>(i) + 1)
        failures.push_back("maximal split rank sequence broken");

  const auto merge_all = cluster_rank(
      synthetic_systems(4), [](std::size_t, std::size_t) { return false; });
  if (merge_all.clusters.size() != 1 || merge_all.clusters[0].rank != 1 ||
      merge_all.clusters[0].systems.size() != 4)
    failures.push_back("maximal merge did not give a single rank-1 cluster");

  const auto mixed = cluster_rank(
      synthetic_systems(3),
      [](std::size_t upper, std::size_t) { return upper == 0; });
  if (mixed.clusters.size() != 2 || mixed.clusters[0].rank != 1 ||
      mixed.clusters[0].systems.size() != 1 || mixed.clusters[1].rank != 2 ||
      mixed.clusters[1].systems.size() != 2)
    failures.push_back("mixed fixture did not produce clusters (1)(2,3)");

  std::mt19937_64 rng(4505);
  std::uniform_int_distribution<int> size_dist(1, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 1000 && failures.empty(); ++trial) {
    const std::size_t n = static_cast<std::size_t>(size_dist(rng));
    std::vector<bool> split(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i) split[i] = coin(rng) == 1;
    const auto systems = synthetic_systems(n);
    const auto ranking =
        cluster_rank(systems, [&](std::size_t upper, std::size_t) {
          return split[upper];
        });
    std::vector<std::string> flattened;
    for (const auto& cluster : ranking.clusters)
      for (const auto& sys : cluster.systems) flattened.push_back(sys.team);
    if (flattened.size() != n) {
      failures.push_back("partition changed the system count");
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (flattened[i] != systems[i].team) {
        failures.push_back("partition reordered systems on trial " +
                           std::to_string(trial));
        break;
      }
    }
  }
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 6: the 100k-pair pipeline end to end, through the CLI.
struct BigCorpus {
  std::string tsv;  // file content
  // clean-source lookup: provenance, align score, source words, target words
  struct CleanInfo {
    std::string provenance;
    double score = 0.0;
    std::size_t src_words = 0;
    std::size_t tgt_words = 0;
  };
  std::map<std::string, CleanInfo> clean;
  std::map<std::string, double> fractions;
  std::size_t total_rows = 0;
};

BigCorpus generate_big_corpus() {
  BigCorpus corpus;
  std::mt19937_64 rng(4606);
  std::ostringstream out;
  struct ClassPlan {
    const char* provenance;
    std::size_t total;
  };
  const std::vector<ClassPlan> classes = {
      {"newswire", 50000}, {"webcrawl", 30000}, {"medical", 20000}};
  std::uniform_int_distribution<std::size_t> len_dist(10, 20);

  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const auto& cls = classes[ci];
    const std::size_t junk = cls.total / 10;
    const std::size_t clean = cls.total - junk;
    const std::size_t n_low = junk * 4 / 10;
    const std::size_t n_identical = junk * 2 / 10;
    const std::size_t n_dup = junk * 2 / 10;
    const std::size_t n_near = junk / 10;
    const std::size_t n_outlier = junk - n_low - n_identical - n_dup - n_near;

    std::vector<std::string> clean_sources;
    std::vector<std::string> clean_targets;
    clean_sources.reserve(clean);
    clean_targets.reserve(clean);
    const std::string tag = "c" + std::to_string(ci);
    for (std::size_t r = 0; r < clean; ++r) {
      const std::size_t n = len_dist(rng);
      std::string src, tgt;
      for (std::size_t j = 0; j < n; ++j) {
        if (j) {
          src += ' ';
          tgt += ' ';
        }
        src += tag + "r" + std::to_string(r) + "w" + std::to_string(j);
        tgt += tag + "r" + std::to_string(r) + "t" + std::to_string(j);
      }
      const double score = 1.05 + 0.001 * static_cast<double>(r % 900);
      char score_buf[32];
      std::snprintf(score_buf, sizeof(score_buf), "%.4f", score);
      out << src << '\t' << tgt << '\t' << score_buf << '\t' << cls.provenance
          << '\n';
      corpus.clean.emplace(
          src, BigCorpus::CleanInfo{cls.provenance, score, n, n});
      clean_sources.push_back(std::move(src));
      clean_targets.push_back(std::move(tgt));
    }
    // Junk rows, each removed by exactly one stage.
    for (std::size_t r = 0; r < n_low; ++r)
      out << tag << "low" << r << " aa bb\t" << tag << "lowt" << r
          << " cc\t0.8000\t" << cls.provenance << '\n';
    for (std::size_t r = 0; r < n_identical; ++r) {
      const std::string text = tag + "same" + std::to_string(r) + " dd ee";
      out << text << '\t' << text << "\t1.5000\t" << cls.provenance << '\n';
    }
    for (std::size_t r = 0; r < n_dup; ++r)
      out << clean_sources[r] << '\t' << clean_targets[r] << "\t1.9000\t"
          << cls.provenance << '\n';
    for (std::size_t r = 0; r < n_near; ++r) {
      const std::size_t base = n_dup + r;  // disjoint from the exact dups
      out << clean_sources[base] << " .\t" << clean_targets[base]
          << " .\t1.5000\t" << cls.provenance << '\n';
    }
    for (std::size_t r = 0; r < n_outlier; ++r) {
      std::string src;
      for (int j = 0; j < 101; ++j) {
        if (j) src += ' ';
        src += tag + "out" + std::to_string(r) + "w" + std::to_string(j);
      }
      out << src << '\t' << tag << "outt" << r << " xx yy\t1.5000\t"
          << cls.provenance << '\n';
    }
    corpus.total_rows += cls.total;
  }
  corpus.fractions = {{"newswire", 0.5}, {"webcrawl", 0.3}, {"medical", 0.2}};
  corpus.tsv = out.str();
  return corpus;
}

Failures criterion_pipeline_end_to_end(Context& ctx) {
  Failures failures;
  const BigCorpus corpus = generate_big_corpus();
  if (corpus.total_rows != 100000) {
    failures.push_back("generator produced " +
                       std::to_string(corpus.total_rows) + " rows");
    return failures;
  }
  const fs::path tsv = ctx.work / "big.tsv";
  write_file(tsv, corpus.tsv);
  const fs::path out_dir = ctx.work / "big_out";
  fs::remove_all(out_dir);

  std::ostringstream cmd;
  cmd << '"' << ctx.tool << "\" split --input \"" << tsv.string()
      << "\" --out \"" << out_dir.string()
      << "\" --mode round2 --seed 4242 > \"" << (ctx.work / "big.log").string()
      << "\" 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int rc = run_command(cmd.str());
  const double elapsed = seconds_since(start);
  if (rc != 0) {
    failures.push_back("split exited with " + std::to_string(rc));
    return failures;
  }
  if (elapsed >= 10.0)
    failures.push_back("split took " + std::to_string(elapsed) +
                       " s (budget 10 s)");

  const auto valid_src = read_lines((out_dir / "valid.src").string());
  const auto valid_tgt = read_lines((out_dir / "valid.tgt").string());
  const auto test_src = read_lines((out_dir / "test.src").string());
  const auto test_tgt = read_lines((out_dir / "test.tgt").string());
  const auto train_src = read_lines((out_dir / "train.src").string());
  if (valid_src.size() != 4000 || valid_tgt.size() != 4000)
    failures.push_back("validation size " + std::to_string(valid_src.size()) +
                       " != 4000");
  if (test_src.size() != 4000 || test_tgt.size() != 4000)
    failures.push_back("test size " + std::to_string(test_src.size()) +
                       " != 4000");

  std::ifstream audit_in(out_dir / "audit.json");
  if (!audit_in) {
    failures.push_back("audit.json missing");
    return failures;
  }
  const auto audit = nlohmann::json::parse(audit_in);
  const double avg = audit["split"]["avg_source_words"].get<double>();
  const double window_low = 0.7 * avg;
  const double window_high = 1.3 * avg;

  std::map<std::string, std::size_t> eval_by_provenance;
  std::size_t bad_eval = 0;
  auto check_eval_side = [&](const std::vector<std::string>& sources) {
    for (const std::string& src : sources) {
      const auto it = corpus.clean.find(src);
      if (it == corpus.clean.end()) {
        ++bad_eval;  // a filtered row leaked into the eval split
        continue;
      }
      const auto& info = it->second;
      ++eval_by_provenance[info.provenance];
      if (info.score < 1.04) ++bad_eval;
      if (info.src_words > 100 || info.tgt_words > 100) ++bad_eval;
      const double w = static_cast<double>(info.src_words);
      if (w < window_low || w > window_high) ++bad_eval;
    }
  };
  check_eval_side(valid_src);
  check_eval_side(test_src);
  if (bad_eval != 0)
    failures.push_back(std::to_string(bad_eval) +
                       " eval rows broke score/length/window guarantees");

  for (const auto& [provenance, fraction] : corpus.fractions) {
    const double expected = 8000.0 * fraction;
    const double got =
        static_cast<double>(eval_by_provenance[provenance]);
    if (std::fabs(got - expected) > 3.0)
      failures.push_back(provenance + ": eval count " + std::to_string(got) +
                         " vs expected " + std::to_string(expected));
  }

  const auto& filter = audit["filter"];
  const std::size_t accounted =
      filter["removed_low_score"].get<std::size_t>() +
      filter["removed_identical"].get<std::size_t>() +
      filter["removed_exact_duplicate"].get<std::size_t>() +
      filter["removed_near_duplicate"].get<std::size_t>() +
      audit["removed_outliers"].get<std::size_t>() + train_src.size() +
      valid_src.size() + test_src.size();
  if (filter["input"].get<std::size_t>() != 100000)
    failures.push_back("audit input != 100000");
  if (accounted != 100000)
    failures.push_back("audit removals + outputs account for " +
                       std::to_string(accounted) + " of 100000 rows");

  // The generator plants a known number of offenders per stage.
  if (filter["removed_low_score"].get<std::size_t>() != 4000 ||
      filter["removed_identical"].get<std::size_t>() != 2000 ||
      filter["removed_exact_duplicate"].get<std::size_t>() != 2000 ||
      filter["removed_near_duplicate"].get<std::size_t>() != 1000 ||
      audit["removed_outliers"].get<std::size_t>() != 1000)
    failures.push_back("per-stage removal counts drifted from the planted "
                       "offender counts");
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 7: the published configuration constants, asserted literally.
Failures criterion_constants(Context&) {
  Failures failures;
  const SplitConfig cfg;
  if (cfg.min_align_score != 1.04) failures.push_back("score threshold");
  if (cfg.max_words != 100) failures.push_back("outlier cutoff");
  if (cfg.ratio_low != 0.7 || cfg.ratio_high != 1.3)
    failures.push_back("length window multipliers");
  if (cfg.round2_quota != 8000) failures.push_back("eval quota");
  if (cfg.val_size != 4000 || cfg.test_size != 4000)
    failures.push_back("validation/test sizes");
  if (cfg.round1_test_size != 2000) failures.push_back("round-1 test size");
  const ArtConfig art;
  if (art.repetitions != 10000) failures.push_back("ART repetitions");
  if (art.alpha != 0.05) failures.push_back("significance level");
  std::vector<SegmentPair> pairs(600);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pairs[i].source_text = "s" + std::to_string(i);
    pairs[i].target_text = "t";
    pairs[i].align_score = static_cast<double>(i);
  }
  if (worst_k_by_score(pairs).size() != 500)
    failures.push_back("worst-k default subset size");
  for (auto& f : failures) f = "default constant mismatch: " + f;
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 8: corpus hTER on a synthetic 10%-substitution post-editing set.
Failures criterion_hter_workflow(Context&) {
  Failures failures;
  std::vector<std::string> hyps, postedits;
  hyps.reserve(1000);
  postedits.reserve(1000);
  for (int i = 0; i < 1000; ++i) {
    std::string hyp, postedit;
    const int substituted = i % 10;  // one of the ten words per segment
    for (int j = 0; j < 10; ++j) {
      if (j) {
        hyp += ' ';
        postedit += ' ';
      }
      const std::string word =
          "s" + std::to_string(i) + "w" + std::to_string(j);
      postedit += word;
      hyp += (j == substituted) ? "sub" + std::to_string(i) : word;
    }
    hyps.push_back(std::move(hyp));
    postedits.push_back(std::move(postedit));
  }
  const CorpusMetric hter_metric(MetricId::hter, {});
  const MetricScore score = hter_metric.score_corpus(hyps, postedits);
  if (score.scale != Scale::zero_to_100)
    failures.push_back("corpus hTER not reported on the 0-100 scale");
  if (std::fabs(score.value - 10.0) > 0.01)
    failures.push_back("corpus hTER = " + std::to_string(score.value) +
                       ", expected 10.0 +/- 0.01");
  return failures;
}

// ---------------------------------------------------------------------------
// Criterion 9: ranking table rendering against golden files.
Failures criterion_table_rendering(Context& ctx) {
  Failures failures;

  std::vector<Submission> submissions;
  auto add = [&](std::string team, std::string description,
                 std::vector<std::string> hyps, bool unranked = false) {
    Submission s;
    s.team = std::move(team);
    s.description = std::move(description);
    s.language_pair = "en-xx";
    s.scenario = "constrained";
    s.hypotheses = std::move(hyps);
    s.unranked = unranked;
    submissions.push_back(std::move(s));
  };
  add("acme", "copy", rank_reference_lines());
  add("beta", "tweak", rank_tweaked_lines());
  add("gamma", "weak", rank_garbage_lines());
  add("old", "base", rank_garbage_lines(), /*unranked=*/true);

  ArtConfig art;
  art.repetitions = 4000;
  art.seed = 21;
  const auto report = evaluate_all(
      submissions, {{"en-xx", rank_reference_lines()}},
      {MetricId::bleu, MetricId::chrf, MetricId::ter}, MetricId::bleu, {},
      art, false, nullptr);
  const std::string markdown = render_ranking_markdown(report);
  const std::string csv = render_ranking_csv(report);

  // Structural conventions, independent of the exact numbers.
  if (markdown.find("| Rank | Team | Description |") == std::string::npos)
    failures.push_back("markdown lacks the rank/team/description header");
  if (markdown.find("BLEU [↑]") == std::string::npos ||
      markdown.find("TER [↓]") == std::string::npos)
    failures.push_back("metric direction arrows missing");
  if (markdown.find("\n| --- | --- | --- | --- | --- | --- |\n| 2 ") ==
      std::string::npos)
    failures.push_back("cluster separator row missing before rank 2");
  if (markdown.find("| - | old | base |") == std::string::npos)
    failures.push_back("unranked baseline row does not show '-'");
  if (csv.find("en-xx,constrained,-,") == std::string::npos)
    failures.push_back("csv lacks the '-' rank for the baseline");

  const fs::path md_golden = ctx.data / "golden" / "ranking.md";
  const fs::path csv_golden = ctx.data / "golden" / "ranking.csv";
  if (ctx.write_golden) {
    write_file(md_golden, markdown);
    write_file(csv_golden, csv);
  }
  if (!fs::exists(md_golden) || !fs::exists(csv_golden)) {
    failures.push_back("golden files missing under " +
                       (ctx.data / "golden").string());
    return failures;
  }
  if (read_file(md_golden) != markdown)
    failures.push_back("markdown table deviates from " + md_golden.string());
  if (read_file(csv_golden) != csv)
    failures.push_back("csv table deviates from " + csv_golden.string());
  return failures;
}

struct Criterion {
  int number;
  std::string label;
  double budget_seconds;  // 0 = untimed
  std::function<Failures(Context&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << '\n';
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--tool") ctx.tool = next();
    else if (arg == "--data") ctx.data = next();
    else if (arg == "--work") ctx.work = next();
    else if (arg == "--write-golden") ctx.write_golden = true;
    else {
      std::cerr << "unknown argument: " << arg << '\n';
      return 2;
    }
  }
  if (ctx.tool.empty() || ctx.data.empty() || ctx.work.empty()) {
    std::cerr << "usage: acceptance --tool <cli> --data <dir> --work <dir> "
                 "[--write-golden]\n";
    return 2;
  }
  fs::create_directories(ctx.work);

  const std::vector<Criterion> criteria = {
      {1, "metric oracle suite (TER exhaustive, BLEU/chrF brute force)", 60.0,
       criterion_metric_oracles},
      {2, "identity and zero properties on random inputs", 5.0,
       criterion_identity_properties},
      {3, "ART p-values converge to exact enumeration", 120.0,
       criterion_art_convergence},
      {4, "same-seed reruns byte-identical; thread-count independence", 0.0,
       criterion_determinism},
      {5, "significance clustering fixtures and order preservation", 0.0,
       criterion_clustering},
      {6, "100k-pair filter/split pipeline end to end", 0.0,
       criterion_pipeline_end_to_end},
      {7, "published configuration constants", 0.0, criterion_constants},
      {8, "synthetic post-editing corpus scores 10.0 hTER", 0.0,
       criterion_hter_workflow},
      {9, "ranking table rendering matches golden files", 0.0,
       criterion_table_rendering},
  };

  bool all_passed = true;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failures failures;
    try {
      failures = criterion.run(ctx);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      std::ostringstream msg;
      msg << "runtime " << elapsed << " s exceeded budget "
          << criterion.budget_seconds << " s";
      failures.push_back(msg.str());
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.1fs", elapsed);
    if (failures.empty()) {
      std::cout << "PASS criterion " << criterion.number << " (" << timing
                << "): " << criterion.label << '\n';
    } else {
      all_passed = false;
      std::cout << "FAIL criterion " << criterion.number << " (" << timing
                << "): " << criterion.label;
      for (const std::string& failure : failures) std::cout << " | " << failure;
      std::cout << '\n';
    }
  }
  return all_passed ? 0 : 1;
}
