// Text core: normalization, word tokenization, n-gram extraction and corpus
// statistics. Every metric and every corpus filter goes through these
// routines, which keeps scores internally consistent.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mteval {

struct Segment {
  std::size_t id = 0;
  std::string text;
};

using TokenSequence = std::vector<std::string>;

struct CorpusStats {
  std::size_t num_sentences = 0;  // |S|
  std::size_t num_tokens = 0;     // |T|
  std::size_t vocab_size = 0;     // |V|
};

// Canonical composition (NFC), leading/trailing whitespace stripped, internal
// whitespace runs collapsed to single spaces. Total: never throws on any
// input; invalid byte sequences are replaced with U+FFFD.
std::string normalize(std::string_view text);

// Full Unicode case folding of an already-normalized string.
std::string fold_case(std::string_view text);

// Splits normalized text on spaces and detaches punctuation: each maximal run
// of Unicode punctuation becomes its own token. Empty input yields an empty
// sequence.
TokenSequence tokenize_words(std::string_view normalized_text);

// tokenize_words(normalize(text)).size(); the word count used by every
// length-based filter.
std::size_t word_count(std::string_view text);

// Decodes a UTF-8 string to code points (invalid sequences become U+FFFD).
std::vector<char32_t> to_code_points(std::string_view text);

// Near-duplicate key: normalized, case-folded, Unicode punctuation removed,
// whitespace re-collapsed. Two texts with the same key differ only in case,
// punctuation or spacing.
std::string dedup_key(std::string_view text);

// dedup_key for text that already went through normalize(); skips the
// second normalization pass on bulk pipeline input.
std::string dedup_key_normalized(std::string_view normalized_text);

template <typename Sym>
struct NgramMultiset {
  std::size_t order = 1;
  std::map<std::vector<Sym>, std::int64_t> counts;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [key, count] : counts) t += count;
    return t;
  }
};

// All contiguous subsequences of length n. A sequence shorter than n yields
// an empty multiset. n = 0 is rejected.
template <typename Sym>
NgramMultiset<Sym> ngrams(const std::vector<Sym>& sequence, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ngrams: order must be >= 1");
  NgramMultiset<Sym> result;
  result.order = n;
  if (sequence.size() < n) return result;
  for (std::size_t i = 0; i + n <= sequence.size(); ++i) {
    std::vector<Sym> key(sequence.begin() + i, sequence.begin() + i + n);
    ++result.counts[std::move(key)];
  }
  return result;
}

// |S|, |T|, |V| over a corpus of segments.
CorpusStats corpus_stats(const std::vector<Segment>& corpus);

}  // namespace mteval
