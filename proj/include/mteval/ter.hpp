// Translation edit rate: word-level insertions, deletions, substitutions and
// block shifts, normalized by reference length.
#pragma once

#include <cstdint>

#include "mteval/text.hpp"

namespace mteval {

struct TerResult {
  std::int64_t edits = 0;    // insertions + deletions + substitutions + shifts
  std::int64_t ref_len = 0;  // normalizer
  double score = 0.0;        // edits / ref_len
};

struct TerOptions {
  // Greedy shift search caps; unconstrained search is intractable on long
  // sentences.
  std::size_t max_block_len = 10;
  std::size_t max_shift_distance = 50;
  // Up to this many tokens on both sides the minimum over all shift
  // sequences is computed exactly. The greedy search occasionally misses the
  // optimum on short sequences, where the exact search is cheap anyway.
  std::size_t exact_search_limit = 6;
};

// Word-level edit distance with unit costs.
std::size_t levenshtein(const TokenSequence& a, const TokenSequence& b);

// Empty reference rejected.
TerResult ter(const TokenSequence& hyp, const TokenSequence& ref,
              const TerOptions& options = {});

// TER against the human post-edited version of the hypothesis.
TerResult hter(const TokenSequence& hyp, const TokenSequence& postedit,
               const TerOptions& options = {});

}  // namespace mteval
