#include "mteval/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <unordered_set>

namespace mteval {

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* instance = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || instance == nullptr) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  return *instance;
}

bool is_space(UChar32 c) { return u_isUWhiteSpace(c) != 0; }
bool is_punct(UChar32 c) { return u_ispunct(c) != 0; }

void append_utf8(std::string& out, UChar32 c) {
  icu::UnicodeString u(c);
  u.toUTF8String(out);
}

}  // namespace

std::string normalize(std::string_view text) {
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc().normalize(input, ec);
  if (U_FAILURE(ec)) composed = input;

  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool seen_content = false;
  for (int32_t i = 0; i < composed.length();) {
    UChar32 c = composed.char32At(i);
    i += U16_LENGTH(c);
    if (is_space(c)) {
      pending_space = seen_content;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, c);
    seen_content = true;
  }
  return out;
}

std::string fold_case(std::string_view text) {
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  input.foldCase();
  std::string out;
  input.toUTF8String(out);
  return out;
}

TokenSequence tokenize_words(std::string_view normalized_text) {
  TokenSequence tokens;
  std::string current;
  bool current_is_punct = false;

  auto flush = [&]() {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };

  icu::UnicodeString input = icu::UnicodeString::fromUTF8(icu::StringPiece(
      normalized_text.data(), static_cast<int32_t>(normalized_text.size())));
  for (int32_t i = 0; i < input.length();) {
    UChar32 c = input.char32At(i);
    i += U16_LENGTH(c);
    if (is_space(c)) {
      flush();
      continue;
    }
    bool punct = is_punct(c);
    if (!current.empty() && punct != current_is_punct) flush();
    current_is_punct = punct;
    append_utf8(current, c);
  }
  flush();
  return tokens;
}

std::size_t word_count(std::string_view text) {
  // Token count of tokenize_words(normalize(text)) without materializing
  // either result: tokens start after whitespace or on a punctuation/word
  // class flip, and space collapsing cannot change where runs begin.
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString composed = nfc().normalize(input, ec);
  if (U_FAILURE(ec)) composed = input;
  std::size_t count = 0;
  bool in_token = false;
  bool token_is_punct = false;
  for (int32_t i = 0; i < composed.length();) {
    UChar32 c = composed.char32At(i);
    i += U16_LENGTH(c);
    if (is_space(c)) {
      in_token = false;
      continue;
    }
    const bool punct = is_punct(c);
    if (!in_token || punct != token_is_punct) ++count;
    in_token = true;
    token_is_punct = punct;
  }
  return count;
}

std::vector<char32_t> to_code_points(std::string_view text) {
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  std::vector<char32_t> points;
  points.reserve(static_cast<std::size_t>(input.length()));
  for (int32_t i = 0; i < input.length();) {
    UChar32 c = input.char32At(i);
    i += U16_LENGTH(c);
    points.push_back(static_cast<char32_t>(c));
  }
  return points;
}

std::string dedup_key(std::string_view text) {
  return dedup_key_normalized(normalize(text));
}

std::string dedup_key_normalized(std::string_view normalized_text) {
  const std::string folded = fold_case(normalized_text);
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(folded.data(), static_cast<int32_t>(folded.size())));
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  bool seen_content = false;
  for (int32_t i = 0; i < input.length();) {
    UChar32 c = input.char32At(i);
    i += U16_LENGTH(c);
    if (is_punct(c)) continue;
    if (is_space(c)) {
      pending_space = seen_content;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    append_utf8(out, c);
    seen_content = true;
  }
  return out;
}

CorpusStats corpus_stats(const std::vector<Segment>& corpus) {
  CorpusStats stats;
  stats.num_sentences = corpus.size();
  std::unordered_set<std::string> vocab;
  for (const Segment& segment : corpus) {
    for (std::string& token : tokenize_words(normalize(segment.text))) {
      ++stats.num_tokens;
      vocab.insert(std::move(token));
    }
  }
  stats.vocab_size = vocab.size();
  return stats;
}

}  // namespace mteval
