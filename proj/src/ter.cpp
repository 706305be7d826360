#include "mteval/ter.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mteval {
namespace {

using IntSeq = std::vector<int>;

std::size_t lev_ints(const IntSeq& a, const IntSeq& b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

struct SeqHash {
  std::size_t operator()(const IntSeq& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) +
           0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Remove [i, i+len) and reinsert it at position j of the remainder.
IntSeq apply_move(const IntSeq& s, std::size_t i, std::size_t len,
                  std::size_t j) {
  IntSeq rest;
  rest.reserve(s.size() - len);
  rest.insert(rest.end(), s.begin(), s.begin() + i);
  rest.insert(rest.end(), s.begin() + i + len, s.end());
  IntSeq out;
  out.reserve(s.size());
  out.insert(out.end(), rest.begin(), rest.begin() + j);
  out.insert(out.end(), s.begin() + i, s.begin() + i + len);
  out.insert(out.end(), rest.begin() + j, rest.end());
  return out;
}

// Minimum of shifts + edit distance over every sequence of block moves.
// Breadth-first search over arrangements; a popped state whose shift count
// plus one already reaches the incumbent cannot improve on it.
std::size_t exact_shift_edits(const IntSeq& hyp, const IntSeq& ref) {
  std::size_t best = lev_ints(hyp, ref);
  if (best == 0 || hyp.size() < 2) return best;
  std::unordered_set<IntSeq, SeqHash> seen;
  std::deque<std::pair<IntSeq, std::size_t>> queue;
  seen.insert(hyp);
  queue.emplace_back(hyp, 0);
  while (!queue.empty()) {
    auto [s, shifts] = std::move(queue.front());
    queue.pop_front();
    if (shifts + 1 >= best) continue;
    const std::size_t m = s.size();
    for (std::size_t len = 1; len < m; ++len) {
      for (std::size_t i = 0; i + len <= m; ++i) {
        for (std::size_t j = 0; j + len <= m; ++j) {
          if (j == i) continue;
          IntSeq t = apply_move(s, i, len, j);
          if (!seen.insert(t).second) continue;
          const std::size_t total = shifts + 1 + lev_ints(t, ref);
          if (total < best) best = total;
          queue.emplace_back(std::move(t), shifts + 1);
        }
      }
    }
  }
  return best;
}

// One best shift per round, applied while it saves more than its unit cost.
// Candidate blocks must occur contiguously in the reference; the best shift
// maximizes the edit-distance reduction, ties broken by smaller displacement,
// then leftmost block, then shortest block, then leftward destination.
std::size_t greedy_shift_edits(const IntSeq& hyp0, const IntSeq& ref,
                               const TerOptions& opt) {
  IntSeq hyp = hyp0;
  std::size_t cur = lev_ints(hyp, ref);
  std::size_t shifts = 0;
  if (hyp.empty()) return cur;

  std::unordered_set<IntSeq, SeqHash> ref_blocks;
  const std::size_t ref_cap = std::min(opt.max_block_len, ref.size());
  for (std::size_t len = 1; len <= ref_cap; ++len)
    for (std::size_t i = 0; i + len <= ref.size(); ++i)
      ref_blocks.insert(IntSeq(ref.begin() + i, ref.begin() + i + len));

  while (cur > 0) {
    const std::size_t m = hyp.size();
    std::size_t best_red = 0, best_dist = 0, best_i = 0, best_len = 0;
    IntSeq best_seq;
    const std::size_t len_cap = std::min(opt.max_block_len, m);
    for (std::size_t len = 1; len <= len_cap; ++len) {
      for (std::size_t i = 0; i + len <= m; ++i) {
        IntSeq block(hyp.begin() + i, hyp.begin() + i + len);
        if (ref_blocks.find(block) == ref_blocks.end()) continue;
        for (std::size_t j = 0; j + len <= m; ++j) {
          if (j == i) continue;
          const std::size_t dist = j > i ? j - i : i - j;
          if (dist > opt.max_shift_distance) continue;
          IntSeq cand = apply_move(hyp, i, len, j);
          const std::size_t next = lev_ints(cand, ref);
          if (next >= cur) continue;
          const std::size_t red = cur - next;
          bool better = red > best_red;
          if (red == best_red) {
            if (dist < best_dist)
              better = true;
            else if (dist == best_dist && i < best_i)
              better = true;
            else if (dist == best_dist && i == best_i && len < best_len)
              better = true;
          }
          if (better) {
            best_red = red;
            best_dist = dist;
            best_i = i;
            best_len = len;
            best_seq = std::move(cand);
          }
        }
      }
    }
    if (best_red < 2) break;
    hyp = std::move(best_seq);
    cur -= best_red;
    ++shifts;
  }
  return shifts + cur;
}

struct Interner {
  std::unordered_map<std::string, int> ids;
  IntSeq map(const TokenSequence& seq) {
    IntSeq out;
    out.reserve(seq.size());
    for (const auto& tok : seq) {
      auto [it, inserted] = ids.emplace(tok, static_cast<int>(ids.size()));
      (void)inserted;
      out.push_back(it->second);
    }
    return out;
  }
};

}  // namespace

std::size_t levenshtein(const TokenSequence& a, const TokenSequence& b) {
  Interner in;
  const IntSeq ia = in.map(a);
  const IntSeq ib = in.map(b);
  return lev_ints(ia, ib);
}

TerResult ter(const TokenSequence& hyp, const TokenSequence& ref,
              const TerOptions& options) {
  if (ref.empty()) throw std::invalid_argument("ter: empty reference");
  Interner in;
  const IntSeq h = in.map(hyp);
  const IntSeq r = in.map(ref);
  std::size_t edits;
  if (h.size() <= options.exact_search_limit &&
      r.size() <= options.exact_search_limit) {
    edits = exact_shift_edits(h, r);
  } else {
    edits = greedy_shift_edits(h, r, options);
  }
  TerResult out;
  out.edits = static_cast<std::int64_t>(edits);
  out.ref_len = static_cast<std::int64_t>(r.size());
  out.score = static_cast<double>(out.edits) / static_cast<double>(out.ref_len);
  return out;
}

TerResult hter(const TokenSequence& hyp, const TokenSequence& postedit,
               const TerOptions& options) {
  if (postedit.empty()) throw std::invalid_argument("hter: empty post-edit");
  return ter(hyp, postedit, options);
}

}  // namespace mteval
