// File plumbing: line readers, the segment-pair TSV format, split outputs
// and the audit trail.
#pragma once

#include <string>
#include <vector>

#include "mteval/pipeline.hpp"

namespace mteval {

// Whole file as lines; strips one trailing '\r' per line (CRLF input).
// Throws std::runtime_error when the file cannot be opened.
std::vector<std::string> read_lines(const std::string& path);

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);

// Tab-separated `source_text  target_text  align_score  provenance`, UTF-8.
// Exactly four columns per line; align_score must parse as a finite real and
// provenance must be nonempty. Violations throw std::runtime_error naming
// the line. `header` skips the first line.
std::vector<SegmentPair> read_pairs_tsv(const std::string& path, bool header);

void write_pairs_tsv(const std::string& path,
                     const std::vector<SegmentPair>& pairs);

// train/valid/test .src/.tgt files plus audit.json under out_dir.
void write_split(const std::string& out_dir, const SplitResult& result,
                 const SplitConfig& cfg);

// Serialized audit trail (config echo, stage removal counts, quotas, seed).
std::string audit_json(const SplitResult& result, const SplitConfig& cfg);

}  // namespace mteval
