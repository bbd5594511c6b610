#pragma once

// Table and sequence ingestion.
//
// Tables (CSV): a header naming one node column (`x` or `log_x`) and one value
// column (`f` or `log_f`), then one decimal record per line.
// Tables (JSON): {"nodes": [...], "values": [...]}, where "log_x" / "log_f"
// may replace either array with log coordinates.
//
// Sequences (CSV/text): one value per line with an optional header `x` or
// `log_x`, and an optional final directive line `tail: one`.
// Sequences (JSON): a bare array, or {"values": [...]} / {"log_values": [...]}
// with an optional "tail": "one".

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include "geocalc/gdiff.hpp"
#include "geocalc/gseq.hpp"

namespace geocalc {

enum class InputFormat { csv, json };

/// Picks json for a ".json" extension, csv otherwise.
InputFormat infer_format(const std::string& path);

GTable parse_table(std::istream& in, InputFormat format,
                   double spacing_tolerance = kDefaultSpacingTolerance);

GSeq parse_sequence(std::istream& in, InputFormat format);

/// Input for the summation-by-parts checks. With b absent, the tail-sum
/// identity on a is evaluated instead.
struct SequencePair {
  GSeq a;
  std::optional<GSeq> b;
  std::optional<std::size_t> n;
};

/// CSV: header `a,b` or `log_a,log_b` (or a single `a` / `log_a` column),
/// optional `tail: one` line applying to both. JSON: {"a": seq, "b": seq,
/// "n": N} where each seq uses the sequence JSON schema.
SequencePair parse_sequence_pair(std::istream& in, InputFormat format);

/// Writes `log_x,log_f` records at 17 significant digits.
void write_table_csv(std::ostream& out, const GTable& t);

}  // namespace geocalc
