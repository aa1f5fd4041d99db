#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entailkit/vector_space.hpp"

namespace entailkit {

struct PipelineConfig {
  std::size_t window = 5;        // half-width of the co-occurrence window
  std::size_t dims = 300;        // number of context dimensions to keep
  std::size_t min_word_count = 1;
  double epsilon = 1e-8;         // smoothing constant for the KL family
  std::size_t threads = 1;
};

/// Raw windowed co-occurrence counts over string vocabularies.
struct CooccurrenceMatrix {
  std::vector<std::string> types;  // observed token types, in first-seen order
  std::unordered_map<std::string, std::size_t> type_index;
  // (word index, context index) -> count
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::vector<std::uint64_t> word_totals;
  std::vector<std::uint64_t> dim_totals;
  std::uint64_t grand_total = 0;

  static std::uint64_t key(std::size_t w, std::size_t c) {
    return (static_cast<std::uint64_t>(w) << 32) | static_cast<std::uint64_t>(c);
  }
  std::uint64_t count(std::size_t w, std::size_t c) const {
    auto it = counts.find(key(w, c));
    return it == counts.end() ? 0 : it->second;
  }
};

struct VerbOccurrence {
  std::optional<std::string> subject;
  std::optional<std::string> object;
};

/// Per-verb argument occurrences read from a triples file.
struct VerbArgumentTable {
  std::map<std::string, std::vector<VerbOccurrence>> occurrences;
  std::size_t dropped_lines = 0;  // lines with no usable argument
};

/// Lowercase; alphanumeric runs become tokens, everything else separates.
std::vector<std::string> tokenize(const std::string& line);

CooccurrenceMatrix count_cooccurrences(std::istream& corpus, const PipelineConfig& config);
CooccurrenceMatrix count_cooccurrences(const std::vector<std::string>& lines,
                                       const PipelineConfig& config);

/// Top-`dims` context words by total count, ties by lexicographic order.
/// The word list keeps every type with count >= min_word_count.
Vocabulary select_dimensions(const CooccurrenceMatrix& m, const PipelineConfig& config);

/// weight(w,c) = max(0, ln(count * grand / (word_total * dim_total))).
std::vector<DistVector> ppmi_transform(const CooccurrenceMatrix& m, const Vocabulary& vocab);

VectorSpace build_space(const std::vector<std::string>& lines, const PipelineConfig& config);
VectorSpace build_space_from_file(const std::string& path, const PipelineConfig& config);

VerbArgumentTable load_triples(std::istream& in);
VerbArgumentTable load_triples(const std::string& path);

/// Drops occurrences whose words are missing from the vocabulary; returns the
/// surviving table and counts the drops.
VerbArgumentTable resolve_table(const VerbArgumentTable& table, const Vocabulary& vocab);

/// Counts window contexts of (verb, argument) bigrams treated as single tokens.
/// Phrases seen fewer than min_word_count times are omitted. Keys are
/// "verb<SPACE>argument".
std::map<std::string, DistVector> collect_holistic_vectors(
    const std::vector<std::string>& lines,
    const std::vector<std::pair<std::string, std::string>>& phrases,
    const Vocabulary& vocab, const CooccurrenceMatrix& base, const PipelineConfig& config);

}  // namespace entailkit
