#include "entailkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace entailkit {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char ch : line) {
    if (std::isalnum(ch)) {
      cur.push_back(static_cast<char>(std::tolower(ch)));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

namespace {

using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

void count_range(const std::vector<std::vector<std::size_t>>& lines, std::size_t begin,
                 std::size_t end, std::size_t window, CountMap* out) {
  for (std::size_t li = begin; li < end; ++li) {
    const auto& ids = lines[li];
    for (std::size_t t = 0; t < ids.size(); ++t) {
      std::size_t lo = t > window ? t - window : 0;
      std::size_t hi = std::min(ids.size(), t + window + 1);
      for (std::size_t c = lo; c < hi; ++c) {
        if (c == t) continue;
        ++(*out)[CooccurrenceMatrix::key(ids[t], ids[c])];
      }
    }
  }
}

}  // namespace

CooccurrenceMatrix count_cooccurrences(const std::vector<std::string>& lines,
                                       const PipelineConfig& config) {
  CooccurrenceMatrix m;
  std::vector<std::vector<std::size_t>> id_lines;
  id_lines.reserve(lines.size());
  for (const auto& line : lines) {
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    std::vector<std::size_t> ids;
    ids.reserve(tokens.size());
    for (auto& tok : tokens) {
      auto it = m.type_index.find(tok);
      if (it == m.type_index.end()) {
        it = m.type_index.emplace(tok, m.types.size()).first;
        m.types.push_back(tok);
      }
      ids.push_back(it->second);
    }
    id_lines.push_back(std::move(ids));
  }
  if (id_lines.empty()) throw EmptyCorpusError();

  std::size_t nthreads = std::max<std::size_t>(1, config.threads);
  nthreads = std::min(nthreads, id_lines.size());
  if (nthreads == 1) {
    count_range(id_lines, 0, id_lines.size(), config.window, &m.counts);
  } else {
    std::vector<CountMap> partials(nthreads);
    std::vector<std::thread> workers;
    std::size_t chunk = (id_lines.size() + nthreads - 1) / nthreads;
    for (std::size_t i = 0; i < nthreads; ++i) {
      std::size_t b = i * chunk;
      std::size_t e = std::min(id_lines.size(), b + chunk);
      workers.emplace_back(count_range, std::cref(id_lines), b, e, config.window, &partials[i]);
    }
    for (auto& w : workers) w.join();
    for (auto& p : partials) {
      for (auto& [k, v] : p) m.counts[k] += v;
    }
  }

  m.word_totals.assign(m.types.size(), 0);
  m.dim_totals.assign(m.types.size(), 0);
  for (const auto& [k, v] : m.counts) {
    m.word_totals[k >> 32] += v;
    m.dim_totals[k & 0xffffffffu] += v;
    m.grand_total += v;
  }
  if (m.grand_total == 0) throw EmptyCorpusError();
  return m;
}

CooccurrenceMatrix count_cooccurrences(std::istream& corpus, const PipelineConfig& config) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(corpus, line)) lines.push_back(line);
  return count_cooccurrences(lines, config);
}

Vocabulary select_dimensions(const CooccurrenceMatrix& m, const PipelineConfig& config) {
  std::vector<std::size_t> ctx;
  for (std::size_t i = 0; i < m.types.size(); ++i) {
    if (m.dim_totals[i] > 0) ctx.push_back(i);
  }
  if (ctx.size() < config.dims) throw InsufficientContextsError(ctx.size(), config.dims);
  std::sort(ctx.begin(), ctx.end(), [&](std::size_t a, std::size_t b) {
    if (m.dim_totals[a] != m.dim_totals[b]) return m.dim_totals[a] > m.dim_totals[b];
    return m.types[a] < m.types[b];
  });
  ctx.resize(config.dims);
  std::vector<std::string> dims;
  dims.reserve(ctx.size());
  for (std::size_t i : ctx) dims.push_back(m.types[i]);

  std::vector<std::string> words;
  for (std::size_t i = 0; i < m.types.size(); ++i) {
    if (m.word_totals[i] >= config.min_word_count && m.word_totals[i] > 0) {
      words.push_back(m.types[i]);
    }
  }
  return Vocabulary(std::move(words), std::move(dims));
}

std::vector<DistVector> ppmi_transform(const CooccurrenceMatrix& m, const Vocabulary& vocab) {
  if (m.grand_total == 0) throw EmptyCorpusError();
  const double ln_grand = std::log(static_cast<double>(m.grand_total));
  std::vector<DistVector> out;
  out.reserve(vocab.num_words());
  for (const auto& word : vocab.words()) {
    auto wit = m.type_index.find(word);
    std::vector<double> weights(vocab.num_dims(), 0.0);
    if (wit != m.type_index.end()) {
      std::size_t w = wit->second;
      for (std::size_t d = 0; d < vocab.num_dims(); ++d) {
        auto cit = m.type_index.find(vocab.dims()[d]);
        if (cit == m.type_index.end()) continue;
        std::uint64_t n = m.count(w, cit->second);
        if (n == 0) continue;
        double pmi = std::log(static_cast<double>(n)) + ln_grand -
                     std::log(static_cast<double>(m.word_totals[w])) -
                     std::log(static_cast<double>(m.dim_totals[cit->second]));
        weights[d] = std::max(0.0, pmi);
      }
    }
    out.emplace_back(std::move(weights));
  }
  return out;
}

VectorSpace build_space(const std::vector<std::string>& lines, const PipelineConfig& config) {
  auto m = count_cooccurrences(lines, config);
  auto vocab = select_dimensions(m, config);
  auto vectors = ppmi_transform(m, vocab);
  return VectorSpace{std::move(vocab), std::move(vectors)};
}

VectorSpace build_space_from_file(const std::string& path, const PipelineConfig& config) {
  std::ifstream f(path);
  if (!f) throw IoError(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(f, line)) lines.push_back(line);
  return build_space(lines, config);
}

VerbArgumentTable load_triples(std::istream& in) {
  VerbArgumentTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string verb, sbj, obj;
    if (!std::getline(ls, verb, '\t') || !std::getline(ls, sbj, '\t') ||
        !std::getline(ls, obj, '\t')) {
      throw ParseError("expected verb<TAB>subject<TAB>object", lineno);
    }
    if (verb.empty() || sbj.empty() || obj.empty()) {
      throw ParseError("empty field; use '_' for an absent argument", lineno);
    }
    if (sbj == "_" && obj == "_") {
      ++table.dropped_lines;
      continue;
    }
    VerbOccurrence occ;
    if (sbj != "_") occ.subject = sbj;
    if (obj != "_") occ.object = obj;
    table.occurrences[verb].push_back(std::move(occ));
  }
  return table;
}

VerbArgumentTable load_triples(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError(path);
  return load_triples(f);
}

VerbArgumentTable resolve_table(const VerbArgumentTable& table, const Vocabulary& vocab) {
  VerbArgumentTable out;
  out.dropped_lines = table.dropped_lines;
  for (const auto& [verb, occs] : table.occurrences) {
    for (const auto& occ : occs) {
      VerbOccurrence kept;
      if (occ.subject && vocab.word_index(*occ.subject) >= 0) kept.subject = occ.subject;
      if (occ.object && vocab.word_index(*occ.object) >= 0) kept.object = occ.object;
      if (!kept.subject && !kept.object) {
        ++out.dropped_lines;
        continue;
      }
      out.occurrences[verb].push_back(std::move(kept));
    }
  }
  return out;
}

std::map<std::string, DistVector> collect_holistic_vectors(
    const std::vector<std::string>& lines,
    const std::vector<std::pair<std::string, std::string>>& phrases,
    const Vocabulary& vocab, const CooccurrenceMatrix& base, const PipelineConfig& config) {
  struct Tally {
    std::unordered_map<std::size_t, std::uint64_t> dim_counts;
    std::uint64_t total = 0;       // all in-window context tokens
    std::uint64_t occurrences = 0;
  };
  std::map<std::string, Tally> tallies;
  std::unordered_map<std::string, std::string> bigram_to_phrase;
  for (const auto& [verb, arg] : phrases) {
    bigram_to_phrase[verb + " " + arg] = verb + " " + arg;
    bigram_to_phrase[arg + " " + verb] = verb + " " + arg;
  }

  for (const auto& line : lines) {
    auto tokens = tokenize(line);
    // Collapse phrase bigrams into single pseudo-tokens, left to right.
    std::vector<std::string> collapsed;
    std::vector<bool> is_phrase;
    for (std::size_t i = 0; i < tokens.size();) {
      if (i + 1 < tokens.size()) {
        auto it = bigram_to_phrase.find(tokens[i] + " " + tokens[i + 1]);
        if (it != bigram_to_phrase.end()) {
          collapsed.push_back(it->second);
          is_phrase.push_back(true);
          i += 2;
          continue;
        }
      }
      collapsed.push_back(tokens[i]);
      is_phrase.push_back(false);
      ++i;
    }
    for (std::size_t t = 0; t < collapsed.size(); ++t) {
      if (!is_phrase[t]) continue;
      Tally& tally = tallies[collapsed[t]];
      ++tally.occurrences;
      std::size_t lo = t > config.window ? t - config.window : 0;
      std::size_t hi = std::min(collapsed.size(), t + config.window + 1);
      for (std::size_t c = lo; c < hi; ++c) {
        if (c == t) continue;
        ++tally.total;
        long d = vocab.dim_index(collapsed[c]);
        if (d >= 0) ++tally.dim_counts[static_cast<std::size_t>(d)];
      }
    }
  }

  // PPMI against the base matrix marginals so phrase vectors share the scale
  // of the word vectors.
  std::map<std::string, DistVector> out;
  const double ln_grand = std::log(static_cast<double>(base.grand_total));
  for (const auto& [phrase, tally] : tallies) {
    if (tally.occurrences < config.min_word_count || tally.total == 0) continue;
    std::vector<double> weights(vocab.num_dims(), 0.0);
    for (const auto& [d, n] : tally.dim_counts) {
      auto cit = base.type_index.find(vocab.dims()[d]);
      if (cit == base.type_index.end()) continue;
      double pmi = std::log(static_cast<double>(n)) + ln_grand -
                   std::log(static_cast<double>(tally.total)) -
                   std::log(static_cast<double>(base.dim_totals[cit->second]));
      weights[d] = std::max(0.0, pmi);
    }
    out.emplace(phrase, DistVector(std::move(weights)));
  }
  return out;
}

}  // namespace entailkit
