#include "entailkit/eval.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "entailkit/compose.hpp"

namespace entailkit {

Pattern pattern_from_name(const std::string& name) {
  if (name == "sv") return Pattern::SV;
  if (name == "vo") return Pattern::VO;
  if (name == "svo") return Pattern::SVO;
  throw Error("unknown pattern: " + name);
}

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::SV: return "sv";
    case Pattern::VO: return "vo";
    case Pattern::SVO: return "svo";
  }
  throw Error("bad pattern enum");
}

namespace {

std::size_t pattern_arity(Pattern p) { return p == Pattern::SVO ? 3 : 2; }

// Word roles per pattern: SV = [subject, verb]; VO = [verb, object];
// SVO = [subject, verb, object].
const std::string& verb_of(const std::vector<std::string>& words, Pattern p) {
  return p == Pattern::VO ? words[0] : words[1];
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::string> words;
  std::string w;
  while (ss >> w) words.push_back(w);
  return words;
}

}  // namespace

std::vector<EntailmentPair> load_dataset(std::istream& in, Pattern pattern) {
  std::vector<EntailmentPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  const std::size_t arity = pattern_arity(pattern);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string left, right, label;
    if (!std::getline(ls, left, '\t') || !std::getline(ls, right, '\t') ||
        !std::getline(ls, label, '\t')) {
      throw ParseError("expected left<TAB>right<TAB>label", lineno);
    }
    EntailmentPair pair;
    pair.left = split_words(left);
    pair.right = split_words(right);
    if (pair.left.size() != arity || pair.right.size() != arity) {
      throw ParseError("phrase arity does not match pattern " + pattern_name(pattern), lineno);
    }
    if (label == "1") {
      pair.entails = true;
    } else if (label == "0") {
      pair.entails = false;
    } else {
      throw ParseError("label must be 0 or 1, got '" + label + "'", lineno);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<EntailmentPair> load_dataset(const std::string& path, Pattern pattern) {
  std::ifstream f(path);
  if (!f) throw IoError(path);
  return load_dataset(f, pattern);
}

double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  if (scores.size() != labels.size()) {
    throw ShapeError("scores and labels must have the same length");
  }
  std::vector<double> pos, neg;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    (labels[i] ? pos : neg).push_back(scores[i]);
  }
  if (pos.empty() || neg.empty()) throw DegenerateLabelsError();
  // Rank-based computation: O((P+N) log (P+N)) instead of P*N comparisons.
  std::vector<std::pair<double, int>> all;
  all.reserve(scores.size());
  for (double s : pos) all.emplace_back(s, 1);
  for (double s : neg) all.emplace_back(s, 0);
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].first == all[i].first) ++j;
    double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (all[k].second) pos_rank_sum += avg_rank;
    }
    i = j;
  }
  double p = static_cast<double>(pos.size());
  double n = static_cast<double>(neg.size());
  return (pos_rank_sum - p * (p + 1) / 2.0) / (p * n);
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {
      "add",          "mul",         "min",           "max",
      "verb-only",    "relational",  "copy-subject",  "copy-object",
      "frobenius-add", "frobenius-mul", "projective", "least-squares"};
  return names;
}

bool is_model_name(const std::string& name) {
  const auto& names = model_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Scorer::Scorer(const VectorSpace& space, const VerbArgumentTable* table, ExperimentConfig config)
    : space_(space), table_(table), config_(std::move(config)) {}

void Scorer::add_least_squares(LeastSquaresVerbMatrix m) {
  auto& target = m.slot == LeastSquaresVerbMatrix::Slot::Subject ? ls_subject_ : ls_object_;
  target[m.verb] = std::move(m);
}

void Scorer::prepare(const std::vector<EntailmentPair>& dataset, Pattern pattern) {
  if (!table_) return;
  for (const auto& pair : dataset) {
    for (const auto* side : {&pair.left, &pair.right}) {
      const std::string& verb = verb_of(*side, pattern);
      if (tensors_.count(verb)) continue;
      try {
        tensors_.emplace(verb, build_verb(*table_, verb, space_, config_.augment));
        plain_tensors_.emplace(verb, build_verb(*table_, verb, space_, false));
      } catch (const Error&) {
        // verbs without usable occurrences stay absent; pairs get skipped
      }
    }
  }
}

const DistVector& Scorer::require_vector(const std::string& word) const {
  const DistVector* v = space_.find(word);
  if (!v) throw PairSkippedError("out-of-vocabulary word: " + word);
  return *v;
}

const FactoredVerbTensor& Scorer::require_tensor(const std::string& verb) const {
  auto it = tensors_.find(verb);
  if (it == tensors_.end()) throw PairSkippedError("no verb tensor for: " + verb);
  return it->second;
}

const FactoredVerbTensor& Scorer::require_plain_tensor(const std::string& verb) const {
  auto it = plain_tensors_.find(verb);
  if (it == plain_tensors_.end()) throw PairSkippedError("no verb tensor for: " + verb);
  return it->second;
}

DistVector Scorer::compose_phrase(const std::vector<std::string>& words, Pattern pattern,
                                  const std::string& model) const {
  if (words.size() != pattern_arity(pattern)) {
    throw PairSkippedError("phrase arity does not match pattern");
  }
  const std::string& verb = verb_of(words, pattern);

  if (model == "add" || model == "mul" || model == "min" || model == "max") {
    std::vector<DistVector> vs;
    for (const auto& w : words) vs.push_back(require_vector(w));
    return compose_elementwise(elementwise_op_from_name(model), vs);
  }

  if (model == "verb-only") {
    if (pattern != Pattern::SVO) return require_vector(verb);
    // Tensor of the head verb, flattened: sum of Sbj x Obj outer products.
    const FactoredVerbTensor& t = require_plain_tensor(verb);
    std::size_t d = space_.vocab.num_dims();
    SentenceMatrix m = SentenceMatrix::zeros(d);
    bool any = false;
    for (const auto& occ : t.occurrences) {
      if (!occ.sbj || !occ.obj) continue;
      for (std::size_t i = 0; i < d; ++i) {
        double si = (*occ.sbj)[i];
        if (si == 0.0) continue;
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) += si * (*occ.obj)[j];
      }
      any = true;
    }
    if (!any) throw PairSkippedError("no transitive occurrences for verb: " + verb);
    return m.flatten();
  }

  if (model == "relational") {
    const FactoredVerbTensor& t = require_tensor(verb);
    switch (pattern) {
      case Pattern::SV: return compose_relational_sv(t, require_vector(words[0]));
      case Pattern::VO: return compose_relational_vo(t, require_vector(words[1]));
      case Pattern::SVO:
        return compose_relational_svo(t, require_vector(words[0]), require_vector(words[2]))
            .flatten();
    }
  }

  if (model == "copy-subject" || model == "copy-object" || model == "frobenius-add" ||
      model == "frobenius-mul") {
    if (pattern != Pattern::SVO) {
      throw PairSkippedError("model " + model + " is defined for svo only");
    }
    const FactoredVerbTensor& t = require_tensor(verb);
    const DistVector& s = require_vector(words[0]);
    const DistVector& o = require_vector(words[2]);
    if (model == "copy-subject") return compose_copy_subject(t, s, o);
    if (model == "copy-object") return compose_copy_object(t, s, o);
    if (model == "frobenius-add") return compose_frobenius_additive(t, s, o);
    return compose_frobenius_multiplicative(t, s, o);
  }

  if (model == "projective") {
    const FactoredVerbTensor& t = require_tensor(verb);
    switch (pattern) {
      case Pattern::SV: return compose_projective_sv(t, require_vector(words[0]));
      case Pattern::VO: return compose_projective_vo(t, require_vector(words[1]));
      case Pattern::SVO:
        return compose_projective_svo(t, require_vector(words[0]), require_vector(words[2]));
    }
  }

  if (model == "least-squares") {
    if (pattern == Pattern::SVO) {
      throw PairSkippedError("least-squares is defined for sv and vo only");
    }
    const auto& store = pattern == Pattern::SV ? ls_subject_ : ls_object_;
    auto it = store.find(verb);
    if (it == store.end()) throw PairSkippedError("no least-squares matrix for verb: " + verb);
    const std::string& arg = pattern == Pattern::SV ? words[0] : words[1];
    return compose_least_squares(it->second, require_vector(arg));
  }

  throw Error("unknown model: " + model);
}

double Scorer::score_pair(const EntailmentPair& pair, Pattern pattern, const std::string& model,
                          const std::string& measure) const {
  try {
    DistVector left = compose_phrase(pair.left, pattern, model);
    DistVector right = compose_phrase(pair.right, pattern, model);
    if (!left.is_zero()) left = l1_normalize(left);
    if (!right.is_zero()) right = l1_normalize(right);
    return apply_measure(measure, left, right, config_.measure);
  } catch (const PairSkippedError&) {
    throw;
  } catch (const Error& e) {
    throw PairSkippedError(e.what());
  }
}

std::vector<ExperimentReport> run_experiment(const std::vector<EntailmentPair>& dataset,
                                             const std::string& dataset_id, Pattern pattern,
                                             const std::vector<std::string>& models,
                                             const std::vector<std::string>& measures,
                                             Scorer& scorer) {
  if (dataset.empty()) throw EmptyInputError();
  scorer.prepare(dataset, pattern);
  std::vector<ExperimentReport> reports;
  for (const auto& model : models) {
    for (const auto& measure : measures) {
      ExperimentReport report;
      report.dataset_id = dataset_id;
      report.model = model;
      report.measure = measure;

      std::vector<double> raw(dataset.size());
      std::vector<int> status(dataset.size(), 0);  // 1 scored, -1 skipped
      std::vector<std::string> reasons(dataset.size());
      auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
          try {
            raw[i] = scorer.score_pair(dataset[i], pattern, model, measure);
            status[i] = 1;
          } catch (const PairSkippedError& e) {
            status[i] = -1;
            reasons[i] = e.what();
          }
        }
      };
      std::size_t nthreads = std::max<std::size_t>(1, scorer.config().threads);
      nthreads = std::min(nthreads, dataset.size());
      if (nthreads == 1) {
        worker(0, dataset.size());
      } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (dataset.size() + nthreads - 1) / nthreads;
        for (std::size_t t = 0; t < nthreads; ++t) {
          std::size_t b = t * chunk;
          std::size_t e = std::min(dataset.size(), b + chunk);
          if (b < e) threads.emplace_back(worker, b, e);
        }
        for (auto& t : threads) t.join();
      }

      for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (status[i] == 1) {
          report.scores.push_back(raw[i]);
          report.labels.push_back(dataset[i].entails ? 1 : 0);
        } else {
          ++report.n_skipped;
          report.skip_reasons.push_back(reasons[i]);
        }
      }
      report.n_scored = report.scores.size();
      report.auc_value = auc(report.scores, report.labels);  // throws DegenerateLabels
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

std::string report_to_json(const std::vector<ExperimentReport>& reports) {
  nlohmann::json root = nlohmann::json::object();
  for (const auto& r : reports) {
    root[r.dataset_id][r.model][r.measure] = {
        {"auc", r.auc_value},
        {"n_scored", r.n_scored},
        {"n_skipped", r.n_skipped},
    };
  }
  return root.dump(2);
}

}  // namespace entailkit
