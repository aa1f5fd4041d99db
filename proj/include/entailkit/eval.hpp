#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "entailkit/corpus.hpp"
#include "entailkit/measures.hpp"
#include "entailkit/tensors.hpp"
#include "entailkit/vector_space.hpp"

namespace entailkit {

enum class Pattern { SV, VO, SVO };

Pattern pattern_from_name(const std::string& name);  // sv, vo, svo
std::string pattern_name(Pattern p);

struct EntailmentPair {
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool entails = false;
};

std::vector<EntailmentPair> load_dataset(std::istream& in, Pattern pattern);
std::vector<EntailmentPair> load_dataset(const std::string& path, Pattern pattern);

/// Mann-Whitney statistic: fraction of (positive, negative) score pairs ranked
/// correctly, ties counted half.
double auc(const std::vector<double>& scores, const std::vector<int>& labels);

/// CLI names: add, mul, min, max, verb-only, relational, copy-subject,
/// copy-object, frobenius-add, frobenius-mul, projective, least-squares.
const std::vector<std::string>& model_names();
bool is_model_name(const std::string& name);

struct ExperimentConfig {
  MeasureConfig measure;
  bool augment = true;      // apply the verb-vector intersection to tensor models
  double ridge = 1e-6;      // least-squares regularizer in the pipeline
  std::size_t min_ls_phrases = 3;  // least-squares abstains below this
  std::size_t threads = 1;
};

/// Composes and scores phrases against a space plus optional verb resources.
/// prepare() builds the per-verb caches; score_pair is then const and
/// thread-safe.
class Scorer {
 public:
  Scorer(const VectorSpace& space, const VerbArgumentTable* table, ExperimentConfig config);

  /// Registers trained least-squares matrices (slot chosen per pattern).
  void add_least_squares(LeastSquaresVerbMatrix m);

  void prepare(const std::vector<EntailmentPair>& dataset, Pattern pattern);

  /// Composes one phrase; matrices come back flattened. Throws
  /// PairSkippedError when the model cannot produce a vector for the phrase.
  DistVector compose_phrase(const std::vector<std::string>& words, Pattern pattern,
                            const std::string& model) const;

  /// Composes both sides, L1-normalizes non-zero composites, applies the
  /// measure. Throws PairSkippedError on unresolvable words or missing verbs.
  double score_pair(const EntailmentPair& pair, Pattern pattern, const std::string& model,
                    const std::string& measure) const;

  const ExperimentConfig& config() const { return config_; }

 private:
  const DistVector& require_vector(const std::string& word) const;
  const FactoredVerbTensor& require_tensor(const std::string& verb) const;
  const FactoredVerbTensor& require_plain_tensor(const std::string& verb) const;

  const VectorSpace& space_;
  const VerbArgumentTable* table_;
  ExperimentConfig config_;
  std::map<std::string, FactoredVerbTensor> tensors_;        // per config_.augment
  std::map<std::string, FactoredVerbTensor> plain_tensors_;  // never augmented
  std::map<std::string, LeastSquaresVerbMatrix> ls_subject_;
  std::map<std::string, LeastSquaresVerbMatrix> ls_object_;
};

struct ExperimentReport {
  std::string dataset_id;
  std::string model;
  std::string measure;
  std::vector<double> scores;  // aligned with kept pair order
  std::vector<int> labels;
  double auc_value = 0.0;
  std::size_t n_scored = 0;
  std::size_t n_skipped = 0;
  std::vector<std::string> skip_reasons;
};

std::vector<ExperimentReport> run_experiment(const std::vector<EntailmentPair>& dataset,
                                             const std::string& dataset_id, Pattern pattern,
                                             const std::vector<std::string>& models,
                                             const std::vector<std::string>& measures,
                                             Scorer& scorer);

std::string report_to_json(const std::vector<ExperimentReport>& reports);

}  // namespace entailkit
