#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entailkit/corpus.hpp"
#include "entailkit/vector_space.hpp"

namespace entailkit {

/// D x D non-negative matrix, row-major. Matrix-valued sentence composites.
struct SentenceMatrix {
  std::size_t dims = 0;
  std::vector<double> values;  // dims * dims entries

  double& at(std::size_t i, std::size_t j) { return values[i * dims + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * dims + j]; }

  static SentenceMatrix zeros(std::size_t dims) {
    return SentenceMatrix{dims, std::vector<double>(dims * dims, 0.0)};
  }
  DistVector flatten() const { return DistVector(values); }
};

/// Verb tensor kept as its list of argument-vector factors; the dense tensor
/// is never materialized.
struct FactoredVerbTensor {
  struct Occurrence {
    std::optional<DistVector> sbj;
    std::optional<DistVector> obj;
  };
  std::string verb;
  std::vector<Occurrence> occurrences;
  std::optional<DistVector> verb_vector;  // present when built with augment
};

struct LeastSquaresVerbMatrix {
  enum class Slot { Subject, Object };
  std::string verb;
  Slot slot = Slot::Subject;
  std::size_t dims = 0;
  std::vector<double> rows;  // dims * dims, row-major; row i predicts element i

  double at(std::size_t i, std::size_t j) const { return rows[i * dims + j]; }
};

/// Resolves the verb's argument occurrences against the space. Occurrences
/// whose words are missing from the vocabulary lose that argument; occurrences
/// left with neither are dropped. `augment` attaches the verb's own
/// distributional vector for post-composition intersection.
FactoredVerbTensor build_verb(const VerbArgumentTable& table, const std::string& verb,
                              const VectorSpace& space, bool augment);

DistVector augment_with_verb_vector(const DistVector& composite, const DistVector& verb_vector);

// Relational model: verb = sum of argument (outer) products.
DistVector compose_relational_sv(const FactoredVerbTensor& t, const DistVector& s);
DistVector compose_relational_vo(const FactoredVerbTensor& t, const DistVector& o);
SentenceMatrix compose_relational_svo(const FactoredVerbTensor& t, const DistVector& s,
                                      const DistVector& o);

// Frobenius models.
DistVector compose_copy_subject(const FactoredVerbTensor& t, const DistVector& s,
                                const DistVector& o);
DistVector compose_copy_object(const FactoredVerbTensor& t, const DistVector& s,
                               const DistVector& o);
DistVector compose_frobenius_additive(const FactoredVerbTensor& t, const DistVector& s,
                                      const DistVector& o);
DistVector compose_frobenius_multiplicative(const FactoredVerbTensor& t, const DistVector& s,
                                            const DistVector& o);

// Projective models; stored argument vectors are L2-normalized before use.
DistVector compose_projective_sv(const FactoredVerbTensor& t, const DistVector& s);
DistVector compose_projective_vo(const FactoredVerbTensor& t, const DistVector& o);
DistVector compose_projective_svo(const FactoredVerbTensor& t, const DistVector& s,
                                  const DistVector& o);

/// Solves (X^T X + ridge I) W^T = X^T Y column-wise; rows of X are argument
/// vectors, rows of Y the matching holistic phrase vectors.
LeastSquaresVerbMatrix train_least_squares(const std::vector<DistVector>& X,
                                           const std::vector<DistVector>& Y, double ridge,
                                           const std::string& verb = "",
                                           LeastSquaresVerbMatrix::Slot slot =
                                               LeastSquaresVerbMatrix::Slot::Subject);

/// W * arg with negative predictions clipped to zero.
DistVector compose_least_squares(const LeastSquaresVerbMatrix& m, const DistVector& arg);

}  // namespace entailkit
