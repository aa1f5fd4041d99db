#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entailkit/errors.hpp"

namespace entailkit {

/// Dense non-negative weight vector over the context dimensions of a space.
class DistVector {
 public:
  DistVector() = default;
  explicit DistVector(std::vector<double> weights);
  static DistVector zeros(std::size_t dims) { return DistVector(std::vector<double>(dims, 0.0)); }

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

  bool is_zero() const;
  double sum() const;
  double l2_norm() const;

  bool operator==(const DistVector& other) const { return weights_ == other.weights_; }

 private:
  std::vector<double> weights_;
};

/// Sorted set of dimension indices carrying non-zero weight.
using FeatureSet = std::vector<std::size_t>;

/// (dimension index, weight) pairs, descending weight, ties by ascending index.
using FeatureRanking = std::vector<std::pair<std::size_t, double>>;

/// Word list plus the ordered context dimensions shared by all vectors.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> words, std::vector<std::string> dims);

  std::size_t num_words() const { return words_.size(); }
  std::size_t num_dims() const { return dims_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  const std::vector<std::string>& dims() const { return dims_; }

  // -1 when absent
  long word_index(const std::string& w) const;
  long dim_index(const std::string& d) const;

 private:
  std::vector<std::string> words_;
  std::vector<std::string> dims_;
  std::unordered_map<std::string, std::size_t> word_index_;
  std::unordered_map<std::string, std::size_t> dim_index_;
};

FeatureSet support(const DistVector& v);

FeatureRanking rank_features(const DistVector& v, bool restrict_to_support);

/// Scales v so entries sum to 1. Throws ZeroVectorError on an all-zero input.
DistVector l1_normalize(const DistVector& v);

/// Scales v to unit Euclidean length; an all-zero vector passes through unchanged.
DistVector l2_normalize(const DistVector& v);

/// Vocabulary plus one distributional vector per word, aligned by index.
struct VectorSpace {
  Vocabulary vocab;
  std::vector<DistVector> vectors;  // vectors[i] belongs to vocab.words()[i]

  const DistVector* find(const std::string& word) const;
};

void save_space(const VectorSpace& space, std::ostream& out);
void save_space(const VectorSpace& space, const std::string& path);
VectorSpace load_space(std::istream& in);
VectorSpace load_space(const std::string& path);

}  // namespace entailkit
