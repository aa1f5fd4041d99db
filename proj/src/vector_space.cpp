#include "entailkit/vector_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace entailkit {

DistVector::DistVector(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error("DistVector entries must be finite and non-negative");
    }
  }
}

bool DistVector::is_zero() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 0.0; });
}

double DistVector::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double DistVector::l2_norm() const {
  double s = 0.0;
  for (double w : weights_) s += w * w;
  return std::sqrt(s);
}

Vocabulary::Vocabulary(std::vector<std::string> words, std::vector<std::string> dims)
    : words_(std::move(words)), dims_(std::move(dims)) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (!word_index_.emplace(words_[i], i).second) {
      throw Error("duplicate word in vocabulary: " + words_[i]);
    }
  }
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (!dim_index_.emplace(dims_[i], i).second) {
      throw Error("duplicate dimension in vocabulary: " + dims_[i]);
    }
  }
}

long Vocabulary::word_index(const std::string& w) const {
  auto it = word_index_.find(w);
  return it == word_index_.end() ? -1 : static_cast<long>(it->second);
}

long Vocabulary::dim_index(const std::string& d) const {
  auto it = dim_index_.find(d);
  return it == dim_index_.end() ? -1 : static_cast<long>(it->second);
}

FeatureSet support(const DistVector& v) {
  FeatureSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) s.push_back(i);
  }
  return s;
}

FeatureRanking rank_features(const DistVector& v, bool restrict_to_support) {
  FeatureRanking r;
  r.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!restrict_to_support || v[i] > 0.0) r.emplace_back(i, v[i]);
  }
  std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return r;
}

DistVector l1_normalize(const DistVector& v) {
  double s = v.sum();
  if (s == 0.0) throw ZeroVectorError();
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / s;
  return DistVector(std::move(out));
}

DistVector l2_normalize(const DistVector& v) {
  double n = v.l2_norm();
  if (n == 0.0) return v;
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
  return DistVector(std::move(out));
}

const DistVector* VectorSpace::find(const std::string& word) const {
  long i = vocab.word_index(word);
  return i < 0 ? nullptr : &vectors[static_cast<std::size_t>(i)];
}

void save_space(const VectorSpace& space, std::ostream& out) {
  out << "dims\t" << space.vocab.num_dims() << "\n";
  for (const auto& d : space.vocab.dims()) out << d << "\n";
  char buf[64];
  for (std::size_t w = 0; w < space.vocab.num_words(); ++w) {
    out << space.vocab.words()[w];
    const DistVector& v = space.vectors[w];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%zu:%.6g", i, v[i]);
      out << '\t' << buf;
    }
    out << "\n";
  }
}

void save_space(const VectorSpace& space, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError(path);
  save_space(space, f);
}

VectorSpace load_space(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  ++lineno;
  std::size_t dims = 0;
  {
    std::istringstream hs(line);
    std::string tag;
    if (!std::getline(hs, tag, '\t') || tag != "dims" || !(hs >> dims)) {
      throw ParseError("bad header, expected 'dims<TAB>D'", lineno);
    }
  }
  std::vector<std::string> dim_words(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    if (!std::getline(in, dim_words[i])) throw ParseError("truncated dimension list", lineno);
    ++lineno;
  }
  std::vector<std::string> words;
  std::vector<DistVector> vectors;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    std::getline(ls, word, '\t');
    std::vector<double> weights(dims, 0.0);
    std::string cell;
    while (std::getline(ls, cell, '\t')) {
      auto colon = cell.find(':');
      if (colon == std::string::npos) throw ParseError("bad index:weight cell '" + cell + "'", lineno);
      std::size_t idx = 0;
      double w = 0.0;
      try {
        idx = std::stoul(cell.substr(0, colon));
        w = std::stod(cell.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError("bad index:weight cell '" + cell + "'", lineno);
      }
      if (idx >= dims) throw ParseError("dimension index out of range", lineno);
      weights[idx] = w;
    }
    words.push_back(word);
    vectors.emplace_back(std::move(weights));
  }
  return VectorSpace{Vocabulary(std::move(words), std::move(dim_words)), std::move(vectors)};
}

VectorSpace load_space(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError(path);
  return load_space(f);
}

}  // namespace entailkit
