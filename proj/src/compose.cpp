#include "entailkit/compose.hpp"

#include <algorithm>

namespace entailkit {

ElementwiseOp elementwise_op_from_name(const std::string& name) {
  if (name == "add") return ElementwiseOp::Add;
  if (name == "mul") return ElementwiseOp::Mul;
  if (name == "min") return ElementwiseOp::Min;
  if (name == "max") return ElementwiseOp::Max;
  throw Error("unknown elementwise operator: " + name);
}

std::string elementwise_op_name(ElementwiseOp op) {
  switch (op) {
    case ElementwiseOp::Add: return "add";
    case ElementwiseOp::Mul: return "mul";
    case ElementwiseOp::Min: return "min";
    case ElementwiseOp::Max: return "max";
  }
  throw Error("bad operator enum");
}

DistVector compose_elementwise(ElementwiseOp op, const std::vector<DistVector>& vs) {
  if (vs.empty()) throw EmptyInputError();
  std::vector<double> acc(vs[0].weights());
  for (std::size_t k = 1; k < vs.size(); ++k) {
    const DistVector& v = vs[k];
    if (v.size() != acc.size()) throw DimMismatchError(acc.size(), v.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      switch (op) {
        case ElementwiseOp::Add: acc[i] += v[i]; break;
        case ElementwiseOp::Mul: acc[i] *= v[i]; break;
        case ElementwiseOp::Min: acc[i] = std::min(acc[i], v[i]); break;
        case ElementwiseOp::Max: acc[i] = std::max(acc[i], v[i]); break;
      }
    }
  }
  return DistVector(std::move(acc));
}

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b) {
  FeatureSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FeatureSet set_intersection(const FeatureSet& a, const FeatureSet& b) {
  FeatureSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FeatureSet predict_feature_set(ElementwiseOp op, const std::vector<FeatureSet>& feature_sets) {
  if (feature_sets.empty()) throw EmptyInputError();
  bool unite = op == ElementwiseOp::Add || op == ElementwiseOp::Max;
  FeatureSet acc = feature_sets[0];
  for (std::size_t k = 1; k < feature_sets.size(); ++k) {
    acc = unite ? set_union(acc, feature_sets[k]) : set_intersection(acc, feature_sets[k]);
  }
  return acc;
}

FeatureSet predict_matvec_features(const std::vector<FeatureSet>& column_supports,
                                   const FeatureSet& v_support) {
  for (std::size_t i : v_support) {
    if (i >= column_supports.size()) {
      throw DimMismatchError(column_supports.size(), i + 1);
    }
  }
  FeatureSet acc;
  for (std::size_t i : v_support) acc = set_union(acc, column_supports[i]);
  return acc;
}

}  // namespace entailkit
