#pragma once

#include <string>
#include <vector>

#include "entailkit/vector_space.hpp"

namespace entailkit {

enum class ElementwiseOp { Add, Mul, Min, Max };

ElementwiseOp elementwise_op_from_name(const std::string& name);  // add, mul, min, max
std::string elementwise_op_name(ElementwiseOp op);

DistVector compose_elementwise(ElementwiseOp op, const std::vector<DistVector>& vs);

/// Set-algebra prediction of the composed support: union for add/max,
/// intersection for mul/min. Exists to test the numeric path; not used in
/// scoring.
FeatureSet predict_feature_set(ElementwiseOp op, const std::vector<FeatureSet>& feature_sets);

/// Support of M*v as the union of column supports selected by support(v).
FeatureSet predict_matvec_features(const std::vector<FeatureSet>& column_supports,
                                   const FeatureSet& v_support);

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b);
FeatureSet set_intersection(const FeatureSet& a, const FeatureSet& b);

}  // namespace entailkit
