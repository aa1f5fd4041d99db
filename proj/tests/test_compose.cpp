#include <doctest.h>

#include <random>

#include "entailkit/compose.hpp"
#include "entailkit/measures.hpp"
#include "oracles.hpp"

using namespace entailkit;

TEST_CASE("elementwise composition") {
  std::vector<DistVector> vs = {DistVector({1, 2}), DistVector({3, 0})};
  CHECK(compose_elementwise(ElementwiseOp::Mul, vs) == DistVector({3, 0}));
  CHECK(compose_elementwise(ElementwiseOp::Add, vs) == DistVector({4, 2}));
  CHECK(compose_elementwise(ElementwiseOp::Min, vs) == DistVector({1, 0}));
  CHECK(compose_elementwise(ElementwiseOp::Max, vs) == DistVector({3, 2}));
  CHECK_THROWS_AS(compose_elementwise(ElementwiseOp::Add, {}), EmptyInputError);
  CHECK_THROWS_AS(compose_elementwise(ElementwiseOp::Add, {DistVector({1}), DistVector({1, 2})}),
                  DimMismatchError);
}

TEST_CASE("feature set predictions") {
  CHECK(predict_feature_set(ElementwiseOp::Mul, {{1, 2}, {2, 3}}) == FeatureSet{2});
  CHECK(predict_feature_set(ElementwiseOp::Add, {{1, 2}, {2, 3}}) == FeatureSet{1, 2, 3});
  CHECK(predict_feature_set(ElementwiseOp::Max, {{1}, {}}) == FeatureSet{1});
  CHECK_THROWS_AS(predict_feature_set(ElementwiseOp::Add, {}), EmptyInputError);
}

TEST_CASE("matvec feature prediction") {
  CHECK(predict_matvec_features({{1}, {2}}, {0}) == FeatureSet{1});
  CHECK(predict_matvec_features({{1}, {2}}, {0, 1}) == FeatureSet{1, 2});
  CHECK(predict_matvec_features({{1}, {2}}, {}) == FeatureSet{});
  CHECK_THROWS_AS(predict_matvec_features({{1}}, {3}), DimMismatchError);
}

TEST_CASE("oracle soundness: numeric support equals set prediction") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<std::size_t> nvecs(1, 4);
  for (int it = 0; it < 1000; ++it) {
    std::size_t n = nvecs(rng);
    std::vector<DistVector> vs;
    std::vector<FeatureSet> supports;
    for (std::size_t k = 0; k < n; ++k) {
      vs.push_back(oracles::random_vector(rng, 8));
      supports.push_back(support(vs.back()));
    }
    for (auto op : {ElementwiseOp::Add, ElementwiseOp::Mul, ElementwiseOp::Min,
                    ElementwiseOp::Max}) {
      CHECK(support(compose_elementwise(op, vs)) == predict_feature_set(op, supports));
    }
  }
}

TEST_CASE("matrix law on random non-negative matrices") {
  std::mt19937 rng(103);
  for (int it = 0; it < 300; ++it) {
    const std::size_t d = 6;
    std::vector<DistVector> columns;
    for (std::size_t j = 0; j < d; ++j) columns.push_back(oracles::random_vector(rng, d));
    auto v = oracles::random_vector(rng, d);
    // numeric M*v
    std::vector<double> out(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) out[i] += columns[j][i] * v[j];
    }
    std::vector<FeatureSet> col_supports;
    for (const auto& c : columns) col_supports.push_back(support(c));
    CHECK(support(DistVector(out)) == predict_matvec_features(col_supports, support(v)));
  }
}

TEST_CASE("entailment lifts through elementwise composition") {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> extra(0.0, 2.0);
  auto dominate = [&](const DistVector& u) {
    std::vector<double> w(u.weights());
    for (auto& x : w) x += extra(rng);
    return DistVector(std::move(w));
  };
  for (int it = 0; it < 500; ++it) {
    auto u1 = oracles::random_vector(rng, 6);
    auto u2 = oracles::random_vector(rng, 6);
    auto v1 = dominate(u1);
    auto v2 = dominate(u2);
    for (auto op : {ElementwiseOp::Add, ElementwiseOp::Mul, ElementwiseOp::Min,
                    ElementwiseOp::Max}) {
      auto cu = compose_elementwise(op, {u1, u2});
      auto cv = compose_elementwise(op, {v1, v2});
      for (std::size_t i = 0; i < cu.size(); ++i) CHECK(cu[i] <= cv[i]);
      CHECK(sapinc(cu, cv) == doctest::Approx(1.0));
    }
  }
}
