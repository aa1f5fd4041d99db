#include <doctest.h>

#include <random>

#include "entailkit/compose.hpp"
#include "entailkit/tensors.hpp"
#include "oracles.hpp"

using namespace entailkit;

namespace {

FactoredVerbTensor make_tensor(std::vector<FactoredVerbTensor::Occurrence> occs,
                               std::optional<DistVector> verb_vector = std::nullopt) {
  FactoredVerbTensor t;
  t.verb = "test";
  t.occurrences = std::move(occs);
  t.verb_vector = std::move(verb_vector);
  return t;
}

FactoredVerbTensor random_tensor(std::mt19937& rng, std::size_t d, std::size_t n_occ,
                                 bool with_verb_vector) {
  std::vector<FactoredVerbTensor::Occurrence> occs;
  for (std::size_t i = 0; i < n_occ; ++i) {
    FactoredVerbTensor::Occurrence occ;
    occ.sbj = oracles::random_vector(rng, d);
    occ.obj = oracles::random_vector(rng, d);
    occs.push_back(std::move(occ));
  }
  std::optional<DistVector> vv;
  if (with_verb_vector) vv = oracles::random_vector(rng, d, 0.25);
  return make_tensor(std::move(occs), std::move(vv));
}

FeatureSet flatten_pairs(const FeatureSet& rows, const FeatureSet& cols, std::size_t d) {
  FeatureSet out;
  for (std::size_t i : rows) {
    for (std::size_t j : cols) out.push_back(i * d + j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_close(const DistVector& got, const std::vector<double>& want, double rel = 1e-9) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(rel));
  }
}

}  // namespace

TEST_CASE("build_verb resolves occurrences") {
  VectorSpace space;
  space.vocab = Vocabulary({"boy", "girl", "ball", "kick"}, {"d0", "d1"});
  space.vectors = {DistVector({1, 0}), DistVector({0, 1}), DistVector({1, 1}),
                   DistVector({2, 2})};
  VerbArgumentTable table;
  table.occurrences["kick"] = {{std::string("boy"), std::string("ball")},
                               {std::string("girl"), std::nullopt},
                               {std::string("martian"), std::nullopt}};

  auto t = build_verb(table, "kick", space, false);
  CHECK(t.occurrences.size() == 2);  // martian-only occurrence dropped
  CHECK(!t.verb_vector.has_value());

  auto ta = build_verb(table, "kick", space, true);
  REQUIRE(ta.verb_vector.has_value());
  CHECK((*ta.verb_vector)[0] == 2.0);

  CHECK_THROWS_AS(build_verb(table, "fly", space, false), UnknownVerbError);
  VerbArgumentTable empty;
  empty.occurrences["kick"] = {{std::string("martian"), std::nullopt}};
  CHECK_THROWS_AS(build_verb(empty, "kick", space, false), EmptyArgumentsError);
}

TEST_CASE("relational sv hand cases") {
  auto t = make_tensor({{DistVector({1, 0}), std::nullopt}, {DistVector({0, 1}), std::nullopt}});
  check_close(compose_relational_sv(t, DistVector({2, 0})), {2, 0});
  check_close(compose_relational_sv(t, DistVector({0, 0})), {0, 0});
  auto single = make_tensor({{DistVector({1, 1}), std::nullopt}});
  check_close(compose_relational_sv(single, DistVector({1, 1})), {1, 1});
  auto objects_only = make_tensor({{std::nullopt, DistVector({1, 1})}});
  CHECK_THROWS_AS(compose_relational_sv(objects_only, DistVector({1, 1})), EmptyArgumentsError);
}

TEST_CASE("relational svo hand cases") {
  DistVector e1({0, 1, 0}), e2({0, 0, 1});
  auto t = make_tensor({{e1, e2}});
  auto m = compose_relational_svo(t, e1, e2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m.at(i, j) == (i == 1 && j == 2 ? 1.0 : 0.0));
    }
  }
  // subject disjoint from all stored subjects annihilates
  auto zero = compose_relational_svo(t, DistVector({1, 0, 0}), e2);
  CHECK(zero.flatten().is_zero());
}

TEST_CASE("copy models hand cases") {
  DistVector sbj({3, 0}), obj({0, 2});
  auto t = make_tensor({{sbj, obj}});
  // <Obj1, o> = 2 with o = (0,1); s = (1,1)
  check_close(compose_copy_subject(t, DistVector({1, 1}), DistVector({0, 1})), {6, 0});
  // o orthogonal to every stored object
  CHECK(compose_copy_subject(t, DistVector({1, 1}), DistVector({1, 0})).is_zero());
  // copy-subject support always inside F(s)
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto rt = random_tensor(rng, 6, 3, false);
    auto s = oracles::random_vector(rng, 6);
    auto o = oracles::random_vector(rng, 6);
    auto cs = support(compose_copy_subject(rt, s, o));
    auto co = support(compose_copy_object(rt, s, o));
    CHECK(set_intersection(cs, support(s)) == cs);
    CHECK(set_intersection(co, support(o)) == co);
  }
}

TEST_CASE("frobenius combinations") {
  DistVector sbj({1, 0}), obj({0, 1});
  auto t = make_tensor({{sbj, obj}});
  DistVector s({1, 1}), o({1, 1});
  auto cs = compose_copy_subject(t, s, o);
  auto co = compose_copy_object(t, s, o);
  auto fa = compose_frobenius_additive(t, s, o);
  auto fm = compose_frobenius_multiplicative(t, s, o);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(fa[i] == doctest::Approx(cs[i] + co[i]));
    CHECK(fm[i] == doctest::Approx(cs[i] * co[i]));
  }
  CHECK(support(fa) == set_union(support(cs), support(co)));
  CHECK(support(fm) == set_intersection(support(cs), support(co)));
}

TEST_CASE("projective hand cases") {
  DistVector e1({1, 0}), e2({0, 1});
  auto t = make_tensor({{e1, std::nullopt}, {e2, std::nullopt}});
  check_close(compose_projective_sv(t, e1), {1, 0});
  CHECK(compose_projective_sv(make_tensor({{e2, std::nullopt}}), e1).is_zero());
  auto dup = make_tensor({{e1, std::nullopt}, {e1, std::nullopt}});
  check_close(compose_projective_sv(dup, e1), {2, 0});
  // projector idempotence on its own axis with a non-unit stored vector
  DistVector sbj({3, 4});
  auto single = make_tensor({{sbj, std::nullopt}});
  auto unit = l2_normalize(sbj);
  check_close(compose_projective_sv(single, unit), unit.weights());
}

TEST_CASE("projective svo hand case") {
  DistVector e1({1, 0}), e2({0, 1});
  auto t = make_tensor({{e1, e2}});
  check_close(compose_projective_svo(t, e1, e2), {0.5, 0.5});
  CHECK(compose_projective_svo(t, e2, e2).is_zero());
}

TEST_CASE("augment_with_verb_vector") {
  check_close(augment_with_verb_vector(DistVector({1, 2}), DistVector({0, 3})), {0, 6});
  DistVector c({1.5, 2.5});
  check_close(augment_with_verb_vector(c, DistVector({1, 1})), c.weights());
  CHECK_THROWS_AS(augment_with_verb_vector(DistVector({1}), DistVector({1, 2})),
                  DimMismatchError);
}

TEST_CASE("factored compositions match dense materialization") {
  std::mt19937 rng(211);
  std::uniform_int_distribution<std::size_t> occ_dist(1, 5);
  for (bool augment : {false, true}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t d = 6;
      auto t = random_tensor(rng, d, occ_dist(rng), augment);
      auto dense = oracles::to_dense(t);
      std::optional<oracles::Vec> vv;
      if (t.verb_vector) vv = oracles::to_vec(*t.verb_vector);
      auto s = oracles::random_vector(rng, d);
      auto o = oracles::random_vector(rng, d);

      check_close(compose_relational_sv(t, s), oracles::relational_sv_dense(dense, s.weights(), vv));
      check_close(compose_copy_subject(t, s, o),
                  oracles::copy_subject_dense(dense, s.weights(), o.weights(), vv));
      check_close(compose_copy_object(t, s, o),
                  oracles::copy_object_dense(dense, s.weights(), o.weights(), vv));
      check_close(compose_projective_sv(t, s),
                  oracles::projective_sv_dense(dense, s.weights(), vv));
      check_close(compose_projective_svo(t, s, o),
                  oracles::projective_svo_dense(dense, s.weights(), o.weights(), vv));

      auto m = compose_relational_svo(t, s, o);
      auto md = oracles::relational_svo_dense(dense, s.weights(), o.weights(), vv);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          CHECK(m.at(i, j) == doctest::Approx(md[i][j]).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("tensor feature laws hold exactly on random instances") {
  std::mt19937 rng(307);
  std::uniform_int_distribution<std::size_t> occ_dist(1, 5);
  const std::size_t d = 7;
  for (bool augment : {false, true}) {
    for (int it = 0; it < 250; ++it) {
      auto t = random_tensor(rng, d, occ_dist(rng), augment);
      auto s = oracles::random_vector(rng, d);
      auto o = oracles::random_vector(rng, d);
      FeatureSet fv;  // support of the verb vector, or everything when absent
      if (t.verb_vector) {
        fv = support(*t.verb_vector);
      } else {
        for (std::size_t i = 0; i < d; ++i) fv.push_back(i);
      }
      auto dot_nonzero = [](const DistVector& a, const DistVector& b) {
        return !set_intersection(support(a), support(b)).empty();
      };

      // relational sv: union of subject supports, cut by F(s)
      {
        FeatureSet pred;
        for (const auto& occ : t.occurrences) pred = set_union(pred, support(*occ.sbj));
        pred = set_intersection(pred, support(s));
        pred = set_intersection(pred, fv);
        CHECK(support(compose_relational_sv(t, s)) == pred);
      }
      // relational svo: union of Sbj x Obj rectangles, cut by F(s) x F(o)
      {
        FeatureSet pred;
        for (const auto& occ : t.occurrences) {
          pred = set_union(pred, flatten_pairs(support(*occ.sbj), support(*occ.obj), d));
        }
        pred = set_intersection(pred, flatten_pairs(support(s), support(o), d));
        pred = set_intersection(pred, flatten_pairs(fv, fv, d));
        CHECK(support(compose_relational_svo(t, s, o).flatten()) == pred);
      }
      // copy models: features of one argument, up to similarity of the other
      FeatureSet cs_pred, co_pred;
      for (const auto& occ : t.occurrences) {
        if (dot_nonzero(*occ.obj, o)) cs_pred = set_union(cs_pred, support(*occ.sbj));
        if (dot_nonzero(*occ.sbj, s)) co_pred = set_union(co_pred, support(*occ.obj));
      }
      cs_pred = set_intersection(set_intersection(cs_pred, support(s)), fv);
      co_pred = set_intersection(set_intersection(co_pred, support(o)), fv);
      CHECK(support(compose_copy_subject(t, s, o)) == cs_pred);
      CHECK(support(compose_copy_object(t, s, o)) == co_pred);
      CHECK(support(compose_frobenius_additive(t, s, o)) == set_union(cs_pred, co_pred));
      CHECK(support(compose_frobenius_multiplicative(t, s, o)) ==
            set_intersection(cs_pred, co_pred));
      // projective: unions gated by similarity
      {
        FeatureSet pred;
        for (const auto& occ : t.occurrences) {
          if (dot_nonzero(*occ.sbj, s)) pred = set_union(pred, support(*occ.sbj));
        }
        pred = set_intersection(pred, fv);
        CHECK(support(compose_projective_sv(t, s)) == pred);
      }
      {
        FeatureSet pred;
        for (const auto& occ : t.occurrences) {
          if (dot_nonzero(*occ.sbj, s) && dot_nonzero(*occ.obj, o)) {
            pred = set_union(pred, set_union(support(*occ.sbj), support(*occ.obj)));
          }
        }
        pred = set_intersection(pred, fv);
        CHECK(support(compose_projective_svo(t, s, o)) == pred);
      }
    }
  }
}

TEST_CASE("least squares recovers a known matrix") {
  std::mt19937 rng(401);
  std::uniform_real_distribution<double> entry(0.0, 2.0);
  const std::size_t d = 8, n = 40;
  std::vector<std::vector<double>> M(d, std::vector<double>(d));
  for (auto& row : M) {
    for (auto& x : row) x = entry(rng);
  }
  std::vector<DistVector> X, Y;
  for (std::size_t r = 0; r < n; ++r) {
    auto x = oracles::random_vector(rng, d, 0.0);
    std::vector<double> y(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) y[i] += M[i][j] * x[j];
    }
    X.push_back(x);
    Y.emplace_back(std::move(y));
  }
  auto fit = train_least_squares(X, Y, 0.0);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double diff = fit.at(i, j) - M[i][j];
      num += diff * diff;
      den += M[i][j] * M[i][j];
    }
  }
  CHECK(std::sqrt(num / den) < 1e-6);
}

TEST_CASE("least squares identity fit and errors") {
  const std::size_t d = 4;
  std::vector<DistVector> X, Y;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    X.emplace_back(e);
    Y.emplace_back(e);
  }
  auto fit = train_least_squares(X, Y, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      CHECK(fit.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
    }
  }

  // rank-deficient X at ridge 0
  std::vector<DistVector> Xdef = {DistVector({1, 0, 0, 0}), DistVector({1, 0, 0, 0})};
  std::vector<DistVector> Ydef = {DistVector({1, 0, 0, 0}), DistVector({1, 0, 0, 0})};
  CHECK_THROWS_AS(train_least_squares(Xdef, Ydef, 0.0), SingularSystemError);
  CHECK_NOTHROW(train_least_squares(Xdef, Ydef, 1e-6));

  CHECK_THROWS_AS(train_least_squares({}, {}, 0.0), ShapeError);
  CHECK_THROWS_AS(train_least_squares({DistVector({1, 2})}, {}, 0.0), ShapeError);
}

TEST_CASE("compose_least_squares clips negatives") {
  LeastSquaresVerbMatrix m;
  m.dims = 2;
  m.rows = {1, 0, 0, 1};
  check_close(compose_least_squares(m, DistVector({0.5, 2})), {0.5, 2});
  m.rows = {0, 0, 0, 0};
  CHECK(compose_least_squares(m, DistVector({1, 1})).is_zero());
  m.rows = {-1, 0, 0, 1};
  check_close(compose_least_squares(m, DistVector({1, 1})), {0, 1});
  CHECK_THROWS_AS(compose_least_squares(m, DistVector({1, 1, 1})), ShapeError);
}
