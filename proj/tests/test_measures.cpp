#include <doctest.h>

#include <cmath>
#include <random>

#include "entailkit/measures.hpp"
#include "oracles.hpp"

using namespace entailkit;

namespace {
const MeasureConfig kDefault{};

// Fixtures from the hand oracles: u = {a:3, b:2}, v = {b:5, a:1, c:0.5}
// over dimensions [a, b, c].
const DistVector kU({3.0, 2.0, 0.0});
const DistVector kV({1.0, 5.0, 0.5});
}  // namespace

TEST_CASE("strict inclusion") {
  CHECK(strict_inclusion(DistVector({1, 0}), DistVector({2, 3})) == 1.0);
  CHECK(strict_inclusion(DistVector({1, 1}), DistVector({2, 0})) == 0.0);
  DistVector u({0.5, 0, 1});
  CHECK(strict_inclusion(u, u) == 1.0);
  CHECK_THROWS_AS(strict_inclusion(DistVector({1}), DistVector({1, 2})), DimMismatchError);
}

TEST_CASE("kl divergence") {
  CHECK(kl_divergence(DistVector({0.5, 0.5}), DistVector({0.5, 0.5}), kDefault) ==
        doctest::Approx(0.0).epsilon(1e-6));
  // 0.5 ln 2 + 0.5 ln(2/3) = 0.14384...
  double expected = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  CHECK(kl_divergence(DistVector({0.5, 0.5}), DistVector({0.25, 0.75}), kDefault) ==
        doctest::Approx(expected).epsilon(2e-4));
  double disjoint = kl_divergence(DistVector({1, 0}), DistVector({0, 1}), kDefault);
  CHECK(std::isfinite(disjoint));
  CHECK(disjoint > 5.0);
}

TEST_CASE("representativeness") {
  DistVector u({0.3, 0.7});
  CHECK(representativeness(u, u, kDefault) == doctest::Approx(1.0).epsilon(1e-6));
  double kl = kl_divergence(DistVector({0.5, 0.5}), DistVector({0.25, 0.75}), kDefault);
  CHECK(representativeness(DistVector({0.5, 0.5}), DistVector({0.25, 0.75}), kDefault) ==
        doctest::Approx(1.0 / (1.0 + kl)));
  CHECK(representativeness(DistVector({1, 0}), DistVector({0, 1}), kDefault) < 0.1);
}

TEST_CASE("alpha skew") {
  DistVector u({0.2, 0.8});
  CHECK(alpha_skew(u, u, kDefault) == doctest::Approx(0.0).epsilon(1e-9));
  MeasureConfig degenerate;
  degenerate.alpha = 1.0;
  DistVector a({0.6, 0.4}), b({0.1, 0.9});
  CHECK(alpha_skew(a, b, degenerate) == doctest::Approx(kl_divergence(b, a, degenerate)));
  CHECK(alpha_skew(DistVector({1, 0}), DistVector({0, 1}), kDefault) ==
        doctest::Approx(std::log(100.0)).epsilon(1e-4));
}

TEST_CASE("weeds precision") {
  CHECK(weeds_prec(kU, kV) == doctest::Approx(1.0));  // F(u) subset F(v)
  CHECK(weeds_prec(DistVector({2, 1, 1}), DistVector({4, 1, 0})) == doctest::Approx(0.75));
  CHECK(weeds_prec(DistVector({1, 0}), DistVector({0, 1})) == 0.0);
}

TEST_CASE("clarke degree of inclusion") {
  CHECK(clarke_de(DistVector({2, 1, 1}), DistVector({4, 1, 0})) == doctest::Approx(0.75));
  CHECK(clarke_de(DistVector({1, 2}), DistVector({1, 3})) == doctest::Approx(1.0));
  CHECK(clarke_de(DistVector({1, 2}), DistVector({0, 0})) == 0.0);
}

TEST_CASE("lin similarity") {
  CHECK(lin_similarity(kU, kV) == doctest::Approx(11.0 / 11.5).epsilon(1e-9));
  DistVector u({0.1, 3, 0});
  CHECK(lin_similarity(u, u) == doctest::Approx(1.0));
  CHECK(lin_similarity(DistVector({1, 0}), DistVector({0, 1})) == 0.0);
}

TEST_CASE("apinc hand values") {
  CHECK(apinc(kU, kV) == doctest::Approx(0.625).epsilon(1e-9));
  CHECK(apinc(kU, kV) == doctest::Approx(oracles::apinc_brute(kU.weights(), kV.weights())));
  CHECK(apinc(DistVector({1, 0}), DistVector({0, 1})) == 0.0);
  DistVector single({0, 2.0});
  CHECK(apinc(single, single) == doctest::Approx(0.5));  // rel' = 1 - 1/2
}

TEST_CASE("bal_apinc") {
  CHECK(bal_apinc(kU, kV) == doctest::Approx(std::sqrt(0.625 * 11.0 / 11.5)).epsilon(1e-9));
  CHECK(bal_apinc(DistVector({1, 0}), DistVector({0, 1})) == 0.0);
  CHECK(bal_apinc(DistVector({0, 0}), DistVector({1, 1})) == 0.0);  // degenerate composite
}

TEST_CASE("sapinc hand value and brute force") {
  DistVector u({0.2, 0.5, 0.0}), v({0.3, 0.4, 0.1});
  CHECK(sapinc(u, v) == doctest::Approx(7.0 / 18.0).epsilon(1e-12));
  CHECK(sapinc(u, u) == doctest::Approx(1.0));
  CHECK(sapinc(DistVector({2, 3}), DistVector({1, 2})) == 0.0);  // u strictly above v
}

TEST_CASE("sapinc matches the brute-force rank-list evaluation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim_dist(1, 10);
  for (int it = 0; it < 1000; ++it) {
    std::size_t d = dim_dist(rng);
    auto u = oracles::random_vector(rng, d);
    auto v = oracles::random_vector(rng, d);
    CHECK(sapinc(u, v) ==
          doctest::Approx(oracles::sapinc_brute(u.weights(), v.weights())).epsilon(1e-12));
  }
}

TEST_CASE("sbal_apinc") {
  DistVector u({0.25, 0.75});
  CHECK(sbal_apinc(u, u, kDefault) == doctest::Approx(1.0).epsilon(1e-6));
  DistVector above({2, 3}), below({1, 2});
  CHECK(sbal_apinc(above, below, kDefault) == 0.0);
  DistVector a({0.2, 0.5, 0.0}), b({0.3, 0.4, 0.1});
  double expected = std::sqrt(representativeness(a, b, kDefault) * (7.0 / 18.0));
  CHECK(sbal_apinc(a, b, kDefault) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("boundedness and identity on random inputs") {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    auto u = oracles::random_vector(rng, 6);
    auto v = oracles::random_vector(rng, 6);
    for (const auto& name : measure_names()) {
      double x = apply_measure(name, u, v, kDefault);
      CHECK(std::isfinite(x));
      CHECK(x >= 0.0);
      if (name != "kl" && name != "alpha-skew") CHECK(x <= 1.0 + 1e-12);
    }
    if (!u.is_zero()) {
      CHECK(strict_inclusion(u, u) == 1.0);
      CHECK(weeds_prec(u, u) == doctest::Approx(1.0));
      CHECK(clarke_de(u, u) == doctest::Approx(1.0));
      CHECK(lin_similarity(u, u) == doctest::Approx(1.0));
      CHECK(sapinc(u, u) == doctest::Approx(1.0));
      CHECK(apinc(u, u) > 0.0);
      CHECK(kl_divergence(u, u, kDefault) == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(alpha_skew(u, u, kDefault) == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("monotone dominance") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> extra(0.0, 1.0);
  for (int it = 0; it < 200; ++it) {
    auto u = oracles::random_vector(rng, 7);
    std::vector<double> vw(u.weights());
    for (auto& x : vw) x += extra(rng);
    DistVector v(std::move(vw));
    CHECK(sapinc(u, v) == doctest::Approx(1.0));
    CHECK(clarke_de(u, v) == doctest::Approx(1.0));
  }
}

TEST_CASE("asymmetry witness") {
  DistVector u({1, 0}), v({1, 1});
  CHECK(sapinc(u, v) != sapinc(v, u));
}

TEST_CASE("sapinc scale-free after l1 normalization") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int it = 0; it < 100; ++it) {
    auto u = oracles::random_vector(rng, 6, 0.2);
    auto v = oracles::random_vector(rng, 6, 0.2);
    if (u.is_zero() || v.is_zero()) continue;
    double c1 = scale(rng), c2 = scale(rng);
    auto scaled = [](const DistVector& x, double c) {
      std::vector<double> w(x.weights());
      for (auto& e : w) e *= c;
      return DistVector(std::move(w));
    };
    double base = sapinc(l1_normalize(u), l1_normalize(v));
    double scl = sapinc(l1_normalize(scaled(u, c1)), l1_normalize(scaled(v, c2)));
    CHECK(base == doctest::Approx(scl).epsilon(1e-12));
  }
}
