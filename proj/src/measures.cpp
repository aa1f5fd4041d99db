#include "entailkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace entailkit {

namespace {

void check_dims(const DistVector& u, const DistVector& v) {
  if (u.size() != v.size()) throw DimMismatchError(u.size(), v.size());
}

// +epsilon on every coordinate, then L1-normalize.
std::vector<double> smooth_normalize(const DistVector& v, double epsilon) {
  std::vector<double> out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] + epsilon;
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

double kl_raw(const std::vector<double>& p, const std::vector<double>& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) d += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  return std::max(0.0, d);
}

}  // namespace

double strict_inclusion(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0 && v[i] == 0.0) return 0.0;
  }
  return 1.0;
}

double kl_divergence(const DistVector& p, const DistVector& q, const MeasureConfig& config) {
  check_dims(p, q);
  return kl_raw(smooth_normalize(p, config.epsilon), smooth_normalize(q, config.epsilon));
}

double representativeness(const DistVector& u, const DistVector& v, const MeasureConfig& config) {
  return 1.0 / (1.0 + kl_divergence(u, v, config));
}

double alpha_skew(const DistVector& u, const DistVector& v, const MeasureConfig& config) {
  check_dims(u, v);
  auto un = smooth_normalize(u, config.epsilon);
  auto vn = smooth_normalize(v, config.epsilon);
  std::vector<double> mix(un.size());
  for (std::size_t i = 0; i < un.size(); ++i) {
    mix[i] = config.alpha * un[i] + (1.0 - config.alpha) * vn[i];
  }
  return kl_raw(vn, mix);
}

double weeds_prec(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  double shared = 0.0, total = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0) {
      total += u[i];
      if (v[i] > 0.0) shared += u[i];
    }
  }
  return total == 0.0 ? 0.0 : shared / total;
}

double clarke_de(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    num += std::min(u[i], v[i]);
    den += u[i];
  }
  return den == 0.0 ? 0.0 : num / den;
}

double lin_similarity(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  double shared = 0.0;
  double den = u.sum() + v.sum();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0.0 && v[i] > 0.0) shared += u[i] + v[i];
  }
  return den == 0.0 ? 0.0 : shared / den;
}

double apinc(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  auto u_rank = rank_features(u, /*restrict_to_support=*/true);
  if (u_rank.empty()) return 0.0;
  auto v_rank = rank_features(v, /*restrict_to_support=*/true);
  std::unordered_map<std::size_t, std::size_t> v_pos;  // feature -> 1-based rank
  for (std::size_t r = 0; r < v_rank.size(); ++r) v_pos[v_rank[r].first] = r + 1;

  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < u_rank.size(); ++r) {
    auto it = v_pos.find(u_rank[r].first);
    double rel = 0.0;
    if (it != v_pos.end()) {
      ++hits;
      rel = 1.0 - static_cast<double>(it->second) / (static_cast<double>(v_rank.size()) + 1.0);
    }
    double precision = static_cast<double>(hits) / static_cast<double>(r + 1);
    sum += precision * rel;
  }
  return sum / static_cast<double>(u_rank.size());
}

double bal_apinc(const DistVector& u, const DistVector& v) {
  if (u.is_zero()) return 0.0;  // degenerate composites score 0, never abort
  return std::sqrt(lin_similarity(u, v) * apinc(u, v));
}

double sapinc(const DistVector& u, const DistVector& v) {
  check_dims(u, v);
  if (u.size() == 0) throw Error("sapinc requires at least one dimension");
  auto ranking = rank_features(u, /*restrict_to_support=*/false);
  double sum = 0.0;
  std::size_t included = 0;
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    std::size_t f = ranking[r].first;
    bool rel = u[f] <= v[f];
    if (rel) ++included;
    double precision = static_cast<double>(included) / static_cast<double>(r + 1);
    sum += precision * (rel ? 1.0 : 0.0);
  }
  return sum / static_cast<double>(u.size());
}

double sbal_apinc(const DistVector& u, const DistVector& v, const MeasureConfig& config) {
  return std::sqrt(representativeness(u, v, config) * sapinc(u, v));
}

const std::vector<std::string>& measure_names() {
  static const std::vector<std::string> names = {
      "inclusion", "kl",    "alpha-skew", "weedsprec", "clarkede",
      "lin",       "apinc", "balapinc",   "sapinc",    "sbalapinc"};
  return names;
}

bool is_measure_name(const std::string& name) {
  const auto& names = measure_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

double apply_measure(const std::string& name, const DistVector& u, const DistVector& v,
                     const MeasureConfig& config) {
  if (name == "inclusion") return strict_inclusion(u, v);
  if (name == "kl") return kl_divergence(u, v, config);
  if (name == "alpha-skew") return alpha_skew(u, v, config);
  if (name == "weedsprec") return weeds_prec(u, v);
  if (name == "clarkede") return clarke_de(u, v);
  if (name == "lin") return lin_similarity(u, v);
  if (name == "apinc") return apinc(u, v);
  if (name == "balapinc") return bal_apinc(u, v);
  if (name == "sapinc") return sapinc(u, v);
  if (name == "sbalapinc") return sbal_apinc(u, v, config);
  throw Error("unknown measure: " + name);
}

}  // namespace entailkit
