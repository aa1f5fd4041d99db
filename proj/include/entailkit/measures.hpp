#pragma once

#include <string>
#include <vector>

#include "entailkit/vector_space.hpp"

namespace entailkit {

struct MeasureConfig {
  double alpha = 0.99;    // mixture weight for alpha-skew
  double epsilon = 1e-8;  // additive smoothing for the KL family
};

// Argument convention throughout: u is the candidate entailing (narrower)
// side, v the entailed (broader) side.

/// 1 iff support(u) is a subset of support(v).
double strict_inclusion(const DistVector& u, const DistVector& v);

/// Both inputs are smoothed by +epsilon and L1-normalized first.
double kl_divergence(const DistVector& p, const DistVector& q, const MeasureConfig& config);

/// 1 / (1 + KL(u || v)).
double representativeness(const DistVector& u, const DistVector& v, const MeasureConfig& config);

/// KL of v from the mixture alpha*u + (1-alpha)*v of the smoothed inputs.
double alpha_skew(const DistVector& u, const DistVector& v, const MeasureConfig& config);

double weeds_prec(const DistVector& u, const DistVector& v);

double clarke_de(const DistVector& u, const DistVector& v);

double lin_similarity(const DistVector& u, const DistVector& v);

double apinc(const DistVector& u, const DistVector& v);

double bal_apinc(const DistVector& u, const DistVector& v);

double sapinc(const DistVector& u, const DistVector& v);

double sbal_apinc(const DistVector& u, const DistVector& v, const MeasureConfig& config);

/// CLI names: inclusion, kl, alpha-skew, weedsprec, clarkede, lin, apinc,
/// balapinc, sapinc, sbalapinc.
const std::vector<std::string>& measure_names();
bool is_measure_name(const std::string& name);
double apply_measure(const std::string& name, const DistVector& u, const DistVector& v,
                     const MeasureConfig& config);

}  // namespace entailkit
