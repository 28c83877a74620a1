#include "photonstat/model/correlation.hpp"

#include <cmath>

namespace photonstat::model {

double g2_at_delay(const EmitterParams& params, double tau_ns) {
  params.validate();
  if (!std::isfinite(tau_ns)) throw ValidationError("g2_at_delay: tau must be finite");
  return 1.0 - (1.0 - params.two_photon_prob_p) *
                   std::exp(-params.decay_rate_k * std::abs(tau_ns));
}

namespace {

// F(x) = 2/x + 2/x^2 * (exp(-x) - 1), the gate-averaging factor.
// For small x the closed form subtracts nearly equal terms, so switch to the
// series F(x) = sum_{m>=0} 2 (-x)^m / (m+2)! = 1 - x/3 + x^2/12 - x^3/60 + ...
double gate_average_factor(double x) {
  if (x < 1e-4) {
    return 1.0 - x / 3.0 + x * x / 12.0 - x * x * x / 60.0;
  }
  return 2.0 / x + 2.0 / (x * x) * (std::exp(-x) - 1.0);
}

}  // namespace

double g2_gate_integrated(double decay_rate_k, double two_photon_prob_p,
                          double gate_width_ns) {
  if (!(decay_rate_k > 0) || !std::isfinite(decay_rate_k))
    throw ValidationError("g2_gate_integrated: decay rate must be positive");
  if (!(two_photon_prob_p >= 0 && two_photon_prob_p <= 1))
    throw ValidationError("g2_gate_integrated: two-photon probability must be in [0,1]");
  if (!(gate_width_ns > 0))
    throw ValidationError("g2_gate_integrated: gate width must be positive");
  const double x = decay_rate_k * gate_width_ns;
  return 1.0 - (1.0 - two_photon_prob_p) * gate_average_factor(x);
}

double g2_gate_integrated(const EmitterParams& params, const GateConfig& gate) {
  params.validate();
  gate.validate();
  return g2_gate_integrated(params.decay_rate_k, params.two_photon_prob_p,
                            gate.gate_width_ns);
}

double g2_for_emitter_count(double g2_single, int m) {
  if (!(g2_single >= 0)) throw ValidationError("g2_for_emitter_count: g2_single must be >= 0");
  if (m < 1) throw ValidationError("g2_for_emitter_count: emitter count must be >= 1");
  return 1.0 + (g2_single - 1.0) / static_cast<double>(m);
}

double emitter_count_from_g2(double g2_single, double g2_observed) {
  if (!(g2_single < 1.0))
    throw ValidationError("emitter_count_from_g2: single-emitter g2 must be < 1");
  if (g2_observed >= 1.0)
    throw InsufficientDataError(
        "emitter_count_from_g2: observed g2 >= 1, no antibunching; emitter count "
        "indeterminate");
  return (1.0 - g2_single) / (1.0 - g2_observed);
}

}  // namespace photonstat::model
