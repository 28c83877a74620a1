#pragma once

#include "photonstat/model/emitter.hpp"

namespace photonstat::model {

/// Second-order correlation at delay tau (ns) for a single emitter:
///   g2(tau) = 1 - (1-p) * exp(-k*|tau|).
/// Result lies in [p, 1].
double g2_at_delay(const EmitterParams& params, double tau_ns);

/// Gate-integrated bunching parameter for a single emitter: the average of
/// g2(t1 - t2) over t1, t2 in [0, Tg]^2,
///   g2_int(Tg) = 1 - (1-p) * { 2/(k Tg) + 2/(k Tg)^2 * (exp(-k Tg) - 1) }.
/// Monotonically nondecreasing in Tg; small k*Tg is evaluated by series
/// expansion to avoid cancellation.
double g2_gate_integrated(double decay_rate_k, double two_photon_prob_p,
                          double gate_width_ns);
double g2_gate_integrated(const EmitterParams& params, const GateConfig& gate);

/// g2 of a cluster of m independent emitters with identical single-emitter g2:
///   g2_m = 1 + (g2_single - 1) / m.
double g2_for_emitter_count(double g2_single, int m);

/// Real-valued emitter count implied by an observed cluster g2:
///   m = (1 - g2_single) / (1 - g2_observed).
/// Throws InsufficientDataError if g2_observed >= 1 (no antibunching, count
/// indeterminate).
double emitter_count_from_g2(double g2_single, double g2_observed);

}  // namespace photonstat::model
