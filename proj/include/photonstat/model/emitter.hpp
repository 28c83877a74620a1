#pragma once

#include <cmath>

#include "photonstat/errors.hpp"

namespace photonstat::model {

/// How an emitter produces photons within a gate.
enum class EmissionModel {
  kContinuous,  // continuous antibunched emission (renewal process)
  kGatePulsed,  // at most one photon per gate, emitted with probability
                // brightness_coeff * intensity (ideal single-photon regime)
};

/// Stochastic model of one single-photon emitter.
struct EmitterParams {
  double decay_rate_k = 0.1;     // antibunching recovery rate, 1/ns
  double two_photon_prob_p = 0;  // probability of two-photon emission, in [0,1]
  double brightness_coeff = 0;   // expected detected counts per gate per unit intensity
  double blink_on_rate = 0;      // off -> on transitions, 1/s
  double blink_off_rate = 0;     // on -> off transitions, 1/s
  double bleach_rate = 0;        // irreversible death rate, 1/s
  EmissionModel emission_model = EmissionModel::kContinuous;

  void validate() const {
    if (!(decay_rate_k > 0) || !std::isfinite(decay_rate_k))
      throw ValidationError("emitter: decay_rate_k must be positive and finite");
    if (!(two_photon_prob_p >= 0 && two_photon_prob_p <= 1))
      throw ValidationError("emitter: two_photon_prob_p must be in [0,1]");
    if (!(brightness_coeff >= 0) || !std::isfinite(brightness_coeff))
      throw ValidationError("emitter: brightness_coeff must be >= 0");
    if (!(blink_on_rate >= 0) || !(blink_off_rate >= 0) || !(bleach_rate >= 0))
      throw ValidationError("emitter: blink/bleach rates must be >= 0");
  }
};

/// Camera gating: gates of width gate_width_ns repeat every frame_period_ms.
struct GateConfig {
  double gate_width_ns = 10.0;
  double frame_period_ms = 33.3;

  void validate() const {
    if (!(gate_width_ns > 0) || !std::isfinite(gate_width_ns))
      throw ValidationError("gate: gate_width_ns must be positive");
    if (!(frame_period_ms * 1e6 > gate_width_ns))
      throw ValidationError("gate: frame_period must exceed gate width");
  }
};

}  // namespace photonstat::model
