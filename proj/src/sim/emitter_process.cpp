#include "photonstat/sim/emitter_process.hpp"

#include <cmath>

#include "photonstat/errors.hpp"

namespace photonstat::sim {

AntibunchedProcess::AntibunchedProcess(double decay_rate_k, double two_photon_prob_p,
                                       double mean_per_gate, double gate_width_ns)
    : gate_ns_(gate_width_ns) {
  if (!(decay_rate_k > 0)) throw ValidationError("emitter process: decay rate must be > 0");
  if (!(two_photon_prob_p >= 0 && two_photon_prob_p <= 1))
    throw ValidationError("emitter process: two-photon probability must be in [0,1]");
  if (!(mean_per_gate >= 0))
    throw ValidationError("emitter process: mean per gate must be >= 0");
  if (!(gate_width_ns > 0)) throw ValidationError("emitter process: gate width must be > 0");

  lambda_ = mean_per_gate / gate_width_ns;
  if (lambda_ == 0) {
    root_a_ = root_b_ = 0;
    w_first_ = w_gap_ = 0;
    return;
  }
  const double k = decay_rate_k;
  const double p = two_photon_prob_p;
  const double q = k + lambda_ * p;
  const double disc = q * q - 4.0 * lambda_ * k;
  if (disc < 0)
    throw ValidationError(
        "emitter process: emission rate too high for antibunched statistics; "
        "reduce brightness or widen the gate");
  root_b_ = 0.5 * (q + std::sqrt(disc));
  root_a_ = lambda_ * k / root_b_;
  w_first_ = lambda_ / root_a_;
  w_gap_ = lambda_ * p / root_a_;
}

double AntibunchedProcess::draw_gap(RandomStream& rng, bool first) const {
  const double w = first ? w_first_ : w_gap_;
  double gap = rng.exponential(root_a_);
  if (!rng.bernoulli(w)) gap += rng.exponential(root_b_);
  return gap;
}

void AntibunchedProcess::sample(RandomStream& rng, std::vector<double>& times) const {
  if (lambda_ == 0) return;
  double t = draw_gap(rng, true);
  while (t < gate_ns_) {
    times.push_back(t);
    t += draw_gap(rng, false);
  }
}

GatePulsedProcess::GatePulsedProcess(double mean_per_gate, double gate_width_ns)
    : gate_ns_(gate_width_ns), prob_(mean_per_gate) {
  if (!(mean_per_gate >= 0 && mean_per_gate <= 1))
    throw ValidationError(
        "gate-pulsed emitter: per-gate emission probability must be in [0,1]");
  if (!(gate_width_ns > 0)) throw ValidationError("gate-pulsed emitter: gate width must be > 0");
}

void GatePulsedProcess::sample(RandomStream& rng, std::vector<double>& times) const {
  if (rng.bernoulli(prob_)) times.push_back(rng.uniform() * gate_ns_);
}

}  // namespace photonstat::sim
