#pragma once

#include <vector>

#include "photonstat/model/emitter.hpp"
#include "photonstat/sim/rng.hpp"

namespace photonstat::sim {

/// Stationary renewal realization of antibunched emission.
///
/// Emission times within a gate form a stationary renewal process whose pair
/// correlation is exactly 1 - (1-p) exp(-k tau) at every delay. The
/// inter-emission density solves the renewal equation for that correlation:
///   f*(s) = lambda (p s + k) / (s^2 + (k + lambda p) s + lambda k),
/// a mixture of Exp(a) (weight lambda p / a) and Exp(a)+Exp(b), where a, b are
/// the roots of the denominator with a b = lambda k. The first event of each
/// gate is drawn from the equilibrium delay density, which has the same
/// mixture form with weight lambda / a. At p = 0 this reduces to a two-state
/// (ground/excited) Markov chain with excitation and decay rates a and b.
class AntibunchedProcess {
public:
  /// mean_per_gate is the expected number of emissions per gate.
  /// Throws ValidationError when the requested rate is too high for the
  /// antibunched correlation to be realizable (discriminant below zero).
  AntibunchedProcess(double decay_rate_k, double two_photon_prob_p,
                     double mean_per_gate, double gate_width_ns);

  /// Appends emission times in [0, gate_width) to `times`.
  void sample(RandomStream& rng, std::vector<double>& times) const;

  double rate_per_ns() const { return lambda_; }

private:
  double draw_gap(RandomStream& rng, bool first) const;

  double gate_ns_;
  double lambda_;   // mean emission rate, 1/ns
  double root_a_;   // slow root
  double root_b_;   // fast root
  double w_first_;  // Exp(a)-only weight for the equilibrium first gap
  double w_gap_;    // Exp(a)-only weight for subsequent gaps
};

/// Per-gate Bernoulli emitter: one photon with probability mean_per_gate,
/// uniformly placed in the gate. Used for ideal single-photon-per-gate
/// emission (EmissionModel::kGatePulsed).
class GatePulsedProcess {
public:
  GatePulsedProcess(double mean_per_gate, double gate_width_ns);

  void sample(RandomStream& rng, std::vector<double>& times) const;

private:
  double gate_ns_;
  double prob_;
};

}  // namespace photonstat::sim
