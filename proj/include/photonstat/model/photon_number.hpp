#pragma once

#include <cstdint>
#include <vector>

#include "photonstat/errors.hpp"

namespace photonstat::model {

/// Detection efficiency modeled as a beamsplitter with transmission sqrt(eta).
struct LossChannel {
  double efficiency_eta = 1.0;

  void validate() const {
    if (!(efficiency_eta >= 0 && efficiency_eta <= 1))
      throw ValidationError("loss channel: efficiency must be in [0,1]");
  }
};

/// Finite probability distribution p0..p_max over detected photon number.
class PhotonNumberDist {
public:
  /// Validates nonnegativity and normalization (|sum - 1| <= 1e-12).
  explicit PhotonNumberDist(std::vector<double> probs);

  /// Builds a distribution from event-count tallies, normalizing by the total.
  static PhotonNumberDist from_counts(const std::vector<std::uint64_t>& counts);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  /// Probability at k; indices beyond the stored vector are zero.
  double at(std::size_t k) const { return k < probs_.size() ? probs_[k] : 0.0; }

  double mean() const;

  /// Raw falling-factorial moment <k (k-1) ... (k-n+1)>.
  double falling_factorial_moment(int n) const;

private:
  std::vector<double> probs_;
};

/// Photon-number distribution of a Fock state |N> after a loss channel:
/// p_k = C(N,k) eta^k (1-eta)^(N-k), k = 0..N.
PhotonNumberDist binomial_loss_distribution(int n_photons, const LossChannel& channel);

/// Poissonian reference distribution with the given mean, truncated where the
/// tail mass falls below 1e-15 (or at max_k if nonnegative).
PhotonNumberDist poisson_distribution(double mean, int max_k = -1);

/// Klyshko nonclassicality ratio at order k:
///   ((k+1)/k) * p_{k+1} p_{k-1} / p_k^2.
/// A value below 1 is impossible for classical light. Throws ValidationError
/// if p_k is zero (ratio undefined).
double klyshko_ratio(const PhotonNumberDist& dist, int k);

/// Normalized factorial moment g(n) = <k(k-1)...(k-n+1)> / <k>^n.
/// g(0) is 1 by convention. Throws InsufficientDataError for a zero-mean
/// distribution.
double normalized_factorial_moment(const PhotonNumberDist& dist, int n);

/// Result of the factorial-moment chain inequality test at order N.
struct ChainCheck {
  double g_below = 0;  // g(N-1)
  double g_at = 0;     // g(N)
  double g_above = 0;  // g(N+1)
  bool nonclassical = false;
};

/// Checks g(N-1) * g(N+1) < g(N)^2 with strict inequality at absolute
/// tolerance 1e-12.
ChainCheck check_chain_inequality(const PhotonNumberDist& dist, int order_n);

/// Discrete convolution of two photon-number distributions (independent sum).
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

/// Predicted normalized factorial moment of order n for a cluster of m
/// independent emitters, each with the given per-gate photon-number
/// distribution: the m-fold convolution's g(n). For a distribution supported
/// on {0,1}, the result at n = m+1 is exactly 0.
double cluster_gn_prediction(int m, const PhotonNumberDist& per_gate_single, int n);

}  // namespace photonstat::model
