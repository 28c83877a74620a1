#include "photonstat/model/photon_number.hpp"

#include <cmath>
#include <numeric>

namespace photonstat::model {

PhotonNumberDist::PhotonNumberDist(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("photon-number distribution: empty");
  double sum = 0;
  for (double p : probs_) {
    if (!(p >= 0) || !std::isfinite(p))
      throw ValidationError("photon-number distribution: probabilities must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError("photon-number distribution: probabilities must sum to 1");
}

PhotonNumberDist PhotonNumberDist::from_counts(const std::vector<std::uint64_t>& counts) {
  if (counts.empty()) throw ValidationError("photon-number distribution: empty counts");
  const double total =
      static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  if (total <= 0) throw InsufficientDataError("photon-number distribution: no counts");
  std::vector<double> probs(counts.size());
  double sum = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / total;
    sum += probs[i];
  }
  // Absorb rounding into the largest entry so the normalization invariant holds.
  auto it = std::max_element(probs.begin(), probs.end());
  *it += 1.0 - sum;
  return PhotonNumberDist(std::move(probs));
}

double PhotonNumberDist::mean() const {
  double m = 0;
  for (std::size_t k = 1; k < probs_.size(); ++k) m += static_cast<double>(k) * probs_[k];
  return m;
}

double PhotonNumberDist::falling_factorial_moment(int n) const {
  if (n < 0) throw ValidationError("falling_factorial_moment: order must be >= 0");
  if (n == 0) return 1.0;
  double sum = 0;
  for (std::size_t k = static_cast<std::size_t>(n); k < probs_.size(); ++k) {
    double term = probs_[k];
    for (int j = 0; j < n; ++j) term *= static_cast<double>(k - static_cast<std::size_t>(j));
    sum += term;
  }
  return sum;
}

PhotonNumberDist binomial_loss_distribution(int n_photons, const LossChannel& channel) {
  if (n_photons < 0) throw ValidationError("binomial loss: photon number must be >= 0");
  channel.validate();
  const double eta = channel.efficiency_eta;
  const int n = n_photons;
  std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
  if (eta == 0.0) {
    probs[0] = 1.0;
    return PhotonNumberDist(std::move(probs));
  }
  if (eta == 1.0) {
    probs[static_cast<std::size_t>(n)] = 1.0;
    return PhotonNumberDist(std::move(probs));
  }
  double binom = 1.0;  // C(n, k), updated multiplicatively
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom *= static_cast<double>(n - k + 1) / static_cast<double>(k);
    probs[static_cast<std::size_t>(k)] =
        binom * std::pow(eta, k) * std::pow(1.0 - eta, n - k);
  }
  return PhotonNumberDist(std::move(probs));
}

PhotonNumberDist poisson_distribution(double mean, int max_k) {
  if (!(mean >= 0) || !std::isfinite(mean))
    throw ValidationError("poisson_distribution: mean must be >= 0");
  std::vector<double> probs;
  double term = std::exp(-mean);
  double cumulative = term;
  probs.push_back(term);
  int k = 0;
  while (true) {
    if (max_k >= 0 && k >= max_k) break;
    if (max_k < 0 && 1.0 - cumulative < 1e-15 && k > mean) break;
    ++k;
    term *= mean / static_cast<double>(k);
    cumulative += term;
    probs.push_back(term);
    if (k > 10000) throw ValidationError("poisson_distribution: truncation failed");
  }
  return PhotonNumberDist(std::move(probs));
}

double klyshko_ratio(const PhotonNumberDist& dist, int k) {
  if (k < 1) throw ValidationError("klyshko_ratio: order must be >= 1");
  const double pk = dist.at(static_cast<std::size_t>(k));
  if (!(pk > 0))
    throw ValidationError("klyshko_ratio: p_k is zero, ratio undefined");
  const double pm = dist.at(static_cast<std::size_t>(k - 1));
  const double pp = dist.at(static_cast<std::size_t>(k + 1));
  return (static_cast<double>(k + 1) / static_cast<double>(k)) * (pp * pm) / (pk * pk);
}

double normalized_factorial_moment(const PhotonNumberDist& dist, int n) {
  if (n < 0) throw ValidationError("normalized_factorial_moment: order must be >= 0");
  if (n == 0) return 1.0;
  const double mean = dist.mean();
  if (!(mean > 0))
    throw InsufficientDataError("normalized_factorial_moment: zero-mean distribution");
  return dist.falling_factorial_moment(n) / std::pow(mean, n);
}

ChainCheck check_chain_inequality(const PhotonNumberDist& dist, int order_n) {
  if (order_n < 1) throw ValidationError("check_chain_inequality: order must be >= 1");
  ChainCheck out;
  out.g_below = normalized_factorial_moment(dist, order_n - 1);
  out.g_at = normalized_factorial_moment(dist, order_n);
  out.g_above = normalized_factorial_moment(dist, order_n + 1);
  out.nonclassical = out.g_below * out.g_above < out.g_at * out.g_at - 1e-12;
  return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

double cluster_gn_prediction(int m, const PhotonNumberDist& per_gate_single, int n) {
  if (m < 1) throw ValidationError("cluster_gn_prediction: cluster size must be >= 1");
  std::vector<double> dist = per_gate_single.probs();
  for (int i = 1; i < m; ++i) dist = convolve(dist, per_gate_single.probs());
  // Convolution can leave the sum a few ulps off 1; renormalize before the
  // strict distribution invariant check.
  double sum = std::accumulate(dist.begin(), dist.end(), 0.0);
  for (double& p : dist) p /= sum;
  return normalized_factorial_moment(PhotonNumberDist(std::move(dist)), n);
}

}  // namespace photonstat::model
