#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "photonstat/model/emitter.hpp"

namespace photonstat::sim {

/// Excitation intensity over the superpixel grid. The normalized intensity
/// used everywhere downstream is I~ = alpha * I(x, y).
struct ExcitationField {
  enum class Kind { kUniform, kGaussian };
  Kind kind = Kind::kUniform;
  double amplitude = 1.0;
  double center_x = 0, center_y = 0;  // Gaussian only
  double waist = 1.0;                 // Gaussian 1/e^2-style width, superpixels

  double intensity(double x, double y) const {
    if (kind == Kind::kUniform) return amplitude;
    const double dx = x - center_x, dy = y - center_y;
    return amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * waist * waist));
  }
};

/// One pointlike object: a cluster of emitters sharing a position and PSF.
struct ObjectSpec {
  double center_x = 0, center_y = 0;  // superpixels, real-valued
  double psf_sigma = 1.0;             // Gaussian PSF width, superpixels
  bool same_mode = false;  // emitters share one radiation mode (metadata tag;
                           // count statistics of independent emitters do not
                           // depend on it)
  std::vector<model::EmitterParams> emitters;
};

struct SceneSpec {
  std::uint32_t grid_width = 64, grid_height = 64;
  ExcitationField excitation;
  double normalization_alpha = 1.0;
  std::vector<ObjectSpec> objects;

  double normalized_intensity(double x, double y) const {
    return normalization_alpha * excitation.intensity(x, y);
  }

  void validate() const {
    if (grid_width == 0 || grid_height == 0)
      throw ValidationError("scene: grid dimensions must be positive");
    if (!(normalization_alpha >= 0)) throw ValidationError("scene: alpha must be >= 0");
    for (const auto& obj : objects) {
      if (obj.emitters.empty()) throw ValidationError("scene: object with no emitters");
      if (!(obj.psf_sigma >= 0)) throw ValidationError("scene: psf_sigma must be >= 0");
      if (obj.center_x < 0 || obj.center_x > grid_width - 1 || obj.center_y < 0 ||
          obj.center_y > grid_height - 1)
        throw ValidationError("scene: object center outside grid");
      for (const auto& em : obj.emitters) em.validate();
    }
  }
};

/// Readout-signal model for analog frames.
struct ReadoutModel {
  double photon_mean = 900, photon_sd = 100;  // superpixels with >= 1 photon
  double empty_mean = 640, empty_sd = 30;     // noise readouts on empty superpixels
};

struct CameraConfig {
  model::GateConfig gate;
  std::uint32_t binning = 4;       // physical pixels per superpixel edge (metadata)
  double quantum_efficiency = 1.0;
  double dark_event_rate = 0.0;    // events (binary) or noise readouts (analog)
                                   // per superpixel per gate
  ReadoutModel readout;
  double splitter_ratio = 0.5;     // fraction routed to image field A
  double offset_b_x = 0, offset_b_y = 0;  // field-B image displacement, superpixels
  bool analog = false;             // analog readout vs binary photon counting

  void validate() const {
    gate.validate();
    if (!(quantum_efficiency >= 0 && quantum_efficiency <= 1))
      throw ValidationError("camera: quantum efficiency must be in [0,1]");
    if (!(dark_event_rate >= 0))
      throw ValidationError("camera: dark event rate must be >= 0");
    if (!(splitter_ratio >= 0 && splitter_ratio <= 1))
      throw ValidationError("camera: splitter ratio must be in [0,1]");
    if (!(readout.photon_mean > 0) || !(readout.empty_mean > 0) ||
        !(readout.photon_sd >= 0) || !(readout.empty_sd >= 0))
      throw ValidationError("camera: readout means must be positive, sds >= 0");
    if (binning == 0) throw ValidationError("camera: binning must be >= 1");
  }
};

struct DriftModel {
  enum class Kind { kNone, kRandomWalk };
  Kind kind = Kind::kNone;
  double step_sd = 0.0;                       // superpixels per frame, per axis
  std::uint32_t control_frame_interval = 10000;
  std::uint32_t control_accumulate = 2000;    // gates summed into one control frame

  void validate() const {
    if (!(step_sd >= 0)) throw ValidationError("drift: step_sd must be >= 0");
    if (control_frame_interval == 0)
      throw ValidationError("drift: control_frame_interval must be > 0");
    if (control_accumulate == 0)
      throw ValidationError("drift: control_accumulate must be > 0");
  }
};

}  // namespace photonstat::sim
