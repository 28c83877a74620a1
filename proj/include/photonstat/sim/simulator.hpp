#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "photonstat/io/stack.hpp"
#include "photonstat/sim/emitter_process.hpp"
#include "photonstat/sim/scene.hpp"

namespace photonstat::sim {

/// One simulated frame; `events` is used in binary mode, `readouts` in
/// analog mode.
struct SimFrame {
  io::BinaryFrame events;
  io::AnalogFrame readouts;
};

/// Seeded Monte Carlo generator of gated camera frames.
///
/// Per frame: blink/bleach states advance, each live emitter draws emission
/// times, each photon is routed to image field A or B, displaced by the
/// drifted object center plus the Gaussian PSF, thinned by the quantum
/// efficiency and scattered onto superpixels; dark events are added; binary
/// mode collapses multiple photons per superpixel into one event, analog mode
/// draws a readout signal per hit superpixel and noise readouts on empty
/// ones.
///
/// All randomness derives from the master seed through per-(purpose, frame,
/// object, emitter) substreams, so stacks are bit-identical for a given seed
/// regardless of thread count.
class Simulator {
public:
  Simulator(SceneSpec scene, CameraConfig camera, DriftModel drift, std::uint64_t seed,
            std::uint64_t n_frames);

  /// Generates all frames, invoking `sink(frame_index, frame)` in frame
  /// order. Control frames accumulate internally when drift tracking is
  /// configured.
  void run(const std::function<void(std::uint64_t, const SimFrame&)>& sink,
           int n_threads = 1);

  const std::vector<io::ControlFrame>& control_frames() const { return controls_; }

  /// Recorded events per superpixel, accumulated over all generated frames.
  const std::vector<std::uint64_t>& accumulated_map() const { return accum_; }

  /// Largest per-superpixel mean event rate (events per gate).
  double peak_occupancy() const;

  nlohmann::json metadata() const;

private:
  struct EmitterSlot {
    std::uint32_t object = 0;
    std::uint32_t emitter = 0;
    double center_x = 0, center_y = 0;
    double psf_sigma = 0;
    bool dynamic_state = false;  // any blink/bleach rate nonzero
    AntibunchedProcess process{0.1, 0, 0, 1};
    GatePulsedProcess pulsed{0, 1};
    bool use_pulsed = false;
  };

  struct EmitterState {
    bool on = true;
    bool alive = true;
  };

  struct ChunkBoundary {
    double drift_x = 0, drift_y = 0;
    std::vector<EmitterState> states;
  };

  void advance_state(EmitterState& st, const model::EmitterParams& params,
                     std::uint64_t frame, const EmitterSlot& slot);
  void simulate_frame(std::uint64_t frame, double drift_x, double drift_y,
                      const std::vector<EmitterState>& states, SimFrame& out) const;
  void render_control(std::uint64_t control_index, std::uint64_t after_frame,
                      double drift_x, double drift_y,
                      const std::vector<EmitterState>& states);

  SceneSpec scene_;
  CameraConfig camera_;
  DriftModel drift_;
  std::uint64_t seed_;
  std::uint64_t n_frames_;
  std::vector<EmitterSlot> slots_;
  bool any_dynamic_ = false;
  double frame_dt_s_ = 0;
  std::vector<io::ControlFrame> controls_;
  std::vector<std::uint64_t> accum_;
  std::uint64_t frames_done_ = 0;
};

/// Simulates into an in-memory stack with metadata attached.
io::FrameStack simulate_stack(const SceneSpec& scene, const CameraConfig& camera,
                              const DriftModel& drift, std::uint64_t n_frames,
                              std::uint64_t seed, int n_threads = 1);

}  // namespace photonstat::sim
