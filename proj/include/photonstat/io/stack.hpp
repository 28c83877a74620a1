#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "photonstat/errors.hpp"

namespace photonstat::io {

enum class StackMode { kBinary, kAnalog };

/// One thresholded single-photon event.
struct Event {
  std::uint16_t x = 0, y = 0;
  friend bool operator==(const Event&, const Event&) = default;
};

/// One analog readout: dimensionless signal S at a superpixel.
struct Readout {
  std::uint16_t x = 0, y = 0;
  float s = 0;
  friend bool operator==(const Readout&, const Readout&) = default;
};

using BinaryFrame = std::vector<Event>;
using AnalogFrame = std::vector<Readout>;

/// Long-exposure map used for drift registration: accumulated counts per
/// superpixel (row-major), taken after `after_frame` standard frames.
struct ControlFrame {
  std::uint64_t after_frame = 0;
  std::vector<std::uint64_t> counts;  // grid_width * grid_height
  friend bool operator==(const ControlFrame&, const ControlFrame&) = default;
};

/// A sequence of gated camera frames plus acquisition metadata.
///
/// Exactly one of `binary_frames` / `analog_frames` is used, per `mode`.
/// `metadata` is a free-form JSON object (scene digest, camera and drift
/// configuration, master seed, binarization threshold, ...).
struct FrameStack {
  StackMode mode = StackMode::kBinary;
  std::uint32_t grid_width = 0, grid_height = 0;
  std::vector<BinaryFrame> binary_frames;
  std::vector<AnalogFrame> analog_frames;
  std::vector<ControlFrame> control_frames;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t frame_count() const {
    return mode == StackMode::kBinary ? binary_frames.size() : analog_frames.size();
  }

  bool operator==(const FrameStack& other) const {
    return mode == other.mode && grid_width == other.grid_width &&
           grid_height == other.grid_height && binary_frames == other.binary_frames &&
           analog_frames == other.analog_frames && control_frames == other.control_frames &&
           metadata == other.metadata;
  }

  /// Checks coordinate bounds, duplicate events within frames, finite S.
  void validate() const;
};

}  // namespace photonstat::io
