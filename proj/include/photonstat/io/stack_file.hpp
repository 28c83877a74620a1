#pragma once

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "photonstat/io/stack.hpp"

namespace photonstat::io {

// Stack file layout (all integers little-endian):
//   magic      4 bytes   "PFS1" (binary events) / "PFA1" (analog readouts)
//   version    u16       currently 1
//   grid_w     u32
//   grid_h     u32
//   frames     u64
//   mode flags u16       bit 0: analog
//   meta_len   u32       length of the metadata blob
//   metadata   meta_len bytes of JSON text (control frames live here too)
// followed by one record per frame:
//   count      u32
//   count x { x: u16, y: u16 }            (binary)
//   count x { x: u16, y: u16, s: f32 }    (analog)

inline constexpr char kMagicBinary[5] = "PFS1";
inline constexpr char kMagicAnalog[5] = "PFA1";
inline constexpr std::uint16_t kFormatVersion = 1;

/// Writes a whole stack; returns the byte count written.
/// Refuses to write a stack that fails validate().
std::uint64_t write_stack(const FrameStack& stack, const std::filesystem::path& path);

/// Reads and validates a whole stack.
FrameStack read_stack(const std::filesystem::path& path);

/// Incremental writer: header first, then frames in order.
class StackWriter {
public:
  StackWriter(const std::filesystem::path& path, StackMode mode, std::uint32_t grid_width,
              std::uint32_t grid_height, std::uint64_t frame_count,
              const nlohmann::json& metadata);
  ~StackWriter();
  StackWriter(const StackWriter&) = delete;
  StackWriter& operator=(const StackWriter&) = delete;

  void append(const BinaryFrame& frame);
  void append(const AnalogFrame& frame);

  /// Flushes and closes; returns total bytes written. Throws if the number of
  /// appended frames does not match the declared count.
  std::uint64_t finish();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Streaming reader: frames are decoded one at a time.
class StackReader {
public:
  explicit StackReader(const std::filesystem::path& path);
  ~StackReader();
  StackReader(const StackReader&) = delete;
  StackReader& operator=(const StackReader&) = delete;

  StackMode mode() const;
  std::uint32_t grid_width() const;
  std::uint32_t grid_height() const;
  std::uint64_t frame_count() const;
  const nlohmann::json& metadata() const;
  std::vector<ControlFrame> control_frames() const;

  /// Decodes the next frame into `frame`; returns false after the last frame
  /// (and verifies the file ends exactly there).
  bool next(BinaryFrame& frame);
  bool next(AnalogFrame& frame);

  /// Restarts iteration at frame 0.
  void rewind();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace photonstat::io
