#include "photonstat/io/stack_file.hpp"

#include <cstring>
#include <unordered_set>

namespace photonstat::io {

namespace {

void put_u16(std::string& buf, std::uint16_t v) {
  buf.push_back(static_cast<char>(v & 0xFF));
  buf.push_back(static_cast<char>((v >> 8) & 0xFF));
}
void put_u32(std::string& buf, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& buf, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_f32(std::string& buf, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32(buf, bits);
}

std::uint64_t pixel_index(std::uint16_t x, std::uint16_t y) {
  return (static_cast<std::uint64_t>(y) << 16) | x;
}

void check_frame(const BinaryFrame& frame, std::uint32_t w, std::uint32_t h,
                 std::unordered_set<std::uint64_t>& seen) {
  seen.clear();
  for (const auto& ev : frame) {
    if (ev.x >= w || ev.y >= h) throw ValidationError("stack: event outside grid");
    if (!seen.insert(pixel_index(ev.x, ev.y)).second)
      throw ValidationError("stack: duplicate event within a frame");
  }
}

void check_frame(const AnalogFrame& frame, std::uint32_t w, std::uint32_t h,
                 std::unordered_set<std::uint64_t>& seen) {
  seen.clear();
  for (const auto& ro : frame) {
    if (ro.x >= w || ro.y >= h) throw ValidationError("stack: readout outside grid");
    if (!std::isfinite(ro.s)) throw ValidationError("stack: non-finite readout value");
    if (!seen.insert(pixel_index(ro.x, ro.y)).second)
      throw ValidationError("stack: duplicate readout within a frame");
  }
}

nlohmann::json control_frames_to_json(const std::vector<ControlFrame>& controls) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& cf : controls) {
    arr.push_back({{"after_frame", cf.after_frame}, {"counts", cf.counts}});
  }
  return arr;
}

std::vector<ControlFrame> control_frames_from_json(const nlohmann::json& meta) {
  std::vector<ControlFrame> out;
  if (!meta.contains("control_frames")) return out;
  for (const auto& item : meta.at("control_frames")) {
    ControlFrame cf;
    cf.after_frame = item.at("after_frame").get<std::uint64_t>();
    cf.counts = item.at("counts").get<std::vector<std::uint64_t>>();
    out.push_back(std::move(cf));
  }
  return out;
}

class File {
public:
  File(const std::filesystem::path& path, const char* mode) {
    f_ = std::fopen(path.string().c_str(), mode);
    if (!f_) throw Error("cannot open " + path.string());
  }
  ~File() {
    if (f_) std::fclose(f_);
  }
  std::FILE* get() { return f_; }

private:
  std::FILE* f_ = nullptr;
};

}  // namespace

void FrameStack::validate() const {
  if (mode == StackMode::kBinary && !analog_frames.empty())
    throw ValidationError("stack: binary stack carries analog frames");
  if (mode == StackMode::kAnalog && !binary_frames.empty())
    throw ValidationError("stack: analog stack carries binary frames");
  std::unordered_set<std::uint64_t> seen;
  for (const auto& frame : binary_frames) check_frame(frame, grid_width, grid_height, seen);
  for (const auto& frame : analog_frames) check_frame(frame, grid_width, grid_height, seen);
  for (const auto& cf : control_frames) {
    if (cf.counts.size() !=
        static_cast<std::size_t>(grid_width) * static_cast<std::size_t>(grid_height))
      throw ValidationError("stack: control frame size mismatch");
  }
}

// ---------------------------------------------------------------------------
// Writer

struct StackWriter::Impl {
  File file;
  StackMode mode;
  std::uint32_t width, height;
  std::uint64_t declared, written = 0;
  std::uint64_t bytes = 0;
  std::string buf;
  std::unordered_set<std::uint64_t> seen;
  bool finished = false;

  Impl(const std::filesystem::path& path, StackMode m, std::uint32_t w, std::uint32_t h,
       std::uint64_t frames, const nlohmann::json& metadata)
      : file(path, "wb"), mode(m), width(w), height(h), declared(frames) {
    std::string header;
    header.append(mode == StackMode::kAnalog ? kMagicAnalog : kMagicBinary, 4);
    put_u16(header, kFormatVersion);
    put_u32(header, width);
    put_u32(header, height);
    put_u64(header, declared);
    put_u16(header, mode == StackMode::kAnalog ? 1 : 0);
    const std::string meta = metadata.dump();
    put_u32(header, static_cast<std::uint32_t>(meta.size()));
    header += meta;
    write_raw(header);
  }

  void write_raw(const std::string& data) {
    if (std::fwrite(data.data(), 1, data.size(), file.get()) != data.size())
      throw Error("stack writer: short write");
    bytes += data.size();
  }
};

StackWriter::StackWriter(const std::filesystem::path& path, StackMode mode,
                         std::uint32_t grid_width, std::uint32_t grid_height,
                         std::uint64_t frame_count, const nlohmann::json& metadata)
    : impl_(std::make_unique<Impl>(path, mode, grid_width, grid_height, frame_count,
                                   metadata)) {}

StackWriter::~StackWriter() = default;

void StackWriter::append(const BinaryFrame& frame) {
  if (impl_->mode != StackMode::kBinary)
    throw CapabilityError("stack writer: binary frame on analog stack");
  check_frame(frame, impl_->width, impl_->height, impl_->seen);
  auto& buf = impl_->buf;
  buf.clear();
  put_u32(buf, static_cast<std::uint32_t>(frame.size()));
  for (const auto& ev : frame) {
    put_u16(buf, ev.x);
    put_u16(buf, ev.y);
  }
  impl_->write_raw(buf);
  ++impl_->written;
}

void StackWriter::append(const AnalogFrame& frame) {
  if (impl_->mode != StackMode::kAnalog)
    throw CapabilityError("stack writer: analog frame on binary stack");
  check_frame(frame, impl_->width, impl_->height, impl_->seen);
  auto& buf = impl_->buf;
  buf.clear();
  put_u32(buf, static_cast<std::uint32_t>(frame.size()));
  for (const auto& ro : frame) {
    put_u16(buf, ro.x);
    put_u16(buf, ro.y);
    put_f32(buf, ro.s);
  }
  impl_->write_raw(buf);
  ++impl_->written;
}

std::uint64_t StackWriter::finish() {
  if (impl_->written != impl_->declared)
    throw ValidationError("stack writer: appended frame count differs from declared");
  if (std::fflush(impl_->file.get()) != 0) throw Error("stack writer: flush failed");
  impl_->finished = true;
  return impl_->bytes;
}

std::uint64_t write_stack(const FrameStack& stack, const std::filesystem::path& path) {
  stack.validate();
  nlohmann::json meta = stack.metadata;
  if (!stack.control_frames.empty())
    meta["control_frames"] = control_frames_to_json(stack.control_frames);
  StackWriter writer(path, stack.mode, stack.grid_width, stack.grid_height,
                     stack.frame_count(), meta);
  if (stack.mode == StackMode::kBinary) {
    for (const auto& frame : stack.binary_frames) writer.append(frame);
  } else {
    for (const auto& frame : stack.analog_frames) writer.append(frame);
  }
  return writer.finish();
}

// ---------------------------------------------------------------------------
// Reader

struct StackReader::Impl {
  File file;
  StackMode mode = StackMode::kBinary;
  std::uint32_t width = 0, height = 0;
  std::uint64_t frames = 0;
  std::uint64_t next_frame = 0;
  long data_start = 0;
  nlohmann::json metadata;
  std::string buf;
  std::unordered_set<std::uint64_t> seen;

  explicit Impl(const std::filesystem::path& path) : file(path, "rb") {
    std::string head = read_exact(4, "header");
    if (std::memcmp(head.data(), kMagicBinary, 4) == 0) {
      mode = StackMode::kBinary;
    } else if (std::memcmp(head.data(), kMagicAnalog, 4) == 0) {
      mode = StackMode::kAnalog;
    } else {
      throw ValidationError("stack reader: unrecognized magic");
    }
    const std::uint16_t version = read_u16("header");
    if (version != kFormatVersion)
      throw ValidationError("stack reader: unsupported version");
    width = read_u32("header");
    height = read_u32("header");
    frames = read_u64("header");
    const std::uint16_t flags = read_u16("header");
    if (((flags & 1) != 0) != (mode == StackMode::kAnalog))
      throw ValidationError("stack reader: mode flag disagrees with magic");
    const std::uint32_t meta_len = read_u32("header");
    const std::string meta = read_exact(meta_len, "metadata");
    metadata = meta.empty() ? nlohmann::json::object() : nlohmann::json::parse(meta);
    data_start = std::ftell(file.get());
  }

  std::string read_exact(std::size_t n, const std::string& what) {
    std::string out(n, '\0');
    if (std::fread(out.data(), 1, n, file.get()) != n)
      throw CorruptionError("stack reader: truncated " + what);
    return out;
  }

  std::uint16_t read_u16(const std::string& what) {
    const std::string b = read_exact(2, what);
    return static_cast<std::uint16_t>(static_cast<unsigned char>(b[0]) |
                                      (static_cast<unsigned char>(b[1]) << 8));
  }
  std::uint32_t read_u32(const std::string& what) {
    const std::string b = read_exact(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
    return v;
  }
  std::uint64_t read_u64(const std::string& what) {
    const std::string b = read_exact(8, what);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[i]);
    return v;
  }
  float read_f32(const std::string& what) {
    const std::uint32_t bits = read_u32(what);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }

  void check_end() {
    // The file must end exactly at the last frame record.
    char extra;
    if (std::fread(&extra, 1, 1, file.get()) == 1)
      throw CorruptionError("stack reader: trailing bytes after declared frames");
  }

  template <typename Frame>
  bool next_impl(Frame& frame) {
    frame.clear();
    if (next_frame >= frames) {
      check_end();
      return false;
    }
    const std::string what = "frame " + std::to_string(next_frame);
    const std::uint32_t count = read_u32(what);
    frame.reserve(count);
    seen.clear();
    for (std::uint32_t i = 0; i < count; ++i) {
      typename Frame::value_type item;
      item.x = read_u16(what);
      item.y = read_u16(what);
      if constexpr (requires { item.s; }) item.s = read_f32(what);
      if (item.x >= width || item.y >= height)
        throw ValidationError("stack reader: event outside grid in " + what);
      if (!seen.insert(pixel_index(item.x, item.y)).second)
        throw ValidationError("stack reader: duplicate event in " + what);
      frame.push_back(item);
    }
    ++next_frame;
    return true;
  }
};

StackReader::StackReader(const std::filesystem::path& path)
    : impl_(std::make_unique<Impl>(path)) {}
StackReader::~StackReader() = default;

StackMode StackReader::mode() const { return impl_->mode; }
std::uint32_t StackReader::grid_width() const { return impl_->width; }
std::uint32_t StackReader::grid_height() const { return impl_->height; }
std::uint64_t StackReader::frame_count() const { return impl_->frames; }
const nlohmann::json& StackReader::metadata() const { return impl_->metadata; }

std::vector<ControlFrame> StackReader::control_frames() const {
  auto out = control_frames_from_json(impl_->metadata);
  const std::size_t expected =
      static_cast<std::size_t>(impl_->width) * static_cast<std::size_t>(impl_->height);
  for (const auto& cf : out)
    if (cf.counts.size() != expected)
      throw ValidationError("stack reader: control frame size mismatch");
  return out;
}

bool StackReader::next(BinaryFrame& frame) {
  if (impl_->mode != StackMode::kBinary)
    throw CapabilityError("stack reader: binary frame requested from analog stack");
  return impl_->next_impl(frame);
}

bool StackReader::next(AnalogFrame& frame) {
  if (impl_->mode != StackMode::kAnalog)
    throw CapabilityError("stack reader: analog frame requested from binary stack");
  return impl_->next_impl(frame);
}

void StackReader::rewind() {
  if (std::fseek(impl_->file.get(), impl_->data_start, SEEK_SET) != 0)
    throw Error("stack reader: seek failed");
  impl_->next_frame = 0;
}

FrameStack read_stack(const std::filesystem::path& path) {
  StackReader reader(path);
  FrameStack stack;
  stack.mode = reader.mode();
  stack.grid_width = reader.grid_width();
  stack.grid_height = reader.grid_height();
  stack.metadata = reader.metadata();
  stack.control_frames = reader.control_frames();
  stack.metadata.erase("control_frames");
  if (stack.mode == StackMode::kBinary) {
    BinaryFrame frame;
    while (reader.next(frame)) stack.binary_frames.push_back(frame);
  } else {
    AnalogFrame frame;
    while (reader.next(frame)) stack.analog_frames.push_back(frame);
  }
  return stack;
}

}  // namespace photonstat::io
