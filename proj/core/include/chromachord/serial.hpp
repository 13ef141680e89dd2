#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromachord/colour_map.hpp"
#include "chromachord/event.hpp"

namespace chromachord {

// Wire layout, 3 + 4 * count bytes total:
//   sync 0xC0 | count (0..3) | count * (pitch_class, R, G, B) | checksum
// The checksum is the XOR of every preceding byte.
inline constexpr std::uint8_t kSerialSync = 0xC0;
inline constexpr int kSerialMaxNotes = 3;

struct SerialNote {
  std::uint8_t pitch_class = 0;
  Rgb rgb;

  bool operator==(const SerialNote&) const = default;
};

struct SerialFrame {
  std::vector<SerialNote> notes;  // at most kSerialMaxNotes

  bool operator==(const SerialFrame&) const = default;
};

std::vector<std::uint8_t> encode_frame(const SerialFrame& frame);

/// Displayed chords produce a 3-note frame (root, third, fifth);
/// anything else produces the 3-byte blank frame that turns LEDs off.
std::vector<std::uint8_t> encode_serial(const ChordEvent& event);

/// Validates sync byte, count, length and checksum. On failure returns
/// std::nullopt and, when `error` is non-null, stores a diagnostic.
std::optional<SerialFrame> decode_frame(std::span<const std::uint8_t> bytes,
                                        std::string* error = nullptr);

class ByteSink {
 public:
  virtual ~ByteSink() = default;
  virtual void write(std::span<const std::uint8_t> bytes) = 0;  // throws SinkError
};

/// Writes raw bytes to a device path or file.
class FileByteSink : public ByteSink {
 public:
  explicit FileByteSink(const std::string& path);
  void write(std::span<const std::uint8_t> bytes) override;
  void flush();

 private:
  std::string path_;
  std::ofstream out_;
};

/// Loopback stand-in for the LED controller: reassembles frames from
/// the byte stream, validates checksums, and keeps a log of everything
/// observed. Checksum failures are recorded, never thrown.
class MockSerialTransport : public ByteSink {
 public:
  void write(std::span<const std::uint8_t> bytes) override;

  const std::vector<SerialFrame>& frames() const { return frames_; }
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  void parse();

  std::vector<std::uint8_t> buffer_;
  std::vector<SerialFrame> frames_;
  std::vector<std::string> errors_;
};

}  // namespace chromachord
