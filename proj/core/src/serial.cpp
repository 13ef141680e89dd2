#include "chromachord/serial.hpp"

#include <algorithm>

#include "chromachord/error.hpp"

namespace chromachord {

namespace {

std::uint8_t xor_checksum(std::span<const std::uint8_t> bytes) {
  std::uint8_t checksum = 0;
  for (std::uint8_t b : bytes) {
    checksum ^= b;
  }
  return checksum;
}

}  // namespace

std::vector<std::uint8_t> encode_frame(const SerialFrame& frame) {
  if (frame.notes.size() > kSerialMaxNotes) {
    throw ConfigError("serial: frame carries more than 3 notes");
  }
  std::vector<std::uint8_t> bytes;
  bytes.reserve(3 + 4 * frame.notes.size());
  bytes.push_back(kSerialSync);
  bytes.push_back(static_cast<std::uint8_t>(frame.notes.size()));
  for (const SerialNote& note : frame.notes) {
    bytes.push_back(note.pitch_class);
    bytes.push_back(note.rgb.r);
    bytes.push_back(note.rgb.g);
    bytes.push_back(note.rgb.b);
  }
  bytes.push_back(xor_checksum(bytes));
  return bytes;
}

std::vector<std::uint8_t> encode_serial(const ChordEvent& event) {
  SerialFrame frame;
  if (event.outcome == EventOutcome::kChord && event.displayed &&
      event.colours) {
    for (const NoteColour& colour : *event.colours) {
      frame.notes.push_back(
          {static_cast<std::uint8_t>(colour.pitch_class), colour.rgb});
    }
  }
  return encode_frame(frame);
}

std::optional<SerialFrame> decode_frame(std::span<const std::uint8_t> bytes,
                                        std::string* error) {
  const auto fail = [error](const char* message) -> std::optional<SerialFrame> {
    if (error != nullptr) {
      *error = message;
    }
    return std::nullopt;
  };
  if (bytes.size() < 3) {
    return fail("frame shorter than the 3-byte minimum");
  }
  if (bytes[0] != kSerialSync) {
    return fail("sync byte mismatch");
  }
  const int count = bytes[1];
  if (count > kSerialMaxNotes) {
    return fail("note count exceeds 3");
  }
  const std::size_t expected = 3 + 4 * static_cast<std::size_t>(count);
  if (bytes.size() != expected) {
    return fail("frame length does not match note count");
  }
  if (xor_checksum(bytes.first(expected - 1)) != bytes[expected - 1]) {
    return fail("checksum mismatch");
  }
  SerialFrame frame;
  for (int i = 0; i < count; ++i) {
    const std::size_t off = 2 + 4 * static_cast<std::size_t>(i);
    frame.notes.push_back(
        {bytes[off], {bytes[off + 1], bytes[off + 2], bytes[off + 3]}});
  }
  return frame;
}

FileByteSink::FileByteSink(const std::string& path)
    : path_(path), out_(path, std::ios::binary) {
  if (!out_) {
    throw SinkError("serial: cannot open " + path);
  }
}

void FileByteSink::write(std::span<const std::uint8_t> bytes) {
  out_.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  if (!out_) {
    throw SinkError("serial: write failed on " + path_);
  }
}

void FileByteSink::flush() {
  out_.flush();
  if (!out_) {
    throw SinkError("serial: flush failed on " + path_);
  }
}

void MockSerialTransport::write(std::span<const std::uint8_t> bytes) {
  buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
  parse();
}

void MockSerialTransport::parse() {
  std::size_t pos = 0;
  while (pos < buffer_.size()) {
    if (buffer_[pos] != kSerialSync) {
      // Skip garbage until the next candidate sync byte.
      std::size_t skip = pos;
      while (skip < buffer_.size() && buffer_[skip] != kSerialSync) {
        ++skip;
      }
      errors_.push_back("desync: dropped " + std::to_string(skip - pos) +
                        " byte(s)");
      pos = skip;
      continue;
    }
    if (pos + 2 > buffer_.size()) {
      break;  // wait for the count byte
    }
    const int count = buffer_[pos + 1];
    if (count > kSerialMaxNotes) {
      errors_.push_back("bad note count " + std::to_string(count));
      ++pos;  // resync after the bogus sync byte
      continue;
    }
    const std::size_t need = 3 + 4 * static_cast<std::size_t>(count);
    if (pos + need > buffer_.size()) {
      break;  // wait for the rest of the frame
    }
    std::string error;
    const auto frame = decode_frame(
        std::span<const std::uint8_t>(buffer_.data() + pos, need), &error);
    if (frame) {
      frames_.push_back(*frame);
      pos += need;
    } else {
      errors_.push_back(error);
      ++pos;  // resync
    }
  }
  buffer_.erase(buffer_.begin(), buffer_.begin() + pos);
}

}  // namespace chromachord
