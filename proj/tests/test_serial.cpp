#include <random>

#include "chromachord/serial.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chromachord;

namespace {

SerialFrame random_frame() {
  std::uniform_int_distribution<int> count_dist(0, 3);
  std::uniform_int_distribution<int> pc_dist(0, 11);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  SerialFrame frame;
  const int count = count_dist(testsupport::rng());
  for (int i = 0; i < count; ++i) {
    frame.notes.push_back({static_cast<std::uint8_t>(pc_dist(testsupport::rng())),
                           Rgb{static_cast<std::uint8_t>(byte_dist(testsupport::rng())),
                               static_cast<std::uint8_t>(byte_dist(testsupport::rng())),
                               static_cast<std::uint8_t>(byte_dist(testsupport::rng()))}});
  }
  return frame;
}

ChordEvent displayed_g_major() {
  ChordEvent event;
  event.outcome = EventOutcome::kChord;
  ChordEstimate estimate;
  estimate.root = 7;
  estimate.quality = ChordQuality::kMajor;
  estimate.fifth = 2;
  event.colours = chord_colours(estimate);
  event.estimate = estimate;
  event.displayed = true;
  return event;
}

}  // namespace

TEST_CASE("blank frame is exactly three bytes") {
  ChordEvent no_chord;
  no_chord.outcome = EventOutcome::kNoChord;
  const auto bytes = encode_serial(no_chord);
  CHECK(bytes == std::vector<std::uint8_t>{0xC0, 0x00, 0xC0});
}

TEST_CASE("non-displayed chords also blank the LEDs") {
  ChordEvent event = displayed_g_major();
  event.displayed = false;
  CHECK(encode_serial(event) == std::vector<std::uint8_t>{0xC0, 0x00, 0xC0});
}

TEST_CASE("G-major frame round-trips its note tuples") {
  const auto bytes = encode_serial(displayed_g_major());
  CHECK(bytes.size() == 15);
  const auto frame = decode_frame(bytes);
  REQUIRE(frame.has_value());
  REQUIRE(frame->notes.size() == 3);
  CHECK(frame->notes[0] == SerialNote{7, {173, 255, 47}});
  CHECK(frame->notes[1] == SerialNote{11, {75, 0, 130}});
  CHECK(frame->notes[2] == SerialNote{2, {255, 0, 0}});
}

TEST_CASE("single-byte corruption never decodes") {
  const auto bytes = encode_serial(displayed_g_major());
  for (std::size_t pos = 0; pos < bytes.size(); ++pos) {
    for (int delta : {0x01, 0x5A, 0x80, 0xFF}) {
      auto corrupted = bytes;
      corrupted[pos] ^= static_cast<std::uint8_t>(delta);
      std::string error;
      CHECK_FALSE(decode_frame(corrupted, &error).has_value());
      CHECK_FALSE(error.empty());
    }
  }
}

TEST_CASE("decode_frame rejects structural damage") {
  std::string error;
  CHECK_FALSE(decode_frame(std::vector<std::uint8_t>{0xC0, 0x00}, &error));
  CHECK(error.find("minimum") != std::string::npos);

  CHECK_FALSE(decode_frame(std::vector<std::uint8_t>{0x55, 0x00, 0x55}, &error));
  CHECK(error.find("sync") != std::string::npos);

  CHECK_FALSE(decode_frame(std::vector<std::uint8_t>{0xC0, 0x07, 0xC7}, &error));
  CHECK(error.find("count") != std::string::npos);
}

TEST_CASE("mock transport replays frames byte-exactly") {
  MockSerialTransport mock;

  SUBCASE("blank frame lights nothing") {
    ChordEvent no_chord;
    no_chord.outcome = EventOutcome::kNoChord;
    mock.write(encode_serial(no_chord));
    REQUIRE(mock.frames().size() == 1);
    CHECK(mock.frames()[0].notes.empty());
    CHECK(mock.errors().empty());
  }

  SUBCASE("G-major frame lights three published colours") {
    mock.write(encode_serial(displayed_g_major()));
    REQUIRE(mock.frames().size() == 1);
    const auto& notes = mock.frames()[0].notes;
    REQUIRE(notes.size() == 3);
    CHECK(notes[0].rgb == Rgb{173, 255, 47});
    CHECK(notes[1].rgb == Rgb{75, 0, 130});
    CHECK(notes[2].rgb == Rgb{255, 0, 0});
  }

  SUBCASE("100 random frames arrive intact and in order") {
    std::vector<SerialFrame> sent;
    for (int i = 0; i < 100; ++i) {
      sent.push_back(random_frame());
      mock.write(encode_frame(sent.back()));
    }
    REQUIRE(mock.frames().size() == 100);
    CHECK(mock.errors().empty());
    for (int i = 0; i < 100; ++i) {
      CHECK(mock.frames()[i] == sent[i]);
    }
  }

  SUBCASE("byte-at-a-time delivery reassembles frames") {
    const auto bytes = encode_serial(displayed_g_major());
    for (std::uint8_t b : bytes) {
      mock.write(std::vector<std::uint8_t>{b});
    }
    REQUIRE(mock.frames().size() == 1);
    CHECK(mock.frames()[0].notes.size() == 3);
  }

  SUBCASE("checksum failure is an error event, not a crash") {
    auto bytes = encode_serial(displayed_g_major());
    bytes[5] ^= 0x10;
    mock.write(bytes);
    mock.write(encode_serial(displayed_g_major()));
    CHECK_FALSE(mock.errors().empty());
    REQUIRE_FALSE(mock.frames().empty());
    // the clean frame still lands
    CHECK(mock.frames().back().notes.size() == 3);
  }
}

TEST_CASE("encode_frame caps the note count") {
  SerialFrame frame;
  frame.notes.resize(4);
  CHECK_THROWS(encode_frame(frame));
}
