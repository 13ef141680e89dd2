#pragma once

#include <stdexcept>

namespace chromachord {

/// Malformed or unsupported input bytes (WAV decode, serial frames).
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration, detected before any processing runs.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An output sink failed to accept data.
class SinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromachord
