#pragma once

#include <stdexcept>

namespace fsct {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, mismatched grids, unreadable or malformed files.
// The CLI maps this to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Certification failures ("not a frame") and violated theorem hypotheses
// (upper frame bound above one, inadmissible deformation fields).
// The CLI maps this to exit code 2.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsct
