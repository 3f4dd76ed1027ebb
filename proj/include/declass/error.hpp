#pragma once

#include <stdexcept>
#include <string>

namespace declass {

/// Input text or data violated a stated format invariant.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix eigenvalue could not be located inside the scalar field.
struct spectrum_error : std::runtime_error {
  explicit spectrum_error(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized computation exhausted its trial budget without stabilizing.
struct inconclusive_error : std::runtime_error {
  explicit inconclusive_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computation routes disagreed.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace declass
