#pragma once

#include <stdexcept>
#include <string>

namespace intzip {

// Thrown when decoding encounters malformed input: truncated streams,
// out-of-range descriptors, inconsistent section sizes.  Decoders must throw
// this (never crash or read out of bounds) for arbitrary input words.
class CorruptError : public std::runtime_error {
 public:
  explicit CorruptError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace intzip
