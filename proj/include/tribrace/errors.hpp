#pragma once

#include <stdexcept>
#include <string>

namespace tribrace {

// The request is well formed but the object fails a required property
// (not a subgroup, not normal, not an ideal, incompatible parents, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search or size limit was reached before the computation finished.
// Callers can retry with a larger Bounds value.
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable file, malformed JSON, or a shape that does not match the schema.
// Distinct from DomainError: the object never got far enough to be judged.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tribrace
