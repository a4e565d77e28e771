#pragma once

#include <stdexcept>
#include <string>

namespace schubaut {

// Request outside the domain contract: bad type/rank, malformed word,
// an operation asked of an input it refuses (e.g. kernel description in
// a non-simply-laced system), or a module that is not B-stable.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured cap.
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant that should be unreachable failed; indicates a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace schubaut
