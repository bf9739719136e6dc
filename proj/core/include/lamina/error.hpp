#ifndef LAMINA_ERROR_HPP
#define LAMINA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lamina {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input: unknown symbols, trivial words where a
/// nontrivial one is required, alphabet mismatches, invalid junctions.
struct invalid_input : error {
  using error::error;
};

/// A truncation horizon is too small for the requested operation.  The message
/// states the horizon that would suffice when that is known.
struct horizon_error : error {
  using error::error;
};

/// An internal cross-check failed: a stabilization fixed point was not reached
/// within budget, or two routes to the same result disagreed.
struct consistency_error : error {
  using error::error;
};

}  // namespace lamina

#endif
