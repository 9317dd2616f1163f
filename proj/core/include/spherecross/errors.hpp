#pragma once

#include <stdexcept>
#include <string>

namespace spherecross {

/// Segment endpoints coincide or are antipodal, or a direction degenerates.
struct DegenerateSegment : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A crossing-predicate sign test fell inside the degeneracy tolerance
/// (tangency or shared great circle).  Callers should perturb the input.
struct DegenerateConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed measure specification.
struct InvalidSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejection sampling exhausted its budget; the measure spec is degenerate.
struct TooManyRejections : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A constructed drawing violates the general-position requirements.
struct GeneralPositionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Antipodal drawings need two equal-size point sets (K_{n,n} with n even).
struct OddSize : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No antipodal relabeling of the base K_{4,4} produces the canonical
/// crossing pattern needed to read off the blow-up angles.
struct ConfigurationNotCanonical : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of a closed-form predictor.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pattern graph not supported by the exact counting routines.
struct UnsupportedPattern : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace spherecross
