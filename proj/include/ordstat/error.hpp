#pragma once

#include <stdexcept>
#include <string>

namespace ordstat {

// Invalid mathematical input: zero where positive is required, a non-p-group
// passed to a p-group operation, and the like.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element handed to a group operation does not belong to that group.
struct MembershipError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured cap was exceeded; the message names the cap and its value.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators do not define a valid group (non-invertible matrix generator,
// malformed permutation, inconsistent degrees).
struct InvalidGroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The construction pipeline could not assemble a group (inconsistent
// action homomorphism, failed central-action validation).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact identity that the pipeline requires failed to hold.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation parameters violate a documented hypothesis.
struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A document (group description, representation input) failed to parse.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ordstat
