#ifndef SATLAB_ERRORS_HPP
#define SATLAB_ERRORS_HPP

#include <stdexcept>

namespace satlab {

// Raised when an instance exceeds the hard size limits of the bitset kernels
// (graphs over 31 vertices, path DP over 24 candidate vertices, enumeration
// beyond 12 vertices).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on malformed graph6 input.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace satlab

#endif
