#pragma once

#include <stdexcept>

namespace mink {

// An operation was fed arguments outside its contract (rank mismatch,
// non-real potential, bad map parameters, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input: CLI arguments or scenario files.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity that must hold by construction failed. Always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace mink
