#ifndef PRISM_ERRORS_HPP
#define PRISM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prism {

// Malformed or out-of-range input: bad text, size mismatch, violated precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource guard (ideal size, |R(w)|, enumeration size) was hit.
class cap_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// Two routes that must agree did not. Always a library bug, never user error.
class verification_failure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace prism

#endif
