#pragma once

#include <stdexcept>
#include <string>

namespace pidecomp {

/// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact routine was asked to work beyond its configured size limit.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pidecomp
