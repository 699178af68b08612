#ifndef UNFP_ERRORS_HPP
#define UNFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unfp {

/// Malformed input files (JSON structure, bad labels, duplicate edges, ...).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation's stated precondition.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a configured solver capacity bound.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, fails loudly.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace unfp

#endif
