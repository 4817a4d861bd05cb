#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weilad {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched variable counts, exponent-vector lengths or jet caps.
class dimension_error : public error {
public:
    using error::error;
};

/// Combination of Weil elements living in different algebras.
class algebra_mismatch : public error {
public:
    using error::error;
};

/// Scalar-domain violation: division by zero, log of a nonpositive value,
/// a transcendental applied to an exact-rational carrier, and friends.
class domain_error : public error {
public:
    using error::error;
};

/// Operation requiring a zero-dimensional ideal got one that is not.
class not_zero_dimensional : public error {
public:
    using error::error;
};

/// Requested Weil settings would exceed the configured size cap.
class size_limit_error : public error {
public:
    using error::error;
};

/// Text input rejected; carries the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace weilad
