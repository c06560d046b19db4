#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtz {

/// Malformed textual input (note names, scale specs, rationals, atlas files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string token, std::size_t position)
        : std::runtime_error(what), token_(std::move(token)), position_(position) {}

    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// A well-formed request the domain cannot satisfy.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A query found nothing in a finite window; a larger window may succeed.
class NotFound : public DomainError {
public:
    using DomainError::DomainError;
};

/// Two coincident lattice points carry different spelled tones.
class LabelConflict : public DomainError {
public:
    using DomainError::DomainError;
};

/// The atlas data file violates one of its invariants.
class AtlasError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace gtz
