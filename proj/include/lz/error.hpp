// Copyright 2026 The lambdazeta Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lz {

/// Base class of every error raised by the library. `kind()` is a short
/// machine-readable tag used in the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Operands living in different rings, or an element not valid in its ring.
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& message) : Error("ring_mismatch", message) {}
};

/// The requested operation needs more known coefficients than are available.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& message) : Error("insufficient_precision", message) {}
};

/// Generic precondition failure (bad constant term, non-symmetric input, ...).
class DomainError : public Error {
public:
    DomainError(std::string kind, const std::string& message) : Error(std::move(kind), message) {}
};

/// Input text that does not parse; `offset` is a 1-based character position.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error("syntax_error", message + " at offset " + std::to_string(offset)),
          offset_(offset), bare_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& bare_message() const noexcept { return bare_; }

private:
    std::size_t offset_;
    std::string bare_;
};

} // namespace lz
