// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace icregion {

/// Domain-level failure categories. Every throwing operation documents
/// which of these it can raise.
enum class Errc {
    DimensionMismatch,
    PowerOutOfRange,
    WrongDimension,
    DegenerateChannel,
    OutOfDomain,
    NoInterference,
    Infeasible,
    CapExceeded,
    SimplexViolation,
    OutsideHull,
    ZeroDirection,
    BadInput,
};

const char* errc_name(Errc code);

/// Raised for violated preconditions and infeasible inputs (CLI exit 1).
class DomainError : public std::runtime_error {
  public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

/// Raised for file and parse failures (CLI exit 2).
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw DomainError(code, what);
}

}  // namespace icregion
