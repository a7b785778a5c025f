// Copyright (c) 2026 The conslaw authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace conslaw {

// Error taxonomy mirrors the process exit codes: 1 = numerical failure,
// 2 = configuration / input error.
class Error : public std::runtime_error {
 public:
  Error(std::string msg, int code) : std::runtime_error(std::move(msg)), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::string msg) : Error(std::move(msg), 2) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(std::string msg) : Error(std::move(msg), 1) {}
};

// Out-of-domain arguments (bad density range, unsupported family, ...).
// Treated as a usage error, same exit code as ConfigError.
class DomainError : public Error {
 public:
  explicit DomainError(std::string msg) : Error(std::move(msg), 2) {}
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace conslaw
