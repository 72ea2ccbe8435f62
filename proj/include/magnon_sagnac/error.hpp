// Copyright 2026 The magnon-sagnac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef MAGNON_SAGNAC_ERROR_HPP
#define MAGNON_SAGNAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace magnon_sagnac {

enum class ErrorKind {
  Validation,  // malformed or out-of-range inputs
  Physics,     // inputs valid but the model has no usable solution
  Io,
  Usage,
};

// Single exception type for the library. `code()` is a stable machine-readable
// tag (e.g. "SQUEEZE_INSTABILITY") that sweeps record per grid point.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error validation_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Validation, std::move(code), message);
}

inline Error physics_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Physics, std::move(code), message);
}

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_ERROR_HPP
