// Copyright 2026 The cloudac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cloudac {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidWidth,
  kWidthMismatch,
  kEmptyPayload,
  kCorruptCiphertext,
  kDuplicateIdentity,
  kOutOfOrder,
  kUnknownPrincipal,
  kRouting,
  kConfiguration,
  kParse,
  kDeserialization,
  kIo,
  kUndefinedRate,
};

/// Stable lowercase token for an error code, used in CLI diagnostics.
std::string_view error_token(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code lets callers
/// branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cloudac
