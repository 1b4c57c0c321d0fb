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

#include "cloudac/error.hpp"

namespace cloudac {

std::string_view error_token(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kInvalidWidth: return "invalid_width";
    case ErrorCode::kWidthMismatch: return "width_mismatch";
    case ErrorCode::kEmptyPayload: return "empty_payload";
    case ErrorCode::kCorruptCiphertext: return "corrupt_ciphertext";
    case ErrorCode::kDuplicateIdentity: return "duplicate_identity";
    case ErrorCode::kOutOfOrder: return "out_of_order";
    case ErrorCode::kUnknownPrincipal: return "unknown_principal";
    case ErrorCode::kRouting: return "routing_error";
    case ErrorCode::kConfiguration: return "config_error";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kDeserialization: return "deserialization_error";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kUndefinedRate: return "undefined_rate";
  }
  return "unknown";
}

}  // namespace cloudac
