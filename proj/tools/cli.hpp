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

#include <ostream>

#include "cloudac/error.hpp"

namespace cloudac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitIo = 4;

/// Exit code for an error: configuration and argument errors 2, file and
/// parse errors 4, everything else 3.
int exit_code_for(ErrorCode code);

/// Entry point behind the `cloudac` binary. Diagnostics go to `err` as
/// "error: <token>: <message>".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cloudac::cli
