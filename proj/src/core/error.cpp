// Copyright 2026 The Magion Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magion/core/error.hpp"

namespace magion {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::EmptyDevice: return "empty-device";
    case ErrorCode::InvalidProfile: return "invalid-profile";
    case ErrorCode::UnknownCircuit: return "unknown-circuit";
    case ErrorCode::UnsupportedProtocol: return "unsupported-protocol";
    case ErrorCode::MajorityTie: return "majority-tie";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::OffState: return "off-state";
    case ErrorCode::InactiveDot: return "tamper-or-inactive";
    case ErrorCode::InsufficientData: return "insufficient-data";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Checksum: return "checksum";
    case ErrorCode::Invariant: return "invariant";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace magion
