// Copyright 2026 The Blemish Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blemish/error.hpp"

namespace blemish {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation: return "validation error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kType: return "type error";
    case ErrorKind::kInference: return "inference error";
    case ErrorKind::kStats: return "stats error";
    case ErrorKind::kCapacity: return "capacity error";
    case ErrorKind::kMode: return "mode error";
    case ErrorKind::kIntegrity: return "manifest integrity error";
    case ErrorKind::kDomain: return "domain error";
    case ErrorKind::kArity: return "arity error";
    case ErrorKind::kDegenerate: return "degenerate-distribution error";
    case ErrorKind::kEmptyTarget: return "empty-target error";
    case ErrorKind::kFingerprint: return "fingerprint mismatch";
    case ErrorKind::kIo: return "I/O error";
  }
  return "error";
}

}  // namespace blemish
