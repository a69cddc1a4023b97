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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blemish {

enum class ErrorKind {
  kValidation,   // bad flags or arguments: unknown column, fraction out of range
  kParse,        // malformed CSV or JSON structure
  kType,         // cell does not parse under its column schema
  kInference,    // schema cannot be inferred (all cells null)
  kStats,        // statistics requested over zero non-null cells
  kCapacity,     // fewer eligible rows than requested
  kMode,         // new/extended mode violation, negative top-up
  kIntegrity,    // manifest invariant broken
  kDomain,       // family not applicable to the column's values
  kArity,        // wrong number of label classes
  kDegenerate,   // zero spread where an outlier boundary is needed
  kEmptyTarget,  // targeted duplication matched no rows
  kFingerprint,  // manifest bound to a different file
  kIo,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace blemish
