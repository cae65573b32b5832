// Copyright 2026 The Entanglemetry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace entanglemetry {

enum class ErrorCode {
  kLengthMismatch,
  kZeroVector,
  kNormOutOfTolerance,
  kEmptySubset,
  kFullSubset,
  kSizeOverflow,
  kInvalidPermutation,
  kUnsupportedSize,
  kDomainError,
  kNegativeSide,
  kTriangleViolation,
  kNotTwoToTwo,
  kUnknownName,
  kInvalidCount,
  kInvalidConfig,
  kSyntaxError,
  kMixedKetLength,
  kSchemaMismatch,
  kMalformedInput,
  kInvalidDensityMatrix,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library. `position` is set for parse errors
// and holds a 0-based byte offset into the parsed text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace entanglemetry
