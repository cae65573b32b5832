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

#include "entanglemetry/error.hpp"

namespace entanglemetry {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kNormOutOfTolerance: return "NormOutOfTolerance";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kFullSubset: return "FullSubset";
    case ErrorCode::kSizeOverflow: return "SizeOverflow";
    case ErrorCode::kInvalidPermutation: return "InvalidPermutation";
    case ErrorCode::kUnsupportedSize: return "UnsupportedSize";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNegativeSide: return "NegativeSide";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kNotTwoToTwo: return "NotTwoToTwo";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kInvalidCount: return "InvalidCount";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kMixedKetLength: return "MixedKetLength";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvalidDensityMatrix: return "InvalidDensityMatrix";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out(to_string(code));
  if (position) out += " at offset " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)),
      code_(code),
      position_(position) {}

}  // namespace entanglemetry
