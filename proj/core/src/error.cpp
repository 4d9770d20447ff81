// Copyright 2026 The mixkit Authors
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

#include "mixkit/error.hpp"

namespace mixkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kLevelMismatch: return "LevelMismatch";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kContainsZero: return "ContainsZero";
    case ErrorKind::kNotSymmetric: return "NotSymmetric";
    case ErrorKind::kNotGenerating: return "NotGenerating";
    case ErrorKind::kNotIntegral: return "NotIntegral";
    case ErrorKind::kZeroShift: return "ZeroShift";
    case ErrorKind::kNotTwoGroup: return "NotTwoGroup";
    case ErrorKind::kNotOddPGroup: return "NotOddPGroup";
    case ErrorKind::kDivisibilityPreconditionFailed:
      return "DivisibilityPreconditionFailed";
    case ErrorKind::kNotBent: return "NotBent";
    case ErrorKind::kNotBijection: return "NotBijection";
    case ErrorKind::kZeroInSupport: return "ZeroInSupport";
    case ErrorKind::kZeroInS1: return "ZeroInS1";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::kGroupTooLarge: return "GroupTooLarge";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace mixkit
