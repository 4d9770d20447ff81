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

#ifndef MIXKIT_ERROR_HPP_
#define MIXKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixkit {

// Every precondition failure surfaced by the library carries one of these.
enum class ErrorKind {
  kSyntax,
  kInvalidArgument,
  kDimensionMismatch,
  kLevelMismatch,
  kOverflow,
  kContainsZero,
  kNotSymmetric,
  kNotGenerating,
  kNotIntegral,
  kZeroShift,
  kNotTwoGroup,
  kNotOddPGroup,
  kDivisibilityPreconditionFailed,
  kNotBent,
  kNotBijection,
  kZeroInSupport,
  kZeroInS1,
  kEmptyInput,
  kZeroPolynomial,
  kGroupTooLarge,
  kInternalInconsistency,
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

// Syntax errors additionally report the byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::kSyntax,
              message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mixkit

#endif  // MIXKIT_ERROR_HPP_
