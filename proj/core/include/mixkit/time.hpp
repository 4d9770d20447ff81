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

#ifndef MIXKIT_TIME_HPP_
#define MIXKIT_TIME_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace mixkit {

// t = 2*pi*r/N, held as a reduced fraction with r in [0, N).
class RationalTime {
 public:
  RationalTime() = default;
  // Reduces r/n; throws kInvalidArgument if n < 1.
  RationalTime(std::int64_t r, std::int64_t n);

  std::int64_t r() const noexcept { return r_; }
  std::int64_t n() const noexcept { return n_; }
  double radians() const;
  std::string to_string() const;  // "r/N"

  friend bool operator==(const RationalTime&, const RationalTime&) = default;
  friend auto operator<=>(const RationalTime&, const RationalTime&) = default;

 private:
  std::int64_t r_ = 0;
  std::int64_t n_ = 1;
};

struct FloatTime {
  double t = 0.0;
  friend bool operator==(const FloatTime&, const FloatTime&) = default;
};

using Time = std::variant<RationalTime, FloatTime>;

// "r/N" (exact, meaning 2*pi*r/N) or "t=<decimal>" (radians, float path).
Time parse_time(std::string_view text);
std::string format_time(const Time& t);
double radians(const Time& t);

}  // namespace mixkit

#endif  // MIXKIT_TIME_HPP_
