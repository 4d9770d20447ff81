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

#include "mixkit/time.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mixkit/error.hpp"

namespace mixkit {

RationalTime::RationalTime(std::int64_t r, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "time denominator must be >= 1, got " + std::to_string(n));
  }
  r %= n;
  if (r < 0) r += n;
  if (r == 0) {
    r_ = 0;
    n_ = 1;
    return;
  }
  const std::int64_t g = std::gcd(r, n);
  r_ = r / g;
  n_ = n / g;
}

double RationalTime::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(r_) /
         static_cast<double>(n_);
}

std::string RationalTime::to_string() const {
  return std::to_string(r_) + "/" + std::to_string(n_);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_i64(std::string_view s, std::size_t offset) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(offset, "expected an integer in time '" +
                                 std::string(s) + "'");
  }
  return v;
}

}  // namespace

Time parse_time(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && (s[0] == 't' || s[0] == 'T') && s[1] == '=') {
    std::string body(trim(s.substr(2)));
    std::istringstream in(body);
    in.imbue(std::locale::classic());
    double t = 0.0;
    in >> t;
    if (body.empty() || in.fail() || !in.eof() || !std::isfinite(t)) {
      throw ParseError(2, "expected a decimal time after 't='");
    }
    return FloatTime{t};
  }
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError(0, "time must be 'r/N' or 't=<float>'");
  }
  std::int64_t r = parse_i64(s.substr(0, slash), 0);
  std::int64_t n = parse_i64(s.substr(slash + 1), slash + 1);
  return RationalTime(r, n);
}

std::string format_time(const Time& t) {
  if (const auto* rt = std::get_if<RationalTime>(&t)) return rt->to_string();
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  out << "t=" << std::get<FloatTime>(t).t;
  return out.str();
}

double radians(const Time& t) {
  if (const auto* rt = std::get_if<RationalTime>(&t)) return rt->radians();
  return std::get<FloatTime>(t).t;
}

}  // namespace mixkit
