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

#include "mixkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>

#include "mixkit/error.hpp"

namespace mixkit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "group order overflows 64 bits");
  }
  return out;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)), order_(1), exponent_(1) {
  for (std::int64_t n : factors_) {
    if (n < 2) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cyclic factor Z" + std::to_string(n) + " has order < 2");
    }
    order_ = checked_mul(order_, n);
    exponent_ = std::lcm(exponent_, n);
  }
}

bool GroupSpec::conforms(const GroupElement& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  }
  return true;
}

void GroupSpec::check(const GroupElement& g) const {
  if (g.coords.size() != factors_.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "element " + format_element(g) + " has " +
                    std::to_string(g.coords.size()) + " coordinates, group " +
                    to_string() + " has " + std::to_string(factors_.size()));
  }
  if (!conforms(g)) {
    throw Error(ErrorKind::kInvalidArgument,
                "element " + format_element(g) + " is not reduced in " +
                    to_string());
  }
}

std::int64_t GroupSpec::index_of(const GroupElement& g) const {
  check(g);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx = idx * factors_[i] + g.coords[i];
  }
  return idx;
}

GroupElement GroupSpec::element_at(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw Error(ErrorKind::kInvalidArgument, "element index out of range");
  }
  GroupElement g;
  g.coords.resize(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    g.coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return g;
}

GroupElement GroupSpec::zero() const {
  return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

namespace {

class GroupParser {
 public:
  explicit GroupParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<std::int64_t> factors;
    skip_ws();
    if (pos_ == text_.size()) fail("empty group specification");
    for (;;) {
      expect_z();
      std::size_t at = pos_;
      std::int64_t n = number("cyclic factor order");
      if (n < 2) {
        throw ParseError(at, "cyclic factor Z" + std::to_string(n) +
                                 " has order < 2");
      }
      std::int64_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        at = pos_;
        e = number("exponent");
        if (e < 1) throw ParseError(at, "exponent must be >= 1");
      }
      for (std::int64_t k = 0; k < e; ++k) factors.push_back(n);
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = peek();
      if (c == 'x' || c == 'X' || c == '*') {
        ++pos_;
        continue;
      }
      fail("expected 'x' between factors");
    }
    return GroupSpec(std::move(factors));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(pos_, what);
  }

  void expect_z() {
    skip_ws();
    char c = peek();
    if (c != 'Z' && c != 'z') fail("expected 'Z'");
    ++pos_;
    skip_ws();
  }

  std::int64_t number(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        throw ParseError(start, std::string(what) + " too large");
      }
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t parse_int(std::string_view s, std::size_t offset) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  std::size_t start = i;
  std::int64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw ParseError(offset + start, "residue too large");
    }
    v = v * 10 + (s[i] - '0');
    ++i;
  }
  if (i == start) throw ParseError(offset + i, "expected an integer residue");
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size()) throw ParseError(offset + i, "unexpected character");
  return neg ? -v : v;
}

}  // namespace

GroupSpec parse_group(std::string_view text) { return GroupParser(text).parse(); }

GroupElement parse_element(std::string_view text, const GroupSpec& group) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  std::size_t offset = b;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError(offset + body.size(), "expected ')'");
    body = body.substr(1, body.size() - 2);
    offset += 1;
  } else if (group.rank() != 1) {
    throw ParseError(offset, "multi-factor elements must be parenthesized");
  }
  GroupElement g;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = body.find(',', start);
    std::string_view piece = body.substr(
        start, comma == std::string_view::npos ? body.size() - start
                                               : comma - start);
    g.coords.push_back(parse_int(piece, offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (g.coords.size() != group.rank()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "element '" + std::string(text) + "' has " +
                    std::to_string(g.coords.size()) + " coordinates, " +
                    group.to_string() + " needs " +
                    std::to_string(group.rank()));
  }
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    g.coords[i] = mod(g.coords[i], group.factors()[i]);
  }
  return g;
}

std::string format_element(const GroupElement& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

GroupElement add(const GroupElement& a, const GroupElement& b,
                 const GroupSpec& group) {
  group.check(a);
  group.check(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = (a.coords[i] + b.coords[i]) % group.factors()[i];
  }
  return out;
}

GroupElement negate(const GroupElement& a, const GroupSpec& group) {
  group.check(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] = mod(-a.coords[i], group.factors()[i]);
  }
  return out;
}

GroupElement subtract(const GroupElement& a, const GroupElement& b,
                      const GroupSpec& group) {
  return add(a, negate(b, group), group);
}

GroupElement scale(std::int64_t factor, const GroupElement& a,
                   const GroupSpec& group) {
  group.check(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    std::int64_t n = group.factors()[i];
    out.coords[i] = static_cast<std::int64_t>(
        (static_cast<__int128>(mod(factor, n)) * a.coords[i]) % n);
  }
  return out;
}

bool is_identity(const GroupElement& g) {
  return std::all_of(g.coords.begin(), g.coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

std::int64_t element_order(const GroupElement& g, const GroupSpec& group) {
  group.check(g);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    std::int64_t n = group.factors()[i];
    ord = std::lcm(ord, n / std::gcd(n, g.coords[i]));
  }
  return ord;
}

std::int64_t character_exponent(const GroupElement& g, const GroupElement& h,
                                const GroupSpec& group) {
  group.check(g);
  group.check(h);
  const std::int64_t e = group.exponent();
  __int128 acc = 0;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    std::int64_t scale_i = e / group.factors()[i];
    acc += static_cast<__int128>(scale_i) * g.coords[i] % e * h.coords[i] % e;
  }
  return static_cast<std::int64_t>(acc % e);
}

std::vector<Orbit> orbits_under_units(const GroupSpec& group) {
  const std::int64_t n = group.order();
  const std::int64_t e = group.exponent();
  std::vector<std::int64_t> units;
  for (std::int64_t l = 1; l <= e; ++l) {
    if (std::gcd(l, e) == 1) units.push_back(l);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Orbit> out;
  for (std::int64_t idx = 0; idx < n; ++idx) {
    if (seen[idx]) continue;
    GroupElement g = group.element_at(idx);
    std::set<GroupElement> members;
    for (std::int64_t l : units) members.insert(scale(l, g, group));
    Orbit orbit;
    orbit.members.assign(members.begin(), members.end());
    for (const auto& m : orbit.members) seen[group.index_of(m)] = true;
    // Indices are visited in lexicographic order, so g is the minimum.
    orbit.representative = orbit.members.front();
    out.push_back(std::move(orbit));
  }
  return out;
}

std::map<std::int64_t, GroupSpec> sylow_decomposition(const GroupSpec& group) {
  std::map<std::int64_t, GroupSpec> out;
  for (std::int64_t p : prime_factors(group.order())) {
    std::vector<std::int64_t> parts;
    for (std::int64_t n : group.factors()) {
      std::int64_t part = 1;
      while (n % p == 0) {
        n /= p;
        part *= p;
      }
      if (part > 1) parts.push_back(part);
    }
    out.emplace(p, GroupSpec(std::move(parts)));
  }
  return out;
}

IndexArithmetic::IndexArithmetic(const GroupSpec& group)
    : factors_(group.factors()),
      strides_(group.rank()),
      size_(group.order()) {
  std::int64_t stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = stride;
    stride *= factors_[i];
  }
}

std::int64_t IndexArithmetic::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::int64_t n = factors_[i];
    std::int64_t s = a % n + b % n;
    if (s >= n) s -= n;
    out += s * strides_[i];
    a /= n;
    b /= n;
  }
  return out;
}

std::int64_t IndexArithmetic::negate(std::int64_t a) const {
  std::int64_t out = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::int64_t n = factors_[i];
    std::int64_t c = a % n;
    out += (c == 0 ? 0 : n - c) * strides_[i];
    a /= n;
  }
  return out;
}

}  // namespace mixkit
