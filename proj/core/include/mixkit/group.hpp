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

// Finite abelian groups Z_{n_1} x ... x Z_{n_k}, their elements and
// characters, orbits under the unit group, and Sylow decomposition.
//
// Elements are coordinate vectors against an explicit GroupSpec. The
// lexicographic order on coordinates coincides with the mixed-radix index
// returned by GroupSpec::index_of (first coordinate most significant), and
// every table in the library is laid out in that order.

#ifndef MIXKIT_GROUP_HPP_
#define MIXKIT_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mixkit {

struct GroupElement {
  std::vector<std::int64_t> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
 public:
  // Throws Error(kInvalidArgument) if any factor is < 2. An empty list is
  // the trivial group (unreachable from parse_group).
  explicit GroupSpec(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool conforms(const GroupElement& g) const;
  // Throws kDimensionMismatch or kInvalidArgument when g does not conform.
  void check(const GroupElement& g) const;

  std::int64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::int64_t index) const;
  GroupElement zero() const;
  std::vector<GroupElement> elements() const;

  // Canonical text form, factors in written order with runs folded:
  // [2,2,4] -> "Z2^2xZ4".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_;
  std::int64_t exponent_;
};

struct Orbit {
  GroupElement representative;
  std::vector<GroupElement> members;  // sorted
};

// Grammar: Z<n>(^<e>)?(x Z<n>(^<e>)?)*, case- and whitespace-insensitive.
GroupSpec parse_group(std::string_view text);

// "(1,3)"; single-factor groups also accept a bare residue "3". Residues are
// reduced into range, so "-1" in Z4 denotes 3.
GroupElement parse_element(std::string_view text, const GroupSpec& group);
std::string format_element(const GroupElement& g);

GroupElement add(const GroupElement& a, const GroupElement& b,
                 const GroupSpec& group);
GroupElement negate(const GroupElement& a, const GroupSpec& group);
GroupElement subtract(const GroupElement& a, const GroupElement& b,
                      const GroupSpec& group);
GroupElement scale(std::int64_t factor, const GroupElement& a,
                   const GroupSpec& group);
bool is_identity(const GroupElement& g);
std::int64_t element_order(const GroupElement& g, const GroupSpec& group);

// k in [0, exp(G)) with chi_g(h) = omega_{exp(G)}^k.
std::int64_t character_exponent(const GroupElement& g, const GroupElement& h,
                                const GroupSpec& group);

// Orbits of g -> l*g over l coprime to |G|, sorted by representative.
std::vector<Orbit> orbits_under_units(const GroupSpec& group);

// prime -> p-parts of the factors (factors with trivial p-part dropped).
std::map<std::int64_t, GroupSpec> sylow_decomposition(const GroupSpec& group);

// Index-level helpers used by the hot loops.
class IndexArithmetic {
 public:
  explicit IndexArithmetic(const GroupSpec& group);

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t negate(std::int64_t a) const;
  std::int64_t size() const noexcept { return size_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t size_;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace mixkit

#endif  // MIXKIT_GROUP_HPP_
