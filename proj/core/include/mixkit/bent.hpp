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

// Boolean functions on F_2^n and the cubelike graphs they support.
//
// A truth table is indexed by x read as an n-bit integer whose most
// significant bit is x1. This is the same order GroupSpec uses for Z2^n,
// so truth index i and group.element_at(i) name the same vector.

#ifndef MIXKIT_BENT_HPP_
#define MIXKIT_BENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixkit/group.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/time.hpp"

namespace mixkit {

inline constexpr int kMaxBooleanArity = 24;

class BooleanFunction {
 public:
  // Throws kInvalidArgument unless truth has 2^n entries, each 0 or 1.
  BooleanFunction(int n, std::vector<std::uint8_t> truth);

  static BooleanFunction zero(int n);

  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return truth_.size(); }
  const std::vector<std::uint8_t>& truth() const noexcept { return truth_; }
  std::uint8_t operator()(std::uint64_t x) const { return truth_[x]; }
  std::size_t weight() const;

  friend bool operator==(const BooleanFunction&,
                         const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> truth_;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;  // W_f(g), indexed like the truth table
};

WalshSpectrum wht(const BooleanFunction& f, unsigned threads = 1);

// Adjacency eigenvalues of Cay(Z2^n, supp f) read off the transform:
// lambda_0 = |supp f| and lambda_g = -W_f(g)/2 otherwise.
std::vector<std::int64_t> eigenvalue_bridge(const BooleanFunction& f,
                                            const WalshSpectrum& w);

bool is_bent(const BooleanFunction& f);

// f~(g) = 0 exactly when W_f(g) = +2^{n/2}. Throws kNotBent.
BooleanFunction dual(const BooleanFunction& f);

// f(x, y) = x . perm(y) + aux(y) on F_2^{2k}, x the leading k bits.
// perm[y] is the image of y. Throws kNotBijection.
BooleanFunction maiorana_mcfarland(int k, const std::vector<std::uint32_t>& perm,
                                   const BooleanFunction& aux);

// Throws kZeroInSupport or kNotGenerating.
ConnectionSet support(const BooleanFunction& f);

// From S1 in Z2^{2m} build the set over Z2^{2m+1} made of (1, z) for z
// outside S1 together with (0, x) for x in S1. Throws kZeroInS1.
ConnectionSet odd_extension(const GroupSpec& group,
                            const std::vector<GroupElement>& s1);

struct CubelikeResult {
  ConnectionSet set;
  RationalTime time;  // 1 / 2^{k+1}, i.e. pi / 2^k
  MixReport report;   // exact certification of the claim
  bool certified() const { return report.verdict; }
};

CubelikeResult cubelike_from_bent(const BooleanFunction& f,
                                  unsigned threads = 1);

// Character i carries f(4i), ..., f(4i+3) in bits 0..3. Without n the
// arity is inferred from the length (which then must be a power of 2).
BooleanFunction parse_truth_table_hex(std::string_view text,
                                      std::optional<int> n = {});
std::string to_hex(const BooleanFunction& f);

// Sum of monomials over F_2, e.g. "x1*x2 + x3*x4 + 1". Without n the arity
// is the largest variable index that appears.
BooleanFunction parse_anf(std::string_view text, std::optional<int> n = {});

// Elementary abelian group Z2^n matching a truth table of arity n.
GroupSpec boolean_cube(int n);

}  // namespace mixkit

#endif  // MIXKIT_BENT_HPP_
