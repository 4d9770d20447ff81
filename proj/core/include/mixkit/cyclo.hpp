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

// Exact arithmetic in Z[omega_N], omega_N = exp(2*pi*i/N).
//
// A CycInt stores one integer coefficient per N-th root of unity. The
// representation is redundant (the roots are linearly dependent), so
// equality and zero tests go through reduction modulo the cyclotomic
// polynomial Phi_N, which yields canonical coordinates in the power basis
// 1, omega, ..., omega^{phi(N)-1}.
//
// Coefficients are 64-bit with every add/multiply overflow-checked; an
// overflow throws Error(kOverflow) rather than wrapping.

#ifndef MIXKIT_CYCLO_HPP_
#define MIXKIT_CYCLO_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace mixkit {

class CycInt {
 public:
  // The zero element at the given level. Throws kInvalidArgument if N < 1.
  explicit CycInt(std::int64_t level);
  // coeffs.size() must equal level.
  CycInt(std::int64_t level, std::vector<std::int64_t> coeffs);

  static CycInt integer(std::int64_t level, std::int64_t value);

  std::int64_t level() const noexcept { return level_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

  // *this += multiplicity * omega_N^k, k taken mod N.
  void add_root(std::int64_t k, std::int64_t multiplicity = 1);

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt operator-() const;

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }

  // Complex conjugation, omega^k -> omega^{N-k}.
  CycInt conj() const;
  // Re-expresses the value at a level that is a multiple of level().
  CycInt lift(std::int64_t new_level) const;

  // Value equality (not coefficient equality).
  friend bool operator==(const CycInt& a, const CycInt& b);

 private:
  std::int64_t level_;
  std::vector<std::int64_t> coeffs_;
};

// omega_N^{k mod N}.
CycInt root_power(std::int64_t n, std::int64_t k);

// Exact: true iff Phi_N divides sum_k coeffs[k] X^k.
bool is_zero(const CycInt& z);

// Coordinates of z in the basis 1, omega, ..., omega^{phi(N)-1}.
std::vector<std::int64_t> reduce(const CycInt& z);

// The rational integer z equals, if it is one.
std::optional<std::int64_t> as_integer(const CycInt& z);

CycInt modulus_squared(const CycInt& z);

std::complex<double> to_complex(const CycInt& z);

// Coefficients of Phi_N, constant term first. Memoized, thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

}  // namespace mixkit

#endif  // MIXKIT_CYCLO_HPP_
