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

// Candidate mixing times of integral Cayley graphs.
//
// For a shift h the difference polynomial is
//   B_h(X) = sum_g X^{d_h + lambda_{g+h} - lambda_g},
// with d_h the largest difference. A rational time r/N can only mix the
// graph when exp(2 pi i r/N) is a common root of every B_h, which means
// Phi_N divides a(X) = gcd_h B_h(X). Polynomials are coefficient lists with
// the constant term first.

#ifndef MIXKIT_TIMEFINDER_HPP_
#define MIXKIT_TIMEFINDER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "mixkit/group.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/time.hpp"

namespace mixkit {

using IntPoly = std::vector<std::int64_t>;

struct DiffPolynomial {
  GroupElement h;
  std::int64_t d_h = 0;
  IntPoly coeffs;  // degree 2 * d_h
};

// Throws kNotIntegral or kZeroShift.
DiffPolynomial difference_polynomial(const SpectrumTable& table,
                                     const GroupElement& h);

// One polynomial per nonzero h, in element order.
std::vector<DiffPolynomial> difference_polynomials(const SpectrumTable& table,
                                                   unsigned threads = 1);

// Primitive gcd with positive leading coefficient. Throws kEmptyInput.
IntPoly gcd_polynomial(const std::vector<DiffPolynomial>& polys);
IntPoly gcd_polynomial(const std::vector<IntPoly>& polys);

// True iff b divides a over Q.
bool divides(const IntPoly& b, const IntPoly& a);

// Largest N with phi(N) <= degree. Beyond it no Phi_N fits in a
// polynomial of that degree.
std::int64_t cyclotomic_order_bound(std::int64_t degree);

struct CandidateTimes {
  IntPoly a_poly;
  // N with Phi_N | a(X), ascending, and the multiplicity of each.
  std::vector<std::int64_t> orders;
  std::vector<std::int64_t> multiplicities;
  // Every r/N with gcd(r, N) = 1 for the orders above, ascending by value.
  std::vector<RationalTime> times;
  // Bound on the number of mixing times in (0, 2 pi).
  std::int64_t complete_up_to = 0;
  // What is left of a(X) after removing the cyclotomic factors found.
  IntPoly residual;
  // Set when the residual has positive degree.
  bool non_exhaustive = false;
  std::int64_t max_n = 0;
};

// Throws kZeroPolynomial.
CandidateTimes candidate_times(const IntPoly& a, std::int64_t max_n);

// Runs the whole pipeline on an integral spectrum. The default cap is the
// larger of 8|G| and cyclotomic_order_bound(deg a), so no rational time is
// skipped. Throws kNotIntegral.
CandidateTimes candidate_times(const SpectrumTable& table,
                               std::optional<std::int64_t> max_n = {},
                               unsigned threads = 1);

}  // namespace mixkit

#endif  // MIXKIT_TIMEFINDER_HPP_
