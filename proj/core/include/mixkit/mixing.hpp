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

// Uniform mixing of the walk H(t) = exp(itA) on Cay(G, S).
//
// Everything is computed from the spectral sum, never from a matrix
// exponential. Exact mode runs when the graph is integral and the time is a
// RationalTime; then every value is a CycInt and a verdict is a proof.
// Any other combination falls back to doubles and the result says so.

#ifndef MIXKIT_MIXING_HPP_
#define MIXKIT_MIXING_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mixkit/cyclo.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/time.hpp"

namespace mixkit {

enum class Mode { kExact, kFloat };

const char* to_string(Mode mode);

struct MixOptions {
  // Float mode declares a correlation zero when |R| < tolerance * |G|.
  double tolerance = 1e-9;
  unsigned threads = 1;
  // Skip evidence after the first nonvanishing shift.
  bool stop_at_first_failure = false;
};

bool uses_exact_mode(const SpectrumTable& table, const Time& t);

struct TransferValue {
  Mode mode = Mode::kFloat;
  std::complex<double> value;   // H(t)_{u,v}
  std::optional<CycInt> scaled;  // n * H(t)_{u,v}, exact mode only
};

TransferValue transfer_entry(const SpectrumTable& table, const GroupElement& u,
                             const GroupElement& v, const Time& t);

struct Correlation {
  Mode mode = Mode::kFloat;
  std::optional<CycInt> exact;  // level N of the time r/N
  std::complex<double> approx;
};

// R_t(h) = sum_g exp(i (lambda_{g+h} - lambda_g) t). Throws kZeroShift.
Correlation correlation(const SpectrumTable& table, const GroupElement& h,
                        const Time& t);

struct MixReport {
  bool verdict = false;
  Time time;
  Mode mode = Mode::kFloat;
  double tolerance = 0.0;
  std::vector<std::pair<GroupElement, Correlation>> evidence;  // h ascending
  std::optional<GroupElement> failing_h;

  // Float verdicts are numerical evidence only.
  bool certifying() const { return mode == Mode::kExact; }
};

MixReport is_uniform_mixing(const SpectrumTable& table, const Time& t,
                            const MixOptions& options = {});

// W = (exp(i lambda_{x+y} t)); tests W^T = W and W W^* = n I. Throws
// kInternalInconsistency if the outcome disagrees with is_uniform_mixing.
bool hadamard_check(const SpectrumTable& table, const Time& t,
                    const MixOptions& options = {});

// |F^(a)|^2 = n for all a, where F(g) = exp(i lambda_g t).
bool phase_function_is_bent(const SpectrumTable& table, const Time& t,
                            double tolerance = 1e-9);

struct TwoGroupCounts {
  std::int64_t nu = 0;  // D_G = 2^nu
  // h -> (n_0, n_1, n_2)
  std::map<GroupElement, std::array<std::int64_t, 3>> per_h;
  bool verdict = false;
  RationalTime time;  // 1 / 2^{nu+2}, i.e. pi / 2^{nu+1}
};

// Throws kNotTwoGroup, kNotIntegral. The verdict is cross-checked against
// the exact correlation test at `time`.
TwoGroupCounts two_group_criterion(const SpectrumTable& table);

// Odd p-groups of order p^e: are the scaled differences
// (lambda_{g+h} - lambda_g) / p^{e'-1} mod p equidistributed for every h?
// e' defaults to the one given by D_G = p^{e'-1}. Throws kNotOddPGroup,
// kNotIntegral, kDivisibilityPreconditionFailed.
bool difference_balanced_check(const SpectrumTable& table,
                               std::optional<std::int64_t> e_prime = {});

// Connection set (S1 x {0}) u ({0} x S2) over G1 x G2.
ConnectionSet cartesian_product(const ConnectionSet& s1,
                                const ConnectionSet& s2);

}  // namespace mixkit

#endif  // MIXKIT_MIXING_HPP_
