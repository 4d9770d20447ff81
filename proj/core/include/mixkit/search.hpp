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

// Which finite abelian groups carry an integral Cayley graph with uniform
// mixing, predicted in closed form and checked by brute force.

#ifndef MIXKIT_SEARCH_HPP_
#define MIXKIT_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mixkit/group.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/time.hpp"

namespace mixkit {

struct Witness {
  ConnectionSet set;
  RationalTime time;
  bool certified = false;  // exact mixing check passed
};

struct ClassificationResult {
  GroupSpec group;
  // True iff exp(G) is 2, 3 or 4: G is Z2^d, Z3^d, Z4^d or Z2^r x Z4^d.
  bool admits = false;
  std::optional<Witness> witness;
};

// Builds the witness from the atoms K_2 (at 1/8), C_4 (at 1/8) and K_3
// (at 1/9), one per cyclic factor, and certifies it exactly.
ClassificationResult classify_group(const GroupSpec& group, unsigned threads = 1);

inline constexpr std::int64_t kDefaultIntegralOrderCap = 32;
inline constexpr std::int64_t kDefaultGeneralOrderCap = 16;
inline constexpr std::int64_t kDefaultCandidateCap = std::int64_t{1} << 20;
inline constexpr std::int64_t kFloatGridDenominator = 2048;

struct SearchOptions {
  // Unions of unit orbits (integral graphs) or every symmetric set.
  bool integral_only = true;
  // Overrides the per-set candidate times (integral) or the float grid.
  std::optional<std::vector<Time>> times;
  unsigned threads = 1;
  // Overrides both the default order caps and MIXKIT_MAX_ORDER.
  std::optional<std::int64_t> max_order;
  std::int64_t max_candidates = kDefaultCandidateCap;
};

struct SearchHit {
  ConnectionSet set;
  Time time;
  bool certified = false;  // exact verdict rather than float evidence
};

struct SearchResult {
  GroupSpec group;
  bool integral_only = true;
  std::vector<SearchHit> hits;     // enumeration order, then time order
  std::int64_t sets_enumerated = 0;  // every subset of the candidate space
  std::int64_t sets_examined = 0;    // the generating ones
};

// Order cap in effect for a search mode: options, then MIXKIT_MAX_ORDER,
// then the defaults.
std::int64_t search_order_cap(bool integral_only,
                              std::optional<std::int64_t> override_cap = {});

// Throws kGroupTooLarge when |G| or the candidate count exceeds its cap.
SearchResult exhaustive_search(const GroupSpec& group,
                               const SearchOptions& options = {});

// The float grid k pi / 1024 for k = 1..2047, written as k / 2048.
std::vector<Time> float_time_grid();

// Every abelian group of order 2..max_order once, in invariant factor form
// n_1 | n_2 | ... | n_k, sorted by order and then by factor list.
std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t max_order);

// Number of unions of nonzero unit orbits that generate G, computed by
// Moebius inversion over the subgroup lattice.
std::int64_t count_generating_orbit_unions(const GroupSpec& group);

struct VerificationRow {
  explicit VerificationRow(GroupSpec g) : group(std::move(g)) {}

  GroupSpec group;
  std::int64_t exponent = 0;
  bool predicted = false;
  bool searched = false;  // false when the search was over its caps
  bool found = false;
  std::int64_t hits = 0;
  std::int64_t sets_examined = 0;
  std::int64_t expected_sets = 0;
  std::string witness;     // "S @ r/N" for the first hit, if any
  bool agrees = false;     // searched, found == predicted, counts match
};

struct VerificationReport {
  std::int64_t order_cap = 0;
  std::vector<VerificationRow> rows;
  bool all_agree = false;  // over the searched rows
  std::string table() const;
};

VerificationReport verify_classification(std::int64_t order_cap,
                                         unsigned threads = 1);

}  // namespace mixkit

#endif  // MIXKIT_SEARCH_HPP_
