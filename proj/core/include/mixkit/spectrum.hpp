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

// Connection sets, Cayley graph spectra via character sums, integrality,
// the gcd invariants M / M_h / D_G, and Ramanujan sums.

#ifndef MIXKIT_SPECTRUM_HPP_
#define MIXKIT_SPECTRUM_HPP_

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "mixkit/cyclo.hpp"
#include "mixkit/group.hpp"

namespace mixkit {

// A zero-free, symmetric, generating subset of a group. Only obtainable
// through validate_connection_set (or helpers that call it).
class ConnectionSet {
 public:
  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t degree() const noexcept { return elements_.size(); }
  bool contains(const GroupElement& g) const;

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }

 private:
  ConnectionSet(GroupSpec group, std::vector<GroupElement> elements)
      : group_(std::move(group)), elements_(std::move(elements)) {}
  friend ConnectionSet validate_connection_set(const GroupSpec&,
                                               std::vector<GroupElement>);

  GroupSpec group_;
  std::vector<GroupElement> elements_;  // sorted, deduplicated
};

// Throws kContainsZero, kNotSymmetric (names a witness s with -s missing) or
// kNotGenerating (reports the order of <S>).
ConnectionSet validate_connection_set(const GroupSpec& group,
                                      std::vector<GroupElement> raw);

// Set-file text: one element per line (or several separated by ';'), '#'
// starts a comment line, and "orbits: r1; r2; ..." expands each
// representative into its unit orbit.
std::vector<GroupElement> parse_set_elements(std::string_view text,
                                             const GroupSpec& group);
ConnectionSet parse_connection_set(std::string_view text,
                                   const GroupSpec& group);

// Order of the subgroup generated by the given elements.
std::int64_t generated_order(const GroupSpec& group,
                             const std::vector<GroupElement>& gens);

struct SpectrumTable {
  GroupSpec group;
  ConnectionSet set;
  // lambda[i] is the eigenvalue at group.element_at(i), level exp(G).
  std::vector<CycInt> lambda;
  bool integral = false;
  // Integer view of lambda, filled only when integral.
  std::vector<std::int64_t> integer_lambda;

  std::int64_t int_at(const GroupElement& g) const;
};

SpectrumTable eigenvalues(const ConnectionSet& set, unsigned threads = 1);

// Orbit-union criterion, cross-checked against exact integrality of every
// eigenvalue (kInternalInconsistency if they disagree).
bool is_integral(const ConnectionSet& set);
// The orbit-union criterion alone.
bool is_union_of_unit_orbits(const ConnectionSet& set);

struct GcdInvariants {
  std::int64_t m = 0;
  // Shift h -> gcd of its differences. 0 when every difference vanishes;
  // such shifts are left out of d_g.
  std::map<GroupElement, std::int64_t> m_h;
  std::int64_t d_g = 0;
};

// Throws kNotIntegral.
GcdInvariants gcd_invariants(const SpectrumTable& table);

// c(k, n) = phi(n) mu(m) / phi(m), m = n / gcd(k, n).
std::int64_t ramanujan(std::int64_t k, std::int64_t n);
std::int64_t mobius(std::int64_t n);

struct DifferenceMultiset {
  GroupElement h;
  // by_g[i] = lambda_{g+h} - lambda_g for g = element_at(i).
  std::vector<std::int64_t> by_g;
  // u -> N_{h,u}.
  std::map<std::int64_t, std::int64_t> counts;

  // Residues mod n -> multiplicity (the reduced multiset Omega_h).
  std::map<std::int64_t, std::int64_t> reduced(std::int64_t n) const;
};

// Throws kZeroShift for h = 0 and kNotIntegral for non-integral tables.
DifferenceMultiset difference_multiset(const SpectrumTable& table,
                                       const GroupElement& h);

}  // namespace mixkit

#endif  // MIXKIT_SPECTRUM_HPP_
