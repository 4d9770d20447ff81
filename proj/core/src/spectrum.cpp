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

#include "mixkit/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

#include "mixkit/error.hpp"
#include "mixkit/parallel.hpp"

namespace mixkit {

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

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos
                                      ? std::string_view::npos
                                      : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) {
      return false;
    }
  }
  return true;
}

void require_integral(const SpectrumTable& table) {
  if (!table.integral) {
    throw Error(ErrorKind::kNotIntegral,
                "Cay(" + table.group.to_string() + ", S) is not integral");
  }
}

}  // namespace

bool ConnectionSet::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::int64_t generated_order(const GroupSpec& group,
                             const std::vector<GroupElement>& gens) {
  IndexArithmetic arith(group);
  std::vector<std::int64_t> steps;
  for (const auto& g : gens) steps.push_back(group.index_of(g));
  std::vector<bool> seen(static_cast<std::size_t>(group.order()), false);
  std::vector<std::int64_t> frontier{0};
  seen[0] = true;
  std::int64_t count = 1;
  while (!frontier.empty()) {
    std::int64_t x = frontier.back();
    frontier.pop_back();
    for (std::int64_t s : steps) {
      std::int64_t y = arith.add(x, s);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

ConnectionSet validate_connection_set(const GroupSpec& group,
                                      std::vector<GroupElement> raw) {
  for (const auto& g : raw) group.check(g);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  for (const auto& s : raw) {
    if (is_identity(s)) {
      throw Error(ErrorKind::kContainsZero, "connection set contains 0");
    }
  }
  for (const auto& s : raw) {
    GroupElement neg = negate(s, group);
    if (!std::binary_search(raw.begin(), raw.end(), neg)) {
      throw Error(ErrorKind::kNotSymmetric,
                  "connection set is not symmetric: " + format_element(s) +
                      " is present but -s = " + format_element(neg) +
                      " is not");
    }
  }
  std::int64_t sub = generated_order(group, raw);
  if (sub != group.order()) {
    throw Error(ErrorKind::kNotGenerating,
                "connection set generates a subgroup of order " +
                    std::to_string(sub) + ", |G| = " +
                    std::to_string(group.order()));
  }
  return ConnectionSet(group, std::move(raw));
}

std::vector<GroupElement> parse_set_elements(std::string_view text,
                                             const GroupSpec& group) {
  std::vector<GroupElement> out;
  std::set<GroupElement> seen_orbit_members;
  std::vector<Orbit> orbits;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    bool orbit_line = starts_with_ci(line, "orbits:");
    if (orbit_line) {
      line.remove_prefix(7);
      if (orbits.empty()) orbits = orbits_under_units(group);
    }
    for (std::string_view tok : split(line, ';')) {
      tok = trim(tok);
      if (tok.empty()) continue;
      GroupElement g = parse_element(tok, group);
      if (!orbit_line) {
        out.push_back(std::move(g));
        continue;
      }
      for (const auto& orbit : orbits) {
        if (std::binary_search(orbit.members.begin(), orbit.members.end(), g)) {
          out.insert(out.end(), orbit.members.begin(), orbit.members.end());
          break;
        }
      }
    }
  }
  return out;
}

ConnectionSet parse_connection_set(std::string_view text,
                                   const GroupSpec& group) {
  return validate_connection_set(group, parse_set_elements(text, group));
}

std::int64_t SpectrumTable::int_at(const GroupElement& g) const {
  require_integral(*this);
  return integer_lambda[static_cast<std::size_t>(group.index_of(g))];
}

SpectrumTable eigenvalues(const ConnectionSet& set, unsigned threads) {
  const GroupSpec& group = set.group();
  const std::int64_t n = group.order();
  const std::int64_t e = group.exponent();
  const std::size_t rank = group.rank();

  // Pre-scale connection elements by e / n_i so each character exponent is
  // a plain dot product mod e.
  std::vector<std::vector<std::int64_t>> scaled;
  for (const auto& s : set.elements()) {
    std::vector<std::int64_t> v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      v[i] = s.coords[i] * (e / group.factors()[i]);
    }
    scaled.push_back(std::move(v));
  }

  std::vector<CycInt> lambda(static_cast<std::size_t>(n), CycInt(e));
  std::vector<std::optional<std::int64_t>> ints(static_cast<std::size_t>(n));
  parallel_for(n, threads, [&](std::int64_t idx) {
    GroupElement g = group.element_at(idx);
    CycInt z(e);
    for (const auto& v : scaled) {
      std::int64_t k = 0;
      for (std::size_t i = 0; i < rank; ++i) k = (k + g.coords[i] * v[i]) % e;
      z.add_root(k, 1);
    }
    ints[idx] = as_integer(z);
    lambda[idx] = std::move(z);
  });

  SpectrumTable table{group, set, std::move(lambda), true, {}};
  for (const auto& v : ints) {
    if (!v) {
      table.integral = false;
      break;
    }
  }
  if (table.integral) {
    table.integer_lambda.reserve(ints.size());
    for (const auto& v : ints) table.integer_lambda.push_back(*v);
  }
  return table;
}

bool is_union_of_unit_orbits(const ConnectionSet& set) {
  const GroupSpec& group = set.group();
  const std::int64_t e = group.exponent();
  for (std::int64_t l = 2; l < e; ++l) {
    if (std::gcd(l, e) != 1) continue;
    for (const auto& s : set.elements()) {
      if (!set.contains(scale(l, s, group))) return false;
    }
  }
  return true;
}

bool is_integral(const ConnectionSet& set) {
  const bool by_orbits = is_union_of_unit_orbits(set);
  const bool by_spectrum = eigenvalues(set).integral;
  if (by_orbits != by_spectrum) {
    throw Error(ErrorKind::kInternalInconsistency,
                "orbit-union and exact eigenvalue integrality tests disagree");
  }
  return by_orbits;
}

GcdInvariants gcd_invariants(const SpectrumTable& table) {
  require_integral(table);
  const auto& lam = table.integer_lambda;
  const std::int64_t n = table.group.order();
  const std::int64_t d = static_cast<std::int64_t>(table.set.degree());
  IndexArithmetic arith(table.group);

  GcdInvariants out;
  for (std::int64_t g = 1; g < n; ++g) out.m = std::gcd(out.m, d - lam[g]);
  for (std::int64_t h = 1; h < n; ++h) {
    std::int64_t mh = 0;
    for (std::int64_t x = 0; x < n; ++x) {
      mh = std::gcd(mh, lam[arith.add(x, h)] - lam[x]);
    }
    out.m_h.emplace(table.group.element_at(h), mh);
    if (mh != 0) out.d_g = std::gcd(out.d_g, mh);
  }
  return out;
}

std::int64_t mobius(std::int64_t n) {
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::int64_t ramanujan(std::int64_t k, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "ramanujan sum needs n >= 1");
  }
  const std::int64_t m = n / std::gcd(k, n);
  return euler_phi(n) * mobius(m) / euler_phi(m);
}

std::map<std::int64_t, std::int64_t> DifferenceMultiset::reduced(
    std::int64_t n) const {
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [u, c] : counts) {
    std::int64_t r = u % n;
    if (r < 0) r += n;
    out[r] += c;
  }
  return out;
}

DifferenceMultiset difference_multiset(const SpectrumTable& table,
                                       const GroupElement& h) {
  table.group.check(h);
  if (is_identity(h)) {
    throw Error(ErrorKind::kZeroShift, "shift h must be nonzero");
  }
  require_integral(table);
  IndexArithmetic arith(table.group);
  const std::int64_t hi = table.group.index_of(h);
  const auto& lam = table.integer_lambda;
  DifferenceMultiset out{h, {}, {}};
  out.by_g.reserve(lam.size());
  for (std::int64_t g = 0; g < arith.size(); ++g) {
    std::int64_t diff = lam[arith.add(g, hi)] - lam[g];
    out.by_g.push_back(diff);
    ++out.counts[diff];
  }
  return out;
}

}  // namespace mixkit
