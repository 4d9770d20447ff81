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

#include "mixkit/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "mixkit/error.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/parallel.hpp"
#include "mixkit/timefinder.hpp"

namespace mixkit {

namespace {

using Mask = std::uint64_t;

constexpr std::int64_t kMaxMaskOrder = 64;

Mask bit(std::int64_t i) { return Mask{1} << i; }

// A + B for subgroups given as element masks.
Mask subgroup_sum(Mask a, Mask b, const IndexArithmetic& arith) {
  Mask out = 0;
  for (Mask x = a; x; x &= x - 1) {
    const std::int64_t i = std::countr_zero(x);
    for (Mask y = b; y; y &= y - 1) {
      out |= bit(arith.add(i, std::countr_zero(y)));
    }
  }
  return out;
}

Mask cyclic_subgroup(std::int64_t g, const IndexArithmetic& arith) {
  Mask out = bit(0);
  for (std::int64_t x = g; x != 0; x = arith.add(x, g)) out |= bit(x);
  return out;
}

Mask full_mask(std::int64_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

// One candidate unit of the search space: an orbit (integral mode) or a
// pair {g, -g} (general mode), with the subgroup it generates.
struct Block {
  std::vector<GroupElement> members;
  Mask span = 0;
};

std::vector<Block> candidate_blocks(const GroupSpec& group, bool integral_only,
                                    const IndexArithmetic& arith) {
  std::vector<Block> blocks;
  if (integral_only) {
    for (auto& orbit : orbits_under_units(group)) {
      if (is_identity(orbit.representative)) continue;
      Block b;
      b.span = cyclic_subgroup(group.index_of(orbit.representative), arith);
      b.members = std::move(orbit.members);
      blocks.push_back(std::move(b));
    }
    return blocks;
  }
  for (std::int64_t i = 1; i < group.order(); ++i) {
    const std::int64_t j = arith.negate(i);
    if (j < i) continue;
    Block b;
    b.span = cyclic_subgroup(i, arith);
    b.members.push_back(group.element_at(i));
    if (j != i) b.members.push_back(group.element_at(j));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

RationalTime time_atom(std::int64_t factor) {
  return factor == 3 ? RationalTime(1, 9) : RationalTime(1, 8);
}

std::string describe_set(const ConnectionSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.elements().size(); ++i) {
    if (i) out += ',';
    out += format_element(set.elements()[i]);
  }
  return out + "}";
}

}  // namespace

ClassificationResult classify_group(const GroupSpec& group, unsigned threads) {
  ClassificationResult out{group, false, std::nullopt};
  const std::int64_t e = group.exponent();
  out.admits = group.order() > 1 && (e == 2 || e == 3 || e == 4);
  if (!out.admits) return out;

  std::optional<ConnectionSet> set;
  for (std::int64_t q : group.factors()) {
    GroupSpec atom_group({q});
    std::vector<GroupElement> atom;
    if (q == 4) {
      atom = {GroupElement{{1}}, GroupElement{{3}}};
    } else {
      for (std::int64_t s = 1; s < q; ++s) atom.push_back(GroupElement{{s}});
    }
    ConnectionSet piece = validate_connection_set(atom_group, std::move(atom));
    set = set ? cartesian_product(*set, piece) : piece;
  }
  const RationalTime time = time_atom(e == 3 ? 3 : 2);
  MixOptions options;
  options.threads = threads;
  options.stop_at_first_failure = true;
  const bool certified =
      is_uniform_mixing(eigenvalues(*set, threads), time, options).verdict;
  out.witness = Witness{std::move(*set), time, certified};
  return out;
}

std::int64_t search_order_cap(bool integral_only,
                              std::optional<std::int64_t> override_cap) {
  if (override_cap) return *override_cap;
  if (const char* env = std::getenv("MIXKIT_MAX_ORDER")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    throw Error(ErrorKind::kInvalidArgument,
                std::string("MIXKIT_MAX_ORDER is not a positive integer: ") + env);
  }
  return integral_only ? kDefaultIntegralOrderCap : kDefaultGeneralOrderCap;
}

std::vector<Time> float_time_grid() {
  std::vector<Time> grid;
  grid.reserve(kFloatGridDenominator - 1);
  for (std::int64_t k = 1; k < kFloatGridDenominator; ++k) {
    grid.emplace_back(RationalTime(k, kFloatGridDenominator));
  }
  return grid;
}

SearchResult exhaustive_search(const GroupSpec& group,
                               const SearchOptions& options) {
  const std::int64_t n = group.order();
  const std::int64_t cap = search_order_cap(options.integral_only, options.max_order);
  if (n > cap || n > kMaxMaskOrder) {
    throw Error(ErrorKind::kGroupTooLarge,
                group.to_string() + " has order " + std::to_string(n) +
                    ", above the search cap " + std::to_string(std::min(cap, kMaxMaskOrder)));
  }
  IndexArithmetic arith(group);
  const std::vector<Block> blocks = candidate_blocks(group, options.integral_only, arith);
  if (blocks.size() >= 62 ||
      (std::int64_t{1} << blocks.size()) > options.max_candidates) {
    throw Error(ErrorKind::kGroupTooLarge,
                group.to_string() + " has 2^" + std::to_string(blocks.size()) +
                    " candidate sets, above the cap " +
                    std::to_string(options.max_candidates));
  }
  const std::int64_t total = std::int64_t{1} << blocks.size();
  const Mask everything = full_mask(n);
  const std::vector<Time> grid =
      options.times ? *options.times
                    : (options.integral_only ? std::vector<Time>{} : float_time_grid());

  // Fixed chunks keep the merge order independent of the worker count.
  const std::int64_t chunk = 256;
  const std::int64_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<SearchHit>> chunk_hits(static_cast<std::size_t>(chunks));
  std::vector<std::int64_t> chunk_examined(static_cast<std::size_t>(chunks), 0);

  parallel_for(chunks, options.threads, [&](std::int64_t c) {
    MixOptions mix;
    mix.stop_at_first_failure = true;
    for (std::int64_t subset = c * chunk; subset < std::min(total, (c + 1) * chunk);
         ++subset) {
      Mask span = bit(0);
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if ((subset >> b) & 1) span = subgroup_sum(span, blocks[b].span, arith);
      }
      if (span != everything) continue;
      ++chunk_examined[c];
      std::vector<GroupElement> raw;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        if ((subset >> b) & 1) {
          raw.insert(raw.end(), blocks[b].members.begin(), blocks[b].members.end());
        }
      }
      ConnectionSet set = validate_connection_set(group, std::move(raw));
      const SpectrumTable table = eigenvalues(set);
      std::vector<Time> times = grid;
      if (!options.times && options.integral_only) {
        for (const auto& t : candidate_times(table).times) times.emplace_back(t);
      }
      for (const Time& t : times) {
        const MixReport report = is_uniform_mixing(table, t, mix);
        if (report.verdict) {
          chunk_hits[c].push_back(SearchHit{set, t, report.certifying()});
        }
      }
    }
  });

  SearchResult out{group, options.integral_only, {}, total, 0};
  for (std::int64_t c = 0; c < chunks; ++c) {
    out.sets_examined += chunk_examined[c];
    for (auto& hit : chunk_hits[c]) out.hits.push_back(std::move(hit));
  }
  return out;
}

std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t max_order) {
  std::vector<std::vector<std::int64_t>> found;
  // Chains n_1 | n_2 | ... built from the smallest factor up.
  auto extend = [&](auto&& self, std::vector<std::int64_t>& chain,
                    std::int64_t product, std::int64_t last) -> void {
    if (!chain.empty()) found.push_back(chain);
    for (std::int64_t next = last; product * next <= max_order; next += last) {
      chain.push_back(next);
      self(self, chain, product * next, next);
      chain.pop_back();
    }
  };
  std::vector<std::int64_t> chain;
  for (std::int64_t first = 2; first <= max_order; ++first) {
    chain.push_back(first);
    extend(extend, chain, first, first);
    chain.pop_back();
  }
  auto order_of = [](const std::vector<std::int64_t>& f) {
    std::int64_t p = 1;
    for (std::int64_t q : f) p *= q;
    return p;
  };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    const std::int64_t oa = order_of(a);
    const std::int64_t ob = order_of(b);
    return oa != ob ? oa < ob : a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<GroupSpec> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(std::move(f));
  return out;
}

std::int64_t count_generating_orbit_unions(const GroupSpec& group) {
  const std::int64_t n = group.order();
  if (n > kMaxMaskOrder) {
    throw Error(ErrorKind::kGroupTooLarge, "subgroup lattice needs |G| <= 64");
  }
  IndexArithmetic arith(group);
  std::vector<Mask> orbit_masks;
  std::vector<Mask> cyclic;
  for (const auto& orbit : orbits_under_units(group)) {
    if (is_identity(orbit.representative)) continue;
    Mask m = 0;
    for (const auto& g : orbit.members) m |= bit(group.index_of(g));
    orbit_masks.push_back(m);
    cyclic.push_back(cyclic_subgroup(group.index_of(orbit.representative), arith));
  }
  // Every subgroup is a sum of cyclic subgroups.
  std::set<Mask> subgroups{bit(0)};
  std::vector<Mask> frontier{bit(0)};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask h : frontier) {
      for (Mask c : cyclic) {
        const Mask j = subgroup_sum(h, c, arith);
        if (subgroups.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> lattice(subgroups.begin(), subgroups.end());
  std::sort(lattice.begin(), lattice.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  // exact[H] = unions whose span is exactly H
  //          = 2^{orbits inside H} - sum over proper subgroups K of exact[K].
  std::map<Mask, std::int64_t> exact;
  for (Mask h : lattice) {
    std::int64_t inside = 0;
    for (Mask o : orbit_masks) inside += (o & h) == o;
    std::int64_t count = std::int64_t{1} << inside;
    for (const auto& [k, c] : exact) {
      if (k != h && (k & h) == k) count -= c;
    }
    exact[h] = count;
  }
  return exact.at(full_mask(n));
}

VerificationReport verify_classification(std::int64_t order_cap, unsigned threads) {
  if (order_cap > kDefaultIntegralOrderCap) {
    throw Error(ErrorKind::kInvalidArgument,
                "verification supports orders up to " +
                    std::to_string(kDefaultIntegralOrderCap));
  }
  VerificationReport report;
  report.order_cap = order_cap;
  report.all_agree = true;
  for (const GroupSpec& group : enumerate_abelian_groups(order_cap)) {
    VerificationRow row(group);
    row.exponent = group.exponent();
    row.predicted = classify_group(group, threads).admits;
    row.expected_sets = count_generating_orbit_unions(group);
    SearchOptions options;
    options.threads = threads;
    options.max_order = kDefaultIntegralOrderCap;
    try {
      const SearchResult result = exhaustive_search(group, options);
      row.searched = true;
      row.hits = static_cast<std::int64_t>(result.hits.size());
      row.found = !result.hits.empty();
      row.sets_examined = result.sets_examined;
      // Integral hits are exact; a float hit cannot occur here.
      bool all_certified = std::all_of(result.hits.begin(), result.hits.end(),
                                       [](const SearchHit& h) { return h.certified; });
      if (row.found) {
        const SearchHit& first = result.hits.front();
        row.witness = describe_set(first.set) + " @ " + format_time(first.time);
      }
      row.agrees = all_certified && row.found == row.predicted &&
                   row.sets_examined == row.expected_sets;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kGroupTooLarge) throw;
      row.searched = false;
      row.agrees = true;
      row.witness = "skipped: " + std::string(e.what());
    }
    report.all_agree = report.all_agree && row.agrees;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string VerificationReport::table() const {
  std::ostringstream out;
  out << std::left << std::setw(14) << "group" << std::setw(8) << "exp(G)"
      << std::setw(11) << "predicted" << std::setw(9) << "found" << "witness\n";
  for (const auto& row : rows) {
    out << std::setw(14) << row.group.to_string() << std::setw(8) << row.exponent
        << std::setw(11) << (row.predicted ? "yes" : "no") << std::setw(9)
        << (row.searched ? (row.found ? "yes" : "no") : "skipped")
        << (row.witness.empty() ? "-" : row.witness);
    if (!row.agrees) out << "  MISMATCH";
    out << '\n';
  }
  return out.str();
}

}  // namespace mixkit
