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

// Acceptance gate. Prints one PASS/FAIL line per criterion with its
// runtime and exits nonzero if any criterion fails or overruns its budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mixkit/bent.hpp"
#include "mixkit/cyclo.hpp"
#include "mixkit/error.hpp"
#include "mixkit/group.hpp"
#include "mixkit/mixing.hpp"
#include "mixkit/parallel.hpp"
#include "mixkit/search.hpp"
#include "mixkit/spectrum.hpp"
#include "mixkit/timefinder.hpp"
#include "oracles.hpp"

namespace {

using namespace mixkit;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr const char* kBentSupport4 = "(1,1,0,0);(1,1,1,0);(1,1,0,1);(0,0,1,1);(1,0,1,1);(0,1,1,1)";
constexpr const char* kZ2Z4Set = "(1,0);(1,1);(1,3);(0,2)";
constexpr const char* kOddExtension3 = "(1,0,0);(1,0,1);(1,1,0);(0,1,1)";

SpectrumTable table(const std::vector<std::int64_t>& f, std::string_view text) {
  return eigenvalues(parse_connection_set(text, GroupSpec(f)));
}

BooleanFunction from_bits(int n, std::uint64_t bits) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (bits >> i) & 1;
  return BooleanFunction(n, t);
}

BooleanFunction random_function(int n) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (auto& b : t) b = static_cast<std::uint8_t>(oracle::rng()() & 1);
  return BooleanFunction(n, t);
}

// Bentness straight from the definition, via the naive transform.
bool naive_bent(const BooleanFunction& f) {
  if (f.arity() % 2) return false;
  const std::int64_t want = std::int64_t{1} << (f.arity() / 2);
  for (std::int64_t w : oracle::naive_wht(f.truth())) {
    if (std::abs(w) != want) return false;
  }
  return true;
}

bool generates(const BooleanFunction& f) {
  std::vector<std::int64_t> idx;
  for (std::uint64_t x = 1; x < f.size(); ++x) {
    if (f(x)) idx.push_back(static_cast<std::int64_t>(x));
  }
  return oracle::span_size(std::vector<std::int64_t>(f.arity(), 2), idx) ==
         (std::int64_t{1} << f.arity());
}

// A random generating union of unit orbits on a random group from `pool`.
ConnectionSet random_integral_graph(const std::vector<GroupSpec>& pool) {
  for (;;) {
    const GroupSpec& g = pool[oracle::rng()() % pool.size()];
    std::vector<GroupElement> raw;
    for (const auto& o : orbits_under_units(g)) {
      if (is_identity(o.representative) || (oracle::rng()() & 1)) continue;
      raw.insert(raw.end(), o.members.begin(), o.members.end());
    }
    if (raw.empty() || generated_order(g, raw) != g.order()) continue;
    return validate_connection_set(g, raw);
  }
}

ConnectionSet random_symmetric_graph(const std::vector<std::int64_t>& f) {
  for (;;) {
    const auto idx = oracle::random_set(f, 0.5);
    if (idx.empty()) continue;
    const GroupSpec g(f);
    return validate_connection_set(g, oracle::to_elements(g, idx));
  }
}

std::string count_note(std::int64_t n, const char* what) { return std::to_string(n) + " " + what; }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome bent_support_flat() {
  Outcome o;
  const SpectrumTable t = table({2, 2, 2, 2}, kBentSupport4);
  double worst = 0.0;
  for (const auto& u : t.group.elements()) {
    for (const auto& v : t.group.elements()) {
      const TransferValue ex = transfer_entry(t, u, v, RationalTime(1, 8));
      o.require(ex.mode == Mode::kExact && as_integer(modulus_squared(*ex.scaled)) == 16,
                "|16 H_uv|^2 != 16 at u=" + format_element(u) + " v=" + format_element(v));
      const TransferValue fl = transfer_entry(t, u, v, FloatTime{std::numbers::pi / 4});
      worst = std::max(worst, std::abs(std::abs(fl.value) - 0.25));
    }
  }
  o.require(worst < 1e-12, "float deviation " + sci(worst));
  if (o.ok) o.detail = "256 exact entries, float deviation " + sci(worst);
  return o;
}

Outcome z2z4_graph() {
  Outcome o;
  const SpectrumTable t = table({2, 4}, kZ2Z4Set);
  // Eigenvalues indexed by (a,b) in lexicographic order.
  const std::vector<std::int64_t> expected{4, 0, 0, 0, -2, -2, 2, -2};
  o.require(t.integral && t.integer_lambda == expected, "eigenvalue list differs");
  double worst = 0.0;
  for (const auto& u : t.group.elements()) {
    for (const auto& v : t.group.elements()) {
      const auto fl = transfer_entry(t, u, v, FloatTime{std::numbers::pi / 4});
      worst = std::max(worst, std::abs(std::abs(fl.value) - 1.0 / (2.0 * std::sqrt(2.0))));
    }
  }
  o.require(worst < 1e-12, "float deviation " + sci(worst));
  for (std::int64_t h = 1; h < 8; ++h) {
    const Correlation c = correlation(t, t.group.element_at(h), RationalTime(1, 8));
    o.require(c.exact && is_zero(*c.exact), "R(h) nonzero at h=" + format_element(t.group.element_at(h)));
  }
  if (o.ok) o.detail = "8 eigenvalues, 7 exact zero correlations, float deviation " + sci(worst);
  return o;
}

Outcome odd_extension_table() {
  Outcome o;
  const SpectrumTable t = table({2, 2, 2}, kOddExtension3);
  // Rows h = 001..111, columns g = 000..111: lambda_{g+h} - lambda_g.
  const std::vector<std::vector<std::int64_t>> expected{
      {-4, 4, 0, 0, 0, 0, 4, -4}, {-4, 0, 4, 0, 0, 4, 0, -4}, {-4, 0, 0, 4, 4, 0, 0, -4},
      {-6, -2, -2, 2, 6, 2, 2, -2}, {-6, -2, 2, -2, 2, 6, 2, -2}, {-6, 2, -2, -2, 2, 2, 6, -2},
      {-2, -2, -2, -2, 2, 2, 2, 2},
  };
  const TwoGroupCounts counts = two_group_criterion(t);
  o.require(counts.nu == 1, "nu = " + std::to_string(counts.nu));
  for (std::int64_t h = 1; h < 8; ++h) {
    const GroupElement he = t.group.element_at(h);
    o.require(difference_multiset(t, he).by_g == expected[h - 1], "row " + format_element(he) + " differs");
    const Correlation c = correlation(t, he, RationalTime(1, 8));
    o.require(c.exact && is_zero(*c.exact), "R nonzero at " + format_element(he));
    const auto& n = counts.per_h.at(he);
    const std::int64_t want = h <= 3 ? 4 : 0;
    o.require(n[2] == want && n[1] == want, "(n2,n1) wrong at " + format_element(he));
  }
  o.require(counts.verdict, "two-group verdict false");
  if (o.ok) o.detail = "7x8 table exact, (n2,n1) = (4,4) x3 and (0,0) x4";
  return o;
}

Outcome all_n4(unsigned threads, std::string label) {
  Outcome o;
  std::vector<std::uint8_t> bent(1 << 16), certified(1 << 16), applicable(1 << 16);
  parallel_for(1 << 16, threads, [&](std::int64_t bits) {
    const BooleanFunction f = from_bits(4, static_cast<std::uint64_t>(bits));
    bent[bits] = is_bent(f);
    if (!bent[bits] || f(0) != 0 || !generates(f)) return;
    applicable[bits] = 1;
    const CubelikeResult r = cubelike_from_bent(f);
    certified[bits] = r.certified() && r.time == RationalTime(1, 8);
  });
  std::int64_t n_bent = 0, n_naive = 0, n_app = 0, n_cert = 0;
  for (std::int64_t bits = 0; bits < (1 << 16); ++bits) {
    n_bent += bent[bits];
    n_app += applicable[bits];
    n_cert += certified[bits];
  }
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) n_naive += naive_bent(from_bits(4, bits));
  o.require(n_bent == 896, count_note(n_bent, "bent functions"));
  o.require(n_naive == n_bent, "naive bent count " + std::to_string(n_naive));
  o.require(n_app > 0 && n_cert == n_app, count_note(n_cert, "certified of ") + std::to_string(n_app));
  if (o.ok) o.detail = label + ": 896 bent, " + std::to_string(n_cert) + " graphs certified at 1/8";
  return o;
}

Outcome mm6() {
  Outcome o;
  std::vector<std::uint32_t> perm(8);
  std::iota(perm.begin(), perm.end(), 0u);
  std::int64_t certified = 0, tried = 0;
  while (tried < 20) {
    std::shuffle(perm.begin(), perm.end(), oracle::rng());
    std::vector<std::uint8_t> aux = random_function(3).truth();
    aux[0] = 0;
    const BooleanFunction f = maiorana_mcfarland(3, perm, BooleanFunction(3, aux));
    if (!generates(f)) continue;
    ++tried;
    const CubelikeResult r = cubelike_from_bent(f);
    certified += r.certified() && r.time == RationalTime(1, 16);
  }
  o.require(certified == tried && certified >= 10, count_note(certified, "certified"));
  if (o.ok) o.detail = std::to_string(certified) + " functions certified at 1/16";
  return o;
}

Outcome odd_m2() {
  Outcome o;
  std::int64_t graphs = 0;
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    const BooleanFunction f = from_bits(4, bits);
    if (f(0) != 0 || f.weight() != 6 || !is_bent(f)) continue;
    const ConnectionSet s1 = support(f);
    const SpectrumTable t = eigenvalues(odd_extension(s1.group(), s1.elements()));
    for (std::int64_t i = 1; i < 16; ++i) {
      GroupElement h = s1.group().element_at(i);
      h.coords.insert(h.coords.begin(), 0);
      const Correlation c = correlation(t, h, RationalTime(1, 16));
      o.require(c.exact && as_integer(*c.exact) == 16, "R != 16 at " + format_element(h));
    }
    ++graphs;
  }
  o.require(graphs > 0, "no weight-6 bent supports");
  if (o.ok) o.detail = std::to_string(graphs) + " extensions, R = 16 at all 15 shifts";
  return o;
}

Outcome classification() {
  Outcome o;
  const VerificationReport r = verify_classification(16, 8);
  o.require(r.all_agree, "report disagrees");
  const std::set<std::string> none{"Z5", "Z8", "Z9", "Z15", "Z12"};
  const std::set<std::string> some{"Z2", "Z2^2", "Z2^3", "Z2^4", "Z3^2", "Z4", "Z2xZ4", "Z4^2"};
  std::int64_t seen = 0;
  for (const auto& row : r.rows) {
    const std::int64_t e = row.group.exponent();
    const bool predicted = e == 2 || e == 3 || e == 4;
    const std::string name = row.group.to_string();
    o.require(row.searched, name + " was not searched");
    o.require(row.found == predicted, name + " hit pattern differs");
    o.require(row.sets_examined == row.expected_sets, name + " candidate count differs");
    if (none.contains(name)) {
      o.require(row.hits == 0, name + " has hits");
      ++seen;
    }
    if (some.contains(name)) {
      const ClassificationResult c = classify_group(row.group);
      o.require(row.hits > 0 && c.witness && c.witness->certified, name + " lacks a certified witness");
      ++seen;
    }
  }
  o.require(seen == static_cast<std::int64_t>(none.size() + some.size()), "missing named groups");
  if (o.ok) o.detail = std::to_string(r.rows.size()) + " groups, pattern matches exp(G) <= 4";
  return o;
}

Outcome pq_bound() {
  Outcome o;
  const SpectrumTable t = table({5, 3}, "orbits: (1,0); (0,1)");
  double lo = 1e300;
  for (int k = 0; k < 2048; ++k) {
    lo = std::min(lo, std::abs(correlation(t, GroupElement{{1, 0}}, FloatTime{k * std::numbers::pi / 1024}).approx));
  }
  o.require(lo >= 3.0 - 1e-9, "min |R| = " + std::to_string(lo));
  if (o.ok) o.detail = "min |R| over 2048 points = " + std::to_string(lo);
  return o;
}

Outcome properties() {
  Outcome o;
  constexpr int kCases = 1000;
  std::vector<std::string> notes;
  const std::vector<GroupSpec> pool = enumerate_abelian_groups(32);

  // Character orthogonality, exactly.
  for (int i = 0; i < kCases; ++i) {
    const GroupSpec& g = pool[oracle::rng()() % pool.size()];
    const GroupElement a = g.element_at(static_cast<std::int64_t>(oracle::rng()() % g.order()));
    const GroupElement b = g.element_at(static_cast<std::int64_t>(oracle::rng()() % g.order()));
    CycInt sum(g.exponent());
    for (const auto& x : g.elements()) {
      sum.add_root(character_exponent(a, x, g) - character_exponent(b, x, g));
    }
    o.require(as_integer(sum) == (a == b ? g.order() : 0), "orthogonality fails on " + g.to_string());
  }
  notes.push_back("orthogonality");

  for (int i = 0; i < kCases; ++i) {
    const BooleanFunction f = random_function(1 + i % 12);
    const WalshSpectrum w = wht(f);
    std::int64_t s = 0;
    for (auto v : w.values) s += v * v;
    o.require(s == std::int64_t{1} << (2 * f.arity()), "Parseval fails");
    if (f.arity() <= 6) o.require(w.values == oracle::naive_wht(f.truth()), "fast != naive WHT");
  }
  for (int i = 0; i < kCases; ++i) {
    const BooleanFunction f = random_function(1 + i % 6);
    o.require(wht(f).values == oracle::naive_wht(f.truth()), "fast != naive WHT");
  }
  notes.push_back("Parseval");
  notes.push_back("WHT");

  // Difference polynomials and gcd invariants on random integral graphs.
  std::int64_t poly_cases = 0, gcd_graphs = 0;
  while (poly_cases < kCases || gcd_graphs < kCases) {
    const ConnectionSet s = random_integral_graph(pool);
    const GroupSpec& g = s.group();
    const SpectrumTable t = eigenvalues(s);
    for (const auto& b : difference_polynomials(t)) {
      const bool palindrome = std::equal(b.coeffs.begin(), b.coeffs.end(), b.coeffs.rbegin());
      o.require(palindrome && std::accumulate(b.coeffs.begin(), b.coeffs.end(), std::int64_t{0}) == g.order(),
                "B_h invariant fails on " + g.to_string());
      ++poly_cases;
    }
    const GcdInvariants inv = gcd_invariants(t);
    const auto d = static_cast<std::int64_t>(s.degree());
    o.require(inv.m > 0 && g.order() % inv.m == 0, "M does not divide |G|");
    for (const auto& [h, mh] : inv.m_h) {
      o.require(mh > 0 && (g.order() * (d - t.int_at(h))) % mh == 0, "M_h divisibility fails");
    }
    const auto primes = prime_factors(g.order());
    if (primes.size() == 1) {
      std::int64_t x = inv.d_g;
      while (x % primes[0] == 0) x /= primes[0];
      o.require(x == 1, "D_G is not a p-power on " + g.to_string());
    }
    ++gcd_graphs;
  }
  notes.push_back("B_h");
  notes.push_back("divisibility");

  // Correlation test against the Hadamard test, and exact against float.
  std::int64_t mixing_true = 0;
  for (int i = 0; i < kCases; ++i) {
    const ConnectionSet s = random_integral_graph(pool);
    const SpectrumTable t = eigenvalues(s);
    const CandidateTimes c = candidate_times(t);
    RationalTime rt;
    if (!c.times.empty() && (i % 2)) {
      rt = c.times[oracle::rng()() % c.times.size()];
    } else {
      const auto n = static_cast<std::int64_t>(2 + oracle::rng()() % 70);
      rt = RationalTime(static_cast<std::int64_t>(1 + oracle::rng()() % (n - 1)), n);
    }
    const bool exact = is_uniform_mixing(t, rt).verdict;
    o.require(exact == hadamard_check(t, rt), "correlation and Hadamard tests disagree");
    o.require(exact == is_uniform_mixing(t, FloatTime{rt.radians()}).verdict, "exact and float disagree");
    mixing_true += exact;
  }
  o.require(mixing_true > 0, "no mixing instance in the corpus");
  notes.push_back("correlation = Hadamard (" + std::to_string(mixing_true) + " mixing)");
  notes.push_back("exact/float");

  const std::vector<std::vector<std::int64_t>> small{{2}, {3}, {4}, {5}, {6}, {2, 2}, {7}, {8}, {3, 3}};
  for (int i = 0; i < kCases; ++i) {
    const ConnectionSet s1 = random_symmetric_graph(small[oracle::rng()() % small.size()]);
    const ConnectionSet s2 = random_symmetric_graph(small[oracle::rng()() % small.size()]);
    const SpectrumTable t1 = eigenvalues(s1), t2 = eigenvalues(s2);
    const SpectrumTable t = eigenvalues(cartesian_product(s1, s2));
    const std::int64_t e = t.group.exponent();
    const std::int64_t n2 = s2.group().order();
    for (std::int64_t a = 0; a < s1.group().order(); ++a) {
      for (std::int64_t b = 0; b < n2; ++b) {
        o.require(t.lambda[a * n2 + b] == t1.lambda[a].lift(e) + t2.lambda[b].lift(e), "spectra do not add");
      }
    }
  }
  notes.push_back("additivity");

  // Every arity 4 bent function, then arity 6 and 8 ones to reach the count.
  std::int64_t duals = 0;
  for (std::uint64_t bits = 0; bits < (1u << 16); ++bits) {
    const BooleanFunction f = from_bits(4, bits);
    if (!is_bent(f)) continue;
    o.require(dual(dual(f)) == f, "dual is not an involution");
    ++duals;
  }
  while (duals < kCases) {
    const int k = 3 + static_cast<int>(duals % 2);
    std::vector<std::uint32_t> perm(std::size_t{1} << k);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), oracle::rng());
    const BooleanFunction f = maiorana_mcfarland(k, perm, random_function(k));
    o.require(dual(dual(f)) == f, "dual is not an involution");
    ++duals;
  }
  notes.push_back("dual");

  // Difference balance against exact mixing at r / p^{e'} on odd p-groups.
  std::vector<GroupSpec> odd;
  for (const auto& g : enumerate_abelian_groups(81)) {
    const auto p = prime_factors(g.order());
    if (p.size() == 1 && p[0] != 2) odd.push_back(g);
  }
  std::int64_t balance_cases = 0, balanced = 0;
  const ConnectionSet k3 = parse_connection_set("1;2", GroupSpec({3}));
  const ConnectionSet k3k3 = cartesian_product(k3, k3);
  const std::vector<ConnectionSet> seeds{k3, k3k3, cartesian_product(k3k3, k3)};
  for (std::size_t round = 0; balance_cases < kCases; ++round) {
    const ConnectionSet s = round < seeds.size() ? seeds[round] : random_integral_graph(odd);
    const SpectrumTable t = eigenvalues(s);
    const std::int64_t p = prime_factors(s.group().order())[0];
    const std::int64_t n = p * gcd_invariants(t).d_g;
    const bool b = difference_balanced_check(t);
    for (std::int64_t r = 1; r < n; ++r) {
      if (r % p == 0) continue;
      o.require(b == is_uniform_mixing(t, RationalTime(r, n)).verdict,
                "balance and mixing disagree on " + s.group().to_string());
      ++balance_cases;
      balanced += b;
    }
  }
  o.require(difference_balanced_check(eigenvalues(k3)) && is_uniform_mixing(eigenvalues(k3), RationalTime(1, 9)).verdict,
            "K_3 is not balanced and mixing");
  o.require(balanced > 0, "no balanced instance");
  notes.push_back("balance (" + std::to_string(balanced) + " balanced)");

  if (o.ok) {
    o.detail = ">= " + std::to_string(kCases) + " cases each:";
    for (const auto& n : notes) o.detail += " " + n + ";";
  }
  return o;
}

Outcome soundness() {
  Outcome o;
  std::int64_t graphs = 0, times = 0;
  for (const auto& g : enumerate_abelian_groups(12)) {
    for (const auto& idx : oracle::orbit_unions(g, 40)) {
      if (oracle::span_size(g.factors(), idx) != g.order()) continue;
      const SpectrumTable t = eigenvalues(validate_connection_set(g, oracle::to_elements(g, idx)));
      const CandidateTimes c = candidate_times(t);
      const std::set<RationalTime> cand(c.times.begin(), c.times.end());
      for (std::int64_t n = 1; n <= 72; ++n) {
        for (std::int64_t r = 1; r < n; ++r) {
          if (gcd(r, n) != 1 || cand.contains(RationalTime(r, n))) continue;
          MixOptions opt;
          opt.stop_at_first_failure = true;
          o.require(!is_uniform_mixing(t, RationalTime(r, n), opt).verdict,
                    "missed time " + std::to_string(r) + "/" + std::to_string(n) + " on " + g.to_string());
          ++times;
        }
      }
      ++graphs;
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs, " + std::to_string(times) + " excluded times refuted";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Z2^4 six-element graph is flat at pi/4", 1.0, bent_support_flat},
      {2, "Z2xZ4 graph spectrum and flatness at pi/4", 1.0, z2z4_graph},
      {3, "Z2^3 difference table and two-group counts", 1.0, odd_extension_table},
      {4, "all arity 4 functions, single worker", 120.0, [] { return all_n4(1, "1 worker"); }},
      {4, "all arity 4 functions, 8 workers", 30.0, [] { return all_n4(8, "8 workers"); }},
      {5, "arity 6 Maiorana-McFarland graphs mix at pi/8", 60.0, mm6},
      {6, "odd extension with m = 2 has R = 16", 5.0, odd_m2},
      {7, "classification matches exhaustive search up to order 16", 600.0, classification},
      {8, "Z5xZ3 correlation bound on a 2048-point grid", 1.0, pq_bound},
      {9, "randomized property suites", 600.0, properties},
      {10, "candidate times miss no mixing time, order <= 12, N <= 72", 300.0, soundness},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += " [over budget " + std::to_string(c.budget_seconds) + " s]";
    }
    failed += !o.ok;
    std::printf("%s AC%-2d %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu checks failed\n", failed ? "FAIL" : "PASS", failed, criteria.size());
  return failed ? 1 : 0;
}
