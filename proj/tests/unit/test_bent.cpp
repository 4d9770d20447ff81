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

#include "mixkit/bent.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mixkit/error.hpp"
#include "oracles.hpp"

namespace mixkit {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInternalInconsistency;
}

// Bit i of the n-bit index is x_{n-i}, so x1 is the most significant bit.
int var(std::uint64_t x, int n, int i) { return static_cast<int>((x >> (n - i)) & 1); }

BooleanFunction random_function(int n) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (auto& b : t) b = static_cast<std::uint8_t>(oracle::rng()() & 1);
  return BooleanFunction(n, t);
}

std::vector<BooleanFunction> all_bent4() {
  std::vector<BooleanFunction> out;
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    std::vector<std::uint8_t> t(16);
    for (int i = 0; i < 16; ++i) t[i] = (bits >> i) & 1;
    BooleanFunction f(4, t);
    if (is_bent(f)) out.push_back(f);
  }
  return out;
}

TEST(BooleanFunction, Construction) {
  EXPECT_EQ(kind_of([] { BooleanFunction(2, {0, 1, 0}); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(kind_of([] { BooleanFunction(1, {0, 2}); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(BooleanFunction::zero(3).weight(), 0u);
  EXPECT_EQ(BooleanFunction(2, {0, 1, 1, 1}).weight(), 3u);
}

TEST(Wht, BentSupportSpectrum) {
  const BooleanFunction f = parse_anf("x1*x2+x3*x4");
  const WalshSpectrum w = wht(f);
  for (std::uint64_t y = 0; y < 16; ++y) {
    const int sign = (var(y, 4, 1) * var(y, 4, 2) + var(y, 4, 3) * var(y, 4, 4)) % 2 ? -1 : 1;
    EXPECT_EQ(w.values[y], 4 * sign) << y;
  }
}

TEST(Wht, ZeroFunctionAndX1X2) {
  const WalshSpectrum z = wht(BooleanFunction::zero(5));
  EXPECT_EQ(z.values[0], 32);
  for (std::size_t g = 1; g < 32; ++g) EXPECT_EQ(z.values[g], 0);
  for (std::int64_t v : wht(parse_anf("x1*x2")).values) EXPECT_EQ(std::abs(v), 2);
}

TEST(Wht, MatchesNaiveTransform) {
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const BooleanFunction f = random_function(n);
      EXPECT_EQ(wht(f).values, oracle::naive_wht(f.truth()));
    }
  }
}

TEST(Wht, ParsevalAndZeroValue) {
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const BooleanFunction f = random_function(n);
      const WalshSpectrum w = wht(f);
      std::int64_t sum = 0;
      for (std::int64_t v : w.values) sum += v * v;
      EXPECT_EQ(sum, std::int64_t{1} << (2 * n));
      EXPECT_EQ(w.values[0], (std::int64_t{1} << n) - 2 * static_cast<std::int64_t>(f.weight()));
    }
  }
}

TEST(Wht, ParallelMatchesSerial) {
  const BooleanFunction f = random_function(16);
  EXPECT_EQ(wht(f, 1).values, wht(f, 4).values);
}

TEST(IsBent, Examples) {
  EXPECT_TRUE(is_bent(parse_anf("x1*x2+x3*x4")));
  EXPECT_TRUE(is_bent(parse_anf("x1*x2")));
  EXPECT_FALSE(is_bent(parse_anf("x1*x2+x3*x4", 5)));
  EXPECT_FALSE(is_bent(parse_anf("x1+x2")));
  for (int n : {1, 3, 5, 7}) {
    for (int trial = 0; trial < 20; ++trial) EXPECT_FALSE(is_bent(random_function(n)));
  }
}

TEST(IsBent, Exhaustive4) {
  const auto bent = all_bent4();
  EXPECT_EQ(bent.size(), 896u);
  for (const auto& f : bent) {
    EXPECT_TRUE(f.weight() == 6 || f.weight() == 10);
    const BooleanFunction d = dual(f);
    EXPECT_TRUE(is_bent(d));
    EXPECT_EQ(dual(d), f);
    if (f.weight() == 6) EXPECT_EQ(d(0), 0);
  }
}

TEST(IsBent, SupportSizesForLargerArity) {
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::uint32_t> perm(std::size_t{1} << k);
    std::iota(perm.begin(), perm.end(), 0u);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), oracle::rng());
      const BooleanFunction f = maiorana_mcfarland(k, perm, random_function(k));
      const std::size_t big = std::size_t{1} << (2 * k - 1);
      const std::size_t small = std::size_t{1} << (k - 1);
      EXPECT_TRUE(f.weight() == big - small || f.weight() == big + small);
    }
  }
}

TEST(Dual, Examples) {
  const BooleanFunction f = parse_anf("x1*x2+x3*x4");
  EXPECT_EQ(dual(f), f);
  EXPECT_EQ(kind_of([] { dual(parse_anf("x1")); }), ErrorKind::kNotBent);
}

TEST(MaioranaMcFarland, Examples) {
  EXPECT_EQ(maiorana_mcfarland(2, {0, 1, 2, 3}, BooleanFunction::zero(2)), parse_anf("x1*x3+x2*x4"));
  EXPECT_EQ(maiorana_mcfarland(1, {0, 1}, BooleanFunction::zero(1)), parse_anf("x1*x2"));
  const BooleanFunction g = maiorana_mcfarland(2, {0, 1, 2, 3}, parse_anf("x1*x2"));
  EXPECT_TRUE(is_bent(g));
  EXPECT_EQ(g, parse_anf("x1*x3+x2*x4+x3*x4"));
  EXPECT_EQ(kind_of([] { maiorana_mcfarland(2, {0, 1, 1, 3}, BooleanFunction::zero(2)); }),
            ErrorKind::kNotBijection);
  EXPECT_EQ(kind_of([] { maiorana_mcfarland(2, {0, 1, 2}, BooleanFunction::zero(2)); }),
            ErrorKind::kNotBijection);
}

TEST(Support, Examples) {
  const ConnectionSet s = support(parse_anf("x1*x2+x3*x4"));
  const GroupSpec g({2, 2, 2, 2});
  EXPECT_EQ(s, parse_connection_set("(1,1,0,0);(1,1,1,0);(1,1,0,1);(0,0,1,1);(1,0,1,1);(0,1,1,1)", g));
  EXPECT_EQ(kind_of([] { support(parse_anf("x1*x2")); }), ErrorKind::kNotGenerating);
  EXPECT_EQ(kind_of([] { support(BooleanFunction::zero(3)); }), ErrorKind::kNotGenerating);
  EXPECT_EQ(kind_of([] { support(parse_anf("x1*x2+1")); }), ErrorKind::kZeroInSupport);
}

TEST(OddExtension, M1IsOddExtensionGraph) {
  const GroupSpec g2({2, 2});
  const ConnectionSet s = odd_extension(g2, {GroupElement{{1, 1}}});
  EXPECT_EQ(s, parse_connection_set("(1,0,0);(1,0,1);(1,1,0);(0,1,1)", GroupSpec({2, 2, 2})));
  EXPECT_EQ(kind_of([&] { odd_extension(g2, {GroupElement{{0, 0}}}); }), ErrorKind::kZeroInS1);
}

TEST(OddExtension, SizeAndM2Verdict) {
  for (const auto& f : all_bent4()) {
    if (f(0) != 0 || f.weight() != 6) continue;
    const ConnectionSet s1 = support(f);
    const ConnectionSet s = odd_extension(s1.group(), s1.elements());
    EXPECT_EQ(s.degree(), 16u);
    const SpectrumTable t = eigenvalues(s);
    EXPECT_FALSE(is_uniform_mixing(t, RationalTime(1, 16)).verdict);
    EXPECT_FALSE(is_uniform_mixing(t, RationalTime(1, 8)).verdict);
  }
}

TEST(Cubelike, BentSupport4) {
  const CubelikeResult r = cubelike_from_bent(parse_anf("x1*x2+x3*x4"));
  EXPECT_EQ(r.time, RationalTime(1, 8));
  EXPECT_TRUE(r.certified());
  EXPECT_TRUE(r.report.certifying());
  EXPECT_EQ(r.set.degree(), 6u);
}

TEST(Cubelike, SixVariables) {
  const BooleanFunction f = maiorana_mcfarland(3, {0, 1, 2, 3, 4, 5, 6, 7}, BooleanFunction::zero(3));
  const CubelikeResult r = cubelike_from_bent(f);
  EXPECT_EQ(r.time, RationalTime(1, 16));
  EXPECT_TRUE(r.certified());
  EXPECT_EQ(kind_of([] { cubelike_from_bent(parse_anf("x1*x2*x3+x4", 4)); }), ErrorKind::kNotBent);
}

// Every arity 4 bent function with f(0)=0 and a generating support gives a
// graph whose exact correlation at pi/4 is the dual's autocorrelation, 0.
TEST(Cubelike, CorrelationIsDualAutocorrelation) {
  int graphs = 0;
  for (const auto& f : all_bent4()) {
    if (f(0) != 0) continue;
    const ConnectionSet s = support(f);
    const BooleanFunction d = dual(f);
    const SpectrumTable t = eigenvalues(s);
    for (std::uint64_t h = 1; h < 16; ++h) {
      std::int64_t auto_corr = 0;
      for (std::uint64_t g = 0; g < 16; ++g) auto_corr += (d(g ^ h) ^ d(g)) ? -1 : 1;
      EXPECT_EQ(auto_corr, 0);
      const Correlation c = correlation(t, s.group().element_at(static_cast<std::int64_t>(h)),
                                        RationalTime(1, 8));
      EXPECT_EQ(as_integer(*c.exact), auto_corr);
    }
    EXPECT_TRUE(cubelike_from_bent(f).certified());
    ++graphs;
  }
  EXPECT_GT(graphs, 400);
}

TEST(Bridge, MatchesSpectrumModule) {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint8_t> t = random_function(n).truth();
      t[0] = 0;
      const BooleanFunction f(n, t);
      std::vector<std::int64_t> idx;
      for (std::uint64_t x = 1; x < f.size(); ++x) {
        if (f(x)) idx.push_back(static_cast<std::int64_t>(x));
      }
      if (oracle::span_size(std::vector<std::int64_t>(n, 2), idx) != (std::int64_t{1} << n)) continue;
      const ConnectionSet s = support(f);
      EXPECT_EQ(eigenvalues(s).integer_lambda, eigenvalue_bridge(f, wht(f)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Parse, HexTruthTables) {
  EXPECT_EQ(parse_truth_table_hex("8"), parse_anf("x1*x2"));
  EXPECT_EQ(parse_truth_table_hex("c"), parse_anf("x1", 2));
  EXPECT_EQ(parse_truth_table_hex("0f"), parse_anf("x1", 3));
  EXPECT_EQ(parse_truth_table_hex("0x0F"), parse_anf("x1", 3));
  EXPECT_EQ(parse_truth_table_hex("2", 1), parse_anf("x1", 1));
  EXPECT_EQ(to_hex(parse_anf("x1", 3)), "0f");
  for (int n = 2; n <= 10; ++n) {
    const BooleanFunction f = random_function(n);
    EXPECT_EQ(parse_truth_table_hex(to_hex(f), n), f);
  }
  EXPECT_EQ(kind_of([] { parse_truth_table_hex("0g"); }), ErrorKind::kSyntax);
  EXPECT_THROW(parse_truth_table_hex("000"), Error);
}

TEST(Parse, AlgebraicNormalForm) {
  const BooleanFunction a = parse_anf("x1*x2 + x3*x4");
  EXPECT_EQ(a.arity(), 4);
  EXPECT_EQ(parse_anf("x1x2+x3x4"), a);
  EXPECT_EQ(parse_anf("x_1*x_2+x_3*x_4"), a);
  EXPECT_EQ(parse_anf("x1*x2 + x1*x2 + x3*x4"), parse_anf("x3*x4", 4));
  const BooleanFunction one = parse_anf("1", 2);
  EXPECT_EQ(one.weight(), 4u);
  EXPECT_EQ(parse_anf("0", 3), BooleanFunction::zero(3));
  for (std::uint64_t x = 0; x < 16; ++x) {
    EXPECT_EQ(a(x), (var(x, 4, 1) & var(x, 4, 2)) ^ (var(x, 4, 3) & var(x, 4, 4)));
  }
  EXPECT_EQ(kind_of([] { parse_anf("x1 +"); }), ErrorKind::kSyntax);
  EXPECT_EQ(kind_of([] { parse_anf("y1"); }), ErrorKind::kSyntax);
}

TEST(BooleanCube, MatchesTruthIndexing) {
  const GroupSpec g = boolean_cube(3);
  EXPECT_EQ(g, GroupSpec({2, 2, 2}));
  EXPECT_EQ(g.element_at(4), (GroupElement{{1, 0, 0}}));
}

}  // namespace
}  // namespace mixkit
