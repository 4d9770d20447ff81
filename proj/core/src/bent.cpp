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

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>

#include "mixkit/error.hpp"
#include "mixkit/parallel.hpp"

namespace mixkit {

namespace {

void check_arity(int n) {
  if (n < 0 || n > kMaxBooleanArity) {
    throw Error(ErrorKind::kInvalidArgument,
                "arity " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxBooleanArity) + "]");
  }
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> truth)
    : n_(n), truth_(std::move(truth)) {
  check_arity(n);
  if (truth_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "truth table of arity " + std::to_string(n) + " needs " +
                    std::to_string(std::size_t{1} << n) + " entries, got " +
                    std::to_string(truth_.size()));
  }
  for (std::uint8_t b : truth_) {
    if (b > 1) {
      throw Error(ErrorKind::kInvalidArgument, "truth table entries must be 0 or 1");
    }
  }
}

BooleanFunction BooleanFunction::zero(int n) {
  check_arity(n);
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

std::size_t BooleanFunction::weight() const {
  return static_cast<std::size_t>(std::count(truth_.begin(), truth_.end(), 1));
}

WalshSpectrum wht(const BooleanFunction& f, unsigned threads) {
  WalshSpectrum w;
  w.n = f.arity();
  const std::int64_t size = static_cast<std::int64_t>(f.size());
  w.values.resize(f.size());
  for (std::int64_t x = 0; x < size; ++x) w.values[x] = f(x) ? -1 : 1;
  // Each stage pairs indices that differ in one bit. Blocks of 2*len are
  // independent, so a stage can be split across workers.
  for (std::int64_t len = 1; len < size; len <<= 1) {
    const std::int64_t blocks = size / (2 * len);
    auto butterfly = [&](std::int64_t b) {
      const std::int64_t base = b * 2 * len;
      for (std::int64_t j = base; j < base + len; ++j) {
        const std::int64_t u = w.values[j];
        const std::int64_t v = w.values[j + len];
        w.values[j] = u + v;
        w.values[j + len] = u - v;
      }
    };
    if (size < (std::int64_t{1} << 14)) {
      for (std::int64_t b = 0; b < blocks; ++b) butterfly(b);
    } else {
      parallel_for(blocks, threads, butterfly);
    }
  }
  return w;
}

std::vector<std::int64_t> eigenvalue_bridge(const BooleanFunction& f,
                                            const WalshSpectrum& w) {
  if (w.n != f.arity() || w.values.size() != f.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "spectrum does not match the function's arity");
  }
  std::vector<std::int64_t> lambda(w.values.size());
  lambda[0] = static_cast<std::int64_t>(f.weight());
  for (std::size_t g = 1; g < lambda.size(); ++g) lambda[g] = -w.values[g] / 2;
  return lambda;
}

bool is_bent(const BooleanFunction& f) {
  const int n = f.arity();
  if (n % 2 != 0) return false;
  const std::int64_t target = std::int64_t{1} << (n / 2);
  const WalshSpectrum w = wht(f);
  return std::all_of(w.values.begin(), w.values.end(),
                     [&](std::int64_t v) { return std::llabs(v) == target; });
}

BooleanFunction dual(const BooleanFunction& f) {
  if (!is_bent(f)) throw Error(ErrorKind::kNotBent, "function is not bent");
  const WalshSpectrum w = wht(f);
  std::vector<std::uint8_t> truth(w.values.size());
  for (std::size_t g = 0; g < truth.size(); ++g) truth[g] = w.values[g] < 0;
  return BooleanFunction(f.arity(), std::move(truth));
}

BooleanFunction maiorana_mcfarland(int k, const std::vector<std::uint32_t>& perm,
                                   const BooleanFunction& aux) {
  if (k < 1 || 2 * k > kMaxBooleanArity) {
    throw Error(ErrorKind::kInvalidArgument,
                "k must lie in [1, " + std::to_string(kMaxBooleanArity / 2) + "]");
  }
  const std::size_t half = std::size_t{1} << k;
  if (aux.arity() != k) {
    throw Error(ErrorKind::kDimensionMismatch, "aux must have arity k");
  }
  if (perm.size() != half) {
    throw Error(ErrorKind::kNotBijection,
                "permutation needs " + std::to_string(half) + " images");
  }
  std::vector<char> seen(half, 0);
  for (std::uint32_t image : perm) {
    if (image >= half || seen[image]) {
      throw Error(ErrorKind::kNotBijection,
                  "perm is not a bijection of F_2^" + std::to_string(k));
    }
    seen[image] = 1;
  }
  std::vector<std::uint8_t> truth(half * half);
  for (std::size_t x = 0; x < half; ++x) {
    for (std::size_t y = 0; y < half; ++y) {
      const unsigned dot = std::popcount(x & perm[y]) & 1U;
      truth[(x << k) | y] = static_cast<std::uint8_t>(dot ^ aux(y));
    }
  }
  BooleanFunction f(2 * k, std::move(truth));
  if (!is_bent(f)) {
    throw Error(ErrorKind::kInternalInconsistency,
                "Maiorana-McFarland output failed the bent test");
  }
  return f;
}

GroupSpec boolean_cube(int n) {
  check_arity(n);
  return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(n), 2));
}

ConnectionSet support(const BooleanFunction& f) {
  if (f.size() > 0 && f(0) == 1) {
    throw Error(ErrorKind::kZeroInSupport, "f(0) = 1 puts 0 in the support");
  }
  const GroupSpec group = boolean_cube(f.arity());
  std::vector<GroupElement> raw;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f(x)) raw.push_back(group.element_at(static_cast<std::int64_t>(x)));
  }
  return validate_connection_set(group, std::move(raw));
}

ConnectionSet odd_extension(const GroupSpec& group,
                            const std::vector<GroupElement>& s1) {
  const auto& factors = group.factors();
  if (factors.empty() || factors.size() % 2 != 0 ||
      std::any_of(factors.begin(), factors.end(),
                  [](std::int64_t q) { return q != 2; })) {
    throw Error(ErrorKind::kInvalidArgument,
                "odd extension needs S1 in Z2^{2m}, got " + group.to_string());
  }
  std::vector<char> in_s1(static_cast<std::size_t>(group.order()), 0);
  for (const auto& x : s1) {
    group.check(x);
    if (is_identity(x)) throw Error(ErrorKind::kZeroInS1, "0 lies in S1");
    in_s1[static_cast<std::size_t>(group.index_of(x))] = 1;
  }
  std::vector<std::int64_t> ext_factors(factors.size() + 1, 2);
  GroupSpec ext(std::move(ext_factors));
  std::vector<GroupElement> raw;
  for (std::int64_t i = 0; i < group.order(); ++i) {
    GroupElement z = group.element_at(i);
    z.coords.insert(z.coords.begin(), in_s1[i] ? 0 : 1);
    raw.push_back(std::move(z));
  }
  return validate_connection_set(ext, std::move(raw));
}

CubelikeResult cubelike_from_bent(const BooleanFunction& f, unsigned threads) {
  if (!is_bent(f)) throw Error(ErrorKind::kNotBent, "function is not bent");
  ConnectionSet set = support(f);
  const int k = f.arity() / 2;
  RationalTime time(1, std::int64_t{1} << (k + 1));
  const SpectrumTable table = eigenvalues(set, threads);
  MixOptions options;
  options.threads = threads;
  options.stop_at_first_failure = true;
  MixReport report = is_uniform_mixing(table, time, options);
  return CubelikeResult{std::move(set), time, std::move(report)};
}

BooleanFunction parse_truth_table_hex(std::string_view text,
                                      std::optional<int> n) {
  std::size_t begin = 0;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    begin = 2;
  }
  const std::string_view digits = text.substr(begin);
  if (digits.empty()) throw ParseError(begin, "empty truth table");
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (hex_value(digits[i]) < 0) {
      throw ParseError(begin + i, std::string("not a hex digit '") + digits[i] + "'");
    }
  }
  int arity = 0;
  if (n) {
    arity = *n;
    check_arity(arity);
    const std::size_t want = arity >= 2 ? (std::size_t{1} << (arity - 2)) : 1;
    if (digits.size() != want) {
      throw ParseError(begin, "arity " + std::to_string(arity) + " needs " +
                                  std::to_string(want) + " hex digits");
    }
  } else {
    if (!std::has_single_bit(digits.size())) {
      throw ParseError(begin, "hex length must be a power of 2");
    }
    arity = std::countr_zero(digits.size()) + 2;
    check_arity(arity);
  }
  const std::size_t size = std::size_t{1} << arity;
  std::vector<std::uint8_t> truth(size, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int nibble = hex_value(digits[i]);
    for (int j = 0; j < 4; ++j) {
      const std::size_t x = 4 * i + static_cast<std::size_t>(j);
      const bool bit = (nibble >> j) & 1;
      if (x < size) {
        truth[x] = bit;
      } else if (bit) {
        throw ParseError(begin + i, "bits set beyond the 2^n table");
      }
    }
  }
  return BooleanFunction(arity, std::move(truth));
}

std::string to_hex(const BooleanFunction& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t chars = (f.size() + 3) / 4;
  std::string out(chars, '0');
  for (std::size_t i = 0; i < chars; ++i) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4 && 4 * i + j < f.size(); ++j) {
      nibble |= f(4 * i + j) << j;
    }
    out[i] = kDigits[nibble];
  }
  return out;
}

BooleanFunction parse_anf(std::string_view text, std::optional<int> n) {
  // Each monomial is a bit mask of variables; 0 is the constant 1.
  std::vector<std::uint32_t> monomials;
  int max_var = 0;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_term = true;
  skip_space();
  if (pos == text.size()) throw ParseError(pos, "empty polynomial");
  while (pos < text.size()) {
    skip_space();
    if (!expect_term) {
      if (text[pos] != '+') throw ParseError(pos, "expected '+'");
      ++pos;
      expect_term = true;
      continue;
    }
    std::uint32_t mask = 0;
    bool constant_zero = false;
    bool have_factor = false;
    while (true) {
      skip_space();
      if (pos >= text.size()) break;
      const char c = text[pos];
      if (c == 'x' || c == 'X') {
        const std::size_t start = pos++;
        if (pos < text.size() && text[pos] == '_') ++pos;
        std::size_t digits_begin = pos;
        long idx = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          idx = idx * 10 + (text[pos] - '0');
          if (idx > kMaxBooleanArity) throw ParseError(start, "variable index too large");
          ++pos;
        }
        if (pos == digits_begin || idx < 1) {
          throw ParseError(start, "expected variable x1..x" + std::to_string(kMaxBooleanArity));
        }
        mask |= std::uint32_t{1} << (idx - 1);
        max_var = std::max(max_var, static_cast<int>(idx));
        have_factor = true;
      } else if (c == '0' || c == '1') {
        if (pos + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
          throw ParseError(pos, "constants must be 0 or 1");
        }
        if (c == '0') constant_zero = true;
        ++pos;
        have_factor = true;
      } else {
        if (!have_factor) throw ParseError(pos, "expected a monomial");
        break;
      }
      skip_space();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
        continue;
      }
      // Juxtaposition such as x1x2 also multiplies.
      if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) continue;
      break;
    }
    if (!have_factor) throw ParseError(pos, "expected a monomial");
    if (!constant_zero) monomials.push_back(mask);
    expect_term = false;
  }
  if (expect_term) throw ParseError(pos, "trailing '+'");

  int arity = max_var;
  if (n) {
    if (*n < max_var) {
      throw Error(ErrorKind::kInvalidArgument,
                  "x" + std::to_string(max_var) + " exceeds arity " + std::to_string(*n));
    }
    arity = *n;
  }
  check_arity(arity);
  const std::size_t size = std::size_t{1} << arity;
  std::vector<std::uint8_t> truth(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    // Variable x_i is bit (arity - i) of the index.
    std::uint32_t present = 0;
    for (int i = 1; i <= arity; ++i) {
      if ((x >> (arity - i)) & 1U) present |= std::uint32_t{1} << (i - 1);
    }
    unsigned value = 0;
    for (std::uint32_t m : monomials) value ^= (present & m) == m;
    truth[x] = static_cast<std::uint8_t>(value);
  }
  return BooleanFunction(arity, std::move(truth));
}

}  // namespace mixkit
