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

#include "mixkit/mixing.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "mixkit/error.hpp"
#include "mixkit/parallel.hpp"

namespace mixkit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(
      static_cast<__int128>(mod(a, n)) * mod(b, n) % n);
}

// Real eigenvalues as doubles (S = -S makes every lambda real).
std::vector<double> real_lambda(const SpectrumTable& table) {
  std::vector<double> out;
  out.reserve(table.lambda.size());
  if (table.integral) {
    for (std::int64_t v : table.integer_lambda) {
      out.push_back(static_cast<double>(v));
    }
  } else {
    for (const auto& z : table.lambda) out.push_back(to_complex(z).real());
  }
  return out;
}

std::complex<double> unit(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

void require_nonzero_shift(const SpectrumTable& table, const GroupElement& h) {
  table.group.check(h);
  if (is_identity(h)) {
    throw Error(ErrorKind::kZeroShift, "shift h must be nonzero");
  }
}

bool is_power_of(std::int64_t n, std::int64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::int64_t valuation(std::int64_t n, std::int64_t p) {
  std::int64_t v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Correlation correlation_at_index(const SpectrumTable& table,
                                 const IndexArithmetic& arith,
                                 const std::vector<double>& lam,
                                 std::int64_t hi, const Time& t) {
  Correlation out;
  const std::int64_t n = arith.size();
  if (uses_exact_mode(table, t)) {
    const auto& rt = std::get<RationalTime>(t);
    const auto& ilam = table.integer_lambda;
    CycInt acc(rt.n());
    for (std::int64_t g = 0; g < n; ++g) {
      acc.add_root(mulmod(rt.r(), ilam[arith.add(g, hi)] - ilam[g], rt.n()));
    }
    out.mode = Mode::kExact;
    out.approx = to_complex(acc);
    out.exact = std::move(acc);
    return out;
  }
  const double tt = radians(t);
  std::complex<double> acc = 0.0;
  for (std::int64_t g = 0; g < n; ++g) {
    acc += unit((lam[arith.add(g, hi)] - lam[g]) * tt);
  }
  out.mode = Mode::kFloat;
  out.approx = acc;
  return out;
}

bool vanishes(const Correlation& c, double tolerance, std::int64_t order) {
  if (c.mode == Mode::kExact) return is_zero(*c.exact);
  return std::abs(c.approx) < tolerance * static_cast<double>(order);
}

}  // namespace

const char* to_string(Mode mode) {
  return mode == Mode::kExact ? "exact" : "float";
}

bool uses_exact_mode(const SpectrumTable& table, const Time& t) {
  return table.integral && std::holds_alternative<RationalTime>(t);
}

TransferValue transfer_entry(const SpectrumTable& table, const GroupElement& u,
                             const GroupElement& v, const Time& t) {
  const GroupSpec& group = table.group;
  const GroupElement a = subtract(u, v, group);
  const std::int64_t n = group.order();
  const std::int64_t e = group.exponent();
  TransferValue out;
  if (uses_exact_mode(table, t)) {
    const auto& rt = std::get<RationalTime>(t);
    const std::int64_t level = std::lcm(rt.n(), e);
    const std::int64_t time_step = level / rt.n();
    const std::int64_t char_step = level / e;
    CycInt acc(level);
    for (std::int64_t gi = 0; gi < n; ++gi) {
      GroupElement g = group.element_at(gi);
      std::int64_t k = mulmod(rt.r(), table.integer_lambda[gi], rt.n()) *
                           time_step +
                       character_exponent(g, a, group) * char_step;
      acc.add_root(k);
    }
    out.mode = Mode::kExact;
    out.value = to_complex(acc) / static_cast<double>(n);
    out.scaled = std::move(acc);
    return out;
  }
  const std::vector<double> lam = real_lambda(table);
  const double tt = radians(t);
  std::complex<double> acc = 0.0;
  for (std::int64_t gi = 0; gi < n; ++gi) {
    GroupElement g = group.element_at(gi);
    const double chi = 2.0 * std::numbers::pi *
                       static_cast<double>(character_exponent(g, a, group)) /
                       static_cast<double>(e);
    acc += unit(lam[gi] * tt + chi);
  }
  out.mode = Mode::kFloat;
  out.value = acc / static_cast<double>(n);
  return out;
}

Correlation correlation(const SpectrumTable& table, const GroupElement& h,
                        const Time& t) {
  require_nonzero_shift(table, h);
  IndexArithmetic arith(table.group);
  std::vector<double> lam;
  if (!uses_exact_mode(table, t)) lam = real_lambda(table);
  return correlation_at_index(table, arith, lam, table.group.index_of(h), t);
}

MixReport is_uniform_mixing(const SpectrumTable& table, const Time& t,
                            const MixOptions& options) {
  const std::int64_t n = table.group.order();
  IndexArithmetic arith(table.group);
  std::vector<double> lam;
  if (!uses_exact_mode(table, t)) lam = real_lambda(table);

  MixReport report;
  report.time = t;
  report.mode = uses_exact_mode(table, t) ? Mode::kExact : Mode::kFloat;
  report.tolerance = options.tolerance;

  if (options.stop_at_first_failure) {
    for (std::int64_t h = 1; h < n; ++h) {
      Correlation c = correlation_at_index(table, arith, lam, h, t);
      bool zero = vanishes(c, options.tolerance, n);
      report.evidence.emplace_back(table.group.element_at(h), std::move(c));
      if (!zero) {
        report.failing_h = table.group.element_at(h);
        break;
      }
    }
  } else {
    std::vector<Correlation> values(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    std::vector<char> zero(values.size(), 0);
    parallel_for(n - 1, options.threads, [&](std::int64_t i) {
      values[i] = correlation_at_index(table, arith, lam, i + 1, t);
      zero[i] = vanishes(values[i], options.tolerance, n);
    });
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      if (!zero[i] && !report.failing_h) {
        report.failing_h = table.group.element_at(i + 1);
      }
      report.evidence.emplace_back(table.group.element_at(i + 1),
                                   std::move(values[i]));
    }
  }
  report.verdict = !report.failing_h.has_value();
  return report;
}

bool hadamard_check(const SpectrumTable& table, const Time& t,
                    const MixOptions& options) {
  const std::int64_t n = table.group.order();
  IndexArithmetic arith(table.group);
  const bool exact = uses_exact_mode(table, t);

  // Row x of W as phases: exponents mod N (exact) or angles (float).
  std::vector<std::int64_t> sum_index(static_cast<std::size_t>(n * n));
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < n; ++y) sum_index[x * n + y] = arith.add(x, y);
  }
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t y = 0; y < x; ++y) {
      if (sum_index[x * n + y] != sum_index[y * n + x]) {
        throw Error(ErrorKind::kInternalInconsistency, "W is not symmetric");
      }
    }
  }

  std::vector<char> row_ok(static_cast<std::size_t>(n), 1);
  if (exact) {
    const auto& rt = std::get<RationalTime>(t);
    const auto& ilam = table.integer_lambda;
    std::vector<std::int64_t> phase(ilam.size());
    for (std::size_t i = 0; i < ilam.size(); ++i) {
      phase[i] = mulmod(rt.r(), ilam[i], rt.n());
    }
    parallel_for(n, options.threads, [&](std::int64_t x) {
      for (std::int64_t y = 0; y < n; ++y) {
        CycInt acc(rt.n());
        for (std::int64_t z = 0; z < n; ++z) {
          acc.add_root(phase[sum_index[x * n + z]] - phase[sum_index[y * n + z]]);
        }
        if (x == y) acc -= CycInt::integer(rt.n(), n);
        if (!is_zero(acc)) {
          row_ok[x] = 0;
          return;
        }
      }
    });
  } else {
    const std::vector<double> lam = real_lambda(table);
    const double tt = radians(t);
    parallel_for(n, options.threads, [&](std::int64_t x) {
      for (std::int64_t y = 0; y < n; ++y) {
        std::complex<double> acc = 0.0;
        for (std::int64_t z = 0; z < n; ++z) {
          acc += unit((lam[sum_index[x * n + z]] - lam[sum_index[y * n + z]]) *
                      tt);
        }
        if (x == y) acc -= static_cast<double>(n);
        if (std::abs(acc) >= options.tolerance * static_cast<double>(n)) {
          row_ok[x] = 0;
          return;
        }
      }
    });
  }
  bool hadamard = true;
  for (char ok : row_ok) hadamard = hadamard && ok;

  MixOptions quick = options;
  quick.stop_at_first_failure = true;
  if (is_uniform_mixing(table, t, quick).verdict != hadamard) {
    throw Error(ErrorKind::kInternalInconsistency,
                "Hadamard test and correlation test disagree at time " +
                    format_time(t));
  }
  return hadamard;
}

bool phase_function_is_bent(const SpectrumTable& table, const Time& t,
                            double tolerance) {
  const GroupSpec& group = table.group;
  const std::int64_t n = group.order();
  const std::int64_t e = group.exponent();
  const std::vector<GroupElement> elems = group.elements();
  if (uses_exact_mode(table, t)) {
    const auto& rt = std::get<RationalTime>(t);
    const std::int64_t level = std::lcm(rt.n(), e);
    for (const auto& a : elems) {
      CycInt acc(level);
      for (std::int64_t gi = 0; gi < n; ++gi) {
        std::int64_t k =
            mulmod(rt.r(), table.integer_lambda[gi], rt.n()) * (level / rt.n()) -
            character_exponent(a, elems[gi], group) * (level / e);
        acc.add_root(k);
      }
      if (as_integer(modulus_squared(acc)) != n) return false;
    }
    return true;
  }
  const std::vector<double> lam = real_lambda(table);
  const double tt = radians(t);
  const double root_n = std::sqrt(static_cast<double>(n));
  for (const auto& a : elems) {
    std::complex<double> acc = 0.0;
    for (std::int64_t gi = 0; gi < n; ++gi) {
      const double chi = 2.0 * std::numbers::pi *
                         static_cast<double>(character_exponent(a, elems[gi], group)) /
                         static_cast<double>(e);
      acc += unit(lam[gi] * tt - chi);
    }
    if (std::abs(std::abs(acc) - root_n) >= tolerance * root_n) return false;
  }
  return true;
}

TwoGroupCounts two_group_criterion(const SpectrumTable& table) {
  if (!is_power_of(table.group.order(), 2)) {
    throw Error(ErrorKind::kNotTwoGroup,
                table.group.to_string() + " is not a 2-group");
  }
  const GcdInvariants inv = gcd_invariants(table);
  if (!is_power_of(inv.d_g, 2)) {
    throw Error(ErrorKind::kInternalInconsistency,
                "D_G = " + std::to_string(inv.d_g) + " is not a power of 2");
  }
  TwoGroupCounts out;
  out.nu = valuation(inv.d_g, 2);
  out.time = RationalTime(1, std::int64_t{1} << (out.nu + 2));
  out.verdict = true;
  const std::int64_t n = table.group.order();
  for (std::int64_t hi = 1; hi < n; ++hi) {
    GroupElement h = table.group.element_at(hi);
    DifferenceMultiset diffs = difference_multiset(table, h);
    std::array<std::int64_t, 3> counts{0, 0, 0};
    for (std::int64_t d : diffs.by_g) {
      if (d == 0) {
        ++counts[2];
        continue;
      }
      std::int64_t v = valuation(d, 2);
      if (v == out.nu) {
        ++counts[0];
      } else if (v == out.nu + 1) {
        ++counts[1];
      } else if (v > out.nu + 1) {
        ++counts[2];
      } else {
        throw Error(ErrorKind::kInternalInconsistency,
                    "difference not divisible by D_G");
      }
    }
    if (counts[1] != counts[2]) out.verdict = false;
    out.per_h.emplace(std::move(h), counts);
  }
  MixOptions quick;
  quick.stop_at_first_failure = true;
  if (is_uniform_mixing(table, out.time, quick).verdict != out.verdict) {
    throw Error(ErrorKind::kInternalInconsistency,
                "2-group counting criterion disagrees with the exact "
                "correlation test");
  }
  return out;
}

bool difference_balanced_check(const SpectrumTable& table,
                               std::optional<std::int64_t> e_prime) {
  const std::int64_t n = table.group.order();
  const std::vector<std::int64_t> primes = prime_factors(n);
  if (primes.size() != 1 || primes[0] == 2) {
    throw Error(ErrorKind::kNotOddPGroup,
                table.group.to_string() + " is not an odd p-group");
  }
  const std::int64_t p = primes[0];
  const GcdInvariants inv = gcd_invariants(table);
  if (!e_prime) {
    if (!is_power_of(inv.d_g, p)) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "D_G = " + std::to_string(inv.d_g) + " is not a power of " +
                      std::to_string(p));
    }
    e_prime = valuation(inv.d_g, p) + 1;
  }
  if (*e_prime < 1) {
    throw Error(ErrorKind::kInvalidArgument, "e' must be >= 1");
  }
  std::int64_t unit_step = 1;
  for (std::int64_t i = 1; i < *e_prime; ++i) unit_step *= p;
  const std::int64_t target = n / p;  // p^{e-1}

  bool balanced = true;
  for (std::int64_t hi = 1; hi < n; ++hi) {
    DifferenceMultiset diffs =
        difference_multiset(table, table.group.element_at(hi));
    std::vector<std::int64_t> residue_count(static_cast<std::size_t>(p), 0);
    for (const auto& [u, c] : diffs.counts) {
      if (u % unit_step != 0) {
        throw Error(ErrorKind::kDivisibilityPreconditionFailed,
                    std::to_string(unit_step) + " does not divide difference " +
                        std::to_string(u));
      }
      residue_count[static_cast<std::size_t>(mod(u / unit_step, p))] += c;
    }
    for (std::int64_t c : residue_count) {
      if (c != target) balanced = false;
    }
  }
  return balanced;
}

ConnectionSet cartesian_product(const ConnectionSet& s1,
                                const ConnectionSet& s2) {
  std::vector<std::int64_t> factors = s1.group().factors();
  factors.insert(factors.end(), s2.group().factors().begin(),
                 s2.group().factors().end());
  GroupSpec group(std::move(factors));
  const std::size_t r1 = s1.group().rank();
  const std::size_t r2 = s2.group().rank();
  std::vector<GroupElement> raw;
  for (const auto& s : s1.elements()) {
    GroupElement g = s;
    g.coords.resize(r1 + r2, 0);
    raw.push_back(std::move(g));
  }
  for (const auto& s : s2.elements()) {
    GroupElement g{std::vector<std::int64_t>(r1, 0)};
    g.coords.insert(g.coords.end(), s.coords.begin(), s.coords.end());
    raw.push_back(std::move(g));
  }
  return validate_connection_set(group, std::move(raw));
}

}  // namespace mixkit
