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

#include "mixkit/timefinder.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

#include "mixkit/cyclo.hpp"
#include "mixkit/error.hpp"
#include "mixkit/parallel.hpp"

namespace mixkit {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigPoly = std::vector<Big>;

void trim(BigPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigPoly to_big(const IntPoly& p) {
  BigPoly out(p.begin(), p.end());
  trim(out);
  return out;
}

IntPoly to_int(const BigPoly& p) {
  IntPoly out;
  out.reserve(p.size());
  for (const Big& c : p) {
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorKind::kOverflow, "polynomial coefficient exceeds 64 bits");
    }
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

BigPoly primitive_part(BigPoly p) {
  trim(p);
  if (p.empty()) return p;
  Big content = 0;
  for (const Big& c : p) content = boost::multiprecision::gcd(content, c);
  if (p.back() < 0) content = -content;
  for (Big& c : p) c /= content;
  return p;
}

// lc(b)^{deg a - deg b + 1} * a mod b, computed step by step.
BigPoly pseudo_remainder(BigPoly a, const BigPoly& b) {
  const Big& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const Big top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (Big& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    trim(a);
  }
  return a;
}

BigPoly poly_gcd(BigPoly a, BigPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    BigPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return primitive_part(std::move(a));
}

// Divides p by the monic polynomial m. Returns false when the remainder
// is nonzero, leaving p untouched.
bool divide_monic(BigPoly& p, const IntPoly& m) {
  if (p.size() < m.size()) return false;
  BigPoly rem = p;
  BigPoly quot(p.size() - m.size() + 1);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Big top = rem[k + m.size() - 1];
    quot[k] = top;
    if (top == 0) continue;
    for (std::size_t i = 0; i < m.size(); ++i) rem[k + i] -= top * m[i];
  }
  trim(rem);
  if (!rem.empty()) return false;
  trim(quot);
  p = std::move(quot);
  return true;
}

bool less_by_value(const RationalTime& a, const RationalTime& b) {
  return static_cast<__int128>(a.r()) * b.n() < static_cast<__int128>(b.r()) * a.n();
}

}  // namespace

DiffPolynomial difference_polynomial(const SpectrumTable& table,
                                     const GroupElement& h) {
  DifferenceMultiset diffs = difference_multiset(table, h);
  DiffPolynomial out;
  out.h = h;
  for (const auto& [u, c] : diffs.counts) {
    out.d_h = std::max(out.d_h, u < 0 ? -u : u);
  }
  out.coeffs.assign(static_cast<std::size_t>(2 * out.d_h + 1), 0);
  for (const auto& [u, c] : diffs.counts) {
    out.coeffs[static_cast<std::size_t>(out.d_h + u)] += c;
  }
  return out;
}

std::vector<DiffPolynomial> difference_polynomials(const SpectrumTable& table,
                                                   unsigned threads) {
  const std::int64_t n = table.group.order();
  std::vector<DiffPolynomial> out(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  parallel_for(n - 1, threads, [&](std::int64_t i) {
    out[i] = difference_polynomial(table, table.group.element_at(i + 1));
  });
  return out;
}

IntPoly gcd_polynomial(const std::vector<IntPoly>& polys) {
  if (polys.empty()) {
    throw Error(ErrorKind::kEmptyInput, "gcd of an empty polynomial list");
  }
  // Fold in input order; identical inputs add nothing.
  std::vector<const IntPoly*> distinct;
  for (const auto& p : polys) {
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](const IntPoly* q) { return *q == p; })) {
      distinct.push_back(&p);
    }
  }
  BigPoly acc = primitive_part(to_big(*distinct.front()));
  for (std::size_t i = 1; i < distinct.size() && acc.size() > 1; ++i) {
    acc = poly_gcd(std::move(acc), to_big(*distinct[i]));
  }
  if (acc.empty()) {
    throw Error(ErrorKind::kZeroPolynomial, "every input polynomial is zero");
  }
  return to_int(acc);
}

IntPoly gcd_polynomial(const std::vector<DiffPolynomial>& polys) {
  std::vector<IntPoly> coeffs;
  coeffs.reserve(polys.size());
  for (const auto& p : polys) coeffs.push_back(p.coeffs);
  return gcd_polynomial(coeffs);
}

bool divides(const IntPoly& b, const IntPoly& a) {
  BigPoly bb = to_big(b);
  if (bb.empty()) throw Error(ErrorKind::kZeroPolynomial, "division by zero polynomial");
  return pseudo_remainder(to_big(a), bb).empty();
}

std::int64_t cyclotomic_order_bound(std::int64_t degree) {
  if (degree < 1) return 0;
  // phi(N) >= sqrt(N/2), so N <= 2 degree^2 covers every candidate. Small
  // degrees come from a table sieved once.
  constexpr std::int64_t kTableDegree = 256;
  static const std::vector<std::int64_t> table = [] {
    const std::int64_t limit = 2 * kTableDegree * kTableDegree + 2;
    std::vector<std::int64_t> phi(static_cast<std::size_t>(limit + 1));
    std::iota(phi.begin(), phi.end(), std::int64_t{0});
    for (std::int64_t p = 2; p <= limit; ++p) {
      if (phi[p] != p) continue;
      for (std::int64_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
    }
    std::vector<std::int64_t> best(kTableDegree + 1, 0);
    for (std::int64_t n = 1; n <= limit; ++n) {
      if (phi[n] <= kTableDegree) best[phi[n]] = std::max(best[phi[n]], n);
    }
    for (std::int64_t d = 1; d <= kTableDegree; ++d) {
      best[d] = std::max(best[d], best[d - 1]);
    }
    return best;
  }();
  if (degree <= kTableDegree) return table[degree];
  const std::int64_t limit = 2 * degree * degree + 2;
  std::int64_t best = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (euler_phi(n) <= degree) best = n;
  }
  return best;
}

CandidateTimes candidate_times(const IntPoly& a, std::int64_t max_n) {
  BigPoly rest = primitive_part(to_big(a));
  if (rest.empty()) throw Error(ErrorKind::kZeroPolynomial, "a(X) is zero");
  CandidateTimes out;
  out.a_poly = to_int(rest);
  out.max_n = max_n;
  out.complete_up_to = static_cast<std::int64_t>(rest.size()) - 1;
  for (std::int64_t n = 1; n <= max_n && rest.size() > 1; ++n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    if (phi.size() > rest.size()) continue;
    std::int64_t mult = 0;
    while (divide_monic(rest, phi)) ++mult;
    if (mult == 0) continue;
    out.orders.push_back(n);
    out.multiplicities.push_back(mult);
    for (std::int64_t r = 1; r < n; ++r) {
      if (std::gcd(r, n) == 1) out.times.emplace_back(r, n);
    }
    // N = 1 contributes t = 0, which is not a mixing time.
  }
  std::sort(out.times.begin(), out.times.end(), less_by_value);
  out.residual = to_int(primitive_part(rest));
  out.non_exhaustive = out.residual.size() > 1;
  return out;
}

CandidateTimes candidate_times(const SpectrumTable& table,
                               std::optional<std::int64_t> max_n,
                               unsigned threads) {
  if (!table.integral) {
    throw Error(ErrorKind::kNotIntegral, "candidate times need an integral graph");
  }
  if (table.group.order() < 2) {
    throw Error(ErrorKind::kEmptyInput, "the trivial group has no shifts");
  }
  const std::vector<DiffPolynomial> polys = difference_polynomials(table, threads);
  const IntPoly a = gcd_polynomial(polys);
  const std::int64_t cap =
      max_n ? *max_n
            : std::max<std::int64_t>(8 * table.group.order(),
                                     cyclotomic_order_bound(
                                         static_cast<std::int64_t>(a.size()) - 1));
  CandidateTimes out = candidate_times(a, cap);
  std::int64_t min_d = polys.front().d_h;
  for (const auto& p : polys) min_d = std::min(min_d, p.d_h);
  out.complete_up_to = 2 * min_d;
  return out;
}

}  // namespace mixkit
