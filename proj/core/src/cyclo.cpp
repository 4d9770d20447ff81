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

#include "mixkit/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>

#include "mixkit/error.hpp"

namespace mixkit {

namespace {

[[noreturn]] void overflow() {
  throw Error(ErrorKind::kOverflow, "cyclotomic coefficient overflow");
}

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) overflow();
  return out;
}

inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) overflow();
  return out;
}

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) overflow();
  return out;
}

inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void check_level(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "cyclotomic level must be >= 1, got " + std::to_string(n));
  }
}

void same_level(const CycInt& a, const CycInt& b) {
  if (a.level() != b.level()) {
    throw Error(ErrorKind::kLevelMismatch,
                "cyclotomic levels differ: " + std::to_string(a.level()) +
                    " vs " + std::to_string(b.level()));
  }
}

// Divides num by the monic polynomial den in place; returns the quotient.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t>& num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    std::int64_t c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[k - dd + j] = sub_checked(num[k - dd + j], mul_checked(c, den[j]));
    }
  }
  num.resize(dd);
  return quot;
}

class PhiCache {
 public:
  const std::vector<std::int64_t>& get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(n);
      if (it != cache_.end()) return *it->second;
    }
    auto poly = std::make_unique<std::vector<std::int64_t>>(compute(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(n, std::move(poly));
    return *it->second;
  }

 private:
  std::vector<std::int64_t> compute(std::int64_t n) {
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      std::vector<std::int64_t> rem = num;
      std::vector<std::int64_t> q = divide_monic(rem, get(d));
      num = std::move(q);
    }
    return num;
  }

  std::shared_mutex mutex_;
  std::map<std::int64_t, std::unique_ptr<std::vector<std::int64_t>>> cache_;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  check_level(n);
  return phi_cache().get(n);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CycInt::CycInt(std::int64_t level) : level_(level) {
  check_level(level);
  coeffs_.assign(static_cast<std::size_t>(level), 0);
}

CycInt::CycInt(std::int64_t level, std::vector<std::int64_t> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  check_level(level);
  if (static_cast<std::int64_t>(coeffs_.size()) != level) {
    throw Error(ErrorKind::kInvalidArgument,
                "coefficient vector length must equal the level");
  }
}

CycInt CycInt::integer(std::int64_t level, std::int64_t value) {
  CycInt z(level);
  z.coeffs_[0] = value;
  return z;
}

void CycInt::add_root(std::int64_t k, std::int64_t multiplicity) {
  auto& c = coeffs_[static_cast<std::size_t>(mod(k, level_))];
  c = add_checked(c, multiplicity);
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  same_level(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = add_checked(coeffs_[i], rhs.coeffs_[i]);
  }
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  same_level(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = sub_checked(coeffs_[i], rhs.coeffs_[i]);
  }
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  same_level(*this, rhs);
  const auto n = static_cast<std::size_t>(level_);
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out[k] = add_checked(out[k], mul_checked(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out(level_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = sub_checked(0, coeffs_[i]);
  }
  return out;
}

CycInt CycInt::conj() const {
  CycInt out(level_);
  const auto n = coeffs_.size();
  for (std::size_t k = 0; k < n; ++k) {
    out.coeffs_[k == 0 ? 0 : n - k] = coeffs_[k];
  }
  return out;
}

CycInt CycInt::lift(std::int64_t new_level) const {
  check_level(new_level);
  if (new_level % level_ != 0) {
    throw Error(ErrorKind::kLevelMismatch,
                "cannot lift level " + std::to_string(level_) + " to " +
                    std::to_string(new_level));
  }
  const std::int64_t step = new_level / level_;
  CycInt out(new_level);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out.coeffs_[k * static_cast<std::size_t>(step)] = coeffs_[k];
  }
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
  same_level(a, b);
  return is_zero(a - b);
}

CycInt root_power(std::int64_t n, std::int64_t k) {
  CycInt z(n);
  z.add_root(k, 1);
  return z;
}

std::vector<std::int64_t> reduce(const CycInt& z) {
  std::vector<std::int64_t> rem = z.coeffs();
  divide_monic(rem, cyclotomic_polynomial(z.level()));
  return rem;
}

bool is_zero(const CycInt& z) {
  const auto& c = z.coeffs();
  if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) {
    return true;
  }
  std::vector<std::int64_t> rem = reduce(z);
  return std::all_of(rem.begin(), rem.end(),
                     [](std::int64_t v) { return v == 0; });
}

std::optional<std::int64_t> as_integer(const CycInt& z) {
  std::vector<std::int64_t> rem = reduce(z);
  for (std::size_t i = 1; i < rem.size(); ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return rem.empty() ? 0 : rem[0];
}

CycInt modulus_squared(const CycInt& z) { return z * z.conj(); }

std::complex<double> to_complex(const CycInt& z) {
  const double n = static_cast<double>(z.level());
  double re = 0.0, im = 0.0;
  const auto& c = z.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    re += static_cast<double>(c[k]) * std::cos(angle);
    im += static_cast<double>(c[k]) * std::sin(angle);
  }
  return {re, im};
}

}  // namespace mixkit
