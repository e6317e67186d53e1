// Copyright 2026 The blocktool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

// Small integer helpers shared by every module.
namespace blocktool::nt {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest e with p^e | n (n != 0).
inline int vp(std::int64_t n, std::int64_t p) {
  int e = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

/// p-part and p'-part: n = p_part(n) * p_prime_part(n).
inline std::int64_t p_part(std::int64_t n, std::int64_t p) {
  std::int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}
inline std::int64_t p_prime_part(std::int64_t n, std::int64_t p) { return n / p_part(n, p); }

inline std::int64_t totient(std::int64_t n) {
  std::int64_t r = n;
  for (auto q : prime_divisors(n)) r = r / q * (q - 1);
  return r;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  __int128 r = 1, x = mod(b, m);
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b).
inline std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  auto [g, x, y] = ext_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) throw std::domain_error("inv_mod: not invertible");
  return mod(x, m);
}

/// Least k >= 1 with a^k = 1 mod m (gcd(a, m) = 1). Returns 1 for m = 1.
inline std::int64_t mult_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  std::int64_t k = 1, x = mod(a, m);
  while (x != 1) {
    x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod(a, m) % m);
    ++k;
  }
  return k;
}

/// Solves t = a mod m, t = b mod n for coprime m, n; result in [0, m*n).
inline std::int64_t crt(std::int64_t a, std::int64_t m, std::int64_t b, std::int64_t n) {
  if (n == 1) return mod(a, m);
  if (m == 1) return mod(b, n);
  std::int64_t k = mod(mod(b - a, n) * inv_mod(m, n), n);
  return mod(a + m * k, m * n);
}

}  // namespace blocktool::nt
