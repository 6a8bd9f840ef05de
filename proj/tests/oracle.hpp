#pragma once

// Independent reference arithmetic for tests. Nothing here touches the
// library's tables: elements are decoded to digit vectors by hand and
// multiplied schoolbook-style modulo the field's modulus.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> to_digits(std::uint64_t x, std::uint64_t p, std::size_t n) {
  std::vector<std::uint64_t> d(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

inline std::uint64_t from_digits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// x * y in GF(p)[X] / (modulus), modulus monic, constant term first.
inline std::uint64_t mul(std::uint64_t x, std::uint64_t y, std::uint64_t p, const std::vector<std::uint32_t>& modulus) {
  const std::size_t n = modulus.size() - 1;
  auto a = to_digits(x, p, n), b = to_digits(y, p, n);
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t top = 2 * n - 1; top >= n; --top) {
    const std::uint64_t lead = prod[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      auto& slot = prod[top - n + i];
      slot = (slot + p - (lead * modulus[i]) % p) % p;
    }
  }
  prod.resize(n);
  return from_digits(prod, p);
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y, std::uint64_t p, std::size_t n) {
  auto a = to_digits(x, p, n), b = to_digits(y, p, n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (a[i] + b[i]) % p;
  return from_digits(a, p);
}

inline std::uint64_t pow(std::uint64_t x, std::uint64_t e, std::uint64_t p, const std::vector<std::uint32_t>& modulus) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x, p, modulus);
  return r;
}

}  // namespace oracle
