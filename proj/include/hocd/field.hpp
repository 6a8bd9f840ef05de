#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string_view>
#include <vector>

#include "hocd/errors.hpp"

namespace hocd {

// An element of GF(p^n) is its canonical index: the base-p digits of the
// index are the coefficients of the polynomial representative, digit i being
// the coefficient of x^i. Index 0 is zero and index 1 is one.
using Element = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

// GF(p^n) with a fixed monic irreducible modulus and discrete-log tables.
// Immutable after construction; share it freely between threads.
class Field {
 public:
  // Builds GF(p^n). Without a modulus the lexicographically smallest monic
  // irreducible polynomial of degree n is used, comparing coefficient lists
  // constant term first.
  static std::shared_ptr<const Field> build(std::uint32_t p, std::uint32_t n,
                                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return order_; }
  // Coefficients of the modulus, constant term first, length n + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element generator() const noexcept { return generator_; }

  bool contains(Element x) const noexcept { return x < order_; }
  void check(Element x) const;

  Element add(Element x, Element y) const noexcept {
    if (p_ == 2) return x ^ y;
    return add_odd(x, y);
  }
  Element neg(Element x) const noexcept {
    if (p_ == 2) return x;
    return neg_odd(x);
  }
  Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

  Element mul(Element x, Element y) const noexcept {
    if (x == 0 || y == 0) return 0;
    return antilog_[log_[x] + log_[y]];
  }
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  // pow(0, 0) = 1; negative exponents invert first.
  Element pow(Element x, std::int64_t e) const;

  // Discrete log base generator(); x must be nonzero.
  std::uint32_t log(Element x) const noexcept { return log_[x]; }
  // generator()^i for 0 <= i < 2 (order - 1).
  Element antilog(std::uint32_t i) const noexcept { return antilog_[i]; }

  std::vector<std::uint32_t> digits(Element x) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  // Indices 0..order-1 ascending; the iteration order of every search.
  auto elements() const noexcept { return std::views::iota(Element{0}, order_); }

  // Elements fixed by x -> x^(p^d), i.e. the subfield GF(p^gcd(d, n)).
  std::vector<Element> subfield(std::uint32_t d) const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

  Element add_odd(Element x, Element y) const noexcept;
  Element neg_odd(Element x) const noexcept;

  void build_addition_tables();
  void build_log_tables();

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  Element generator_ = 0;

  // Odd characteristic: digits are grouped into chunks of radix chunk_radix_
  // with chunk-level addition and negation tables.
  std::uint32_t chunk_radix_ = 0;
  std::uint32_t chunk_count_ = 0;
  std::vector<std::uint16_t> chunk_add_;
  std::vector<std::uint16_t> chunk_neg_;

  std::vector<std::uint32_t> log_;
  std::vector<Element> antilog_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t value) noexcept;

// Polynomials over GF(p) as coefficient vectors, constant term first.
namespace gfp {

std::vector<std::uint32_t> mul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                   std::span<const std::uint32_t> modulus, std::uint32_t p);
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t n);

}  // namespace gfp

// Parses "1,1,0,1" into {1, 1, 0, 1}.
std::vector<std::uint32_t> parse_coefficients(std::string_view text);

}  // namespace hocd
