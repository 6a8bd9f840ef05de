#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hocd/field.hpp"

namespace hocd {

struct Monomial {
  std::uint64_t exponent = 0;
};

// Coefficients a_0, a_1, ... of sum a_i x^i.
struct UnivariatePoly {
  std::vector<Element> coeffs;
};

struct RawTable {};

using Origin = std::variant<RawTable, Monomial, UnivariatePoly>;

// An (n,n,p)-function stored as its full lookup table.
class FieldFunction {
 public:
  // Validates the table against the field and, for a Monomial origin, that
  // table[x] == x^d everywhere.
  FieldFunction(FieldPtr field, std::vector<Element> table, Origin origin = RawTable{});

  static FieldFunction from_monomial(FieldPtr field, std::uint64_t exponent);
  static FieldFunction from_univariate(FieldPtr field, std::vector<Element> coeffs);
  static FieldFunction identity(FieldPtr field) { return from_monomial(std::move(field), 1); }
  static FieldFunction constant(FieldPtr field, Element value);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::span<const Element> table() const noexcept { return table_; }
  const Origin& origin() const noexcept { return origin_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(table_.size()); }

  Element operator()(Element x) const noexcept { return table_[x]; }

  bool operator==(const FieldFunction& other) const noexcept {
    return *field_ == *other.field_ && table_ == other.table_;
  }

 private:
  FieldPtr field_;
  std::vector<Element> table_;
  Origin origin_;
};

// Pointwise sum and product; both operands must live over the same field.
FieldFunction operator+(const FieldFunction& f, const FieldFunction& g);
FieldFunction operator*(const FieldFunction& f, const FieldFunction& g);

void require_same_field(const FieldFunction& f, const FieldFunction& g);

// Univariate coefficients a_0..a_{q-1} of the unique reduced polynomial
// agreeing with f. O(q^2); limited to q <= kMaxInterpolationOrder.
inline constexpr std::uint32_t kMaxInterpolationOrder = 1u << 13;
std::vector<Element> interpolate(const FieldFunction& f);

// Largest base-p digit sum over exponents with a nonzero coefficient; -1 for
// the zero function. Raw tables are interpolated first.
int algebraic_degree(const FieldFunction& f);

struct PreimageStat {
  std::uint32_t max_count = 0;  // delta = max_b |F^{-1}(b)|
  Element witness = 0;          // smallest b attaining it
};

PreimageStat max_preimage(const FieldFunction& f);
bool is_permutation(const FieldFunction& f);

std::uint32_t digit_sum(std::uint64_t value, std::uint32_t base) noexcept;

// Whitespace-separated decimal indices; '#' starts a comment.
std::vector<std::uint64_t> read_index_file(const std::filesystem::path& path);

// "monomial:d", "poly:<file>" (coefficient indices, degree ascending) or
// "lut:<file>" (p^n output indices in element order).
FieldFunction load_function(const FieldPtr& field, std::string_view descriptor);

}  // namespace hocd
