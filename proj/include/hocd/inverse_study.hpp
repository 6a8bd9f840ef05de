#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hocd/spectrum.hpp"

namespace hocd {

// Second-order behaviour of x^{2^n-2} over GF(2^n) in the three regimes
// c = 1, c outside {0, 1}, and c = 0.
struct InverseCaseReport {
  std::uint32_t n = 0;
  SpectrumReport classical;  // c = 1
  SpectrumReport generic;    // smallest c outside {0, 1} reaching the regime maximum
  SpectrumReport zero;       // c = 0
  std::map<Element, std::uint32_t> generic_by_c;
  bool bound_satisfied = false;              // generic max <= 6
  std::optional<bool> quartic_cross_check;  // unset when skipped for size
  bool attains_six = false;                 // recorded, never asserted

  std::uint32_t classical_max() const noexcept { return classical.max_count; }
  std::uint32_t generic_max() const noexcept { return generic.max_count; }
  std::uint32_t zero_max() const noexcept { return zero.max_count; }
};

struct InverseTableOptions {
  SearchOptions search;
  std::uint32_t quartic_max_n = 6;
};

std::vector<InverseCaseReport> inverse_second_order_table(std::span<const std::uint32_t> degrees,
                                                          const InverseTableOptions& options = {});

InverseCaseReport inverse_second_order_case(std::uint32_t n, const InverseTableOptions& options = {});

// Coefficients of the quartic b x^4 + e3 x^3 + e2 x^2 + e1 x + e0 obtained by
// clearing denominators in the second c-derivative equation of the inverse
// map, constant term first.
std::array<Element, 5> inverse_quartic(const Field& field, Element a1, Element a2, Element c, Element b);

// Solutions of cD^{(2)}_{a1,a2} x^{2^n-2} = b counted structurally: quartic
// roots away from {0, a1, a2, a1+a2} plus the special points that satisfy the
// equation directly; a1 = a2 uses (1+c^2) x^{2^n-2} = b.
std::uint32_t inverse_quartic_count(const Field& field, Element a1, Element a2, Element c, Element b);

// Exhaustive comparison of inverse_quartic_count against the table count for
// a1 = 1 and every nonzero a2, every c and every b.
bool inverse_quartic_agrees(const Field& field);

struct Coincidence {
  Element c = 0;
  std::array<Element, 2> points{};  // special points sharing a value at this c
  bool valid = false;               // c outside {0, 1}
};

struct CoincidenceSet {
  Element a1 = 0;
  Element a2 = 0;
  std::array<Coincidence, 4> values;
};

CoincidenceSet coincidence_multipliers(const Field& field, Element a1, Element a2);

}  // namespace hocd
