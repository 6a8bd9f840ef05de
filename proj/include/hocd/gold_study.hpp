#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hocd/spectrum.hpp"

namespace hocd {

struct GoldSecondOrder {
  std::uint32_t k = 0;
  std::uint64_t exponent = 0;  // p^k + 1
  std::uint32_t max_count = 0;  // over c != 1, shift pairs and b
  std::uint32_t bound = 0;      // p^gcd(k, n) + 1
  bool attained = false;
  Element argmax_c = 0;
  Witness witness;
  std::map<Element, std::uint32_t> by_c;
};

// Exhaustive second-order search for x^{p^k+1}, 1 <= k < n, using the a_1 = 1
// reduction.
GoldSecondOrder gold_second_order_max(const FieldPtr& field, std::uint32_t k, const SearchOptions& options = {});

struct SubfieldUniformity {
  std::size_t t = 0;
  std::map<Element, std::uint32_t> by_c;  // every c != 1 of the subfield
  std::uint32_t expected = 0;
  bool holds = false;  // every entry equals expected
};

// c-uniformity of x^{p^k+1} of order t for each c != 1 in GF(p^gcd(k, n)),
// compared with gcd(p^k + 1, p^n - 1).
SubfieldUniformity gold_subfield_uniformity(const FieldPtr& field, std::uint32_t k, std::size_t t,
                                            const SearchOptions& options = {});

// sum_{i,j} c_{ij} x^{q^i + q^j} + sum_l c_l x^{p^l} with q = p^h.
struct QuadraticForm {
  struct Term {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    Element coeff = 0;
  };
  struct LinearTerm {
    std::uint32_t l = 0;
    Element coeff = 0;
  };

  std::uint32_t h = 1;
  std::vector<Term> quadratic;
  std::vector<LinearTerm> linear;

  // Univariate coefficients with exponents reduced into [1, p^n - 1].
  std::vector<Element> coefficients(const Field& field) const;
  FieldFunction to_function(const FieldPtr& field) const;
};

// Exponents allowed in a quadratic form with coefficient exponent h, reduced
// into [1, p^n - 1].
std::vector<std::uint64_t> quadratic_exponents(const Field& field, std::uint32_t h);

// Throws NotQuadraticForm unless f has zero constant term and every nonzero
// coefficient sits on an exponent from quadratic_exponents.
void require_quadratic_form(const FieldFunction& f, std::uint32_t h);

struct QuadraticCheck {
  std::uint32_t h = 0;
  std::uint32_t delta = 0;  // max_preimage(f)
  std::vector<SubfieldUniformity> by_order;  // t = 1..t_max, expected = delta
  bool holds = false;
};

// For each t <= t_max and each c != 1 in GF(p^gcd(n, h)), compares the
// t-order c-uniformity of f with max_preimage(f).
QuadraticCheck quadratic_subfield_uniformity(const FieldFunction& f, std::uint32_t h, std::size_t t_max,
                                             const SearchOptions& options = {});

}  // namespace hocd
