#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "hocd/derivative.hpp"

namespace hocd {

// Which shift tuples a c = 1 (classical) search skips. Vanishing skips every
// tuple whose classical difference operator is zero for all F (in
// characteristic 2: GF(2)-linearly dependent shifts); AllZero skips only the
// all-zero tuple.
enum class ClassicalExclusion { Vanishing, AllZero };

std::string_view to_string(ClassicalExclusion rule) noexcept;

struct SearchOptions {
  // Fix a_1 = 1 (monomials only); the all-zero tuple is searched separately
  // when it is admissible.
  bool reduce_power = false;
  unsigned threads = 0;  // 0: default_thread_count()
  std::size_t witness_cap = 16;
  ClassicalExclusion classical_exclusion = ClassicalExclusion::Vanishing;
};

struct Witness {
  std::vector<Element> shifts;
  Element b = 0;

  auto operator<=>(const Witness&) const = default;
};

struct SearchDomain {
  bool power_reduction = false;
  std::string_view exclusion = "none";  // "none" | "all-zero" | "vanishing"
  std::uint64_t tuples = 0;             // shift tuples actually evaluated
};

struct SpectrumReport {
  std::size_t t = 0;
  Element c = 0;
  // solution count k -> number of (tuple, b) pairs with exactly k solutions
  std::map<std::uint32_t, std::uint64_t> histogram;
  std::uint32_t max_count = 0;
  std::vector<Witness> witnesses;  // lexicographically smallest first, capped
  SearchDomain domain;
  double elapsed_seconds = 0.0;
};

// HOCD_THREADS when set to a positive integer, else hardware concurrency.
unsigned default_thread_count();

bool linearly_dependent(const Field& field, std::span<const Element> vectors);

// True when sum_I (-1)^{t-|I|} F(x + sum_{i in I} a_i) is zero for every F,
// i.e. the signed subset sums cancel modulo p at every group element.
bool classical_operator_vanishes(const Field& field, std::span<const Element> shifts);

// #{x : cD^{(t)}_{a_1..a_t} F(x) = b}
std::uint32_t count_solutions(const FieldFunction& f, const DerivativeSpec& spec, Element b);

// t-order c-differential uniformity: max over admissible shift tuples and b
// of count_solutions, with the full solution-count histogram.
SpectrumReport uniformity(const FieldFunction& f, std::size_t t, Element c, const SearchOptions& options = {});

std::map<Element, SpectrumReport> uniformity_sweep(const FieldFunction& f, std::size_t t,
                                                   std::span<const Element> c_set,
                                                   const SearchOptions& options = {});

struct MonotonicityCheck {
  bool holds = true;
  // Index 0 is max_preimage(F), the 0-th order value.
  std::vector<std::uint32_t> uniformity_by_order;
};

// Checks delta^{(t)} >= delta^{(t-1)} for 1 <= t <= t_max; c must not be 1.
MonotonicityCheck verify_monotonicity(const FieldFunction& f, std::size_t t_max, Element c,
                                      const SearchOptions& options = {});

}  // namespace hocd
