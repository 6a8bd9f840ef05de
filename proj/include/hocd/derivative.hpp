#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hocd/function.hpp"

namespace hocd {

// Identifies the t-th order c-derivative with shifts a_1..a_t. An empty
// shift list is the 0-th derivative, F itself.
struct DerivativeSpec {
  Element c = 1;
  std::vector<Element> shifts;

  std::size_t order() const noexcept { return shifts.size(); }
};

inline constexpr std::size_t kMaxClosedFormOrder = 20;

// x -> F(x + a) - c F(x)
FieldFunction c_derivative(const FieldFunction& f, Element a, Element c);

// t-fold application of c_derivative, shifts taken in the given order.
FieldFunction higher_c_derivative_recursive(const FieldFunction& f, const DerivativeSpec& spec);

// sum over subsets I of the shifts of (-c)^{t-|I|} F(x + sum_{i in I} a_i).
FieldFunction higher_c_derivative_closed(const FieldFunction& f, const DerivativeSpec& spec);

// Evaluates the inclusion-exclusion form into caller-owned buffers. The
// spectrum search keeps one of these per worker and re-targets it per tuple.
class ClosedFormKernel {
 public:
  explicit ClosedFormKernel(const Field& field) : field_(&field) {}

  // Precomputes subset sums and their (-c)^{t-|I|} coefficients.
  void prepare(Element c, std::span<const Element> shifts);
  void evaluate(std::span<const Element> f, std::span<Element> out) const;

 private:
  const Field* field_;
  std::vector<Element> offsets_;
  std::vector<Element> coeffs_;
};

// Checks F(x + sum a_i) == sum over index subsets J of c^{t-|J|} D^{(|J|)}_{a_J} F(x)
// pointwise, evaluating every sub-derivative recursively.
bool verify_reconstruction(const FieldFunction& f, const DerivativeSpec& spec);

// D_a(F+G) == D_a F + D_a G
bool verify_sum_rule(const FieldFunction& f, const FieldFunction& g, Element a, Element c);

// cD_a(FG)(x) == F(x+a) cD_a G(x) + (F(x+a) - F(x)) c G(x)
bool verify_product_rule(const FieldFunction& f, const FieldFunction& g, Element a, Element c);

}  // namespace hocd
