#include "hocd/derivative.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace hocd {

namespace {

void check_spec(const Field& k, const DerivativeSpec& spec) {
  k.check(spec.c);
  for (Element a : spec.shifts) k.check(a);
}

void c_derivative_into(const Field& k, std::span<const Element> in, Element a, Element c, std::span<Element> out) {
  for (Element x : k.elements()) out[x] = k.sub(in[k.add(x, a)], k.mul(c, in[x]));
}

}  // namespace

FieldFunction c_derivative(const FieldFunction& f, Element a, Element c) {
  const Field& k = f.field();
  k.check(a);
  k.check(c);
  std::vector<Element> out(k.order());
  c_derivative_into(k, f.table(), a, c, out);
  return FieldFunction(f.field_ptr(), std::move(out));
}

FieldFunction higher_c_derivative_recursive(const FieldFunction& f, const DerivativeSpec& spec) {
  const Field& k = f.field();
  check_spec(k, spec);
  if (spec.shifts.empty()) return f;
  std::vector<Element> cur(f.table().begin(), f.table().end());
  std::vector<Element> next(k.order());
  for (Element a : spec.shifts) {
    c_derivative_into(k, cur, a, spec.c, next);
    cur.swap(next);
  }
  return FieldFunction(f.field_ptr(), std::move(cur));
}

void ClosedFormKernel::prepare(Element c, std::span<const Element> shifts) {
  if (shifts.size() > kMaxClosedFormOrder)
    throw Error(ErrorKind::OrderTooHigh, "closed form limited to order " + std::to_string(kMaxClosedFormOrder));
  const Field& k = *field_;
  const std::size_t t = shifts.size();
  const std::size_t subsets = std::size_t{1} << t;
  const Element minus_c = k.neg(c);

  // Powers (-c)^0..(-c)^t.
  std::vector<Element> powers(t + 1, 1);
  for (std::size_t i = 1; i <= t; ++i) powers[i] = k.mul(powers[i - 1], minus_c);

  offsets_.clear();
  coeffs_.clear();
  std::vector<Element> sums(subsets, 0);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = k.add(sums[mask & (mask - 1)], shifts[low]);
  }
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const Element coeff = powers[t - static_cast<std::size_t>(std::popcount(mask))];
    if (coeff == 0) continue;
    offsets_.push_back(sums[mask]);
    coeffs_.push_back(coeff);
  }
}

void ClosedFormKernel::evaluate(std::span<const Element> f, std::span<Element> out) const {
  const Field& k = *field_;
  std::fill(out.begin(), out.end(), Element{0});
  for (std::size_t s = 0; s < offsets_.size(); ++s) {
    const Element off = offsets_[s];
    const Element coeff = coeffs_[s];
    if (k.characteristic() == 2) {
      if (coeff == 1) {
        for (Element x : k.elements()) out[x] ^= f[x ^ off];
      } else {
        for (Element x : k.elements()) out[x] ^= k.mul(coeff, f[x ^ off]);
      }
    } else {
      for (Element x : k.elements()) out[x] = k.add(out[x], k.mul(coeff, f[k.add(x, off)]));
    }
  }
}

FieldFunction higher_c_derivative_closed(const FieldFunction& f, const DerivativeSpec& spec) {
  const Field& k = f.field();
  check_spec(k, spec);
  ClosedFormKernel kernel(k);
  kernel.prepare(spec.c, spec.shifts);
  std::vector<Element> out(k.order());
  kernel.evaluate(f.table(), out);
  return FieldFunction(f.field_ptr(), std::move(out));
}

bool verify_reconstruction(const FieldFunction& f, const DerivativeSpec& spec) {
  const Field& k = f.field();
  check_spec(k, spec);
  const std::size_t t = spec.order();
  if (t > kMaxClosedFormOrder)
    throw Error(ErrorKind::OrderTooHigh, "reconstruction limited to order " + std::to_string(kMaxClosedFormOrder));

  Element total_shift = 0;
  for (Element a : spec.shifts) total_shift = k.add(total_shift, a);

  std::vector<Element> rhs(k.order(), 0);
  std::vector<Element> cpow(t + 1, 1);
  for (std::size_t i = 1; i <= t; ++i) cpow[i] = k.mul(cpow[i - 1], spec.c);

  // Index subsets j_1 < ... < j_i, each contributing c^{t-i} D^{(i)}.
  for (std::size_t mask = 0; mask < (std::size_t{1} << t); ++mask) {
    DerivativeSpec sub{spec.c, {}};
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1) sub.shifts.push_back(spec.shifts[i]);
    const auto d = higher_c_derivative_recursive(f, sub);
    const Element w = cpow[t - sub.order()];
    for (Element x : k.elements()) rhs[x] = k.add(rhs[x], k.mul(w, d(x)));
  }
  for (Element x : k.elements())
    if (f(k.add(x, total_shift)) != rhs[x]) return false;
  return true;
}

bool verify_sum_rule(const FieldFunction& f, const FieldFunction& g, Element a, Element c) {
  require_same_field(f, g);
  const auto lhs = c_derivative(f + g, a, c);
  const auto rhs = c_derivative(f, a, c) + c_derivative(g, a, c);
  return lhs.table().size() == rhs.table().size() &&
         std::equal(lhs.table().begin(), lhs.table().end(), rhs.table().begin());
}

bool verify_product_rule(const FieldFunction& f, const FieldFunction& g, Element a, Element c) {
  require_same_field(f, g);
  const Field& k = f.field();
  const auto lhs = c_derivative(f * g, a, c);
  // The F-side factor is the classical derivative F(x+a) - F(x).
  const auto df = c_derivative(f, a, 1);
  const auto dg = c_derivative(g, a, c);
  for (Element x : k.elements()) {
    const Element rhs = k.add(k.mul(f(k.add(x, a)), dg(x)), k.mul(k.mul(df(x), c), g(x)));
    if (lhs(x) != rhs) return false;
  }
  return true;
}

}  // namespace hocd
