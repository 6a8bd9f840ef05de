#include "hocd/function.hpp"

#include <algorithm>
#include <string>

namespace hocd {

FieldFunction::FieldFunction(FieldPtr field, std::vector<Element> table, Origin origin)
    : field_(std::move(field)), table_(std::move(table)), origin_(std::move(origin)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "function without a field");
  if (table_.size() != field_->order())
    throw Error(ErrorKind::InvalidArgument, "table length " + std::to_string(table_.size()) +
                                                " does not match field order " + std::to_string(field_->order()));
  for (Element v : table_) field_->check(v);
  if (const auto* m = std::get_if<Monomial>(&origin_)) {
    for (Element x : field_->elements())
      if (table_[x] != field_->pow(x, static_cast<std::int64_t>(m->exponent)))
        throw Error(ErrorKind::InvalidArgument, "table disagrees with monomial x^" + std::to_string(m->exponent));
  }
}

FieldFunction FieldFunction::from_monomial(FieldPtr field, std::uint64_t exponent) {
  if (exponent >= field->order())
    throw Error(ErrorKind::ExponentOutOfRange,
                "exponent " + std::to_string(exponent) + " outside [0, " + std::to_string(field->order() - 1) + "]");
  std::vector<Element> table(field->order());
  for (Element x : field->elements()) table[x] = field->pow(x, static_cast<std::int64_t>(exponent));
  return FieldFunction(std::move(field), std::move(table), Monomial{exponent});
}

FieldFunction FieldFunction::from_univariate(FieldPtr field, std::vector<Element> coeffs) {
  if (coeffs.size() > field->order())
    throw Error(ErrorKind::TooManyCoefficients,
                std::to_string(coeffs.size()) + " coefficients exceed field order " + std::to_string(field->order()));
  for (Element c : coeffs) field->check(c);
  std::vector<Element> table(field->order(), 0);
  for (Element x : field->elements()) {
    Element acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = field->add(field->mul(acc, x), coeffs[i]);
    table[x] = acc;
  }
  return FieldFunction(std::move(field), std::move(table), UnivariatePoly{std::move(coeffs)});
}

FieldFunction FieldFunction::constant(FieldPtr field, Element value) {
  field->check(value);
  return from_univariate(field, {value});
}

void require_same_field(const FieldFunction& f, const FieldFunction& g) {
  if (!(f.field() == g.field())) throw Error(ErrorKind::FieldMismatch, "functions live over different fields");
}

FieldFunction operator+(const FieldFunction& f, const FieldFunction& g) {
  require_same_field(f, g);
  const Field& k = f.field();
  std::vector<Element> out(k.order());
  for (Element x : k.elements()) out[x] = k.add(f(x), g(x));
  return FieldFunction(f.field_ptr(), std::move(out));
}

FieldFunction operator*(const FieldFunction& f, const FieldFunction& g) {
  require_same_field(f, g);
  const Field& k = f.field();
  std::vector<Element> out(k.order());
  for (Element x : k.elements()) out[x] = k.mul(f(x), g(x));
  return FieldFunction(f.field_ptr(), std::move(out));
}

std::vector<Element> interpolate(const FieldFunction& f) {
  const Field& k = f.field();
  const std::uint32_t q = k.order();
  if (q > kMaxInterpolationOrder)
    throw Error(ErrorKind::NoSymbolicForm, "interpolation limited to fields of order <= " +
                                               std::to_string(kMaxInterpolationOrder));
  const std::uint32_t group = q - 1;
  std::vector<Element> coeffs(q, 0);
  coeffs[0] = f(0);
  // a_i = -sum_{x != 0} F(x) x^{q-1-i} for 1 <= i <= q-1, then a_{q-1} -= F(0).
  for (std::uint32_t i = 1; i < q; ++i) {
    const std::uint64_t e = (group - i) % group;
    Element acc = 0;
    for (std::uint32_t j = 0; j < group; ++j) {
      const Element x = k.antilog(j);
      const Element xe = k.antilog(static_cast<std::uint32_t>(j * e % group));
      acc = k.add(acc, k.mul(f(x), xe));
    }
    coeffs[i] = k.neg(acc);
  }
  coeffs[q - 1] = k.sub(coeffs[q - 1], f(0));
  return coeffs;
}

std::uint32_t digit_sum(std::uint64_t value, std::uint32_t base) noexcept {
  std::uint32_t s = 0;
  for (; value; value /= base) s += static_cast<std::uint32_t>(value % base);
  return s;
}

int algebraic_degree(const FieldFunction& f) {
  const std::uint32_t p = f.field().characteristic();
  auto from_coeffs = [p](std::span<const Element> coeffs) {
    int best = -1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) best = std::max(best, static_cast<int>(digit_sum(i, p)));
    return best;
  };
  if (const auto* m = std::get_if<Monomial>(&f.origin())) return static_cast<int>(digit_sum(m->exponent, p));
  if (const auto* u = std::get_if<UnivariatePoly>(&f.origin())) return from_coeffs(u->coeffs);
  return from_coeffs(interpolate(f));
}

PreimageStat max_preimage(const FieldFunction& f) {
  std::vector<std::uint32_t> counts(f.size(), 0);
  for (Element v : f.table()) ++counts[v];
  const auto it = std::ranges::max_element(counts);
  return {*it, static_cast<Element>(it - counts.begin())};
}

bool is_permutation(const FieldFunction& f) { return max_preimage(f).max_count == 1; }

}  // namespace hocd
