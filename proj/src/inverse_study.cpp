#include "hocd/inverse_study.hpp"

#include <algorithm>
#include <string>

namespace hocd {

namespace {

void require_char2(const Field& field) {
  if (field.characteristic() != 2)
    throw Error(ErrorKind::PreconditionViolated, "inverse-map analysis needs characteristic 2");
}

void require_shifts(const Field& field, Element a1, Element a2) {
  field.check(a1);
  field.check(a2);
  if (a1 == 0 || a2 == 0) throw Error(ErrorKind::PreconditionViolated, "shifts must be nonzero");
}

Element inverse(const Field& k, Element x) { return x ? k.inv(x) : 0; }

// Left side of the second c-derivative equation at x (characteristic 2).
Element second_derivative_at(const Field& k, Element x, Element a1, Element a2, Element c) {
  const Element s = k.add(a1, a2);
  Element v = inverse(k, k.add(x, s));
  v = k.add(v, k.mul(c, inverse(k, k.add(x, a1))));
  v = k.add(v, k.mul(c, inverse(k, k.add(x, a2))));
  return k.add(v, k.mul(k.mul(c, c), inverse(k, x)));
}

}  // namespace

std::array<Element, 5> inverse_quartic(const Field& k, Element a1, Element a2, Element c, Element b) {
  require_char2(k);
  const Element c2 = k.mul(c, c);
  const Element s = k.add(a1, a2);
  const Element a1a2 = k.mul(a1, a2);
  const Element sq1 = k.mul(a1, a1);
  const Element sq2 = k.mul(a2, a2);
  const Element c_c2 = k.add(c, c2);

  std::array<Element, 5> e{};
  e[4] = b;
  e[3] = k.add(1, c2);
  // a2 + c a2 + b a2^2 + a1 + c a1 + b a1^2 + b a1 a2
  e[2] = k.add(k.add(k.mul(k.add(1, c), s), k.mul(b, k.add(sq1, sq2))), k.mul(b, a1a2));
  // a1 a2 + (c + c^2)(a1^2 + a2^2) + c^2 a1 a2 + b a1 a2 (a1 + a2)
  e[1] = k.add(k.add(a1a2, k.mul(c_c2, k.add(sq1, sq2))), k.add(k.mul(c2, a1a2), k.mul(b, k.mul(a1a2, s))));
  e[0] = k.mul(c2, k.mul(a1a2, s));
  return e;
}

std::uint32_t inverse_quartic_count(const Field& k, Element a1, Element a2, Element c, Element b) {
  require_char2(k);
  require_shifts(k, a1, a2);
  k.check(c);
  k.check(b);

  if (a1 == a2) {
    // (1 + c^2) x^{2^n-2} = b
    if (k.add(1, k.mul(c, c)) == 0) return b == 0 ? k.order() : 0;
    return 1;
  }

  const auto e = inverse_quartic(k, a1, a2, c, b);
  const Element s = k.add(a1, a2);
  const std::array<Element, 4> special{0, a1, a2, s};
  std::uint32_t count = 0;
  for (Element x : k.elements()) {
    if (std::ranges::find(special, x) != special.end()) continue;
    Element v = e[4];
    for (int i = 3; i >= 0; --i) v = k.add(k.mul(v, x), e[static_cast<std::size_t>(i)]);
    if (v == 0) ++count;
  }
  for (Element x : special)
    if (second_derivative_at(k, x, a1, a2, c) == b) ++count;
  return count;
}

bool inverse_quartic_agrees(const Field& k) {
  require_char2(k);
  const std::uint32_t q = k.order();
  std::vector<Element> f(q);
  for (Element x : k.elements()) f[x] = inverse(k, x);

  ClosedFormKernel kernel(k);
  std::vector<Element> d(q);
  std::vector<std::uint32_t> counts(q);
  for (Element a2 = 1; a2 < q; ++a2)
    for (Element c : k.elements()) {
      const std::array<Element, 2> shifts{1, a2};
      kernel.prepare(c, shifts);
      kernel.evaluate(f, d);
      std::ranges::fill(counts, 0u);
      for (Element v : d) ++counts[v];
      for (Element b : k.elements())
        if (inverse_quartic_count(k, 1, a2, c, b) != counts[b]) return false;
    }
  return true;
}

CoincidenceSet coincidence_multipliers(const Field& k, Element a1, Element a2) {
  require_char2(k);
  require_shifts(k, a1, a2);
  if (a1 == a2) throw Error(ErrorKind::PreconditionViolated, "coincidence multipliers need a1 != a2");
  const Element s = k.add(a1, a2);
  CoincidenceSet out{a1, a2, {}};
  out.values[0] = {k.div(k.mul(a1, a1), k.mul(s, a2)), {0, a1}};
  out.values[1] = {k.div(k.mul(a2, a2), k.mul(s, a1)), {0, a2}};
  out.values[2] = {k.div(k.mul(a1, s), k.mul(a2, a2)), {s, a1}};
  out.values[3] = {k.div(k.mul(a2, s), k.mul(a1, a1)), {s, a2}};
  for (auto& v : out.values) v.valid = v.c != 0 && v.c != 1;
  return out;
}

InverseCaseReport inverse_second_order_case(std::uint32_t n, const InverseTableOptions& options) {
  if (n < 3) throw Error(ErrorKind::PreconditionViolated, "inverse-map table needs n >= 3");
  if (n >= 32 || (std::uint64_t{1} << n) > kMaxFieldOrder)
    throw Error(ErrorKind::SizeExceeded, "GF(2^" + std::to_string(n) + ") exceeds the supported order");

  const auto field = Field::build(2, n);
  const auto f = FieldFunction::from_monomial(field, (std::uint64_t{1} << n) - 2);
  SearchOptions search = options.search;
  search.reduce_power = true;

  InverseCaseReport report;
  report.n = n;
  for (Element c : field->elements()) {
    auto r = uniformity(f, 2, c, search);
    if (c == 0) {
      report.zero = std::move(r);
    } else if (c == 1) {
      report.classical = std::move(r);
    } else {
      report.generic_by_c.emplace(c, r.max_count);
      if (r.max_count > report.generic.max_count || report.generic.histogram.empty()) report.generic = std::move(r);
    }
  }
  report.bound_satisfied = report.generic.max_count <= 6;
  report.attains_six = report.generic.max_count == 6;
  if (n <= options.quartic_max_n) report.quartic_cross_check = inverse_quartic_agrees(*field);
  return report;
}

std::vector<InverseCaseReport> inverse_second_order_table(std::span<const std::uint32_t> degrees,
                                                          const InverseTableOptions& options) {
  for (std::uint32_t n : degrees)
    if (n >= 32 || (std::uint64_t{1} << n) > kMaxFieldOrder)
      throw Error(ErrorKind::SizeExceeded, "GF(2^" + std::to_string(n) + ") exceeds the supported order");
  std::vector<InverseCaseReport> out;
  out.reserve(degrees.size());
  for (std::uint32_t n : degrees) out.push_back(inverse_second_order_case(n, options));
  return out;
}

}  // namespace hocd
