#include "hocd/gold_study.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>

namespace hocd {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t q) { return (e - 1) % (q - 1) + 1; }

void require_gold_k(const Field& field, std::uint32_t k) {
  if (k < 1 || k >= field.degree())
    throw Error(ErrorKind::PreconditionViolated,
                "Gold parameter k must satisfy 1 <= k < n (got k = " + std::to_string(k) + ")");
}

std::vector<Element> subfield_multipliers(const Field& field, std::uint32_t d) {
  auto sub = field.subfield(d);
  std::erase(sub, Element{1});
  return sub;
}

SubfieldUniformity subfield_scan(const FieldFunction& f, std::span<const Element> cs, std::size_t t,
                                 std::uint32_t expected, const SearchOptions& options) {
  SubfieldUniformity out;
  out.t = t;
  out.expected = expected;
  out.holds = true;
  for (Element c : cs) {
    const std::uint32_t v = t == 0 ? max_preimage(f).max_count : uniformity(f, t, c, options).max_count;
    out.by_c.emplace(c, v);
    out.holds = out.holds && v == expected;
  }
  return out;
}

}  // namespace

GoldSecondOrder gold_second_order_max(const FieldPtr& field, std::uint32_t k, const SearchOptions& options) {
  require_gold_k(*field, k);
  const std::uint32_t p = field->characteristic();
  GoldSecondOrder out;
  out.k = k;
  out.exponent = ipow(p, k) + 1;
  out.bound = static_cast<std::uint32_t>(ipow(p, std::gcd(k, field->degree())) + 1);

  const auto f = FieldFunction::from_monomial(field, out.exponent);
  SearchOptions search = options;
  search.reduce_power = true;
  for (Element c : field->elements()) {
    if (c == 1) continue;
    const auto r = uniformity(f, 2, c, search);
    out.by_c.emplace(c, r.max_count);
    if (r.max_count > out.max_count || out.by_c.size() == 1) {
      out.max_count = r.max_count;
      out.argmax_c = c;
      if (!r.witnesses.empty()) out.witness = r.witnesses.front();
    }
  }
  out.attained = out.max_count == out.bound;
  return out;
}

SubfieldUniformity gold_subfield_uniformity(const FieldPtr& field, std::uint32_t k, std::size_t t,
                                            const SearchOptions& options) {
  require_gold_k(*field, k);
  const std::uint32_t p = field->characteristic();
  const std::uint64_t d = ipow(p, k) + 1;
  const auto f = FieldFunction::from_monomial(field, d);
  const auto cs = subfield_multipliers(*field, k);
  SearchOptions search = options;
  search.reduce_power = true;
  const auto expected = static_cast<std::uint32_t>(std::gcd(d, std::uint64_t{field->order()} - 1));
  return subfield_scan(f, cs, t, expected, search);
}

std::vector<std::uint64_t> quadratic_exponents(const Field& field, std::uint32_t h) {
  const std::uint32_t n = field.degree();
  const std::uint32_t p = field.characteristic();
  const std::uint64_t q = field.order();
  std::vector<std::uint64_t> out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      out.push_back(reduce_exponent(ipow(p, h * i % n) + ipow(p, h * j % n), q));
  for (std::uint32_t l = 0; l < n; ++l) out.push_back(reduce_exponent(ipow(p, l), q));
  std::ranges::sort(out);
  const auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

std::vector<Element> QuadraticForm::coefficients(const Field& field) const {
  const std::uint32_t n = field.degree();
  const std::uint32_t p = field.characteristic();
  const std::uint64_t q = field.order();
  std::vector<Element> coeffs(q, 0);
  for (const auto& term : quadratic) {
    field.check(term.coeff);
    const std::uint64_t e = reduce_exponent(
        ipow(p, static_cast<std::uint32_t>(std::uint64_t{h} * term.i % n)) +
            ipow(p, static_cast<std::uint32_t>(std::uint64_t{h} * term.j % n)),
        q);
    coeffs[e] = field.add(coeffs[e], term.coeff);
  }
  for (const auto& term : linear) {
    field.check(term.coeff);
    const std::uint64_t e = reduce_exponent(ipow(p, term.l % n), q);
    coeffs[e] = field.add(coeffs[e], term.coeff);
  }
  return coeffs;
}

FieldFunction QuadraticForm::to_function(const FieldPtr& field) const {
  return FieldFunction::from_univariate(field, coefficients(*field));
}

void require_quadratic_form(const FieldFunction& f, std::uint32_t h) {
  if (h == 0) throw Error(ErrorKind::InvalidArgument, "coefficient exponent h must be positive");
  const Field& k = f.field();
  std::vector<Element> coeffs;
  if (const auto* m = std::get_if<Monomial>(&f.origin())) {
    coeffs.assign(k.order(), 0);
    coeffs[m->exponent] = 1;
  } else if (const auto* u = std::get_if<UnivariatePoly>(&f.origin())) {
    coeffs = u->coeffs;
  } else {
    coeffs = interpolate(f);
  }
  const auto allowed = quadratic_exponents(k, h);
  if (!coeffs.empty() && coeffs[0] != 0)
    throw Error(ErrorKind::NotQuadraticForm, "a quadratic form has zero constant term");
  for (std::size_t e = 1; e < coeffs.size(); ++e)
    if (coeffs[e] != 0 && !std::ranges::binary_search(allowed, e))
      throw Error(ErrorKind::NotQuadraticForm, "exponent " + std::to_string(e) + " is not of the form q^i + q^j or p^l");
}

QuadraticCheck quadratic_subfield_uniformity(const FieldFunction& f, std::uint32_t h, std::size_t t_max,
                                             const SearchOptions& options) {
  require_quadratic_form(f, h);
  QuadraticCheck out;
  out.h = h;
  out.delta = max_preimage(f).max_count;
  out.holds = true;
  const auto cs = subfield_multipliers(f.field(), h);
  SearchOptions search = options;
  search.reduce_power = std::holds_alternative<Monomial>(f.origin());
  for (std::size_t t = 1; t <= t_max; ++t) {
    out.by_order.push_back(subfield_scan(f, cs, t, out.delta, search));
    out.holds = out.holds && out.by_order.back().holds;
  }
  return out;
}

}  // namespace hocd
