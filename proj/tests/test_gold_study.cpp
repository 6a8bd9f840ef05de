#include "doctest.h"

#include <numeric>
#include <algorithm>
#include <random>

#include "hocd/gold_study.hpp"
#include "oracle.hpp"

using namespace hocd;

namespace {

// Second-order maximum over c != 1 computed with the reference arithmetic
// only: F(x+a1+a2) - c F(x+a1) - c F(x+a2) + c^2 F(x).
std::uint32_t naive_gold_max(std::uint32_t p, std::uint32_t n, std::uint64_t d, const std::vector<std::uint32_t>& mod) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  // Tables filled from the reference arithmetic, for speed.
  std::vector<std::uint64_t> add_t(q * q), mul_t(q * q);
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      add_t[x * q + y] = oracle::add(x, y, p, n);
      mul_t[x * q + y] = oracle::mul(x, y, p, mod);
    }
  auto add = [&](std::uint64_t x, std::uint64_t y) { return add_t[x * q + y]; };
  auto mul = [&](std::uint64_t x, std::uint64_t y) { return mul_t[x * q + y]; };
  auto neg = [&](std::uint64_t x) { return mul(x, p - 1); };
  std::vector<std::uint64_t> f(q);
  for (std::uint64_t x = 0; x < q; ++x) f[x] = oracle::pow(x, d, p, mod);

  std::uint32_t best = 0;
  std::vector<std::uint32_t> counts(q);
  for (std::uint64_t c = 0; c < q; ++c) {
    if (c == 1) continue;
    const std::uint64_t nc = neg(c), c2 = mul(c, c);
    for (std::uint64_t a1 = 0; a1 < q; ++a1)
      for (std::uint64_t a2 = 0; a2 < q; ++a2) {
        std::ranges::fill(counts, 0u);
        for (std::uint64_t x = 0; x < q; ++x) {
          std::uint64_t v = f[add(add(x, a1), a2)];
          v = add(v, mul(nc, f[add(x, a1)]));
          v = add(v, mul(nc, f[add(x, a2)]));
          v = add(v, mul(c2, f[x]));
          best = std::max(best, ++counts[v]);
        }
      }
  }
  return best;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("Gold second-order maximum against a naive search") {
  struct Case {
    std::uint32_t p, n, k, bound;
  };
  for (const auto& [p, n, k, bound] : {Case{3, 2, 1, 4}, Case{2, 4, 2, 5}, Case{5, 2, 1, 6}, Case{2, 3, 1, 3}}) {
    auto field = Field::build(p, n);
    const auto r = gold_second_order_max(field, k);
    CHECK(r.bound == bound);
    CHECK(r.max_count == naive_gold_max(p, n, r.exponent, field->modulus()));
    CHECK(r.max_count <= r.bound);
    CHECK(r.attained == (r.max_count == r.bound));
    CHECK(r.by_c.size() == field->order() - 1);
    CHECK_FALSE(r.by_c.contains(1));
    const auto f = FieldFunction::from_monomial(field, r.exponent);
    CHECK(count_solutions(f, {r.argmax_c, r.witness.shifts}, r.witness.b) == r.max_count);
  }
}

TEST_CASE("Gold bound on GF(81)") {
  auto field = Field::build(3, 4);
  const auto r1 = gold_second_order_max(field, 1);
  CHECK(r1.bound == 4);
  CHECK(r1.attained);
  const auto r2 = gold_second_order_max(field, 2);
  CHECK(r2.bound == 10);
  CHECK(r2.attained);
}

TEST_CASE("antipodal shifts reduce to a power equation") {
  // a2 = -a1: (1 - c)^2 x^{p^k+1} = b up to translation.
  for (auto [p, n, k] : {std::tuple{3u, 4u, 1u}, {3u, 4u, 2u}, {2u, 4u, 1u}, {5u, 2u, 1u}}) {
    auto field = Field::build(p, n);
    std::uint64_t d = 1;
    for (std::uint32_t i = 0; i < k; ++i) d *= p;
    ++d;
    const auto f = FieldFunction::from_monomial(field, d);
    const auto expected = static_cast<std::uint32_t>(std::gcd(d, std::uint64_t{field->order()} - 1));
    std::mt19937_64 rng(p * 100 + n * 10 + k);
    std::uniform_int_distribution<Element> nonzero(1, field->order() - 1);
    for (int rep = 0; rep < 10; ++rep) {
      const Element a1 = nonzero(rng);
      Element c = nonzero(rng);
      if (c == 1) c = 0;
      const auto d2 = higher_c_derivative_closed(f, {c, {a1, field->neg(a1)}});
      std::vector<std::uint32_t> counts(field->order(), 0);
      for (Element v : d2.table()) ++counts[v];
      CHECK(*std::ranges::max_element(counts) == expected);
    }
  }
}

TEST_CASE("Gold subfield uniformity") {
  auto k9 = Field::build(3, 2);
  for (std::size_t t = 0; t <= 3; ++t) {
    const auto r = gold_subfield_uniformity(k9, 1, t);
    CHECK(r.expected == 4);
    CHECK(r.holds);
    CHECK(r.by_c.size() == 2);  // {0, 2}
  }
  auto k81 = Field::build(3, 4);
  for (std::size_t t = 1; t <= 2; ++t) {
    const auto r = gold_subfield_uniformity(k81, 2, t);
    CHECK(r.expected == 10);
    CHECK(r.by_c.size() == 8);
    CHECK(r.holds);
  }
  CHECK(kind_of([&] { gold_subfield_uniformity(k9, 2, 1); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([&] { gold_second_order_max(k9, 0); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("quadratic exponent sets") {
  auto k16 = Field::build(2, 4);
  CHECK(quadratic_exponents(*k16, 1) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
  // q = 4: 1 + 1, 1 + 4, 4 + 4 and the Frobenius powers.
  CHECK(quadratic_exponents(*k16, 2) == std::vector<std::uint64_t>{1, 2, 4, 5, 8});

  QuadraticForm form;
  form.h = 1;
  form.quadratic = {{0, 1, 1}, {0, 2, 1}};
  const auto f = form.to_function(k16);
  const auto ref = FieldFunction::from_monomial(k16, 3) + FieldFunction::from_monomial(k16, 5);
  CHECK(f == ref);
  CHECK_NOTHROW(require_quadratic_form(f, 1));
  CHECK_NOTHROW(require_quadratic_form(FieldFunction(k16, std::vector<Element>(f.table().begin(), f.table().end())), 1));
  CHECK(kind_of([&] { require_quadratic_form(f, 2); }) == ErrorKind::NotQuadraticForm);
  CHECK(kind_of([&] { require_quadratic_form(FieldFunction::from_monomial(k16, 7), 1); }) ==
        ErrorKind::NotQuadraticForm);
  CHECK(kind_of([&] { require_quadratic_form(FieldFunction::from_univariate(k16, {1, 0, 0, 1}), 1); }) ==
        ErrorKind::NotQuadraticForm);
}

TEST_CASE("quadratic forms on small fields") {
  auto k16 = Field::build(2, 4);
  QuadraticForm form;
  form.quadratic = {{0, 1, 1}, {0, 2, 1}};
  const auto f = form.to_function(k16);
  std::vector<std::uint32_t> hist(16, 0);
  for (Element v : f.table()) ++hist[v];
  const auto delta = *std::ranges::max_element(hist);

  const auto r = quadratic_subfield_uniformity(f, 1, 2);
  CHECK(r.delta == delta);
  CHECK(r.holds);
  REQUIRE(r.by_order.size() == 2);
  CHECK(r.by_order[0].by_c == r.by_order[1].by_c);

  // Gold monomial as a quadratic form with h = k.
  auto k81 = Field::build(3, 4);
  const auto gold = quadratic_subfield_uniformity(FieldFunction::from_monomial(k81, 10), 2, 2);
  CHECK(gold.delta == 10);
  CHECK(gold.holds);

  std::mt19937_64 rng(7);
  for (auto [field, h] : {std::pair{k16, 2u}, {Field::build(3, 4), 2u}, {Field::build(3, 2), 1u}}) {
    std::uniform_int_distribution<Element> pick(0, field->order() - 1);
    std::uniform_int_distribution<std::uint32_t> idx(0, field->degree() - 1);
    for (int rep = 0; rep < 3; ++rep) {
      QuadraticForm g;
      g.h = h;
      for (int term = 0; term < 3; ++term) g.quadratic.push_back({idx(rng), idx(rng), pick(rng)});
      g.linear.push_back({idx(rng), pick(rng)});
      const auto check = quadratic_subfield_uniformity(g.to_function(field), h, 2);
      CHECK(check.holds);
    }
  }
}
