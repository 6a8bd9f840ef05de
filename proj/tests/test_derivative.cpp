#include "doctest.h"

#include <algorithm>
#include <random>

#include "hocd/derivative.hpp"
#include "oracle.hpp"

using namespace hocd;

namespace {

FieldFunction random_function(const FieldPtr& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Element> pick(0, k->order() - 1);
  std::vector<Element> t(k->order());
  for (auto& v : t) v = pick(rng);
  return FieldFunction(k, std::move(t));
}

FieldFunction scaled(const FieldFunction& f, Element s) {
  const Field& k = f.field();
  std::vector<Element> t(k.order());
  for (Element x : k.elements()) t[x] = k.mul(s, f(x));
  return FieldFunction(f.field_ptr(), std::move(t));
}

}  // namespace

TEST_CASE("first c-derivative: zero shift and c = 1") {
  std::mt19937_64 rng(1);
  auto k = Field::build(3, 3);
  auto f = random_function(k, rng);
  for (Element c : k->elements()) {
    CHECK(c_derivative(f, 0, c) == scaled(f, k->sub(1, c)));
  }
  for (Element a : k->elements()) {
    auto d = c_derivative(f, a, 1);
    for (Element x : k->elements()) CHECK(d(x) == k->sub(f(k->add(x, a)), f(x)));
  }
}

TEST_CASE("first c-derivative of x^3 on GF(8), entry by entry") {
  auto k = Field::build(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
  auto f = FieldFunction::from_monomial(k, 3);
  auto d = c_derivative(f, 1, 2);
  const auto& mod = k->modulus();
  for (std::uint64_t x = 0; x < 8; ++x) {
    const std::uint64_t expected = oracle::pow(x ^ 1, 3, 2, mod) ^ oracle::mul(2, oracle::pow(x, 3, 2, mod), 2, mod);
    CHECK(d(static_cast<Element>(x)) == expected);
  }
}

TEST_CASE("second c-derivative matches the four-term expansion") {
  std::mt19937_64 rng(2);
  for (auto k : {Field::build(2, 4), Field::build(3, 2), Field::build(5, 2)}) {
    auto f = random_function(k, rng);
    std::uniform_int_distribution<Element> pick(0, k->order() - 1);
    for (int rep = 0; rep < 50; ++rep) {
      const Element c = pick(rng), a1 = pick(rng), a2 = pick(rng);
      auto d = higher_c_derivative_recursive(f, {c, {a1, a2}});
      for (Element x : k->elements()) {
        Element e = f(k->add(x, k->add(a1, a2)));
        e = k->sub(e, k->mul(c, f(k->add(x, a2))));
        e = k->sub(e, k->mul(c, f(k->add(x, a1))));
        e = k->add(e, k->mul(k->mul(c, c), f(x)));
        REQUIRE(d(x) == e);
      }
    }
  }
}

TEST_CASE("zero shifts scale by (1-c)^t") {
  std::mt19937_64 rng(3);
  auto k = Field::build(2, 4);
  auto f = random_function(k, rng);
  for (Element c : k->elements())
    for (std::size_t t = 0; t <= 4; ++t) {
      DerivativeSpec spec{c, std::vector<Element>(t, 0)};
      const Element s = k->pow(k->sub(1, c), static_cast<std::int64_t>(t));
      CHECK(higher_c_derivative_recursive(f, spec) == scaled(f, s));
      CHECK(higher_c_derivative_closed(f, spec) == scaled(f, s));
    }
  CHECK(higher_c_derivative_recursive(f, {7, {}}) == f);
}

TEST_CASE("classical second derivative with repeated shift") {
  std::mt19937_64 rng(4);
  auto k2 = Field::build(2, 5);
  auto f = random_function(k2, rng);
  for (Element a : k2->elements()) {
    auto d = higher_c_derivative_recursive(f, {1, {a, a}});
    CHECK(std::ranges::all_of(d.table(), [](Element v) { return v == 0; }));
  }
  // Odd characteristic: F(x+2a) - 2F(x+a) + F(x) is not identically zero.
  auto k3 = Field::build(3, 2);
  auto g = FieldFunction::from_monomial(k3, 2);
  auto d = higher_c_derivative_recursive(g, {1, {1, 1}});
  CHECK_FALSE(std::ranges::all_of(d.table(), [](Element v) { return v == 0; }));
}

TEST_CASE("closed form equals recursive form, exhaustively for t <= 3 on small fields") {
  std::mt19937_64 rng(5);
  for (auto k : {Field::build(2, 3), Field::build(3, 2), Field::build(2, 4)}) {
    auto f = random_function(k, rng);
    const std::uint32_t q = k->order();
    for (Element c = 0; c < q; ++c) {
      for (Element a1 = 0; a1 < q; ++a1) {
        REQUIRE(higher_c_derivative_closed(f, {c, {a1}}) == higher_c_derivative_recursive(f, {c, {a1}}));
        REQUIRE(higher_c_derivative_closed(f, {c, {a1}}) == c_derivative(f, a1, c));
        for (Element a2 = 0; a2 < q; ++a2) {
          REQUIRE(higher_c_derivative_closed(f, {c, {a1, a2}}) == higher_c_derivative_recursive(f, {c, {a1, a2}}));
          for (Element a3 = 0; a3 < q; ++a3) {
            const DerivativeSpec spec{c, {a1, a2, a3}};
            REQUIRE(higher_c_derivative_closed(f, spec) == higher_c_derivative_recursive(f, spec));
          }
        }
      }
    }
  }
}

TEST_CASE("closed form equals recursive form on random specs up to t = 6") {
  std::mt19937_64 rng(6);
  for (auto k : {Field::build(2, 5), Field::build(3, 3), Field::build(5, 2), Field::build(7, 2)}) {
    std::uniform_int_distribution<Element> pick(0, k->order() - 1);
    std::uniform_int_distribution<std::size_t> order(0, 6);
    for (int rep = 0; rep < 200; ++rep) {
      auto f = random_function(k, rng);
      DerivativeSpec spec{pick(rng), {}};
      for (std::size_t i = order(rng); i > 0; --i) spec.shifts.push_back(pick(rng));
      REQUIRE(higher_c_derivative_closed(f, spec) == higher_c_derivative_recursive(f, spec));
    }
  }
}

TEST_CASE("derivatives are invariant under permutations of the shifts") {
  std::mt19937_64 rng(7);
  for (auto k : {Field::build(2, 4), Field::build(3, 3)}) {
    std::uniform_int_distribution<Element> pick(0, k->order() - 1);
    for (int rep = 0; rep < 30; ++rep) {
      auto f = random_function(k, rng);
      const Element c = pick(rng);
      std::vector<Element> shifts{pick(rng), pick(rng), pick(rng)};
      const auto base = higher_c_derivative_closed(f, {c, shifts});
      std::ranges::sort(shifts);
      int perms = 0;
      do {
        ++perms;
        REQUIRE(higher_c_derivative_closed(f, {c, shifts}) == base);
        REQUIRE(higher_c_derivative_recursive(f, {c, shifts}) == base);
      } while (std::ranges::next_permutation(shifts).found);
      CHECK(perms <= 6);
    }
  }
}

TEST_CASE("reconstruction identity") {
  std::mt19937_64 rng(8);
  for (auto k : {Field::build(2, 4), Field::build(3, 3)}) {
    std::uniform_int_distribution<Element> pick(0, k->order() - 1);
    std::uniform_int_distribution<std::size_t> order(0, 4);
    for (int rep = 0; rep < 100; ++rep) {
      auto f = random_function(k, rng);
      DerivativeSpec spec{pick(rng), {}};
      for (std::size_t i = order(rng); i > 0; --i) spec.shifts.push_back(pick(rng));
      REQUIRE(verify_reconstruction(f, spec));
    }
  }
  // t = 1 restates the definition: F(x+a) = cD_a F(x) + c F(x).
  auto k = Field::build(3, 3);
  auto f = random_function(k, rng);
  auto d = c_derivative(f, 5, 7);
  for (Element x : k->elements()) CHECK(f(k->add(x, 5)) == k->add(d(x), k->mul(7, f(x))));
}

TEST_CASE("sum and product rules") {
  std::mt19937_64 rng(9);
  auto k = Field::build(2, 4);
  auto zero = FieldFunction::constant(k, 0);
  for (int rep = 0; rep < 3; ++rep) {
    auto f = random_function(k, rng);
    auto g = random_function(k, rng);
    for (Element a : k->elements())
      for (Element c : k->elements()) {
        REQUIRE(verify_sum_rule(f, g, a, c));
        REQUIRE(verify_product_rule(f, g, a, c));
        REQUIRE(verify_sum_rule(f, zero, a, c));
        REQUIRE(verify_product_rule(f, zero, a, c));
      }
  }
  auto k27 = Field::build(3, 3);
  auto f = random_function(k27, rng);
  auto g = random_function(k27, rng);
  for (Element a : k27->elements())
    for (Element c : k27->elements()) {
      REQUIRE(verify_sum_rule(f, g, a, c));
      REQUIRE(verify_product_rule(f, g, a, c));
    }
}

TEST_CASE("product rule with the c-derivative on both sides fails for c outside {0, 1}") {
  auto k = Field::build(3, 2);
  auto f = FieldFunction::from_monomial(k, 1);
  auto g = FieldFunction::from_monomial(k, 1);
  const Element a = 1, c = 2;
  const auto lhs = c_derivative(f * g, a, c);
  const auto df = c_derivative(f, a, c);
  const auto dg = c_derivative(g, a, c);
  bool all_equal = true;
  for (Element x : k->elements()) {
    const Element literal = k->add(k->mul(f(k->add(x, a)), dg(x)), k->mul(k->mul(df(x), c), g(x)));
    all_equal &= literal == lhs(x);
  }
  CHECK_FALSE(all_equal);
  CHECK(verify_product_rule(f, g, a, c));
}

TEST_CASE("product rule for x * x at c = 1 is D_a(x^2) = 2ax + a^2") {
  for (auto k : {Field::build(3, 2), Field::build(2, 3), Field::build(5, 2)}) {
    auto id = FieldFunction::identity(k);
    for (Element a : k->elements()) {
      REQUIRE(verify_product_rule(id, id, a, 1));
      auto d = c_derivative(id * id, a, 1);
      for (Element x : k->elements()) {
        const Element two_ax = k->add(k->mul(a, x), k->mul(a, x));
        REQUIRE(d(x) == k->add(two_ax, k->mul(a, a)));
      }
    }
  }
}

TEST_CASE("linearized monomials keep degree 1 under c-derivatives with c != 1") {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}}) {
    auto k = Field::build(p, n);
    std::uint64_t pk = 1;
    for (std::uint32_t kexp = 0; kexp < n; ++kexp, pk *= p) {
      auto f = FieldFunction::from_monomial(k, pk);
      for (Element a : k->elements())
        for (Element c : k->elements()) {
          if (c == 1) continue;
          auto d = c_derivative(f, a, c);
          // (1-c) x^{p^k} + a^{p^k}
          for (Element x : k->elements())
            REQUIRE(d(x) == k->add(k->mul(k->sub(1, c), f(x)), k->pow(a, static_cast<std::int64_t>(pk))));
          REQUIRE(algebraic_degree(d) == 1);
        }
    }
  }
}

TEST_CASE("c = 0 derivatives are translates; permutations stay bijective") {
  std::mt19937_64 rng(10);
  auto k = Field::build(2, 5);
  auto f = FieldFunction::from_monomial(k, 30);
  std::uniform_int_distribution<Element> pick(0, k->order() - 1);
  for (int rep = 0; rep < 50; ++rep) {
    DerivativeSpec spec{0, {pick(rng), pick(rng), pick(rng)}};
    const Element s = k->add(spec.shifts[0], k->add(spec.shifts[1], spec.shifts[2]));
    auto d = higher_c_derivative_closed(f, spec);
    for (Element x : k->elements()) REQUIRE(d(x) == f(k->add(x, s)));
    CHECK(is_permutation(d));
  }
}

TEST_CASE("order limits") {
  auto k = Field::build(2, 3);
  auto f = FieldFunction::identity(k);
  DerivativeSpec big{1, std::vector<Element>(21, 1)};
  try {
    (void)higher_c_derivative_closed(f, big);
    FAIL("expected OrderTooHigh");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderTooHigh);
  }
  CHECK_NOTHROW((void)higher_c_derivative_recursive(f, big));
  CHECK_THROWS_AS((void)c_derivative(f, 8, 1), Error);
}
