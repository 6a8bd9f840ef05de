#include "hocd/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

namespace hocd {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxFieldOrder) return kMaxFieldOrder + 1ull;
  }
  return r;
}

void trim(std::vector<std::uint32_t>& poly) {
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
}

// Remainder of a by the monic polynomial d over GF(p).
std::vector<std::uint32_t> rem_monic(std::vector<std::uint32_t> a, std::span<const std::uint32_t> d, std::uint32_t p) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::uint64_t sub = (lead * d[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  for (std::uint64_t f = 2; f * f <= value; ++f)
    if (value % f == 0) return false;
  return true;
}

namespace gfp {

std::vector<std::uint32_t> mul_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                   std::span<const std::uint32_t> modulus, std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  auto r = rem_monic(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t n = monic.size() - 1;
  if (n <= 1) return n == 1;
  const std::vector<std::uint32_t> f(monic.begin(), monic.end());
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::vector<std::uint32_t> d(deg + 1, 0);
    d[deg] = 1;
    // Enumerate every monic divisor candidate of this degree.
    while (true) {
      if (rem_monic(f, d, p).empty()) return false;
      std::size_t i = 0;
      while (i < deg && ++d[i] == p) d[i++] = 0;
      if (i == deg) break;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> poly(n + 1, 0);
  poly[n] = 1;
  // Lexicographic order with the constant term most significant: the
  // counter increments c_{n-1} fastest and c_0 slowest.
  while (true) {
    if (is_irreducible(poly, p)) return poly;
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    while (i >= 0 && ++poly[i] == p) poly[i--] = 0;
    if (i < 0) break;
  }
  throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");
}

}  // namespace gfp

std::vector<std::uint32_t> parse_coefficients(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorKind::InvalidArgument, "bad coefficient '" + std::string(token) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, std::uint32_t n,
                                          std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  if (checked_power(p, n) > kMaxFieldOrder)
    throw Error(ErrorKind::SizeExceeded,
                std::to_string(p) + "^" + std::to_string(n) + " exceeds the supported order 2^20");

  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = std::move(*modulus);
    if (mod.size() != n + 1 || mod.back() != 1)
      throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(n));
    if (std::ranges::any_of(mod, [p](std::uint32_t c) { return c >= p; }))
      throw Error(ErrorKind::InvalidArgument, "modulus coefficients must lie in [0, p)");
    if (!gfp::is_irreducible(mod, p)) throw Error(ErrorKind::NotIrreducible, "modulus is reducible over GF(p)");
  } else {
    mod = gfp::smallest_irreducible(p, n);
  }
  return std::shared_ptr<const Field>(new Field(p, n, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), order_(static_cast<std::uint32_t>(checked_power(p, n))), modulus_(std::move(modulus)) {
  build_addition_tables();
  build_log_tables();
}

void Field::build_addition_tables() {
  if (p_ == 2) return;
  if (p_ > 256) {
    chunk_radix_ = p_;
    chunk_count_ = n_;
    return;
  }
  std::uint32_t g = 0;
  std::uint32_t radix = 1;
  while (radix * p_ <= 256 && g < n_) {
    radix *= p_;
    ++g;
  }
  chunk_radix_ = radix;
  chunk_count_ = (n_ + g - 1) / g;
  chunk_add_.resize(std::size_t{radix} * radix);
  chunk_neg_.resize(radix);
  for (std::uint32_t a = 0; a < radix; ++a) {
    std::uint32_t neg = 0;
    for (std::uint32_t i = 0, ra = a, w = 1; i < g; ++i, ra /= p_, w *= p_) neg += ((p_ - ra % p_) % p_) * w;
    chunk_neg_[a] = static_cast<std::uint16_t>(neg);
    for (std::uint32_t b = 0; b < radix; ++b) {
      std::uint32_t sum = 0;
      for (std::uint32_t i = 0, ra = a, rb = b, w = 1; i < g; ++i, ra /= p_, rb /= p_, w *= p_)
        sum += ((ra % p_ + rb % p_) % p_) * w;
      chunk_add_[std::size_t{a} * radix + b] = static_cast<std::uint16_t>(sum);
    }
  }
}

Element Field::add_odd(Element x, Element y) const noexcept {
  Element r = 0;
  std::uint64_t w = 1;
  const std::uint32_t radix = chunk_radix_;
  const bool tabled = !chunk_add_.empty();
  for (std::uint32_t i = 0; i < chunk_count_; ++i) {
    const std::uint32_t a = x % radix, b = y % radix;
    x /= radix;
    y /= radix;
    const std::uint32_t s = tabled ? chunk_add_[std::size_t{a} * radix + b] : (a + b) % p_;
    r += static_cast<Element>(s * w);
    w *= radix;
  }
  return r;
}

Element Field::neg_odd(Element x) const noexcept {
  Element r = 0;
  std::uint64_t w = 1;
  const std::uint32_t radix = chunk_radix_;
  const bool tabled = !chunk_neg_.empty();
  for (std::uint32_t i = 0; i < chunk_count_; ++i) {
    const std::uint32_t a = x % radix;
    x /= radix;
    const std::uint32_t s = tabled ? chunk_neg_[a] : (p_ - a) % p_;
    r += static_cast<Element>(s * w);
    w *= radix;
  }
  return r;
}

void Field::build_log_tables() {
  const std::uint32_t group = order_ - 1;
  log_.assign(order_, 0);
  antilog_.assign(std::size_t{2} * group, 0);

  auto poly_pow = [&](const std::vector<std::uint32_t>& base, std::uint64_t e) {
    std::vector<std::uint32_t> result(n_, 0), b = base;
    result[0] = 1;
    while (e) {
      if (e & 1) result = gfp::mul_mod(result, b, modulus_, p_);
      b = gfp::mul_mod(b, b, modulus_, p_);
      e >>= 1;
    }
    return result;
  };
  const auto factors = prime_factors(group);
  auto primitive = [&](Element candidate) {
    const auto base = digits(candidate);
    for (auto r : factors) {
      auto v = poly_pow(base, group / r);
      if (from_digits(v) == 1) return false;
    }
    return true;
  };

  if (order_ == 2) {
    generator_ = 1;
  } else {
    std::vector<Element> candidates;
    if (n_ >= 2) candidates.push_back(p_);
    for (Element e = 2; e < order_ && candidates.size() < order_; ++e)
      if (e != p_ || n_ < 2) candidates.push_back(e);
    for (auto c : candidates) {
      if (primitive(c)) {
        generator_ = c;
        break;
      }
    }
  }

  const bool is_x = n_ >= 2 && generator_ == p_;
  const auto gen_digits = digits(generator_);
  std::vector<std::uint32_t> cur(n_, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    const Element e = from_digits(cur);
    antilog_[i] = e;
    antilog_[i + group] = e;
    log_[e] = i;
    if (is_x) {
      // Multiply by x: shift up one digit and fold the top through the modulus.
      const std::uint64_t top = cur[n_ - 1];
      for (std::uint32_t k = n_ - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      for (std::uint32_t k = 0; k < n_; ++k)
        cur[k] = static_cast<std::uint32_t>((cur[k] + (p_ - (top * modulus_[k]) % p_)) % p_);
    } else {
      cur = gfp::mul_mod(cur, gen_digits, modulus_, p_);
    }
  }
}

void Field::check(Element x) const {
  if (!contains(x))
    throw Error(ErrorKind::InvalidElement,
                "element index " + std::to_string(x) + " outside [0, " + std::to_string(order_) + ")");
}

Element Field::inv(Element x) const {
  if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t group = order_ - 1;
  return antilog_[(group - log_[x]) % group];
}

Element Field::pow(Element x, std::int64_t e) const {
  if (x == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return 0;
  }
  const std::int64_t group = order_ - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return antilog_[static_cast<std::uint64_t>(log_[x]) * static_cast<std::uint64_t>(r) % group];
}

std::vector<std::uint32_t> Field::digits(Element x) const {
  std::vector<std::uint32_t> d(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i, x /= p_) d[i] = x % p_;
  return d;
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  Element r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) r = r * p_ + digits[i];
  return r;
}

std::vector<Element> Field::subfield(std::uint32_t d) const {
  const std::uint32_t g = std::gcd(d, n_);
  const auto q = static_cast<std::int64_t>(checked_power(p_, g));
  std::vector<Element> out;
  for (Element x : elements())
    if (pow(x, q) == x) out.push_back(x);
  return out;
}

}  // namespace hocd
