#include "brim/field.hpp"

#include "brim/errors.hpp"

namespace brim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 7; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Fp::Fp(std::int64_t v) {
  auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

void Fp::set_modulus(std::uint64_t p) {
  if (p <= kMinModulus || p >= (1ULL << 32) || !is_prime(p)) {
    throw InputError("characteristic must be a prime in (2^20, 2^32), got " + std::to_string(p));
  }
  p_ = p;
  inv_ = ~std::uint64_t{0} / p;
}

Fp Fp::from_decimal(std::string_view digits) {
  std::uint64_t r = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("not a decimal integer: " + std::string(digits));
    r = reduce(r * 10 + static_cast<std::uint64_t>(c - '0'));
  }
  return raw(r);
}

Fp Fp::random(Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return raw(dist(rng));
}

Fp Fp::inv() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t a = v_, m = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0);
}

Rational Rational::from_decimal(std::string_view digits) {
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("not a decimal integer: " + std::string(digits));
  }
  return Rational(mpq_class(mpz_class(std::string(digits))));
}

Rational Rational::random(Rng& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-kSampleRange, kSampleRange);
  return Rational(dist(rng));
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q");
  return Rational(mpq_class(1 / q_));
}

}  // namespace brim
