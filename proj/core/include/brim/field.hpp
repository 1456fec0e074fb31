#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace brim {

using Rng = std::mt19937_64;

// Element of F_p. The modulus is process-wide: set it once with
// Fp::set_modulus before any computation and before spawning workers.
class Fp {
 public:
  static constexpr std::uint64_t kDefaultModulus = 2147483647ULL;
  static constexpr std::uint64_t kMinModulus = 1ULL << 20;

  constexpr Fp() = default;
  explicit Fp(std::int64_t v);

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus() noexcept { return p_; }
  static std::uint64_t characteristic() noexcept { return p_; }

  static Fp zero() noexcept { return Fp(); }
  static Fp one() noexcept { return raw(1); }
  static Fp from_decimal(std::string_view digits);
  static Fp random(Rng& rng);

  std::uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  Fp inv() const;
  // Signed representative in (-p/2, p/2].
  std::int64_t signed_value() const noexcept {
    return v_ > p_ / 2 ? -static_cast<std::int64_t>(p_ - v_) : static_cast<std::int64_t>(v_);
  }
  std::string to_string() const { return std::to_string(signed_value()); }

  friend Fp operator+(Fp a, Fp b) noexcept {
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return raw(s >= p_ ? s - p_ : s);
  }
  friend Fp operator-(Fp a, Fp b) noexcept {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p_ - b.v_);
  }
  friend Fp operator*(Fp a, Fp b) noexcept { return raw(reduce(std::uint64_t{a.v_} * b.v_)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const noexcept { return raw(v_ == 0 ? 0 : p_ - v_); }
  Fp& operator+=(Fp o) noexcept { return *this = *this + o; }
  Fp& operator-=(Fp o) noexcept { return *this = *this - o; }
  Fp& operator*=(Fp o) noexcept { return *this = *this * o; }
  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_; }

 private:
  static Fp raw(std::uint64_t v) noexcept {
    Fp r;
    r.v_ = static_cast<std::uint32_t>(v);
    return r;
  }
  // Barrett reduction for a < 2^64 with p < 2^32.
  static std::uint64_t reduce(std::uint64_t a) noexcept {
    auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * inv_) >> 64);
    std::uint64_t r = a - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  std::uint32_t v_ = 0;
  static inline std::uint64_t p_ = kDefaultModulus;
  static inline std::uint64_t inv_ = ~std::uint64_t{0} / kDefaultModulus;
};

// Arbitrary-precision rational, for paranoia runs in characteristic zero.
class Rational {
 public:
  // Random scalars are drawn from [-kSampleRange, kSampleRange].
  static constexpr std::int64_t kSampleRange = 1 << 20;

  Rational() = default;
  explicit Rational(std::int64_t v) : q_(static_cast<long>(v)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static std::uint64_t characteristic() noexcept { return 0; }
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static Rational from_decimal(std::string_view digits);
  static Rational random(Rng& rng);

  const mpq_class& value() const noexcept { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  Rational inv() const;
  std::string to_string() const { return q_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

template <class K>
concept Field = std::regular<K> && requires(K a, const K& b, Rng& rng, std::string_view s) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inv() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { K::random(rng) } -> std::same_as<K>;
  { K::from_decimal(s) } -> std::same_as<K>;
  { K::characteristic() } -> std::convertible_to<std::uint64_t>;
};

static_assert(Field<Fp>);
static_assert(Field<Rational>);

bool is_prime(std::uint64_t n);

// Nonzero random scalar.
template <Field K>
K random_unit(Rng& rng) {
  for (;;) {
    K c = K::random(rng);
    if (!c.is_zero()) return c;
  }
}

}  // namespace brim
