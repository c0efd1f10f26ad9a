// Exact scalar fields: the rationals (GMP) and prime fields Z/p.
#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace hh {

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);

  std::uint32_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }
  std::string name() const;  // "Q" or "F7"
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Accepts "q", "Q", "fp:7", "F7".
FieldSpec parse_field(std::string_view text);
bool is_prime(std::uint64_t n);

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z/p. A default-constructed value is a zero that adopts the
// modulus of whatever it is combined with; combining two different moduli
// throws FieldError.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  static Fp from_int(const FieldSpec& f, long long n);
  static Fp parse(const FieldSpec& f, std::string_view s);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(const Fp& o) const {
    std::uint32_t p = merge(o), s = v_ + o.v_;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  Fp operator-(const Fp& o) const {
    std::uint32_t p = merge(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_, p);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    std::uint32_t p = merge(o);
    return raw(p == 0 ? 0 : static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p), p);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }
  Fp inverse() const;

  friend bool operator==(const Fp& a, const Fp& b) {
    a.merge(b);
    return a.v_ == b.v_;
  }
  std::string to_string() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint32_t merge(const Fp& o) const {
    if (p_ == o.p_ || o.p_ == 0) return p_;
    if (p_ == 0) return o.p_;
    throw FieldError("mixed-field arithmetic: F" + std::to_string(p_) + " and F" +
                     std::to_string(o.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational from_int(const FieldSpec& f, long long n);
  static Rational parse(const FieldSpec& f, std::string_view s);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(q_ + o.q_, 0); }
  Rational operator-(const Rational& o) const { return Rational(q_ - o.q_, 0); }
  Rational operator-() const { return Rational(-q_, 0); }
  Rational operator*(const Rational& o) const { return Rational(q_ * o.q_, 0); }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  Rational inverse() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  std::string to_string() const { return q_.get_str(); }

 private:
  // gmpxx arithmetic already yields canonical values.
  Rational(mpq_class q, int) : q_(std::move(q)) {}
  mpq_class q_;
};

template <class K>
concept FieldElement = requires(const K a, const K b, const FieldSpec f) {
  { a + b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { K::from_int(f, 1) } -> std::same_as<K>;
};

// Element type matching a field kind.
template <class K>
bool field_matches(const FieldSpec& f) {
  if constexpr (std::is_same_v<K, Rational>) return f.kind == FieldKind::Rationals;
  else return f.kind == FieldKind::PrimeField;
}

// Calls fn.template operator()<K>() for the element type of `f`.
template <class F>
decltype(auto) dispatch_field(const FieldSpec& f, F&& fn) {
  if (f.kind == FieldKind::Rationals) return fn.template operator()<Rational>();
  return fn.template operator()<Fp>();
}

// Primitive n-th root of unity in f, smallest representative for F_p.
// Returns false when none exists (over Q only n <= 2 works).
template <class K>
bool find_primitive_root(const FieldSpec& f, std::uint32_t n, K& out);

template <class K>
K power(K base, unsigned long long e, const FieldSpec& f) {
  K r = K::from_int(f, 1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace hh
