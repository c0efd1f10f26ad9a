#include "hh/field.hpp"

#include <cctype>

namespace hh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw FieldError("not a usable prime: " + std::to_string(p));
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
}

FieldSpec parse_field(std::string_view text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  std::string_view digits;
  if (text.starts_with("fp:") || text.starts_with("Fp:")) digits = text.substr(3);
  else if (text.starts_with("F") || text.starts_with("f")) digits = text.substr(1);
  if (digits.empty() || digits.size() > 10) throw FieldError("unknown field: " + std::string(text));
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw FieldError("unknown field: " + std::string(text));
    p = p * 10 + static_cast<unsigned>(c - '0');
  }
  return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
}

Fp Fp::from_int(const FieldSpec& f, long long n) {
  if (f.kind != FieldKind::PrimeField) throw FieldError("Fp element requested over " + f.name());
  long long r = n % static_cast<long long>(f.p);
  if (r < 0) r += f.p;
  return Fp(static_cast<std::uint32_t>(r), f.p);
}

Fp Fp::parse(const FieldSpec& f, std::string_view s) {
  mpq_class q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) throw FieldError("bad coefficient: " + std::string(s));
  if (q.get_den() == 0) throw FieldError("zero denominator: " + std::string(s));
  q.canonicalize();
  mpz_class num = q.get_num() % f.p, den = q.get_den() % f.p;
  if (num < 0) num += f.p;
  if (den == 0) throw FieldError("coefficient " + std::string(s) + " has denominator divisible by " + std::to_string(f.p));
  return Fp(static_cast<std::uint32_t>(num.get_ui()), f.p) / Fp(static_cast<std::uint32_t>(den.get_ui()), f.p);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw FieldError("division by zero");
  // Extended Euclid on (v, p).
  long long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    a -= q * b; std::swap(a, b);
    x0 -= q * x1; std::swap(x0, x1);
  }
  x0 %= static_cast<long long>(p_);
  if (x0 < 0) x0 += p_;
  return raw(static_cast<std::uint32_t>(x0), p_);
}

Rational Rational::from_int(const FieldSpec& f, long long n) {
  if (f.kind != FieldKind::Rationals) throw FieldError("rational element requested over " + f.name());
  return Rational(mpq_class(static_cast<long>(n)), 0);
}

Rational Rational::parse(const FieldSpec&, std::string_view s) {
  mpq_class q;
  if (s.empty() || q.set_str(std::string(s), 10) != 0) throw FieldError("bad coefficient: " + std::string(s));
  if (q.get_den() == 0) throw FieldError("zero denominator: " + std::string(s));
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  return Rational(1 / q_);
}

template <>
bool find_primitive_root<Fp>(const FieldSpec& f, std::uint32_t n, Fp& out) {
  if (n == 0) return false;
  if ((f.p - 1) % n != 0) return false;
  for (std::uint32_t a = 1; a < f.p; ++a) {
    Fp x = Fp::from_int(f, a), acc = Fp::from_int(f, 1);
    std::uint32_t order = 0;
    for (std::uint32_t r = 1; r <= n; ++r) {
      acc *= x;
      if (acc.is_one()) { order = r; break; }
    }
    if (order == n) { out = x; return true; }
  }
  return false;
}

template <>
bool find_primitive_root<Rational>(const FieldSpec& f, std::uint32_t n, Rational& out) {
  if (n == 1) { out = Rational::from_int(f, 1); return true; }
  if (n == 2) { out = Rational::from_int(f, -1); return true; }
  return false;
}

}  // namespace hh
