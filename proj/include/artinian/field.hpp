#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace artinian {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

// Raised when a mathematical invariant that must hold fails; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec parse(const std::string& text);

  std::string name() const;
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool kIsPrime = true;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldKind::PrimeField, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_rational(const mpq_class& q) const;
  // acc -= a * b
  void sub_mul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }
  std::string to_string(Elem a) const { return std::to_string(a); }
  long long to_signed(Elem a) const { return a; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool kIsPrime = false;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw Error("division by zero");
    return 1 / a;
  }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_rational(const mpq_class& q) const { return q; }
  void sub_mul(Elem& acc, const Elem& a, const Elem& b) const { acc -= a * b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) throw FieldMismatch("operands live over different fields");
}

}  // namespace artinian
