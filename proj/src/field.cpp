#include "artinian/field.hpp"

#include <cctype>

namespace artinian {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw Error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return FieldSpec{FieldKind::PrimeField, static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q" || t == "QQ") return rationals();
  if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f')) {
    std::string digits = t.substr(1);
    if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
    if (!digits.empty() && digits.size() < 12 &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return prime(std::stoull(digits));
  }
  throw Error("unrecognized field '" + text + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(characteristic);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) throw Error("PrimeField needs a prime below 2^31");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw Error("rational coefficient has denominator divisible by p");
  if (num < 0) num += p_;
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

}  // namespace artinian
