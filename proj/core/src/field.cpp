#include "koszul/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace koszul {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
  }
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s == "q" || s == "qq" || s == "rationals") return rationals();
  std::string_view digits;
  if (s.rfind("fp:", 0) == 0) {
    digits = std::string_view(s).substr(3);
  } else if (s.size() > 1 && s[0] == 'f') {
    digits = std::string_view(s).substr(1);
  } else {
    throw InputError("unknown field '" + std::string(text) + "' (expected q, f2, f3 or fp:<P>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw InputError("cannot parse field characteristic in '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::rationals) return "Q";
  return "F" + std::to_string(p_);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw InternalError("division by zero in Q");
  return Element(1) / a;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p < (1u << 16)) {
    auto table = std::make_shared<std::vector<std::uint32_t>>(p, 0);
    if (p > 1) (*table)[1] = 1;
    // inv(i) = -(p / i) * inv(p mod i)
    for (std::uint32_t i = 2; i < p; ++i) {
      std::uint64_t t = std::uint64_t{p - p / i} * (*table)[p % i] % p;
      (*table)[i] = static_cast<std::uint32_t>(t);
    }
    inverses_ = std::move(table);
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw InternalError("division by zero in F" + std::to_string(p_));
  if (inverses_) return (*inverses_)[a];
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

IntegerRing::Element IntegerRing::inv(const Element& a) const {
  if (a == 1 || a == -1) return a;
  throw InternalError("integer " + a.get_str() + " is not a unit");
}

}  // namespace koszul
