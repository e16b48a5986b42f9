#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "koszul/error.hpp"

namespace koszul {

bool is_prime(std::uint64_t n);

// Runtime selector for the coefficient field.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  // Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  // Accepts "q", "f2", "f3", "fp:<P>" (case-insensitive).
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  // "Q", "F2", "F7", ...
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

// Residues are kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  PrimeField() : PrimeField(2) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  Element from_integer(const mpz_class& v) const;
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

 private:
  std::uint32_t p_;
  // Inverse table for p < 2^16, shared between copies.
  std::shared_ptr<const std::vector<std::uint32_t>> inverses_;
};

// Integers, for Smith normal form and integral cohomology. Not a field:
// inv() is only defined on units.
class IntegerRing {
 public:
  using Element = mpz_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_integer(const mpz_class& v) const { return v; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.get_str(); }
};

// Calls fn(RationalField) or fn(PrimeField) according to spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind() == FieldSpec::Kind::rationals) {
    return fn(RationalField{});
  }
  return fn(PrimeField(spec.characteristic()));
}

}  // namespace koszul
