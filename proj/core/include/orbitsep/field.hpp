#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "orbitsep/errors.hpp"

namespace orbitsep {

// Coefficient field of a computation: the rationals (modulus == 0) or the
// prime field Z/p for a word-sized prime p.
struct Field {
  std::uint64_t modulus = 0;

  constexpr bool rational() const { return modulus == 0; }
  friend constexpr bool operator==(const Field&, const Field&) = default;
};

inline constexpr Field kRationals{0};

bool is_prime_modulus(std::uint64_t n);

// An exact scalar tagged with its field. Rationals are kept reduced with
// positive denominator (GMP canonical form); residues are kept in [0, p).
class FieldElem {
 public:
  FieldElem() = default;  // rational zero

  static FieldElem rational(long num, long den = 1);
  static FieldElem rational(mpq_class q);
  static FieldElem residue(std::uint64_t value, std::uint64_t p);
  static FieldElem zero(Field f);
  static FieldElem one(Field f);
  static FieldElem from_int(long v, Field f);

  Field field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rat() const;   // rational field only
  std::uint64_t res() const;      // prime field only

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  FieldElem inverse() const;  // throws std::domain_error on zero
  FieldElem pow(std::uint64_t e) const;

  // Rational -> prime-field reduction (num * den^-1 mod p). Throws
  // BadPrimeError if the denominator vanishes mod p.
  FieldElem to_field(Field target) const;

  std::string str() const;  // "7", "-3/2", or residue digits

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend std::ostream& operator<<(std::ostream& os, const FieldElem& e);

 private:
  Field fld_{};
  mpq_class rat_{0};       // active when fld_.rational()
  std::uint64_t res_ = 0;  // active otherwise

  static void require_same(const FieldElem& a, const FieldElem& b);
};

}  // namespace orbitsep
