#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "orbitsep/field.hpp"
#include "orbitsep/monomial.hpp"

namespace orbitsep {

// Sparse multivariate polynomial over one exact field. Zero coefficients
// are never stored; the zero polynomial has an empty term map.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GradedLexLess>;

  Poly(std::size_t nvars, Field f) : nvars_(nvars), field_(f) {}
  static Poly constant(std::size_t nvars, FieldElem c);
  static Poly variable(std::size_t nvars, std::size_t i, Field f);
  static Poly from_terms(std::size_t nvars, Field f,
                         std::span<const std::pair<Monomial, FieldElem>>);

  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // total degree; -1 for the zero polynomial
  long total_degree() const;

  // largest monomial in graded-lex order; throws on the zero polynomial
  const Monomial& leading_monomial() const;
  const FieldElem& leading_coeff() const;
  FieldElem coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const FieldElem& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const FieldElem& c) const;
  Poly pow(std::uint32_t e) const;

  // exact quotient; throws std::logic_error when the division is not exact
  Poly divided_exact(const Poly& divisor) const;

  Poly derivative(std::size_t var) const;

  FieldElem eval(std::span<const FieldElem> pt) const;

  // integer-primitive scaling over Q (positive leading coefficient);
  // monic scaling over a prime field. Zero stays zero.
  Poly primitive() const;

  // coefficient-wise reduction into Z/p; throws BadPrimeError when a
  // denominator vanishes mod p
  Poly reduced_mod(std::uint64_t p) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  std::size_t nvars_;
  Field field_;
  TermMap terms_;
};

FieldElem poly_eval(const Poly& p, std::span<const FieldElem> pt);

}  // namespace orbitsep
