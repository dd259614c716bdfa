#pragma once

#include <optional>
#include <span>

#include "orbitsep/poly.hpp"

namespace orbitsep {

// Fraction of polynomials, normalized so the denominator's graded-lex
// leading coefficient is one. Not gcd-reduced: equality goes through
// cross-multiplication instead.
class RatFunc {
 public:
  explicit RatFunc(Poly num);  // denominator 1
  RatFunc(Poly num, Poly den);

  static RatFunc constant(std::size_t nvars, FieldElem c);
  static RatFunc variable(std::size_t nvars, std::size_t i, Field f);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  Field field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc pow(std::uint32_t e) const;

  // exact value at a point, or nullopt when the denominator vanishes there
  std::optional<FieldElem> eval(std::span<const FieldElem> pt) const;

  // display-level reduction: cancels the common monomial factor of
  // numerator and denominator (content extraction, not a gcd)
  RatFunc simplified() const;

  RatFunc reduced_mod(std::uint64_t p) const;

 private:
  Poly num_, den_;
  void normalize();
};

// true iff a and b agree as elements of the fraction field
bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

// p(subst_1, ..., subst_n) as one fraction: numerator built term-by-term
// over the common denominator (prod of subst denominators)^deg p. When all
// substitutions are polynomial the result has denominator 1.
RatFunc compose(const Poly& p, std::span<const RatFunc> subst);

RatFunc compose(const RatFunc& f, std::span<const RatFunc> subst);

}  // namespace orbitsep
