#include "orbitsep/ratfunc.hpp"

#include <algorithm>
#include <limits>

namespace orbitsep {

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.nvars(),
                                                FieldElem::one(num_.field()))) {}

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw UsageError("rational function with zero denominator");
  if (num_.nvars() != den_.nvars())
    throw UsageError("rational function arity mismatch");
  normalize();
}

void RatFunc::normalize() {
  const FieldElem& lc = den_.leading_coeff();
  if (lc.is_one()) return;
  FieldElem inv = lc.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

RatFunc RatFunc::constant(std::size_t nvars, FieldElem c) {
  return RatFunc(Poly::constant(nvars, c));
}

RatFunc RatFunc::variable(std::size_t nvars, std::size_t i, Field f) {
  return RatFunc(Poly::variable(nvars, i, f));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero()) throw UsageError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(std::uint32_t e) const {
  return RatFunc(num_.pow(e), den_.pow(e));
}

std::optional<FieldElem> RatFunc::eval(std::span<const FieldElem> pt) const {
  FieldElem d = den_.eval(pt);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(pt) / d;
}

RatFunc RatFunc::simplified() const {
  if (num_.is_zero())
    return RatFunc(Poly(nvars(), field()));
  std::vector<std::uint32_t> common(nvars(),
                                    std::numeric_limits<std::uint32_t>::max());
  auto shrink = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms())
      for (std::size_t i = 0; i < nvars(); ++i)
        common[i] = std::min(common[i], m[i]);
  };
  shrink(num_);
  shrink(den_);
  auto strip = [&](const Poly& p) {
    Poly out(p.nvars(), p.field());
    for (const auto& [m, c] : p.terms()) {
      Monomial reduced(p.nvars());
      for (std::size_t i = 0; i < p.nvars(); ++i) reduced[i] = m[i] - common[i];
      out.add_term(reduced, c);
    }
    return out;
  };
  return RatFunc(strip(num_), strip(den_));
}

RatFunc RatFunc::reduced_mod(std::uint64_t p) const {
  Poly d = den_.reduced_mod(p);
  if (d.is_zero())
    throw BadPrimeError("denominator reduces to zero mod " + std::to_string(p));
  return RatFunc(num_.reduced_mod(p), std::move(d));
}

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
  return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

RatFunc compose(const Poly& p, std::span<const RatFunc> subst) {
  if (subst.size() != p.nvars())
    throw UsageError("compose: substitution arity mismatch");
  std::size_t inner = subst.empty() ? 0 : subst.front().nvars();
  Field f = p.field();

  if (p.is_zero())
    return RatFunc(Poly(inner, f));

  std::uint32_t d = static_cast<std::uint32_t>(p.total_degree());

  // All-polynomial substitutions keep denominator 1 exactly.
  bool all_poly = true;
  for (const RatFunc& s : subst) all_poly &= s.is_polynomial();

  // Single common denominator D^d with D = prod den_i; each term
  // c * prod x_i^{e_i} contributes c * prod a_i^{e_i} b_i^{d - e_i}.
  Poly dprod = Poly::constant(inner, FieldElem::one(f));
  if (!all_poly)
    for (const RatFunc& s : subst) dprod *= s.den();

  Poly numer(inner, f);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(inner, c);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m[i]) t *= subst[i].num().pow(m[i]);
      if (!all_poly) t *= subst[i].den().pow(d - m[i]);
    }
    numer += t;
  }
  if (all_poly) return RatFunc(std::move(numer));
  return RatFunc(std::move(numer), dprod.pow(d));
}

RatFunc compose(const RatFunc& f, std::span<const RatFunc> subst) {
  RatFunc n = compose(f.num(), subst);
  RatFunc d = compose(f.den(), subst);
  if (d.is_zero())
    throw UsageError(
        "composition undefined: denominator collapses to zero (inner map not "
        "dominant)");
  return n / d;
}

}  // namespace orbitsep
