#include "orbitsep/poly.hpp"

#include <algorithm>

namespace orbitsep {

Poly Poly::constant(std::size_t nvars, FieldElem c) {
  Poly p(nvars, c.field());
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i, Field f) {
  if (i >= nvars) throw UsageError("variable index out of range");
  Monomial m(nvars);
  m[i] = 1;
  Poly p(nvars, f);
  p.add_term(m, FieldElem::one(f));
  return p;
}

Poly Poly::from_terms(std::size_t nvars, Field f,
                      std::span<const std::pair<Monomial, FieldElem>> ts) {
  Poly p(nvars, f);
  for (const auto& [m, c] : ts) p.add_term(m, c);
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
         terms_.begin()->second.is_one();
}

long Poly::total_degree() const {
  if (terms_.empty()) return -1;
  // graded order: the largest monomial carries the total degree
  return static_cast<long>(terms_.rbegin()->first.degree());
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const FieldElem& Poly::leading_coeff() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

FieldElem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
  if (m.nvars() != nvars_) throw UsageError("monomial arity mismatch");
  if (!(c.field() == field_))
    throw UsageError("mixed coefficient fields in polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly p(nvars_, field_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw UsageError("polynomial arity mismatch");
  Poly p(a.nvars_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly p(nvars_, field_);
  if (c.is_zero()) return p;
  for (const auto& [m, t] : terms_) p.terms_.emplace(m, t * c);
  return p;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly acc = Poly::constant(nvars_, FieldElem::one(field_));
  Poly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    if (e >>= 1) base *= base;
  }
  return acc;
}

Poly Poly::divided_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw UsageError("division by zero polynomial");
  Poly rem = *this;
  Poly quot(nvars_, field_);
  const Monomial& dm = divisor.leading_monomial();
  const FieldElem& dc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    Monomial q(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < dm[i]) throw std::logic_error("polynomial division not exact");
      q[i] = rm[i] - dm[i];
    }
    FieldElem qc = rem.leading_coeff() / dc;
    Poly term(nvars_, field_);
    term.add_term(q, qc);
    quot += term;
    rem -= term * divisor;
  }
  return quot;
}

Poly Poly::derivative(std::size_t var) const {
  Poly p(nvars_, field_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    p.add_term(dm, c * FieldElem::from_int(static_cast<long>(m[var]), field_));
  }
  return p;
}

FieldElem Poly::eval(std::span<const FieldElem> pt) const {
  if (pt.size() != nvars_) throw UsageError("evaluation point arity mismatch");
  FieldElem acc = FieldElem::zero(field_);
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) t *= pt[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

FieldElem poly_eval(const Poly& p, std::span<const FieldElem> pt) {
  return p.eval(pt);
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  if (!field_.rational()) {
    return scaled(leading_coeff().inverse());
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.rat().get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.rat().get_num().get_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coeff().rat() < 0) scale = -scale;
  return scaled(FieldElem::rational(scale));
}

Poly Poly::reduced_mod(std::uint64_t p) const {
  if (!field_.rational())
    throw UsageError("reduced_mod expects a rational polynomial");
  Poly r(nvars_, Field{p});
  for (const auto& [m, c] : terms_) r.add_term(m, c.to_field(Field{p}));
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

}  // namespace orbitsep
