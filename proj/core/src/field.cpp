#include "orbitsep/field.hpp"

#include <ostream>

namespace orbitsep {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in prime field");
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, newt = 1;
  __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("modulus is not prime");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_modulus(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldElem FieldElem::rational(long num, long den) {
  if (den == 0) throw UsageError("rational with zero denominator");
  FieldElem e;
  e.rat_ = mpq_class(num, den);
  e.rat_.canonicalize();
  return e;
}

FieldElem FieldElem::rational(mpq_class q) {
  FieldElem e;
  q.canonicalize();
  e.rat_ = std::move(q);
  return e;
}

FieldElem FieldElem::residue(std::uint64_t value, std::uint64_t p) {
  if (p == 0) throw UsageError("prime-field modulus must be nonzero");
  FieldElem e;
  e.fld_ = Field{p};
  e.res_ = value % p;
  e.rat_ = 0;
  return e;
}

FieldElem FieldElem::zero(Field f) { return from_int(0, f); }

FieldElem FieldElem::one(Field f) { return from_int(1, f); }

FieldElem FieldElem::from_int(long v, Field f) {
  if (f.rational()) return rational(v);
  long m = static_cast<long>(f.modulus);
  long r = v % m;
  if (r < 0) r += m;
  return residue(static_cast<std::uint64_t>(r), f.modulus);
}

bool FieldElem::is_zero() const {
  return fld_.rational() ? rat_ == 0 : res_ == 0;
}

bool FieldElem::is_one() const {
  return fld_.rational() ? rat_ == 1 : res_ == 1 % fld_.modulus;
}

const mpq_class& FieldElem::rat() const {
  if (!fld_.rational()) throw UsageError("rat() on a prime-field element");
  return rat_;
}

std::uint64_t FieldElem::res() const {
  if (fld_.rational()) throw UsageError("res() on a rational element");
  return res_;
}

void FieldElem::require_same(const FieldElem& a, const FieldElem& b) {
  if (!(a.fld_ == b.fld_))
    throw UsageError("mixed coefficient fields in arithmetic");
}

FieldElem FieldElem::operator-() const {
  FieldElem e = *this;
  if (fld_.rational()) {
    e.rat_ = -rat_;
  } else {
    e.res_ = res_ == 0 ? 0 : fld_.modulus - res_;
  }
  return e;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  require_same(*this, o);
  if (fld_.rational()) {
    rat_ += o.rat_;
  } else {
    std::uint64_t s = res_ + o.res_;  // moduli are < 2^63, no overflow
    res_ = s >= fld_.modulus ? s - fld_.modulus : s;
  }
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  require_same(*this, o);
  if (fld_.rational()) {
    rat_ -= o.rat_;
  } else {
    res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + fld_.modulus - o.res_;
  }
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  require_same(*this, o);
  if (fld_.rational()) {
    rat_ *= o.rat_;
  } else {
    res_ = mulmod(res_, o.res_, fld_.modulus);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  require_same(*this, o);
  return *this *= o.inverse();
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  FieldElem e = *this;
  if (fld_.rational()) {
    e.rat_ = 1 / rat_;
  } else {
    e.res_ = invmod(res_, fld_.modulus);
  }
  return e;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem acc = one(fld_);
  FieldElem base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

FieldElem FieldElem::to_field(Field target) const {
  if (fld_ == target) return *this;
  if (!fld_.rational() || target.rational())
    throw UsageError("unsupported field conversion");
  std::uint64_t p = target.modulus;
  mpz_class num = rat_.get_num(), den = rat_.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class dmod = den % pz;
  if (dmod == 0)
    throw BadPrimeError("denominator vanishes mod " + std::to_string(p));
  mpz_class nmod = num % pz;
  if (nmod < 0) nmod += pz;
  std::uint64_t n = nmod.get_ui();
  std::uint64_t d = dmod.get_ui();
  return residue(mulmod(n, invmod(d, p), p), p);
}

std::string FieldElem::str() const {
  if (fld_.rational()) return rat_.get_str();
  return std::to_string(res_);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!(a.fld_ == b.fld_)) return false;
  return a.fld_.rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) {
  return os << e.str();
}

}  // namespace orbitsep
