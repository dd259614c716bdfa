#include "orbitsep/monomial.hpp"

#include <numeric>

namespace orbitsep {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, std::uint32_t remaining,
               Monomial& scratch, std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    scratch[pos] = remaining;
    out.push_back(scratch);
    return;
  }
  for (std::uint32_t e = 0; e <= remaining; ++e) {
    scratch[pos] = e;
    enumerate(nvars, pos + 1, remaining - e, scratch, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.emplace_back(std::size_t{0});
    return out;
  }
  Monomial scratch(nvars);
  for (std::uint32_t t = 0; t <= d; ++t)
    enumerate(nvars, 0, t, scratch, out);
  return out;
}

}  // namespace orbitsep
