#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbitsep {

// Exponent vector of fixed length nvars. Total order used everywhere is
// graded lexicographic with the first variable highest: compare total
// degree, then exponents left to right.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps)
      : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  std::uint32_t degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of total degree <= d in nvars variables, strictly
// increasing in graded-lex order; length is C(nvars + d, d).
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t d);

}  // namespace orbitsep
