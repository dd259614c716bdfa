#pragma once

#include "orbitsep/separator.hpp"

namespace orbitsep {

// Polynomials of degree <= d with f(g(t)) = f(t) for every generator g,
// found by linear algebra on the coefficient vector. Always contains the
// constants; canonical basis (monic, interreduced), increasing by leading
// monomial.
struct InvariantBasis {
  std::uint32_t d = 0;
  std::vector<Poly> basis;
  std::size_t dim() const { return basis.size(); }
};

InvariantBasis poly_invariants(const SemigroupSpec& spec, std::uint32_t d);

struct InvariantCheck {
  bool ok = true;
  // generator index -> nonzero residue numerator of p.g * q - q.g * p
  std::vector<std::pair<std::size_t, Poly>> residues;
};

// Verifies p/q as a rational invariant via the cross-multiplied identity.
InvariantCheck verify_rational_invariant(const SemigroupSpec& spec,
                                         const Poly& p, const Poly& q);

struct DensityReport {
  Point point;
  std::uint32_t d_orbit = 0, d_inv = 0;
  bool orbit_ideal_zero = false;
  bool invariants_trivial = false;
  bool exceptional_flag = false;
  bool stabilized = false;
  std::size_t skipped = 0;

  enum class Verdict { evidence_for_dense, inconclusive } verdict =
      Verdict::inconclusive;
};

// Density evidence at a point: zero truncated orbit ideal + only constant
// polynomial invariants + non-exceptional base point.
DensityReport density_evidence(const SemigroupSpec& spec, const Point& point,
                               std::uint32_t d_orbit, std::uint32_t d_inv,
                               std::size_t window, std::size_t len_limit,
                               std::size_t cap = kDefaultOrbitCap);

}  // namespace orbitsep
