#pragma once

#include <map>

#include "orbitsep/dynsys.hpp"
#include "orbitsep/matrix.hpp"

namespace orbitsep {

// Degree-truncated vanishing ideal of a finite point set, held as its
// canonical basis: each element monic in its graded-lex leading monomial,
// no element's leading monomial appearing elsewhere in the basis
// (equivalently, the coefficient matrix is a reduced echelon form). Basis
// order is by decreasing leading monomial.
struct TruncatedIdeal {
  std::size_t nvars = 0;
  std::uint32_t d = 0;
  std::vector<Poly> basis;

  std::size_t hd() const { return basis.size(); }
  friend bool operator==(const TruncatedIdeal&, const TruncatedIdeal&);
};

struct HilbertProfile {
  std::map<std::uint32_t, std::size_t> values;  // degree -> hd
};

// Row per point, column per monomial of monomials_up_to(nvars, d);
// entry (i, j) = j-th monomial evaluated at point i.
Matrix eval_matrix(std::span<const Point> points, std::size_t nvars,
                   std::uint32_t d, Field f);

TruncatedIdeal truncated_ideal(std::span<const Point> points,
                               std::size_t nvars, std::uint32_t d, Field f);

struct StabilizedIdeal {
  TruncatedIdeal ideal;
  bool stabilized = false;
  std::size_t used_len = 0;     // word length of the last sample taken
  std::size_t sample_size = 0;  // distinct points in that sample
  std::vector<Word> skipped;    // indeterminate words met at the base point
};

// Recomputes the truncated ideal of orbit samples at word lengths
// 1, 2, ...; accepts once the canonical basis is unchanged across `window`
// consecutive length increments, giving up at len_limit.
StabilizedIdeal stabilized_ideal(const SemigroupSpec& spec, const Point& base,
                                 std::uint32_t d, std::size_t window,
                                 std::size_t len_limit,
                                 std::size_t cap = kDefaultOrbitCap);

HilbertProfile hilbert_profile(std::span<const Point> points,
                               std::size_t nvars, std::uint32_t max_degree,
                               Field f);

}  // namespace orbitsep
