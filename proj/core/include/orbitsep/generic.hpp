#pragma once

#include "orbitsep/dynsys.hpp"
#include "orbitsep/matrix.hpp"
#include "orbitsep/vanish.hpp"

namespace orbitsep {

// Matrix over the function field: one row per deduplicated word map, one
// column per monomial of degree <= d, entry = monomial composed with the
// word map.
struct GenericMatrix {
  std::size_t d = 0;
  std::vector<Word> row_words;
  std::vector<std::pair<Word, SelfMap>> row_maps;
  std::vector<std::vector<RatFunc>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

GenericMatrix generic_matrix(const SemigroupSpec& spec, std::uint32_t d,
                             std::size_t max_len);

enum class RankMethod { exact, specialized };

struct GenericRankCert {
  std::uint32_t d = 0;
  std::size_t max_len = 0;
  std::size_t r = 0;   // generic rank of the truncated system
  std::size_t hd = 0;  // column count minus r
  std::vector<Word> pivot_words;
  std::vector<std::size_t> pivot_cols;
  RankMethod method = RankMethod::exact;
  bool rank_stable = false;  // r unchanged when max_len grows by one
};

// Generic rank over the function field. Exact mode clears denominators
// row-wise and eliminates fraction-free over the polynomial ring.
// Specialized mode evaluates at two independent random rational points
// (retrying on disagreement, escalating to exact).
GenericRankCert generic_rank(const SemigroupSpec& spec, std::uint32_t d,
                             std::size_t max_len, RankMethod method,
                             Rng& rng);

struct ExceptionalIdealGens {
  std::uint32_t d = 0;
  std::size_t r = 0;
  std::vector<Poly> gens;        // primitive minor numerators, deduplicated
  std::size_t examined = 0;      // submatrices looked at
  bool exhausted_budget = false;
};

// Numerators of r x r minors of the generic matrix, enumerated nearest the
// certificate's pivot rows/columns first, up to minor_budget submatrices.
// Their common zero set contains every in-domain point where the rank
// drops; with a truncated budget it may be strictly larger.
ExceptionalIdealGens exceptional_generators(const SemigroupSpec& spec,
                                            std::uint32_t d,
                                            std::size_t max_len,
                                            const GenericRankCert& cert,
                                            std::size_t minor_budget);

struct ExceptionalVerdict {
  enum class Kind { exceptional, typical, outside_domain } kind;
  std::size_t rank_at_point = 0;
  std::size_t r = 0;

  bool is_exceptional() const { return kind == Kind::exceptional; }
};

// Rank of the system specialized at one point versus the generic rank.
// Passing a certificate (same spec, d, max_len) avoids recomputing it.
ExceptionalVerdict is_exceptional(const SemigroupSpec& spec,
                                  const Point& point, std::uint32_t d,
                                  std::size_t max_len,
                                  const GenericRankCert* cert = nullptr);

struct InvarianceReport {
  struct Hit {
    std::size_t gen_index;
    Point from, to;
    std::size_t rank_at_image = 0;
  };
  std::vector<Hit> violations;        // image landed at full generic rank
  std::vector<Hit> undefined;         // generator indeterminate at the point
  std::vector<Hit> outside_domain;    // image outside some word's domain
  std::size_t checked = 0;
  bool passed() const { return violations.empty(); }
};

// Forward invariance of the cut-out locus: every generator image of a
// sampled exceptional point must again be exceptional.
InvarianceReport check_forward_invariance(const SemigroupSpec& spec,
                                          const ExceptionalIdealGens& gens,
                                          std::span<const Point> sample,
                                          std::size_t max_len);

}  // namespace orbitsep
