#pragma once

#include <optional>

#include "orbitsep/generic.hpp"
#include "orbitsep/vanish.hpp"

namespace orbitsep {

// Canonical truncated orbit-closure ideal of a point: the value the
// separating map is replaced by at truncation level d. Two points get the
// same value iff their canonical bases coincide.
StabilizedIdeal phi_proxy(const SemigroupSpec& spec, const Point& point,
                          std::uint32_t d, std::size_t window,
                          std::size_t len_limit,
                          std::size_t cap = kDefaultOrbitCap);

enum class Outcome { equal, distinct, outside_domain, unstable };

std::string outcome_str(Outcome o);

struct SeparationVerdict {
  Outcome outcome;
  std::uint32_t d = 0;
  // Distinct only: an element of one side's ideal that is nonzero at the
  // other side. side 0 = vanishes on x's orbit, side 1 = on y's.
  std::optional<Poly> witness;
  int witness_side = 0;

  struct Detail {
    bool x_stabilized = false, y_stabilized = false;
    std::size_t x_len = 0, y_len = 0;
    std::vector<Word> x_skipped, y_skipped;
  } detail;
};

// Compares the truncated orbit-closure ideals of two points. Equal always
// means "equal at level d".
SeparationVerdict separate(const SemigroupSpec& spec, const Point& x,
                           const Point& y, std::uint32_t d,
                           std::size_t window, std::size_t len_limit,
                           std::size_t cap = kDefaultOrbitCap);

struct PhiInvarianceReport {
  struct Entry {
    std::size_t gen_index;
    bool defined = false;
    bool equal = false;
    bool image_stabilized = false;
    std::size_t image_skipped = 0;
  };
  std::vector<Entry> entries;
  bool base_stabilized = false;
  std::size_t base_skipped = 0;
  bool passed() const;
};

// The computed ideal of a point must agree with the ideal of each
// generator image of that point.
PhiInvarianceReport check_phi_invariance(const SemigroupSpec& spec,
                                         const Point& point, std::uint32_t d,
                                         std::size_t window,
                                         std::size_t len_limit,
                                         std::size_t cap = kDefaultOrbitCap);

struct FiberReport {
  struct ProbeResult {
    Point probe;
    bool equal = false;   // same canonical ideal as the base point
    bool member = false;  // base ideal vanishes at the probe
    bool violation = false;  // equal but not member
  };
  std::vector<ProbeResult> probes;
  bool passed() const;
};

// Monoid-only check that equal ideals imply fiber membership: a probe with
// the same ideal as x must lie on the zero set of x's ideal.
FiberReport fiber_check(const SemigroupSpec& spec, const Point& x,
                        std::span<const Point> probes, std::uint32_t d,
                        std::size_t window, std::size_t len_limit,
                        std::size_t cap = kDefaultOrbitCap);

}  // namespace orbitsep
