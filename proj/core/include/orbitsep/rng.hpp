#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orbitsep/field.hpp"

namespace orbitsep {

// Seeded RNG for everything randomized (specialized rank checks, random
// rational points). One fixed seed gives one reproducible run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

  // random rational with |numerator| <= bound, 1 <= denominator <= bound
  FieldElem rational(std::int64_t bound = 1000) {
    long num = static_cast<long>(uniform(-bound, bound));
    long den = static_cast<long>(uniform(1, bound));
    return FieldElem::rational(num, den);
  }

  std::vector<FieldElem> rational_point(std::size_t nvars,
                                        std::int64_t bound = 1000) {
    std::vector<FieldElem> pt;
    pt.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) pt.push_back(rational(bound));
    return pt;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace orbitsep
