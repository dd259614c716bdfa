#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "orbitsep/ratfunc.hpp"
#include "orbitsep/rng.hpp"

namespace orbitsep {

using Point = std::vector<FieldElem>;

// Rational self-map of affine n-space. Dominance is asserted by the caller;
// jacobian_lint offers a probabilistic check.
class SelfMap {
 public:
  explicit SelfMap(std::vector<RatFunc> components);
  static SelfMap identity(std::size_t nvars, Field f);

  std::size_t nvars() const { return components_.size(); }
  Field field() const { return components_.front().field(); }
  const std::vector<RatFunc>& components() const { return components_; }
  bool is_polynomial() const { return is_polynomial_; }

  // image of pt, or nullopt when some component denominator vanishes
  std::optional<Point> eval(const Point& pt) const;

  // this . inner  (apply inner first)
  SelfMap after(const SelfMap& inner) const;

  SelfMap reduced_mod(std::uint64_t p) const;

  friend bool map_equal(const SelfMap& a, const SelfMap& b);

 private:
  std::vector<RatFunc> components_;
  bool is_polynomial_;
};

// Composition word over generator indices; applied left to right, so
// [i, j] sends x to g_j(g_i(x)). The empty word is the identity and is
// legal only in a monoid.
struct Word {
  std::vector<std::size_t> indices;
  auto operator<=>(const Word&) const = default;
  std::size_t length() const { return indices.size(); }
  std::string str() const;
};

class SemigroupSpec {
 public:
  SemigroupSpec(std::vector<SelfMap> generators, bool monoid);

  std::size_t nvars() const { return generators_.front().nvars(); }
  Field field() const { return generators_.front().field(); }
  bool monoid() const { return monoid_; }
  const std::vector<SelfMap>& generators() const { return generators_; }
  bool all_polynomial() const;

  // memoized composite map of a word; safe for concurrent readers
  const SelfMap& word_map(const Word& w) const;

  // probabilistic dominance lint: true when some random point gives a
  // full-rank Jacobian for every generator
  bool jacobian_lint(Rng& rng, int attempts = 3) const;

  SemigroupSpec reduced_mod(std::uint64_t p) const;

 private:
  std::vector<SelfMap> generators_;
  bool monoid_;
  mutable std::map<Word, std::shared_ptr<const SelfMap>> memo_;
  mutable std::shared_mutex memo_mutex_;
};

struct OrbitSample {
  Point base;
  std::vector<std::pair<Word, Point>> entries;  // deduplicated by point
  std::vector<Word> skipped;                    // indeterminate at base

  std::vector<Point> points() const;
};

inline constexpr std::size_t kDefaultOrbitCap = 10000;

// Breadth-first sample of the orbit of `base` over words of length
// <= max_len (empty word included iff monoid), stopping at `cap` distinct
// points. Words whose evaluation meets a vanishing denominator are
// recorded in `skipped`.
OrbitSample orbit_sample(const SemigroupSpec& spec, const Point& base,
                         std::size_t max_len, std::size_t cap = kDefaultOrbitCap);

// All word maps for words of length <= max_len, deduplicated by map
// equality; first word (in breadth-first order) wins.
std::vector<std::pair<Word, SelfMap>> symbolic_iterates(
    const SemigroupSpec& spec, std::size_t max_len);

}  // namespace orbitsep
