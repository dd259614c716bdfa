#include "orbitsep/dynsys.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

#include "orbitsep/matrix.hpp"

namespace orbitsep {

SelfMap::SelfMap(std::vector<RatFunc> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw UsageError("self-map needs components");
  std::size_t n = components_.size();
  is_polynomial_ = true;
  for (const RatFunc& c : components_) {
    if (c.nvars() != n)
      throw UsageError("self-map component arity mismatch");
    if (!(c.field() == components_.front().field()))
      throw UsageError("mixed coefficient fields in self-map");
    is_polynomial_ &= c.is_polynomial();
  }
}

SelfMap SelfMap::identity(std::size_t nvars, Field f) {
  std::vector<RatFunc> comps;
  comps.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    comps.push_back(RatFunc::variable(nvars, i, f));
  return SelfMap(std::move(comps));
}

std::optional<Point> SelfMap::eval(const Point& pt) const {
  Point out;
  out.reserve(nvars());
  for (const RatFunc& c : components_) {
    auto v = c.eval(pt);
    if (!v) return std::nullopt;
    out.push_back(std::move(*v));
  }
  return out;
}

SelfMap SelfMap::after(const SelfMap& inner) const {
  std::vector<RatFunc> comps;
  comps.reserve(nvars());
  for (const RatFunc& c : components_)
    comps.push_back(compose(c, inner.components()));
  return SelfMap(std::move(comps));
}

SelfMap SelfMap::reduced_mod(std::uint64_t p) const {
  std::vector<RatFunc> comps;
  comps.reserve(nvars());
  for (const RatFunc& c : components_) comps.push_back(c.reduced_mod(p));
  return SelfMap(std::move(comps));
}

bool map_equal(const SelfMap& a, const SelfMap& b) {
  if (a.nvars() != b.nvars()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (!ratfunc_equal(a.components_[i], b.components_[i])) return false;
  return true;
}

std::string Word::str() const {
  std::string s;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(indices[i]);
  }
  return s;
}

SemigroupSpec::SemigroupSpec(std::vector<SelfMap> generators, bool monoid)
    : generators_(std::move(generators)), monoid_(monoid) {
  if (generators_.empty())
    throw UsageError("semigroup needs at least one generator");
  for (const SelfMap& g : generators_) {
    if (g.nvars() != generators_.front().nvars() ||
        !(g.field() == generators_.front().field()))
      throw UsageError("generators must share arity and coefficient field");
  }
}

bool SemigroupSpec::all_polynomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const SelfMap& g) { return g.is_polynomial(); });
}

const SelfMap& SemigroupSpec::word_map(const Word& w) const {
  if (w.indices.empty() && !monoid_)
    throw UsageError("empty word in a semigroup without identity");
  for (std::size_t i : w.indices)
    if (i >= generators_.size()) throw UsageError("word index out of range");

  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return *it->second;
  }

  std::shared_ptr<const SelfMap> built;
  if (w.indices.empty()) {
    built = std::make_shared<const SelfMap>(
        SelfMap::identity(nvars(), field()));
  } else if (w.indices.size() == 1) {
    built = std::make_shared<const SelfMap>(generators_[w.indices[0]]);
  } else {
    Word prefix{std::vector<std::size_t>(w.indices.begin(),
                                         w.indices.end() - 1)};
    // left-to-right application: last letter is applied last
    built = std::make_shared<const SelfMap>(
        generators_[w.indices.back()].after(word_map(prefix)));
  }

  std::unique_lock lock(memo_mutex_);
  auto [it, _] = memo_.emplace(w, std::move(built));
  return *it->second;
}

bool SemigroupSpec::jacobian_lint(Rng& rng, int attempts) const {
  std::size_t n = nvars();
  for (int a = 0; a < attempts; ++a) {
    Point pt = rng.rational_point(n, 100);
    bool all_full = true;
    for (const SelfMap& g : generators_) {
      std::vector<std::vector<FieldElem>> rows;
      bool defined = true;
      for (const RatFunc& c : g.components()) {
        std::vector<FieldElem> row;
        FieldElem dv = c.den().eval(pt);
        if (dv.is_zero()) {
          defined = false;
          break;
        }
        for (std::size_t j = 0; j < n; ++j) {
          // d(num/den) = (num' den - num den') / den^2
          FieldElem nv = c.num().eval(pt);
          FieldElem ndj = c.num().derivative(j).eval(pt);
          FieldElem ddj = c.den().derivative(j).eval(pt);
          row.push_back((ndj * dv - nv * ddj) / (dv * dv));
        }
        rows.push_back(std::move(row));
      }
      if (!defined) {
        all_full = false;
        break;
      }
      Matrix jac = Matrix::from_rows(field(), rows);
      if (rref(jac).rank < n) {
        all_full = false;
        break;
      }
    }
    if (all_full) return true;
  }
  return false;
}

SemigroupSpec SemigroupSpec::reduced_mod(std::uint64_t p) const {
  std::vector<SelfMap> gens;
  gens.reserve(generators_.size());
  for (const SelfMap& g : generators_) gens.push_back(g.reduced_mod(p));
  return SemigroupSpec(std::move(gens), monoid_);
}

std::vector<Point> OrbitSample::points() const {
  std::vector<Point> pts;
  pts.reserve(entries.size());
  for (const auto& [w, p] : entries) pts.push_back(p);
  return pts;
}

namespace {

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      if (a[i].field().rational()) return a[i].rat() < b[i].rat();
      return a[i].res() < b[i].res();
    }
    return false;
  }
};

}  // namespace

OrbitSample orbit_sample(const SemigroupSpec& spec, const Point& base,
                         std::size_t max_len, std::size_t cap) {
  if (base.size() != spec.nvars())
    throw UsageError("base point arity mismatch");

  OrbitSample sample;
  sample.base = base;
  std::set<Point, PointLess> seen;
  // frontier of (word, point) pairs whose extensions are still unexplored;
  // later words reaching an already-seen point are pruned (their
  // extensions revisit the same points)
  std::deque<std::pair<Word, Point>> frontier;

  auto admit = [&](Word w, Point p) {
    if (seen.size() >= cap) return;
    if (seen.insert(p).second) {
      sample.entries.emplace_back(w, p);
      frontier.emplace_back(std::move(w), std::move(p));
    }
  };

  if (spec.monoid()) {
    admit(Word{}, base);
  } else {
    frontier.emplace_back(Word{}, base);  // expansion seed only, not an entry
  }

  while (!frontier.empty() && seen.size() < cap) {
    auto [w, p] = std::move(frontier.front());
    frontier.pop_front();
    if (w.length() >= max_len) continue;
    for (std::size_t j = 0; j < spec.generators().size(); ++j) {
      Word ext = w;
      ext.indices.push_back(j);
      auto img = spec.generators()[j].eval(p);
      if (!img) {
        sample.skipped.push_back(std::move(ext));
        continue;
      }
      admit(std::move(ext), std::move(*img));
    }
  }
  return sample;
}

std::vector<std::pair<Word, SelfMap>> symbolic_iterates(
    const SemigroupSpec& spec, std::size_t max_len) {
  if (max_len < 1) throw UsageError("symbolic_iterates requires max_len >= 1");
  std::vector<std::pair<Word, SelfMap>> out;
  std::deque<std::size_t> frontier;  // indices into out still to extend

  auto admit = [&](Word w, SelfMap m) {
    for (const auto& [ow, om] : out)
      if (map_equal(om, m)) return;
    out.emplace_back(std::move(w), std::move(m));
    frontier.push_back(out.size() - 1);
  };

  if (spec.monoid())
    admit(Word{}, SelfMap::identity(spec.nvars(), spec.field()));
  else
    for (std::size_t j = 0; j < spec.generators().size(); ++j)
      admit(Word{{j}}, spec.generators()[j]);

  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    if (out[idx].first.length() >= max_len) continue;
    for (std::size_t j = 0; j < spec.generators().size(); ++j) {
      Word ext = out[idx].first;
      ext.indices.push_back(j);
      admit(std::move(ext), spec.generators()[j].after(out[idx].second));
    }
  }
  return out;
}

}  // namespace orbitsep
