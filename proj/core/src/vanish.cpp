#include "orbitsep/vanish.hpp"

#include <algorithm>

namespace orbitsep {

bool operator==(const TruncatedIdeal& a, const TruncatedIdeal& b) {
  return a.nvars == b.nvars && a.d == b.d && a.basis == b.basis;
}

Matrix eval_matrix(std::span<const Point> points, std::size_t nvars,
                   std::uint32_t d, Field f) {
  std::vector<Monomial> mons = monomials_up_to(nvars, d);
  Matrix m(points.size(), mons.size(), f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != nvars)
      throw UsageError("evaluation point arity mismatch");
    for (std::size_t j = 0; j < mons.size(); ++j) {
      FieldElem v = FieldElem::one(f);
      for (std::size_t k = 0; k < nvars; ++k)
        if (mons[j][k]) v *= points[i][k].pow(mons[j][k]);
      m.set(i, j, v);
    }
  }
  return m;
}

TruncatedIdeal truncated_ideal(std::span<const Point> points,
                               std::size_t nvars, std::uint32_t d, Field f) {
  std::vector<Monomial> mons = monomials_up_to(nvars, d);
  auto kernel = nullspace(eval_matrix(points, nvars, d, f));

  TruncatedIdeal ideal;
  ideal.nvars = nvars;
  ideal.d = d;
  for (const auto& v : kernel) {
    Poly p(nvars, f);
    for (std::size_t j = 0; j < mons.size(); ++j) p.add_term(mons[j], v[j]);
    ideal.basis.push_back(std::move(p));
  }
  // kernel vectors are monic in their free column, which is their leading
  // monomial; order the basis by decreasing leading monomial
  std::sort(ideal.basis.begin(), ideal.basis.end(),
            [](const Poly& a, const Poly& b) {
              return GradedLexLess{}(b.leading_monomial(),
                                     a.leading_monomial());
            });
  return ideal;
}

StabilizedIdeal stabilized_ideal(const SemigroupSpec& spec, const Point& base,
                                 std::uint32_t d, std::size_t window,
                                 std::size_t len_limit, std::size_t cap) {
  if (window < 1) throw UsageError("stabilization window must be >= 1");
  if (len_limit < 1) throw UsageError("length limit must be >= 1");

  StabilizedIdeal out;
  std::size_t streak = 0;
  for (std::size_t len = 1; len <= len_limit; ++len) {
    OrbitSample sample = orbit_sample(spec, base, len, cap);
    auto pts = sample.points();
    TruncatedIdeal ideal = truncated_ideal(pts, spec.nvars(), d, spec.field());
    if (len > 1 && ideal == out.ideal)
      ++streak;
    else
      streak = 0;
    out.ideal = std::move(ideal);
    out.used_len = len;
    out.sample_size = pts.size();
    out.skipped = sample.skipped;
    if (streak >= window) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

HilbertProfile hilbert_profile(std::span<const Point> points,
                               std::size_t nvars, std::uint32_t max_degree,
                               Field f) {
  HilbertProfile profile;
  for (std::uint32_t d = 0; d <= max_degree; ++d)
    profile.values[d] = truncated_ideal(points, nvars, d, f).hd();
  return profile;
}

}  // namespace orbitsep
