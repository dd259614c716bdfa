#include "orbitsep/separator.hpp"

#include <algorithm>

namespace orbitsep {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::equal: return "equal";
    case Outcome::distinct: return "distinct";
    case Outcome::outside_domain: return "outside-domain";
    case Outcome::unstable: return "unstable";
  }
  return "?";
}

StabilizedIdeal phi_proxy(const SemigroupSpec& spec, const Point& point,
                          std::uint32_t d, std::size_t window,
                          std::size_t len_limit, std::size_t cap) {
  return stabilized_ideal(spec, point, d, window, len_limit, cap);
}

namespace {

// first basis element of `ideal` that does not vanish at `at`, if any
std::optional<Poly> nonvanishing_at(const TruncatedIdeal& ideal,
                                    const Point& at) {
  for (const Poly& f : ideal.basis)
    if (!f.eval(at).is_zero()) return f;
  return std::nullopt;
}

std::optional<Poly> nonvanishing_on_sample(const TruncatedIdeal& ideal,
                                           std::span<const Point> pts) {
  for (const Poly& f : ideal.basis)
    for (const Point& p : pts)
      if (!f.eval(p).is_zero()) return f;
  return std::nullopt;
}

}  // namespace

SeparationVerdict separate(const SemigroupSpec& spec, const Point& x,
                           const Point& y, std::uint32_t d,
                           std::size_t window, std::size_t len_limit,
                           std::size_t cap) {
  SeparationVerdict v;
  v.d = d;

  if (x == y) {
    v.outcome = Outcome::equal;
    return v;
  }

  StabilizedIdeal ix = phi_proxy(spec, x, d, window, len_limit, cap);
  StabilizedIdeal iy = phi_proxy(spec, y, d, window, len_limit, cap);
  v.detail = {ix.stabilized, iy.stabilized, ix.used_len, iy.used_len,
              ix.skipped,    iy.skipped};

  if (!ix.skipped.empty() || !iy.skipped.empty()) {
    v.outcome = Outcome::outside_domain;
    return v;
  }
  if (!ix.stabilized || !iy.stabilized) {
    v.outcome = Outcome::unstable;
    return v;
  }
  if (ix.ideal == iy.ideal) {
    v.outcome = Outcome::equal;
    return v;
  }

  v.outcome = Outcome::distinct;
  // witness search: x's basis at y's base point, then on y's sample,
  // then symmetrically
  if (auto w = nonvanishing_at(ix.ideal, y)) {
    v.witness = std::move(w);
    v.witness_side = 0;
    return v;
  }
  OrbitSample sy = orbit_sample(spec, y, iy.used_len, cap);
  auto sy_pts = sy.points();
  if (auto w = nonvanishing_on_sample(ix.ideal, sy_pts)) {
    v.witness = std::move(w);
    v.witness_side = 0;
    return v;
  }
  if (auto w = nonvanishing_at(iy.ideal, x)) {
    v.witness = std::move(w);
    v.witness_side = 1;
    return v;
  }
  OrbitSample sx = orbit_sample(spec, x, ix.used_len, cap);
  auto sx_pts = sx.points();
  if (auto w = nonvanishing_on_sample(iy.ideal, sx_pts)) {
    v.witness = std::move(w);
    v.witness_side = 1;
    return v;
  }
  // distinct canonical bases always leave a witness on one of the samples
  throw std::logic_error("distinct ideals without separating witness");
}

bool PhiInvarianceReport::passed() const {
  for (const Entry& e : entries)
    if (e.defined && !e.equal) return false;
  return true;
}

PhiInvarianceReport check_phi_invariance(const SemigroupSpec& spec,
                                         const Point& point, std::uint32_t d,
                                         std::size_t window,
                                         std::size_t len_limit,
                                         std::size_t cap) {
  PhiInvarianceReport report;
  StabilizedIdeal base = phi_proxy(spec, point, d, window, len_limit, cap);
  report.base_stabilized = base.stabilized;
  report.base_skipped = base.skipped.size();

  for (std::size_t gi = 0; gi < spec.generators().size(); ++gi) {
    PhiInvarianceReport::Entry e;
    e.gen_index = gi;
    auto img = spec.generators()[gi].eval(point);
    if (img) {
      e.defined = true;
      StabilizedIdeal im = phi_proxy(spec, *img, d, window, len_limit, cap);
      e.equal = im.ideal == base.ideal;
      e.image_stabilized = im.stabilized;
      e.image_skipped = im.skipped.size();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool FiberReport::passed() const {
  return std::none_of(probes.begin(), probes.end(),
                      [](const ProbeResult& p) { return p.violation; });
}

FiberReport fiber_check(const SemigroupSpec& spec, const Point& x,
                        std::span<const Point> probes, std::uint32_t d,
                        std::size_t window, std::size_t len_limit,
                        std::size_t cap) {
  if (!spec.monoid())
    throw UsageError("fiber_check requires a monoid (identity word)");

  FiberReport report;
  StabilizedIdeal ix = phi_proxy(spec, x, d, window, len_limit, cap);
  for (const Point& p : probes) {
    FiberReport::ProbeResult r;
    r.probe = p;
    StabilizedIdeal ip = phi_proxy(spec, p, d, window, len_limit, cap);
    r.equal = ip.ideal == ix.ideal;
    r.member = std::all_of(ix.ideal.basis.begin(), ix.ideal.basis.end(),
                           [&](const Poly& f) { return f.eval(p).is_zero(); });
    r.violation = r.equal && !r.member;
    report.probes.push_back(std::move(r));
  }
  return report;
}

}  // namespace orbitsep
