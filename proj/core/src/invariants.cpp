#include "orbitsep/invariants.hpp"

#include <set>

namespace orbitsep {

InvariantBasis poly_invariants(const SemigroupSpec& spec, std::uint32_t d) {
  std::size_t n = spec.nvars();
  Field f = spec.field();
  std::vector<Monomial> mons = monomials_up_to(n, d);

  // Per generator g = (a_1/b_1, ..., a_n/b_n): with D = (b_1...b_n)^d,
  // each monomial satisfies M.g = P_M / D for the polynomial
  // P_M = prod a_i^{e_i} b_i^{d-e_i}. The invariance of f = sum c_M M is
  // the coefficient-wise vanishing of sum c_M (P_M - M D).
  std::vector<std::vector<Poly>> constraint_blocks;
  for (const SelfMap& g : spec.generators()) {
    Poly dprod = Poly::constant(n, FieldElem::one(f));
    for (const RatFunc& c : g.components()) dprod *= c.den();
    Poly big_d = dprod.pow(d);

    std::vector<Poly> constraints;
    constraints.reserve(mons.size());
    for (const Monomial& m : mons) {
      Poly pm = Poly::constant(n, FieldElem::one(f));
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i]) pm *= g.components()[i].num().pow(m[i]);
        pm *= g.components()[i].den().pow(d - m[i]);
      }
      Poly mm(n, f);
      mm.add_term(m, FieldElem::one(f));
      constraints.push_back(pm - mm * big_d);
    }
    constraint_blocks.push_back(std::move(constraints));
  }

  // stack the generators' constraint rows into one linear system in c_M
  std::vector<std::vector<FieldElem>> rows;
  for (const auto& block : constraint_blocks) {
    std::set<Monomial, GradedLexLess> appearing;
    for (const Poly& c : block)
      for (const auto& [m, coef] : c.terms()) appearing.insert(m);
    for (const Monomial& mu : appearing) {
      std::vector<FieldElem> row;
      row.reserve(mons.size());
      for (const Poly& c : block) row.push_back(c.coeff(mu));
      rows.push_back(std::move(row));
    }
  }

  InvariantBasis out;
  out.d = d;
  std::vector<std::vector<FieldElem>> kernel;
  if (rows.empty()) {
    // no constraints at all: every polynomial is invariant
    for (std::size_t j = 0; j < mons.size(); ++j) {
      std::vector<FieldElem> v(mons.size(), FieldElem::zero(f));
      v[j] = FieldElem::one(f);
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = nullspace(Matrix::from_rows(f, rows));
  }
  for (const auto& v : kernel) {
    Poly p(n, f);
    for (std::size_t j = 0; j < mons.size(); ++j) p.add_term(mons[j], v[j]);
    out.basis.push_back(std::move(p));
  }
  // free-column order is already increasing by leading monomial
  return out;
}

InvariantCheck verify_rational_invariant(const SemigroupSpec& spec,
                                         const Poly& p, const Poly& q) {
  if (q.is_zero()) throw UsageError("invariant denominator must be nonzero");
  if (p.nvars() != spec.nvars() || q.nvars() != spec.nvars())
    throw UsageError("invariant arity mismatch");

  InvariantCheck check;
  RatFunc pf(p), qf(q);
  for (std::size_t gi = 0; gi < spec.generators().size(); ++gi) {
    const SelfMap& g = spec.generators()[gi];
    RatFunc pg = compose(p, g.components());
    RatFunc qg = compose(q, g.components());
    RatFunc residue = pg * qf - qg * pf;
    if (!residue.is_zero()) {
      check.ok = false;
      check.residues.emplace_back(gi, residue.num());
    }
  }
  return check;
}

DensityReport density_evidence(const SemigroupSpec& spec, const Point& point,
                               std::uint32_t d_orbit, std::uint32_t d_inv,
                               std::size_t window, std::size_t len_limit,
                               std::size_t cap) {
  DensityReport report;
  report.point = point;
  report.d_orbit = d_orbit;
  report.d_inv = d_inv;

  StabilizedIdeal stab =
      stabilized_ideal(spec, point, d_orbit, window, len_limit, cap);
  report.stabilized = stab.stabilized;
  report.skipped = stab.skipped.size();
  report.orbit_ideal_zero = stab.stabilized && stab.ideal.hd() == 0;

  report.invariants_trivial = poly_invariants(spec, d_inv).dim() == 1;

  ExceptionalVerdict v =
      is_exceptional(spec, point, d_orbit, std::max<std::size_t>(stab.used_len, 1));
  report.exceptional_flag = v.kind != ExceptionalVerdict::Kind::typical;

  report.verdict = report.orbit_ideal_zero && report.invariants_trivial &&
                           !report.exceptional_flag
                       ? DensityReport::Verdict::evidence_for_dense
                       : DensityReport::Verdict::inconclusive;
  return report;
}

}  // namespace orbitsep
