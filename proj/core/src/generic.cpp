#include "orbitsep/generic.hpp"

#include <algorithm>
#include <set>

namespace orbitsep {

namespace {

Poly one_poly(std::size_t nvars, Field f) {
  return Poly::constant(nvars, FieldElem::one(f));
}

// Clear denominators along a row: entry_j becomes num_j * prod_{k != j} den_k.
std::vector<Poly> cleared_row(const std::vector<RatFunc>& row) {
  std::size_t n = row.size();
  std::vector<Poly> out;
  out.reserve(n);
  bool all_poly = true;
  for (const RatFunc& e : row) all_poly &= e.is_polynomial();
  if (all_poly) {
    for (const RatFunc& e : row) out.push_back(e.num());
    return out;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Poly p = row[j].num();
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) p *= row[k].den();
    out.push_back(std::move(p));
  }
  return out;
}

struct PolyElim {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // original row indices
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free forward elimination over the polynomial ring, with column
// skipping and sparsest-pivot selection.
PolyElim poly_forward(std::vector<std::vector<Poly>> rows,
                      std::vector<std::size_t> row_ids, std::size_t ncols,
                      std::size_t nvars, Field f) {
  PolyElim out;
  Poly prev = one_poly(nvars, f);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = rows.size();
    std::size_t best_terms = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      std::size_t nt = rows[i][c].terms().size();
      if (sel == rows.size() || nt < best_terms) {
        sel = i;
        best_terms = nt;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::swap(row_ids[r], row_ids[sel]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j)
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j])
                         .divided_exact(prev);
      rows[i][c] = Poly(nvars, f);
    }
    prev = rows[r][c];
    out.pivot_rows.push_back(row_ids[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

PolyElim exact_elimination(const GenericMatrix& gm, std::size_t nvars,
                           Field f) {
  std::vector<std::vector<Poly>> rows;
  rows.reserve(gm.row_count());
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < gm.row_count(); ++i) {
    rows.push_back(cleared_row(gm.rows[i]));
    ids.push_back(i);
  }
  return poly_forward(std::move(rows), std::move(ids), gm.col_count(), nvars,
                      f);
}

// Plain elimination with row tracking, for specialized matrices.
PolyElim point_elimination(const Matrix& m) {
  std::vector<std::vector<FieldElem>> rows(m.rows());
  std::vector<std::size_t> ids(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i] = m.row(i);
    ids[i] = i;
  }
  PolyElim out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    std::swap(ids[r], ids[sel]);
    FieldElem inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      FieldElem fac = rows[i][c] * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        rows[i][j] -= fac * rows[r][j];
    }
    out.pivot_rows.push_back(ids[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

Matrix specialize(const GenericMatrix& gm, const Point& pt, Field f) {
  Matrix m(gm.row_count(), gm.col_count(), f);
  for (std::size_t i = 0; i < gm.row_count(); ++i)
    for (std::size_t j = 0; j < gm.col_count(); ++j) {
      auto v = gm.rows[i][j].eval(pt);
      if (!v) throw RetryableError("specialization point hit a denominator");
      m.set(i, j, *v);
    }
  return m;
}

Point find_specialization_point(const GenericMatrix& gm, std::size_t nvars,
                                Field f, Rng& rng) {
  if (!f.rational())
    throw UsageError("specialized rank mode requires the rational field");
  for (int attempt = 0; attempt < 200; ++attempt) {
    Point pt = rng.rational_point(nvars);
    bool ok = true;
    for (const auto& row : gm.rows) {
      for (const RatFunc& e : row)
        if (e.den().eval(pt).is_zero()) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return pt;
  }
  throw RetryableError(
      "no specialization point found off the denominators; use exact mode");
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void combinations(const std::vector<std::size_t>& items, std::size_t k,
                  std::size_t limit,
                  std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (out.size() >= limit) return;
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
      cur.push_back(items[i]);
      self(self, i + 1);
      cur.pop_back();
      if (out.size() >= limit) return;
    }
  };
  rec(rec, 0);
}

// Size-k index subsets ordered by how many members leave the preferred
// set: swap count 0 first (the preferred set itself), then 1, ...
std::vector<std::vector<std::size_t>> subsets_near(
    std::size_t universe, const std::vector<std::size_t>& preferred,
    std::size_t k, std::size_t limit) {
  std::vector<std::size_t> in = preferred, out_items;
  std::sort(in.begin(), in.end());
  for (std::size_t i = 0; i < universe; ++i)
    if (!std::binary_search(in.begin(), in.end(), i)) out_items.push_back(i);

  std::vector<std::vector<std::size_t>> result;
  for (std::size_t s = 0; s <= k && result.size() < limit; ++s) {
    if (s > out_items.size() || k - s > in.size()) continue;
    std::vector<std::vector<std::size_t>> keep, add;
    combinations(in, k - s, limit, keep);
    combinations(out_items, s, limit, add);
    for (const auto& a : keep)
      for (const auto& b : add) {
        std::vector<std::size_t> sub = a;
        sub.insert(sub.end(), b.begin(), b.end());
        std::sort(sub.begin(), sub.end());
        result.push_back(std::move(sub));
        if (result.size() >= limit) return result;
      }
  }
  return result;
}

// Determinant of a cleared polynomial square matrix, fraction-free.
Poly poly_det(std::vector<std::vector<Poly>> rows, std::size_t nvars,
              Field f) {
  std::size_t k = rows.size();
  if (k == 0) return one_poly(nvars, f);
  int sign = 1;
  Poly prev = one_poly(nvars, f);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t sel = c;
    while (sel < k && rows[sel][c].is_zero()) ++sel;
    if (sel == k) return Poly(nvars, f);
    if (sel != c) {
      std::swap(rows[c], rows[sel]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j)
        rows[i][j] = (rows[c][c] * rows[i][j] - rows[i][c] * rows[c][j])
                         .divided_exact(prev);
      rows[i][c] = Poly(nvars, f);
    }
    prev = rows[c][c];
  }
  Poly det = rows[k - 1][k - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

GenericMatrix generic_matrix(const SemigroupSpec& spec, std::uint32_t d,
                             std::size_t max_len) {
  GenericMatrix gm;
  gm.d = d;
  gm.row_maps = symbolic_iterates(spec, max_len);
  std::vector<Monomial> mons = monomials_up_to(spec.nvars(), d);
  for (const auto& [w, m] : gm.row_maps) {
    gm.row_words.push_back(w);
    std::vector<RatFunc> row;
    row.reserve(mons.size());
    for (const Monomial& mon : mons) {
      Poly p(spec.nvars(), spec.field());
      p.add_term(mon, FieldElem::one(spec.field()));
      row.push_back(compose(p, m.components()));
    }
    gm.rows.push_back(std::move(row));
  }
  return gm;
}

GenericRankCert generic_rank(const SemigroupSpec& spec, std::uint32_t d,
                             std::size_t max_len, RankMethod method,
                             Rng& rng) {
  if (max_len < 1) throw UsageError("generic_rank requires max_len >= 1");

  auto rank_of = [&](std::size_t len, bool want_pivots,
                     std::vector<Word>* pw,
                     std::vector<std::size_t>* pc) -> std::size_t {
    GenericMatrix gm = generic_matrix(spec, d, len);
    PolyElim elim;
    if (method == RankMethod::exact) {
      elim = exact_elimination(gm, spec.nvars(), spec.field());
    } else {
      // two independent specializations; retry on disagreement, then
      // give up on randomization and eliminate exactly
      bool agreed = false;
      for (int round = 0; round < 3 && !agreed; ++round) {
        Point p1 = find_specialization_point(gm, spec.nvars(), spec.field(), rng);
        Point p2 = find_specialization_point(gm, spec.nvars(), spec.field(), rng);
        PolyElim e1 = point_elimination(specialize(gm, p1, spec.field()));
        PolyElim e2 = point_elimination(specialize(gm, p2, spec.field()));
        if (e1.rank == e2.rank) {
          elim = std::move(e1);
          agreed = true;
        }
      }
      if (!agreed) elim = exact_elimination(gm, spec.nvars(), spec.field());
    }
    if (want_pivots) {
      pw->clear();
      for (std::size_t i : elim.pivot_rows) pw->push_back(gm.row_words[i]);
      *pc = elim.pivot_cols;
    }
    return elim.rank;
  };

  GenericRankCert cert;
  cert.d = d;
  cert.max_len = max_len;
  cert.method = method;
  cert.r = rank_of(max_len, true, &cert.pivot_words, &cert.pivot_cols);
  cert.hd = monomials_up_to(spec.nvars(), d).size() - cert.r;
  cert.rank_stable = rank_of(max_len + 1, false, nullptr, nullptr) == cert.r;
  return cert;
}

ExceptionalIdealGens exceptional_generators(const SemigroupSpec& spec,
                                            std::uint32_t d,
                                            std::size_t max_len,
                                            const GenericRankCert& cert,
                                            std::size_t minor_budget) {
  if (minor_budget == 0) throw UsageError("minor budget must be positive");
  if (cert.d != d || cert.max_len != max_len)
    throw UsageError("certificate does not match the requested system");

  GenericMatrix gm = generic_matrix(spec, d, max_len);
  std::size_t r = cert.r;

  ExceptionalIdealGens out;
  out.d = d;
  out.r = r;
  if (r == 0) return out;

  // map pivot words back to row indices
  std::vector<std::size_t> pivot_rows;
  for (const Word& w : cert.pivot_words)
    for (std::size_t i = 0; i < gm.row_words.size(); ++i)
      if (gm.row_words[i] == w) {
        pivot_rows.push_back(i);
        break;
      }

  auto row_subsets =
      subsets_near(gm.row_count(), pivot_rows, r, minor_budget);
  auto col_subsets =
      subsets_near(gm.col_count(), cert.pivot_cols, r, minor_budget);

  std::size_t total =
      binom(gm.row_count(), r) * binom(gm.col_count(), r);
  for (const auto& rs : row_subsets) {
    for (const auto& cs : col_subsets) {
      if (out.examined >= minor_budget) {
        out.exhausted_budget = out.examined < total;
        return out;
      }
      ++out.examined;
      std::vector<std::vector<Poly>> sub;
      sub.reserve(r);
      for (std::size_t i : rs) {
        std::vector<RatFunc> row;
        row.reserve(r);
        for (std::size_t j : cs) row.push_back(gm.rows[i][j]);
        sub.push_back(cleared_row(row));
      }
      Poly det = poly_det(std::move(sub), spec.nvars(), spec.field());
      if (det.is_zero()) continue;
      Poly gen = det.primitive();
      if (std::find(out.gens.begin(), out.gens.end(), gen) == out.gens.end())
        out.gens.push_back(std::move(gen));
    }
  }
  out.exhausted_budget = out.examined < total;
  return out;
}

ExceptionalVerdict is_exceptional(const SemigroupSpec& spec,
                                  const Point& point, std::uint32_t d,
                                  std::size_t max_len,
                                  const GenericRankCert* cert) {
  GenericRankCert local;
  if (!cert) {
    Rng rng(0);
    local = generic_rank(spec, d, max_len, RankMethod::exact, rng);
    cert = &local;
  }

  GenericMatrix gm = generic_matrix(spec, d, max_len);
  std::vector<Point> images;
  images.reserve(gm.row_maps.size());
  for (const auto& [w, m] : gm.row_maps) {
    auto img = m.eval(point);
    if (!img)
      return {ExceptionalVerdict::Kind::outside_domain, 0, cert->r};
    images.push_back(std::move(*img));
  }

  Matrix at_point = eval_matrix(images, spec.nvars(), d, spec.field());
  std::size_t rank = rref(at_point).rank;
  return {rank < cert->r ? ExceptionalVerdict::Kind::exceptional
                         : ExceptionalVerdict::Kind::typical,
          rank, cert->r};
}

InvarianceReport check_forward_invariance(const SemigroupSpec& spec,
                                          const ExceptionalIdealGens& gens,
                                          std::span<const Point> sample,
                                          std::size_t max_len) {
  for (const Point& p : sample)
    for (const Poly& g : gens.gens)
      if (!g.eval(p).is_zero())
        throw UsageError(
            "sample point does not lie on the zero set of the generators");

  Rng rng(0);
  GenericRankCert cert =
      generic_rank(spec, gens.d, max_len, RankMethod::exact, rng);

  InvarianceReport report;
  for (std::size_t gi = 0; gi < spec.generators().size(); ++gi) {
    for (const Point& p : sample) {
      auto img = spec.generators()[gi].eval(p);
      if (!img) {
        report.undefined.push_back({gi, p, {}, 0});
        continue;
      }
      ++report.checked;
      ExceptionalVerdict v =
          is_exceptional(spec, *img, gens.d, max_len, &cert);
      if (v.kind == ExceptionalVerdict::Kind::outside_domain)
        report.outside_domain.push_back({gi, p, *img, 0});
      else if (v.kind == ExceptionalVerdict::Kind::typical)
        report.violations.push_back({gi, p, *img, v.rank_at_point});
    }
  }
  return report;
}

}  // namespace orbitsep
