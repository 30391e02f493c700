#include "nilcoh/ce.hpp"

#include <algorithm>

namespace nilcoh {

std::vector<std::vector<std::size_t>> k_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > m) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    // next lex subset
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out = {{}};
  return out;
}

CochainIndex::CochainIndex(std::size_t m, std::size_t k, std::size_t dim_m)
    : dim_m_(dim_m), subsets_(k_subsets(m, k)) {
  for (std::size_t r = 0; r < subsets_.size(); ++r) rank_[subsets_[r]] = r;
}

std::size_t CochainIndex::rank_of(const std::vector<std::size_t>& subset) const {
  auto it = rank_.find(subset);
  require(it != rank_.end(), error::code::internal, "unknown subset");
  return it->second;
}

std::optional<std::pair<std::size_t, int>> CochainIndex::insert(
    std::size_t x, const std::vector<std::size_t>& set) const {
  std::vector<std::size_t> merged;
  merged.reserve(set.size() + 1);
  std::size_t pos = 0;
  bool placed = false;
  for (std::size_t e : set) {
    if (e == x) return std::nullopt;
    if (!placed && e > x) {
      merged.push_back(x);
      placed = true;
    }
    if (!placed) ++pos;
    merged.push_back(e);
  }
  if (!placed) merged.push_back(x);
  return std::make_pair(rank_of(merged), pos % 2 == 0 ? 1 : -1);
}

Matrix ce_differential(const LiePtr& g, const GModule& m, std::size_t k) {
  require(m.algebra() == g, error::code::parse, "module is over a different algebra");
  const Field& f = g->field();
  const std::size_t dm = m.dim();
  CochainIndex in(g->dim(), k, dm), out(g->dim(), k + 1, dm);
  Matrix d(f, out.size(), in.size());
  for (std::size_t rs = 0; rs < out.subsets(); ++rs) {
    const auto& s = out.subset(rs);
    // action term
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> u;
      for (std::size_t t = 0; t <= k; ++t)
        if (t != i) u.push_back(s[t]);
      std::size_t ru = in.rank_of(u);
      const Matrix& rho = m.action_basis(s[i]);
      bool neg = i % 2 == 1;
      for (std::size_t a = 0; a < dm; ++a)
        for (std::size_t b = 0; b < dm; ++b) {
          const Scalar& v = rho.at(a, b);
          if (v.is_zero()) continue;
          Scalar& slot = d.at(out.at(rs, a), in.at(ru, b));
          slot = neg ? slot - v : slot + v;
        }
    }
    // bracket contraction term
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = i + 1; j <= k; ++j) {
        std::vector<std::size_t> t;
        for (std::size_t p = 0; p <= k; ++p)
          if (p != i && p != j) t.push_back(s[p]);
        bool neg = (i + j) % 2 == 1;
        for (const auto& [l, c] : g->bracket_basis_upper(s[i], s[j])) {
          auto ins = in.insert(l, t);
          if (!ins) continue;
          auto [ru, sg] = *ins;
          Scalar coeff = sg < 0 ? -c : c;
          if (neg) coeff = -coeff;
          for (std::size_t b = 0; b < dm; ++b) d.at(out.at(rs, b), in.at(ru, b)) += coeff;
        }
      }
  }
  return d;
}

CohomologyResult ce_cohomology(const LiePtr& g, const GModule& m, std::size_t k) {
  const Field& f = g->field();
  CochainIndex in(g->dim(), k, m.dim());
  Matrix dk = ce_differential(g, m, k);
  Subspace z = Subspace::span(f, in.size(), dk.nullspace_basis());
  Subspace b = Subspace::zero(f, in.size());
  if (k >= 1) {
    Matrix dprev = ce_differential(g, m, k - 1);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dprev.cols(); ++j) cols.push_back(dprev.col(j));
    b = Subspace::span(f, in.size(), cols);
  }
  require(z.contains(b), error::code::internal, "d o d != 0");
  return CohomologyResult{k, z, b, z.dim(), b.dim(), z.dim() - b.dim()};
}

std::vector<std::size_t> betti(const LiePtr& g) {
  GModule triv = GModule::trivial(g, 1);
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k <= g->dim(); ++k) b.push_back(ce_cohomology(g, triv, k).h_dim);
  return b;
}

H2Chart::H2Chart(const LiePtr& g, const GModule& m)
    : z_(Subspace::zero(g->field(), 0)),
      b_(z_),
      c_(z_) {
  CohomologyResult r = ce_cohomology(g, m, 2);
  z_ = r.z;
  b_ = r.b;
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < z_.dim(); ++i) reduced.push_back(b_.reduce(z_.basis().row(i)));
  c_ = Subspace::span(g->field(), z_.ambient_dim(), reduced);
}

Vec H2Chart::coords(const Vec& cocycle) const {
  require(z_.contains(cocycle), error::code::internal, "coords of a non-cocycle");
  return c_.coords(b_.reduce(cocycle));
}

Vec H2Chart::representative(const Vec& h2coords) const {
  Vec v = zero_vec(c_.field(), c_.ambient_dim());
  for (std::size_t i = 0; i < c_.dim(); ++i) add_scaled(v, h2coords[i], c_.basis().row(i));
  return v;
}

namespace {

AdaptedBasis adapt_to_chain(const Field& f, std::size_t dim,
                            const std::vector<std::pair<const Subspace*, std::size_t>>& chain) {
  // chain listed from the smallest space outward; each vector gets the weight
  // of the first chain member producing it
  std::vector<Vec> cols;
  std::vector<std::size_t> weights;
  Subspace cur = Subspace::zero(f, dim);
  for (const auto& [sp, w] : chain) {
    for (std::size_t i = 0; i < sp->dim(); ++i) {
      Vec v = sp->basis().row(i);
      if (cur.contains(v)) continue;
      cur = cur.sum(Subspace::span(f, dim, {v}));
      cols.push_back(v);
      weights.push_back(w);
    }
  }
  require(cols.size() == dim, error::code::internal, "chain does not exhaust the space");
  Matrix p(f, dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) p.at(i, j) = cols[j][i];
  Matrix q = p.inverse();
  return AdaptedBasis{std::move(p), std::move(q), std::move(weights)};
}

}  // namespace

AdaptedBasis lcs_adapted_basis(const LieAlgebra& g) {
  auto lcs = g.lower_central_series();
  std::vector<std::pair<const Subspace*, std::size_t>> chain;
  for (std::size_t i = lcs.size() - 1; i-- > 0;) chain.emplace_back(&lcs[i], i + 1);
  return adapt_to_chain(g.field(), g.dim(), chain);
}

AdaptedBasis filtration_adapted_basis(const ModuleFiltration& filt) {
  std::vector<std::pair<const Subspace*, std::size_t>> chain;
  for (std::size_t j = 1; j < filt.levels.size(); ++j) chain.emplace_back(&filt.levels[j], j);
  const Field& f = filt.levels.back().field();
  return adapt_to_chain(f, filt.levels.back().ambient_dim(), chain);
}

namespace {

Scalar det_small(const Matrix& q, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
  const Field& f = q.field();
  std::size_t k = rows.size();
  auto e = [&](std::size_t i, std::size_t j) { return q.at(rows[i], cols[j]); };
  switch (k) {
    case 0:
      return Scalar::one(f);
    case 1:
      return e(0, 0);
    case 2:
      return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    case 3:
      return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
             e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
             e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    default:
      throw error(error::code::internal, "minor size above 3 not supported");
  }
}

}  // namespace

Subspace filtered_cochains_with(const LiePtr& g, const GModule& m, std::size_t k, long r,
                                const AdaptedBasis& gb, const AdaptedBasis& mb) {
  const Field& f = g->field();
  CochainIndex idx(g->dim(), k, m.dim());
  std::vector<Vec> gens;
  auto asubs = k_subsets(g->dim(), k);
  for (const auto& a : asubs) {
    long wsum = 0;
    for (std::size_t x : a) wsum += long(gb.weights[x]);
    long level_cap = r - wsum + 1;
    if (level_cap <= 0) continue;
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (long(mb.weights[c]) > level_cap) continue;
      // cochain equal to adapted module vector c on adapted wedge a, zero on
      // the other adapted wedges; expand into standard coordinates
      Vec gen = zero_vec(f, idx.size());
      Vec mc = mb.p.col(c);
      for (std::size_t rs = 0; rs < idx.subsets(); ++rs) {
        Scalar d = det_small(gb.q, a, idx.subset(rs));
        if (d.is_zero()) continue;
        for (std::size_t t = 0; t < m.dim(); ++t)
          if (!mc[t].is_zero()) gen[idx.at(rs, t)] += d * mc[t];
      }
      gens.push_back(std::move(gen));
    }
  }
  return Subspace::span(f, idx.size(), gens);
}

Subspace filtered_cochains(const LiePtr& g, const GModule& m, std::size_t k, long r) {
  AdaptedBasis gb = lcs_adapted_basis(*g);
  AdaptedBasis mb = filtration_adapted_basis(ascending_filtration(m));
  return filtered_cochains_with(g, m, k, r, gb, mb);
}

FilteredH2 filtered_h2(const LiePtr& g, const GModule& m, long r, const H2Chart& chart) {
  Subspace fr = filtered_cochains(g, m, 2, r);
  Subspace zf = chart.cocycles().intersect(fr);
  std::size_t dim = zf.sum(chart.coboundaries()).dim() - chart.coboundaries().dim();
  std::vector<Vec> coords;
  for (std::size_t i = 0; i < zf.dim(); ++i) coords.push_back(chart.coords(zf.basis().row(i)));
  Subspace in_chart = Subspace::span(g->field(), chart.dim(), coords);
  require(in_chart.dim() == dim, error::code::internal, "filtered H2 dimension mismatch");
  return FilteredH2{dim, std::move(in_chart)};
}

FilteredH2 filtered_h2(const LiePtr& g, const GModule& m, long r) {
  H2Chart chart(g, m);
  return filtered_h2(g, m, r, chart);
}

Matrix cochain2_pullback(const AlgebraHom& phi, std::size_t dim_m) {
  const Field& f = phi.matrix().field();
  CochainIndex src(phi.codomain()->dim(), 2, dim_m);
  CochainIndex dst(phi.domain()->dim(), 2, dim_m);
  Matrix pb(f, dst.size(), src.size());
  const Matrix& mm = phi.matrix();
  for (std::size_t rh = 0; rh < dst.subsets(); ++rh) {
    std::size_t i = dst.subset(rh)[0], j = dst.subset(rh)[1];
    for (std::size_t rg = 0; rg < src.subsets(); ++rg) {
      std::size_t a = src.subset(rg)[0], b = src.subset(rg)[1];
      Scalar coeff = mm.at(a, i) * mm.at(b, j) - mm.at(b, i) * mm.at(a, j);
      if (coeff.is_zero()) continue;
      for (std::size_t t = 0; t < dim_m; ++t) pb.at(dst.at(rh, t), src.at(rg, t)) = coeff;
    }
  }
  return pb;
}

InducedH2 induced_map_h2(const AlgebraHom& phi, const GModule& m, const H2Chart& chart) {
  require(m.algebra() == phi.codomain(), error::code::parse, "module must live over the codomain");
  const Field& f = phi.matrix().field();
  GModule mh = GModule::pullback(phi, m);
  CohomologyResult ch = ce_cohomology(phi.domain(), mh, 2);
  Matrix pb = cochain2_pullback(phi, m.dim());
  // z pulls back to a coboundary iff red_{B^2(h)} (pb z) = 0
  Matrix sys = ch.b.reduction_matrix() * pb;
  Subspace v = Subspace::span(f, pb.cols(), sys.nullspace_basis());
  Subspace kz = v.intersect(chart.cocycles());
  require(kz.contains(chart.coboundaries()), error::code::internal,
          "pullback does not preserve coboundaries");
  std::size_t kernel_dim = kz.dim() - chart.coboundaries().dim();
  std::vector<Vec> coords;
  for (std::size_t i = 0; i < kz.dim(); ++i) coords.push_back(chart.coords(kz.basis().row(i)));
  Subspace in_chart = Subspace::span(f, chart.dim(), coords);
  require(in_chart.dim() == kernel_dim, error::code::internal, "kernel dimension mismatch");
  std::size_t image_dim = chart.dim() - kernel_dim;
  return InducedH2{kernel_dim, ch.h_dim - image_dim, std::move(in_chart)};
}

InducedH2 induced_map_h2(const AlgebraHom& phi, const GModule& m) {
  H2Chart chart(phi.codomain(), m);
  return induced_map_h2(phi, m, chart);
}

Vec eval_2cochain(const Vec& f, const CochainIndex& idx, const Vec& u, const Vec& v) {
  const Field& fld = u.empty() ? v[0].field() : u[0].field();
  Vec out = zero_vec(fld, idx.dim_m());
  for (std::size_t r = 0; r < idx.subsets(); ++r) {
    std::size_t i = idx.subset(r)[0], j = idx.subset(r)[1];
    Scalar c = u[i] * v[j] - u[j] * v[i];
    if (c.is_zero()) continue;
    for (std::size_t t = 0; t < idx.dim_m(); ++t) out[t] += c * f[idx.at(r, t)];
  }
  return out;
}

bool cocycles_vanish_on_center_wedge_derived(const LiePtr& g) {
  GModule triv = GModule::trivial(g, 1);
  CohomologyResult r = ce_cohomology(g, triv, 2);
  CochainIndex idx(g->dim(), 2, 1);
  Subspace zc = g->center();
  Subspace der = g->derived();
  for (std::size_t i = 0; i < r.z.dim(); ++i) {
    Vec f = r.z.basis().row(i);
    for (std::size_t a = 0; a < zc.dim(); ++a)
      for (std::size_t b = 0; b < der.dim(); ++b)
        if (!is_zero(eval_2cochain(f, idx, zc.basis().row(a), der.basis().row(b)))) return false;
  }
  return true;
}

}  // namespace nilcoh
