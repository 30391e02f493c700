#include "nilcoh/extensions.hpp"

namespace nilcoh {

namespace {

Vec module_coords(const AbelianExtension& e, const Vec& total_vec) {
  auto c = e.inclusion.solve(total_vec);
  require(c.has_value(), error::code::internal, "vector is not in the extension kernel");
  return *c;
}

}  // namespace

void validate_extension(const AbelianExtension& e) {
  const std::size_t dm = e.module.dim();
  require(e.total->dim() == dm + e.g->dim(), error::code::validate, "extension dimension mismatch");
  require(e.projection.is_surjective(), error::code::validate, "projection is not surjective");
  std::vector<Vec> inc_cols;
  for (std::size_t a = 0; a < dm; ++a) inc_cols.push_back(e.inclusion.col(a));
  Subspace img = Subspace::span(e.g->field(), e.total->dim(), inc_cols);
  require(img.dim() == dm && img == e.projection.kernel(), error::code::validate,
          "inclusion image is not the kernel of the projection");
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t b = a + 1; b < dm; ++b)
      require(is_zero(e.total->bracket(inc_cols[a], inc_cols[b])), error::code::validate,
              "kernel is not abelian");
  // induced action matches the module action
  for (std::size_t i = 0; i < e.g->dim(); ++i) {
    Vec ei = zero_vec(e.g->field(), e.g->dim());
    ei[i] = Scalar::one(e.g->field());
    auto lift = e.projection.matrix().solve(ei);
    require(lift.has_value(), error::code::internal, "no lift of a basis vector");
    for (std::size_t a = 0; a < dm; ++a) {
      Vec lhs = e.total->bracket(*lift, inc_cols[a]);
      Vec rhs = e.inclusion.apply(e.module.act_basis(i, module_coords(e, inc_cols[a])));
      require(lhs == rhs, error::code::validate, "induced action disagrees with the module");
    }
  }
}

AbelianExtension extension_from_cocycle(const LiePtr& g, const GModule& m, const Vec& omega) {
  require(m.algebra() == g, error::code::parse, "module must live over g");
  const Field& f = g->field();
  const std::size_t dm = m.dim(), dg = g->dim(), n = dm + dg;
  CochainIndex idx(dg, 2, dm);
  require(omega.size() == idx.size(), error::code::parse, "cochain has the wrong size");
  require(is_zero(ce_differential(g, m, 2).apply(omega)), error::code::validate,
          "omega is not a cocycle");

  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
  // [(m_a, 0), (0, e_i)] = (-e_i m_a, 0)
  for (std::size_t a = 0; a < dm; ++a)
    for (std::size_t i = 0; i < dg; ++i) {
      SparseVec sv;
      for (std::size_t b = 0; b < dm; ++b) {
        const Scalar& v = m.action_basis(i).at(b, a);
        if (!v.is_zero()) sv.emplace_back(b, -v);
      }
      if (!sv.empty()) brackets.emplace_back(a, dm + i, std::move(sv));
    }
  // [(0, e_i), (0, e_j)] = (w(e_i ^ e_j), [e_i, e_j])
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j) {
      SparseVec sv;
      std::size_t r = idx.rank_of({i, j});
      for (std::size_t b = 0; b < dm; ++b)
        if (!omega[idx.at(r, b)].is_zero()) sv.emplace_back(b, omega[idx.at(r, b)]);
      for (const auto& [k, c] : g->bracket_basis_upper(i, j)) sv.emplace_back(dm + k, c);
      if (!sv.empty()) brackets.emplace_back(dm + i, dm + j, std::move(sv));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < dm; ++a) labels.push_back("m" + std::to_string(a + 1));
  for (const auto& l : g->labels()) labels.push_back(l);
  auto total = std::make_shared<const LieAlgebra>(f, std::move(labels), std::move(brackets));

  Matrix inc(f, n, dm);
  for (std::size_t a = 0; a < dm; ++a) inc.at(a, a) = Scalar::one(f);
  Matrix proj(f, dg, n);
  for (std::size_t i = 0; i < dg; ++i) proj.at(i, dm + i) = Scalar::one(f);
  AbelianExtension e{g, m, total, std::move(inc), AlgebraHom(total, g, std::move(proj))};
  validate_extension(e);
  return e;
}

Vec cocycle_from_extension(const AbelianExtension& e) {
  const Field& f = e.g->field();
  const std::size_t dg = e.g->dim(), n = e.total->dim(), dm = e.module.dim();
  AdaptedBasis gb = lcs_adapted_basis(*e.g);
  auto lcs_e = e.total->lower_central_series();
  // section on the adapted basis, chosen inside e^w for a weight-w vector
  Matrix s_ad(f, n, dg);
  for (std::size_t a = 0; a < dg; ++a) {
    std::size_t w = gb.weights[a];
    const Subspace& ew = lcs_e[std::min(w, lcs_e.size()) - 1];
    Matrix sys = e.projection.matrix() * ew.basis().transpose();
    auto c = sys.solve(gb.p.col(a));
    require(c.has_value(), error::code::internal, "projection misses a graded piece");
    Vec v = zero_vec(f, n);
    for (std::size_t t = 0; t < ew.dim(); ++t) add_scaled(v, (*c)[t], ew.basis().row(t));
    for (std::size_t i = 0; i < n; ++i) s_ad.at(i, a) = v[i];
  }
  Matrix s = s_ad * gb.q;
  CochainIndex idx(dg, 2, dm);
  Vec out = zero_vec(f, idx.size());
  for (std::size_t r = 0; r < idx.subsets(); ++r) {
    std::size_t i = idx.subset(r)[0], j = idx.subset(r)[1];
    Vec w = sub(e.total->bracket(s.col(i), s.col(j)), s.apply(e.g->bracket_basis(i, j)));
    Vec c = module_coords(e, w);
    for (std::size_t b = 0; b < dm; ++b) out[idx.at(r, b)] = c[b];
  }
  return out;
}

bool extensions_equivalent(const AbelianExtension& a, const AbelianExtension& b) {
  require(a.g == b.g && a.module.dim() == b.module.dim(), error::code::parse,
          "extensions over different data");
  Vec diff = sub(cocycle_from_extension(a), cocycle_from_extension(b));
  return ce_cohomology(a.g, a.module, 2).b.contains(diff);
}

bool extension_splits(const AbelianExtension& e) {
  return ce_cohomology(e.g, e.module, 2).b.contains(cocycle_from_extension(e));
}

PullbackExtension pullback_extension(const AbelianExtension& e, const AlgebraHom& p) {
  require(p.codomain() == e.g, error::code::parse, "pullback map must land in g");
  const Field& f = e.g->field();
  const LiePtr& qa = p.domain();
  const std::size_t t = e.total->dim(), nq = qa->dim(), dm = e.module.dim();
  // fiber product: pi(x) = p(y) inside e x q
  Matrix neg_p = p.matrix();
  for (std::size_t i = 0; i < neg_p.rows(); ++i)
    for (std::size_t j = 0; j < neg_p.cols(); ++j) neg_p.at(i, j) = -neg_p.at(i, j);
  Matrix sys = e.projection.matrix().hstack(neg_p);
  std::vector<Vec> null = sys.nullspace_basis();
  require(null.size() == dm + nq, error::code::internal, "fiber product has wrong dimension");

  // basis: kernel copies (i(m_a), 0), then lifts whose q-part is e_j
  std::vector<Vec> basis;
  for (std::size_t a = 0; a < dm; ++a) {
    Vec v = zero_vec(f, t + nq);
    Vec ia = e.inclusion.col(a);
    for (std::size_t i = 0; i < t; ++i) v[i] = ia[i];
    basis.push_back(std::move(v));
  }
  Matrix nmat = Matrix::from_rows(f, t + nq, null);
  Matrix nq_parts(f, nq, null.size());
  for (std::size_t r = 0; r < null.size(); ++r)
    for (std::size_t j = 0; j < nq; ++j) nq_parts.at(j, r) = null[r][t + j];
  for (std::size_t j = 0; j < nq; ++j) {
    Vec ej = zero_vec(f, nq);
    ej[j] = Scalar::one(f);
    auto c = nq_parts.solve(ej);
    require(c.has_value(), error::code::internal, "fiber product does not cover q");
    Vec v = zero_vec(f, t + nq);
    for (std::size_t r = 0; r < null.size(); ++r) add_scaled(v, (*c)[r], null[r]);
    basis.push_back(std::move(v));
  }
  Matrix b = Matrix::from_rows(f, t + nq, basis);
  Matrix bt = b.transpose();
  require(b.rank() == dm + nq, error::code::internal, "pullback basis is degenerate");

  auto coords = [&](const Vec& w) {
    auto c = bt.solve(w);
    require(c.has_value(), error::code::internal, "bracket left the fiber product");
    return *c;
  };
  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
  for (std::size_t i = 0; i < dm + nq; ++i)
    for (std::size_t j = i + 1; j < dm + nq; ++j) {
      Vec ui(basis[i].begin(), basis[i].begin() + t), vi(basis[i].begin() + t, basis[i].end());
      Vec uj(basis[j].begin(), basis[j].begin() + t), vj(basis[j].begin() + t, basis[j].end());
      Vec wh = e.total->bracket(ui, uj);
      Vec wq = qa->bracket(vi, vj);
      Vec w = wh;
      w.insert(w.end(), wq.begin(), wq.end());
      SparseVec sv = sparsify(coords(w));
      if (!sv.empty()) brackets.emplace_back(i, j, std::move(sv));
    }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < dm; ++a) labels.push_back("m" + std::to_string(a + 1));
  for (const auto& l : qa->labels()) labels.push_back(l);
  auto total = std::make_shared<const LieAlgebra>(f, std::move(labels), std::move(brackets));

  Matrix inc(f, dm + nq, dm);
  for (std::size_t a = 0; a < dm; ++a) inc.at(a, a) = Scalar::one(f);
  Matrix proj(f, nq, dm + nq);
  for (std::size_t j = 0; j < nq; ++j) proj.at(j, dm + j) = Scalar::one(f);
  GModule mq = GModule::pullback(p, e.module);
  AbelianExtension ext{qa, std::move(mq), total, std::move(inc), AlgebraHom(total, qa, std::move(proj))};
  validate_extension(ext);

  Matrix psi1(f, t, dm + nq);
  for (std::size_t k = 0; k < dm + nq; ++k)
    for (std::size_t i = 0; i < t; ++i) psi1.at(i, k) = basis[k][i];
  return PullbackExtension{std::move(ext), std::move(psi1)};
}

ExtensionClass class_of_extension(const AbelianExtension& e) {
  std::size_t r = e.total->nilpotency_class();
  std::size_t p = e.g->nilpotency_class();
  std::size_t q = ascending_filtration(e.module).q;
  require(p <= r && r <= p + q, error::code::property, "class sandwich violated");
  return ExtensionClass{r, p, q};
}

}  // namespace nilcoh
