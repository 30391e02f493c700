#include "nilcoh/gmodule.hpp"

namespace nilcoh {

GModule::GModule(LiePtr g, std::vector<Matrix> action, bool check)
    : g_(std::move(g)), dim_(action.empty() ? 0 : action[0].rows()), action_(std::move(action)) {
  require(action_.size() == g_->dim(), error::code::parse, "need one action matrix per basis vector");
  for (const Matrix& m : action_)
    require(m.rows() == dim_ && m.cols() == dim_ && m.field() == g_->field(), error::code::parse,
            "action matrix shape/field mismatch");
  if (!check) return;
  for (std::size_t i = 0; i < g_->dim(); ++i)
    for (std::size_t j = i + 1; j < g_->dim(); ++j) {
      Matrix lhs = action_of(g_->bracket_basis(i, j));
      Matrix comm = action_[i] * action_[j];
      Matrix rev = action_[j] * action_[i];
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
          require(lhs.at(r, c) == comm.at(r, c) - rev.at(r, c), error::code::validate,
                  "action violates the representation law");
    }
}

GModule GModule::trivial(LiePtr g, std::size_t d) {
  const Field& f = g->field();
  std::vector<Matrix> act(g->dim(), Matrix(f, d, d));
  return GModule(std::move(g), std::move(act), false);
}

GModule GModule::adjoint(LiePtr g) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < g->dim(); ++i) act.push_back(g->ad_basis(i));
  return GModule(std::move(g), std::move(act), false);
}

GModule GModule::pullback(const AlgebraHom& phi, const GModule& m) {
  require(m.algebra() == phi.codomain(), error::code::parse, "pullback needs M over the codomain");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < phi.domain()->dim(); ++i) act.push_back(m.action_of(phi.matrix().col(i)));
  return GModule(phi.domain(), std::move(act), false);
}

Matrix GModule::action_of(const Vec& x) const {
  Matrix r(field(), dim_, dim_);
  for (std::size_t i = 0; i < g_->dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = 0; b < dim_; ++b)
        if (!action_[i].at(a, b).is_zero()) r.at(a, b) += x[i] * action_[i].at(a, b);
  }
  return r;
}

Vec GModule::act(const Vec& x, const Vec& m) const {
  Vec r = zero_vec(field(), dim_);
  for (std::size_t i = 0; i < g_->dim(); ++i)
    if (!x[i].is_zero()) add_scaled(r, x[i], action_[i].apply(m));
  return r;
}

bool GModule::is_trivial_action() const {
  for (const Matrix& m : action_)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!m.at(i, j).is_zero()) return false;
  return true;
}

Subspace GModule::invariants() const {
  Matrix sys(field(), 0, dim_);
  for (const Matrix& m : action_) sys = sys.vstack(m);
  return Subspace::span(field(), dim_, sys.nullspace_basis());
}

const Subspace& ModuleFiltration::clamped(long i) const {
  if (i <= 0) return levels[0];
  return levels[std::min<std::size_t>(std::size_t(i), q)];
}

ModuleFiltration ascending_filtration(const GModule& m) {
  const Field& f = m.field();
  std::vector<Subspace> levels{Subspace::zero(f, m.dim())};
  for (;;) {
    if (levels.back().dim() == m.dim()) break;
    // M_i = {v : rho(e_j) v in M_{i-1} for all j}
    Matrix red = levels.back().reduction_matrix();
    Matrix sys(f, 0, m.dim());
    for (std::size_t j = 0; j < m.algebra()->dim(); ++j) sys = sys.vstack(red * m.action_basis(j));
    Subspace next = Subspace::span(f, m.dim(), sys.nullspace_basis());
    require(next.dim() > levels.back().dim(), error::code::validate,
            "module is not nilpotent: filtration stabilizes at dimension " +
                std::to_string(levels.back().dim()));
    levels.push_back(std::move(next));
  }
  std::size_t q = levels.size() - 1;
  if (q == 0) {  // zero module
    q = 1;
    levels.push_back(levels.back());
  }
  return ModuleFiltration{std::move(levels), q};
}

std::vector<Matrix> equivariant_hom_basis(const GModule& a, const GModule& b) {
  require(a.algebra() == b.algebra(), error::code::parse, "hom needs modules over the same algebra");
  const Field& f = a.field();
  const std::size_t da = a.dim(), db = b.dim();
  // unknown phi_{i,j} (db x da), flat index i*da + j
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < a.algebra()->dim(); ++k) {
    const Matrix& ra = a.action_basis(k);
    const Matrix& rb = b.action_basis(k);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        Vec row = zero_vec(f, da * db);
        for (std::size_t t = 0; t < da; ++t) row[i * da + t] += ra.at(t, j);
        for (std::size_t t = 0; t < db; ++t) row[t * da + j] -= rb.at(i, t);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  Matrix sys = Matrix::from_rows(f, da * db, rows);
  std::vector<Matrix> basis;
  for (const Vec& v : sys.nullspace_basis()) {
    Matrix m(f, db, da);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) m.at(i, j) = v[i * da + j];
    basis.push_back(std::move(m));
  }
  return basis;
}

InducedModule induced_quotient_module(const AlgebraHom& pi) {
  require(pi.is_surjective(), error::code::parse, "induced module needs a surjection");
  const LieAlgebra& fa = *pi.domain();
  const Field& k = fa.field();
  Subspace n = pi.kernel();
  require(fa.is_ideal(n), error::code::validate, "kernel is not an ideal");
  Subspace nn = fa.product_subspace(n, n);
  const std::size_t t = n.dim();
  // coordinates in n, then quotient by [n,n] there
  std::vector<Vec> nnc;
  for (std::size_t i = 0; i < nn.dim(); ++i) nnc.push_back(n.coords(nn.basis().row(i)));
  Subspace nn_in_n = Subspace::span(k, t, nnc);
  auto kept = nn_in_n.complement_std_indices();
  const std::size_t d = kept.size();
  Matrix red = nn_in_n.reduction_matrix();
  Matrix pick(k, t, fa.dim());  // n coords <- ambient, valid on n only
  for (std::size_t i = 0; i < t; ++i) pick.at(i, n.pivots()[i]) = Scalar::one(k);
  Matrix chart_c(k, d, t);
  for (std::size_t i = 0; i < d; ++i) chart_c.set_row(i, red.row(kept[i]));
  Matrix chart = chart_c * pick;

  std::vector<Vec> reps;
  for (std::size_t i = 0; i < d; ++i) reps.push_back(n.basis().row(kept[i]));

  // lift independence: elements of n act by zero on the quotient
  for (std::size_t i = 0; i < t; ++i)
    for (const Vec& r : reps)
      require(is_zero(chart.apply(fa.bracket(n.basis().row(i), r))), error::code::validate,
              "induced action is not well defined");

  const LiePtr& g = pi.codomain();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < g->dim(); ++a) {
    Vec ea = zero_vec(k, g->dim());
    ea[a] = Scalar::one(k);
    auto lift = pi.matrix().solve(ea);
    require(lift.has_value(), error::code::internal, "lift of basis vector failed");
    Matrix m(k, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec w = fa.bracket(*lift, reps[j]);
      require(n.contains(w), error::code::internal, "bracket left the ideal");
      Vec c = chart.apply(w);
      for (std::size_t i = 0; i < d; ++i) m.at(i, j) = c[i];
    }
    act.push_back(std::move(m));
  }
  // the representation law follows from the Jacobi identity of the domain
  // once lift independence holds, so the quadratic-in-dim recheck is skipped
  GModule mod(g, std::move(act), false);
  return InducedModule{std::move(mod), std::move(n), std::move(nn), std::move(chart), std::move(reps)};
}

}  // namespace nilcoh
