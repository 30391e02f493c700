#include "nilcoh/lie.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace nilcoh {

Vec densify(const Field& f, std::size_t n, const SparseVec& s) {
  Vec v = zero_vec(f, n);
  for (const auto& [i, c] : s) {
    require(i < n, error::code::internal, "densify index out of range");
    v[i] += c;
  }
  return v;
}

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

LieAlgebra::LieAlgebra(Field field, std::vector<std::string> labels,
                       std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets)
    : field_(field), dim_(labels.size()), labels_(std::move(labels)), c_(dim_ * dim_) {
  for (auto& [i, j, sv] : brackets) {
    require(i < j && j < dim_, error::code::parse, "bracket indices must satisfy i < j < dim");
    require(c_[upper_index(i, j)].empty(), error::code::parse, "duplicate bracket entry");
    std::map<std::size_t, Scalar> acc;
    for (const auto& [k, s] : sv) {
      require(k < dim_, error::code::parse, "bracket target index out of range");
      require(s.field() == field_, error::code::parse, "bracket coefficient field mismatch");
      auto it = acc.find(k);
      if (it == acc.end())
        acc.emplace(k, s);
      else
        it->second += s;
    }
    SparseVec norm;
    for (const auto& [k, s] : acc)
      if (!s.is_zero()) norm.emplace_back(k, s);
    c_[upper_index(i, j)] = std::move(norm);
  }
  if (auto bad = jacobi_violation()) {
    throw error(error::code::validate,
                "Jacobi identity fails on basis triple (" + std::to_string(bad->i) + ", " +
                    std::to_string(bad->j) + ", " + std::to_string(bad->k) + ")");
  }
}

const SparseVec& LieAlgebra::bracket_basis_upper(std::size_t i, std::size_t j) const {
  require(i < j && j < dim_, error::code::internal, "bracket_basis_upper needs i < j");
  return c_[upper_index(i, j)];
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v = zero_vec(field_, dim_);
  if (i == j) return v;
  const SparseVec& sv = i < j ? c_[upper_index(i, j)] : c_[upper_index(j, i)];
  for (const auto& [k, s] : sv) v[k] = i < j ? s : -s;
  return v;
}

namespace {

// Accumulates coef * [e_i, e_j] into a dense buffer, tracking touched slots.
void acc_bracket(const LieAlgebra& g, const Scalar& coef, std::size_t i, std::size_t j, Vec& buf,
                 std::vector<std::size_t>& touched) {
  if (i == j || coef.is_zero()) return;
  const SparseVec& sv = i < j ? g.bracket_basis_upper(i, j) : g.bracket_basis_upper(j, i);
  for (const auto& [k, s] : sv) {
    if (buf[k].is_zero()) touched.push_back(k);
    buf[k] += i < j ? coef * s : -(coef * s);
  }
}

}  // namespace

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  require(u.size() == dim_ && v.size() == dim_, error::code::internal, "bracket dim mismatch");
  SparseVec su = sparsify(u), sv = sparsify(v);
  Vec r = zero_vec(field_, dim_);
  std::vector<std::size_t> touched;
  for (const auto& [i, a] : su)
    for (const auto& [j, b] : sv) acc_bracket(*this, a * b, i, j, r, touched);
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  SparseVec sx = sparsify(x);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = zero_vec(field_, dim_);
    std::vector<std::size_t> touched;
    for (const auto& [i, a] : sx) acc_bracket(*this, a, i, j, col, touched);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Vec x = zero_vec(field_, dim_);
  x[i] = Scalar::one(field_);
  return ad(x);
}

std::optional<LieAlgebra::JacobiViolation> LieAlgebra::jacobi_violation() const {
  // Only triples touching a nonzero bracket pair can have a nonzero defect.
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!c_[upper_index(i, j)].empty()) nonzero.emplace_back(i, j);
  std::unordered_set<std::uint64_t> seen;
  Vec buf = zero_vec(field_, dim_);
  std::vector<std::size_t> touched;
  for (const auto& [a, b] : nonzero) {
    for (std::size_t t = 0; t < dim_; ++t) {
      if (t == a || t == b) continue;
      std::size_t i = a, j = b, k = t;
      if (k < i) std::swap(i, k);
      if (k < j) std::swap(j, k);
      std::uint64_t key = (std::uint64_t(i) * dim_ + j) * dim_ + k;
      if (!seen.insert(key).second) continue;
      touched.clear();
      // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
      for (const auto& [l, s] : c_[upper_index(i, j)]) acc_bracket(*this, s, l, k, buf, touched);
      for (const auto& [l, s] : c_[upper_index(j, k)]) acc_bracket(*this, s, l, i, buf, touched);
      for (const auto& [l, s] : c_[upper_index(i, k)]) acc_bracket(*this, -s, l, j, buf, touched);
      bool ok = true;
      for (auto idx : touched)
        if (!buf[idx].is_zero()) ok = false;
      if (!ok) {
        Vec defect = zero_vec(field_, dim_);
        for (auto idx : touched) defect[idx] = buf[idx];
        return JacobiViolation{i, j, k, defect};
      }
      for (auto idx : touched) buf[idx] = Scalar::zero(field_);
    }
  }
  return std::nullopt;
}

Subspace LieAlgebra::product_subspace(const Subspace& a, const Subspace& b) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) gens.push_back(bracket(a.basis().row(i), b.basis().row(j)));
  return Subspace::span(field_, dim_, gens);
}

std::vector<Subspace> LieAlgebra::lower_central_series() const {
  if (lcs_cache_) return *lcs_cache_;
  Subspace full = Subspace::full(field_, dim_);
  std::vector<Subspace> series{full};
  while (series.back().dim() > 0) {
    Subspace next = product_subspace(full, series.back());
    require(next != series.back(), error::code::validate, "algebra is not nilpotent");
    series.push_back(std::move(next));
  }
  lcs_cache_ = series;
  return series;
}

std::size_t LieAlgebra::nilpotency_class() const { return lower_central_series().size() - 1; }

std::vector<std::size_t> LieAlgebra::type() const {
  auto series = lower_central_series();
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i + 1 < series.size(); ++i)
    t.push_back(series[i].dim() - series[i + 1].dim());
  return t;
}

Subspace LieAlgebra::derived() const {
  Subspace full = Subspace::full(field_, dim_);
  return product_subspace(full, full);
}

Subspace LieAlgebra::center() const {
  // x central iff ad(e_j) x = 0 for all j; stack and take the nullspace.
  Matrix sys(field_, 0, dim_);
  for (std::size_t j = 0; j < dim_; ++j) sys = sys.vstack(ad_basis(j));
  return Subspace::span(field_, dim_, sys.nullspace_basis());
}

std::size_t LieAlgebra::derivation_algebra_dim() const {
  // Unknowns D_{ab} (entry (a,b) of the derivation matrix), flat index a*dim+b.
  const std::size_t m = dim_;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const SparseVec& cij = c_[upper_index(i, j)];
      for (std::size_t k = 0; k < m; ++k) {
        Vec row = zero_vec(field_, m * m);
        for (const auto& [l, s] : cij) row[k * m + l] += s;
        for (std::size_t a = 0; a < m; ++a) {
          Vec baj = bracket_basis(a, j);
          if (!baj[k].is_zero()) row[a * m + i] -= baj[k];
          Vec bia = bracket_basis(i, a);
          if (!bia[k].is_zero()) row[a * m + j] -= bia[k];
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  Matrix sys = Matrix::from_rows(field_, m * m, rows);
  return m * m - sys.rank();
}

std::size_t LieAlgebra::inner_derivations_dim() const { return dim_ - center().dim(); }

std::size_t LieAlgebra::h1_adjoint_dim() const {
  return derivation_algebra_dim() - inner_derivations_dim();
}

Subspace LieAlgebra::ideal_closure(const std::vector<Vec>& gens) const {
  Subspace s = Subspace::span(field_, dim_, gens);
  Subspace full = Subspace::full(field_, dim_);
  for (;;) {
    Subspace next = s.sum(product_subspace(full, s));
    if (next == s) return s;
    s = std::move(next);
  }
}

bool LieAlgebra::is_ideal(const Subspace& s) const {
  return s.contains(product_subspace(Subspace::full(field_, dim_), s));
}

AlgebraHom::AlgebraHom(LiePtr domain, LiePtr codomain, Matrix m, bool check)
    : dom_(std::move(domain)), cod_(std::move(codomain)), m_(std::move(m)) {
  require(m_.rows() == cod_->dim() && m_.cols() == dom_->dim(), error::code::internal,
          "hom matrix shape mismatch");
  require(dom_->field() == cod_->field() && m_.field() == dom_->field(), error::code::internal,
          "hom field mismatch");
  if (!check) return;
  for (std::size_t i = 0; i < dom_->dim(); ++i)
    for (std::size_t j = i + 1; j < dom_->dim(); ++j) {
      Vec lhs = m_.apply(dom_->bracket_basis(i, j));
      Vec rhs = cod_->bracket(m_.col(i), m_.col(j));
      require(lhs == rhs, error::code::validate, "map is not a Lie algebra homomorphism");
    }
}

Subspace AlgebraHom::kernel() const {
  return Subspace::span(m_.field(), dom_->dim(), m_.nullspace_basis());
}

Quotient quotient_algebra(const LiePtr& g, const Subspace& ideal,
                          const std::vector<std::string>& labels) {
  require(ideal.ambient_dim() == g->dim(), error::code::internal, "quotient ambient mismatch");
  require(g->is_ideal(ideal), error::code::validate, "quotient by a non-ideal");
  std::vector<std::size_t> kept = ideal.complement_std_indices();
  const std::size_t q = kept.size();
  const Field& f = g->field();
  // proj(v) picks the kept coordinates of v reduced modulo the ideal.
  Matrix red = ideal.reduction_matrix();
  Matrix proj(f, q, g->dim());
  for (std::size_t a = 0; a < q; ++a) proj.set_row(a, red.row(kept[a]));
  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      SparseVec sv = sparsify(proj.apply(g->bracket_basis(kept[a], kept[b])));
      if (!sv.empty()) brackets.emplace_back(a, b, std::move(sv));
    }
  std::vector<std::string> ls = labels;
  if (ls.empty())
    for (auto i : kept) ls.push_back(g->labels()[i]);
  require(ls.size() == q, error::code::parse, "quotient label count mismatch");
  auto alg = std::make_shared<const LieAlgebra>(f, std::move(ls), std::move(brackets));
  AlgebraHom pr(g, alg, std::move(proj));
  return Quotient{alg, std::move(pr), std::move(kept)};
}

LiePtr abelian_algebra(const Field& f, std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("e" + std::to_string(i));
  return std::make_shared<const LieAlgebra>(
      f, std::move(labels), std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>{});
}

LiePtr heisenberg(const Field& f, std::size_t n) {
  require(n >= 1, error::code::parse, "heisenberg needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> br;
  for (std::size_t i = 0; i < n; ++i)
    br.emplace_back(i, n + i, SparseVec{{2 * n, Scalar::one(f)}});
  return std::make_shared<const LieAlgebra>(f, std::move(labels), std::move(br));
}

}  // namespace nilcoh
