#include "nilcoh/free_cover.hpp"

#include <cstdlib>
#include <map>

#include "nilcoh/linear_system.hpp"

namespace nilcoh {

namespace {

std::size_t dim_cap() {
  if (const char* env = std::getenv("NILCOH_DIM_CAP")) return std::strtoul(env, nullptr, 10);
  return 2000;
}

bool is_zero_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

/// Sparse block-column matrix: block index -> dm x dm coefficient of the
/// unknown value sitting in that block. Absent blocks are zero; blocks that
/// become zero are dropped, which is what kills deep rho products of a
/// nilpotent action without any special casing.
using Value = std::map<std::size_t, Matrix>;

void value_axpy(Value& acc, const Scalar& c, const Value& v) {
  if (c.is_zero()) return;
  for (const auto& [blk, mat] : v) {
    auto it = acc.find(blk);
    if (it == acc.end()) it = acc.emplace(blk, Matrix(mat.field(), mat.rows(), mat.cols())).first;
    for (std::size_t i = 0; i < mat.rows(); ++i)
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (!mat.at(i, j).is_zero()) it->second.at(i, j) += c * mat.at(i, j);
    if (is_zero_matrix(it->second)) acc.erase(it);
  }
}

Value value_rho(const Matrix& rho, const Value& v, bool negate) {
  Value out;
  for (const auto& [blk, mat] : v) {
    Matrix prod = rho * mat;
    if (is_zero_matrix(prod)) continue;
    if (negate)
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j) prod.at(i, j) = -prod.at(i, j);
    out.emplace(blk, std::move(prod));
  }
  return out;
}

void value_add_diag(Value& acc, std::size_t blk, const Scalar& c, const Field& f, std::size_t dm) {
  if (c.is_zero()) return;
  auto it = acc.find(blk);
  if (it == acc.end()) it = acc.emplace(blk, Matrix(f, dm, dm)).first;
  for (std::size_t t = 0; t < dm; ++t) it->second.at(t, t) += c;
  if (is_zero_matrix(it->second)) acc.erase(it);
}

}  // namespace

FreeCoverSolver::FreeCoverSolver(LiePtr g, GModule m, std::vector<Vec> gens, std::size_t r)
    : g_(std::move(g)),
      m_(std::move(m)),
      gens_(std::move(gens)),
      r_(r),
      skel_(hall_skeleton(gens_.empty() ? 1 : gens_.size(), r + 1)) {
  require(!gens_.empty(), error::code::parse, "free cover needs at least one generator");
  require(m_.algebra().get() == g_.get(), error::code::parse,
          "module must live over the covered algebra");
  for (const Vec& v : gens_)
    require(v.size() == g_->dim(), error::code::parse, "generator image dimension mismatch");
  require(g_->nilpotency_class() <= r_, error::code::validate,
          "cover step below the nilpotency class of the target");
  n_words_r_ = skel_.degree_start[r_ + 1];
  require(n_words_r_ <= dim_cap(), error::code::resource,
          "free cover dimension " + std::to_string(n_words_r_) + " exceeds cap " +
              std::to_string(dim_cap()));

  pi_img_.reserve(n_words_r_);
  for (const Vec& v : gens_) pi_img_.push_back(v);
  for (std::size_t w = gens_.size(); w < n_words_r_; ++w)
    pi_img_.push_back(g_->bracket(pi_img_[skel_.words[w].left], pi_img_[skel_.words[w].right]));
  require(Matrix::from_rows(g_->field(), g_->dim(), pi_img_).rank() == g_->dim(),
          error::code::validate, "generator images do not generate the target algebra");

  rho_.reserve(n_words_r_);
  for (std::size_t w = 0; w < n_words_r_; ++w) {
    Matrix a = m_.action_of(pi_img_[w]);
    if (is_zero_matrix(a))
      rho_.push_back(std::nullopt);
    else
      rho_.push_back(std::move(a));
  }
}

void FreeCoverSolver::propagate(
    std::size_t width, const std::vector<std::optional<Matrix>>& gen_values,
    const std::function<const Matrix*(std::size_t)>& cocycle_term,
    const std::function<void(const Matrix&)>& obstruction_sink) const {
  const Field& f = g_->field();
  const std::size_t dm = m_.dim();
  std::vector<std::optional<Matrix>> vals(n_words_r_);
  for (std::size_t i = 0; i < gens_.size(); ++i) vals[i] = gen_values[i];
  for (std::size_t w = gens_.size(); w < skel_.words.size(); ++w) {
    const std::size_t u = skel_.words[w].left, v = skel_.words[w].right;
    std::optional<Matrix> acc;
    auto axpy = [&](const std::optional<Matrix>& rho, const std::optional<Matrix>& val,
                    bool negate) {
      if (!rho || !val) return;
      Matrix t = *rho * *val;
      if (!acc) acc.emplace(f, dm, width);
      for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < width; ++j)
          if (!t.at(i, j).is_zero()) {
            if (negate)
              acc->at(i, j) -= t.at(i, j);
            else
              acc->at(i, j) += t.at(i, j);
          }
    };
    axpy(rho_[u], vals[v], false);
    axpy(rho_[v], vals[u], true);
    if (const Matrix* c = cocycle_term(w)) {
      if (!acc) acc.emplace(f, dm, width);
      for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < width; ++j)
          if (!c->at(i, j).is_zero()) acc->at(i, j) -= c->at(i, j);
    }
    if (acc && is_zero_matrix(*acc)) acc.reset();
    if (skel_.words[w].degree <= r_)
      vals[w] = std::move(acc);
    else if (acc)
      obstruction_sink(*acc);
  }
}

Subspace FreeCoverSolver::solve_boundary_system(const Subspace* z) const {
  const Field& f = g_->field();
  const std::size_t dm = m_.dim(), n = gens_.size();
  const std::size_t zdim = z ? z->dim() : 0;
  const std::size_t width = n * dm + zdim;

  std::vector<std::optional<Matrix>> gv;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix g(f, dm, width);
    for (std::size_t t = 0; t < dm; ++t) g.at(t, i * dm + t) = Scalar::one(f);
    gv.push_back(std::move(g));
  }

  // c(u ^ v) = z_t(pi(u) ^ pi(v)), linear in the z coefficients
  std::vector<std::optional<Matrix>> cw(skel_.words.size());
  if (z && zdim > 0) {
    CochainIndex idx(g_->dim(), 2, dm);
    for (std::size_t w = n; w < skel_.words.size(); ++w) {
      const std::size_t u = skel_.words[w].left, v = skel_.words[w].right;
      Matrix c(f, dm, width);
      bool nz = false;
      for (std::size_t t = 0; t < zdim; ++t) {
        Vec e = eval_2cochain(z->basis().row(t), idx, pi_img_[u], pi_img_[v]);
        for (std::size_t b = 0; b < dm; ++b)
          if (!e[b].is_zero()) {
            c.at(b, n * dm + t) = e[b];
            nz = true;
          }
      }
      if (nz) cw[w] = std::move(c);
    }
  }

  LinearSystem sys(f, width);
  propagate(
      width, gv, [&](std::size_t w) { return cw[w] ? &*cw[w] : nullptr; },
      [&](const Matrix& ob) {
        for (std::size_t b = 0; b < dm; ++b) sys.add_row(ob.row(b));
      });
  return sys.kernel();
}

std::size_t FreeCoverSolver::z1_dim() const { return solve_boundary_system(nullptr).dim(); }

std::size_t FreeCoverSolver::h1_dim() const {
  // B^1 = M / M^g since pi is surjective
  return z1_dim() - (m_.dim() - m_.invariants().dim());
}

FilteredH2 FreeCoverSolver::pullback_kernel(const H2Chart& chart) const {
  const Field& f = g_->field();
  const Subspace& reps = chart.representatives();
  Subspace sol = solve_boundary_system(&reps);
  const std::size_t off = gens_.size() * m_.dim();
  std::vector<Vec> ys;
  for (std::size_t i = 0; i < sol.dim(); ++i) {
    Vec row = sol.basis().row(i);
    ys.emplace_back(row.begin() + off, row.end());
  }
  Subspace in_chart = Subspace::span(f, chart.dim(), ys);
  return {in_chart.dim(), in_chart};
}

std::size_t FreeCoverSolver::kernel_hom_dim() const { return hom_kernel(nullptr).dim(); }

std::vector<Matrix> FreeCoverSolver::kernel_hom_basis() const {
  std::vector<Matrix> basis;
  hom_kernel(&basis);
  return basis;
}

Subspace FreeCoverSolver::hom_kernel(std::vector<Matrix>* basis) const {
  const Field& f = g_->field();
  const std::size_t n = gens_.size(), dm = m_.dim(), p = g_->nilpotency_class();
  const auto& ds = skel_.degree_start;
  const std::size_t D = n_words_r_;
  FreePtr fr = FreeNilpotent::build_basis_only(n, r_, f);

  // ker pi = K + (all coordinates of degree > p); K lives in the degree <= p block
  const std::size_t B = ds[p + 1];
  Matrix pb(f, g_->dim(), B);
  for (std::size_t j = 0; j < B; ++j)
    for (std::size_t i = 0; i < g_->dim(); ++i) pb.at(i, j) = pi_img_[j][i];
  std::vector<Vec> kvecs;
  for (Vec& v : pb.nullspace_basis()) {
    v.resize(D, Scalar::zero(f));
    kvecs.push_back(std::move(v));
  }
  Subspace K = Subspace::span(f, D, kvecs);
  const std::size_t nk = K.dim();
  const std::size_t w1lo = ds[p + 1], w1hi = (r_ > p) ? ds[p + 2] : ds[p + 1];
  const std::size_t nw1 = w1hi - w1lo;
  if (nk + nw1 == 0 || dm == 0) return Subspace::zero(f, 0);
  const std::size_t W = (nk + nw1) * dm;

  // phi on a Hall word of degree d >= p + 2 unwinds by equivariance and
  // Jacobi to the degree p + 1 and K unknowns; E memoizes per word, G per
  // evaluated pair [e_x, e_y] with deg x + deg y >= p + 1.
  std::vector<std::optional<Value>> ememo(D);
  std::map<std::pair<std::size_t, std::size_t>, Value> gmemo;
  std::function<const Value&(std::size_t)> E;
  std::function<Value(std::size_t, std::size_t)> G;
  G = [&](std::size_t x, std::size_t y) -> Value {
    auto it = gmemo.find({x, y});
    if (it != gmemo.end()) return it->second;
    const std::size_t dx = skel_.words[x].degree, dy = skel_.words[y].degree;
    Value val;
    if (dx >= p + 1 && dy >= p + 1) {
      // both arguments in the kernel; phi kills [n,n]
    } else if (dx >= p + 1) {
      if (rho_[y]) val = value_rho(*rho_[y], E(x), true);
    } else if (dy >= p + 1) {
      if (rho_[x]) val = value_rho(*rho_[x], E(y), false);
    } else if (dx + dy == p + 1) {
      for (const auto& [wd, c] : fr->normalize_bracket(x, y))
        value_add_diag(val, wd - w1lo, c, f, dm);
    } else {
      // both degrees <= p with sum >= p + 2 forces dx >= 2:
      // [[a,b],y] = [a,[b,y]] - [b,[a,y]] with both inner brackets deeper
      const std::size_t a = skel_.words[x].left, b = skel_.words[x].right;
      for (const auto& [wd, c] : fr->normalize_bracket(b, y)) value_axpy(val, c, G(a, wd));
      for (const auto& [wd, c] : fr->normalize_bracket(a, y)) value_axpy(val, -c, G(b, wd));
    }
    return gmemo.emplace(std::make_pair(x, y), std::move(val)).first->second;
  };
  E = [&](std::size_t w) -> const Value& {
    if (!ememo[w]) {
      if (skel_.words[w].degree == p + 1) {
        Value v;
        value_add_diag(v, w - w1lo, Scalar::one(f), f, dm);
        ememo[w] = std::move(v);
      } else {
        ememo[w] = G(skel_.words[w].left, skel_.words[w].right);
      }
    }
    return *ememo[w];
  };

  LinearSystem sys(f, W);
  auto add_value_rows = [&](const Value& row) {
    for (std::size_t b = 0; b < dm; ++b) {
      SparseVec r;
      for (const auto& [blk, mat] : row)
        for (std::size_t t = 0; t < dm; ++t)
          if (!mat.at(b, t).is_zero()) r.emplace_back(blk * dm + t, mat.at(b, t));
      sys.add_row(r);
    }
  };

  // generator equivariance on the graded part of ker pi
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t w = w1lo; w < D; ++w) {
      Value row;
      if (rho_[j]) row = value_rho(*rho_[j], E(w), false);
      for (const auto& [wd, c] : fr->normalize_bracket(j, w)) value_axpy(row, -c, E(wd));
      add_value_rows(row);
    }

  // generator equivariance on K; [x_j, k] splits into a K part and a
  // degree p + 1 part, both expressible in the unknown blocks
  for (std::size_t i = 0; i < nk; ++i) {
    Vec k = K.basis().row(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vec br = zero_vec(f, D);
      for (std::size_t a = 0; a < B; ++a) {
        if (k[a].is_zero()) continue;
        for (const auto& [wd, c] : fr->normalize_bracket(j, a)) br[wd] += k[a] * c;
      }
      Vec low = br;
      for (std::size_t t = B; t < D; ++t) low[t] = Scalar::zero(f);
      require(K.contains(low), error::code::internal, "bracket with K left the kernel");
      Vec coords = K.coords(low);
      Value row;
      if (rho_[j]) row.emplace(nw1 + i, *rho_[j]);
      for (std::size_t t = 0; t < nk; ++t) value_add_diag(row, nw1 + t, -coords[t], f, dm);
      for (std::size_t t = w1lo; t < w1hi; ++t) value_add_diag(row, t - w1lo, -br[t], f, dm);
      add_value_rows(row);
    }
  }

  Subspace sol = sys.kernel();
  if (basis) {
    for (std::size_t s = 0; s < sol.dim(); ++s) {
      Vec u = sol.basis().row(s);
      Matrix mat(f, dm, D);
      for (std::size_t w = w1lo; w < D; ++w)
        for (const auto& [blk, coeff] : E(w))
          for (std::size_t b = 0; b < dm; ++b)
            for (std::size_t t = 0; t < dm; ++t)
              if (!coeff.at(b, t).is_zero()) mat.at(b, w) += coeff.at(b, t) * u[blk * dm + t];
      // on the K block the map is pinned down by its values at the pivot
      // coordinates of the reduced K basis
      for (std::size_t t = 0; t < nk; ++t)
        for (std::size_t b = 0; b < dm; ++b) mat.at(b, K.pivots()[t]) = u[(nw1 + t) * dm + b];
      basis->push_back(std::move(mat));
    }
  }
  return sol;
}

}  // namespace nilcoh
