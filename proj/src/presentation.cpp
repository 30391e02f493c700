#include "nilcoh/presentation.hpp"

#include <algorithm>

namespace nilcoh {

namespace {

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

/// Lex-first standard basis vectors completing [g,g]; their classes are a
/// basis of g/[g,g], so they generate g minimally.
std::vector<Vec> minimal_generators(const LieAlgebra& g) {
  std::vector<Vec> gens;
  for (std::size_t i : g.derived().complement_std_indices())
    gens.push_back(unit_vec(g.field(), g.dim(), i));
  return gens;
}

void require_admissible_step(const LiePtr& g, const GModule& m, std::size_t r) {
  std::size_t p = g->nilpotency_class();
  std::size_t q = ascending_filtration(m).q;
  require(std::max(p, q) <= r && r <= p + q, error::code::validate,
          "step " + std::to_string(r) + " outside the admissible range [" +
              std::to_string(std::max(p, q)) + ", " + std::to_string(p + q) + "]");
}

/// Span of the graded pieces of degree >= d, i.e. f^d as a coordinate subspace.
Subspace degree_at_least(const FreeNilpotent& f, std::size_t d) {
  std::vector<Vec> gens;
  if (d <= f.step())
    for (std::size_t w = f.degree_start()[d]; w < f.dim(); ++w)
      gens.push_back(unit_vec(f.field(), f.dim(), w));
  return Subspace::span(f.field(), f.dim(), gens);
}

}  // namespace

FreeExtension build_free_extension(const LiePtr& g, std::size_t r, const std::vector<Vec>& gens) {
  const Field& k = g->field();
  require(r >= g->nilpotency_class(), error::code::validate,
          "cover step below the nilpotency class of the target");
  Subspace der = g->derived();
  std::vector<Vec> gg = gens.empty() ? minimal_generators(*g) : gens;
  require(gg.size() + der.dim() == g->dim(), error::code::parse,
          "generator count must equal dim g/[g,g]");
  for (const Vec& v : gg)
    require(v.size() == g->dim(), error::code::parse, "generator dimension mismatch");
  std::vector<Vec> span_gens = gg;
  for (std::size_t i = 0; i < der.dim(); ++i) span_gens.push_back(der.basis().row(i));
  require(Subspace::span(k, g->dim(), span_gens).dim() == g->dim(), error::code::validate,
          "generators are not a basis modulo the derived subalgebra");

  FreePtr f = FreeNilpotent::build(gg.size(), r, k);
  AlgebraHom pi = f->universal_hom(g, gg);
  Subspace n = pi.kernel();
  std::size_t depth = 0;
  if (n.dim() > 0) {
    depth = r;
    for (std::size_t i = 0; i < n.dim(); ++i) {
      // words are ordered by degree, so the RREF pivot sits in the lowest
      // degree of the row's support
      depth = std::min(depth, f->degree_of(n.pivots()[i]));
    }
    require(depth >= 2, error::code::internal, "presentation kernel meets the generator span");
  }
  return FreeExtension{g, std::move(f), std::move(pi), std::move(n), depth};
}

bool kernel_generators_check(const FreeExtension& fe, const std::vector<Vec>& gens) {
  for (const Vec& v : gens)
    require(v.size() == fe.f->dim(), error::code::parse, "generator dimension mismatch");
  return fe.f->algebra()->ideal_closure(gens) == fe.kernel;
}

FilteredH2 filtration_via_kernel(const LiePtr& g, const GModule& m, std::size_t r,
                                 const H2Chart& chart) {
  require_admissible_step(g, m, r);
  FreeCoverSolver solver(g, m, minimal_generators(*g), r);
  return solver.pullback_kernel(chart);
}

FilteredH2 filtration_via_kernel(const LiePtr& g, const GModule& m, std::size_t r) {
  H2Chart chart(g, m);
  return filtration_via_kernel(g, m, r, chart);
}

ExactSequenceReport exact_sequence_identity(const LiePtr& g, const GModule& m, std::size_t r) {
  require_admissible_step(g, m, r);
  const Field& k = g->field();
  std::vector<Vec> gens = minimal_generators(*g);
  FreeCoverSolver solver(g, m, gens, r);
  H2Chart chart(g, m);
  FilteredH2 fr = filtered_h2(g, m, long(r), chart);

  ExactSequenceReport rep{};
  rep.f_r_dim = fr.dim;
  rep.hom_dim = solver.kernel_hom_dim();
  rep.h1_cover_dim = solver.h1_dim();
  rep.h1_dim = ce_cohomology(g, m, 1).h_dim;
  rep.identity_holds = fr.dim + rep.h1_cover_dim == rep.hom_dim + rep.h1_dim;
  rep.injective = rep.hom_dim == rep.f_r_dim;
  // the dense span check is quadratic in the cover dimension, so for large
  // covers it is only run for one-dimensional trivial coefficients
  bool small_module = m.dim() == 1 && m.is_trivial_action();
  rep.span_checked = solver.cover_dim() <= (small_module ? 150 : 30);
  rep.image_spans = false;
  if (!rep.span_checked) return rep;

  // the quotient extension 0 -> n/[n,n] -> f/[n,n] -> g -> 0
  FreePtr f = FreeNilpotent::build(gens.size(), r, k);
  AlgebraHom pi = f->universal_hom(g, gens);
  InducedModule iq = induced_quotient_module(pi);
  const std::size_t d = iq.module.dim();
  Quotient e = quotient_algebra(f->algebra(), iq.nn);
  // kept indices are non-pivot columns of [n,n], so the class of the ambient
  // basis vector e_{kept[j]} is the j-th quotient basis vector
  Matrix pibar(k, g->dim(), e.algebra->dim());
  for (std::size_t j = 0; j < e.algebra->dim(); ++j) {
    Vec c = pi.matrix().col(e.kept[j]);
    for (std::size_t i = 0; i < g->dim(); ++i) pibar.at(i, j) = c[i];
  }
  AlgebraHom pibar_hom(e.algebra, g, std::move(pibar));
  Matrix incl(k, e.algebra->dim(), d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec c = e.projection.apply(iq.reps[j]);
    for (std::size_t i = 0; i < e.algebra->dim(); ++i) incl.at(i, j) = c[i];
  }
  AbelianExtension ext{g, iq.module, e.algebra, std::move(incl), std::move(pibar_hom)};
  validate_extension(ext);
  Vec phi = cocycle_from_extension(ext);

  // classes of h o phi for a Hom basis h must span F_r H^2
  CochainIndex idx_n(g->dim(), 2, d);
  CochainIndex idx_m(g->dim(), 2, m.dim());
  std::vector<Vec> classes;
  for (const Matrix& h : solver.kernel_hom_basis()) {
    Matrix hm(k, m.dim(), d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec c = h.apply(iq.reps[j]);
      for (std::size_t i = 0; i < m.dim(); ++i) hm.at(i, j) = c[i];
    }
    Vec comp = zero_vec(k, idx_m.size());
    for (std::size_t s = 0; s < idx_n.subsets(); ++s) {
      Vec val(phi.begin() + long(idx_n.at(s, 0)), phi.begin() + long(idx_n.at(s, 0) + d));
      Vec w = hm.apply(val);
      for (std::size_t b = 0; b < m.dim(); ++b) comp[idx_m.at(s, b)] = w[b];
    }
    classes.push_back(chart.coords(comp));
  }
  rep.image_spans = Subspace::span(k, chart.dim(), classes) == fr.in_chart;
  return rep;
}

B2Formulas b2_formulas(const LiePtr& g) {
  const Field& k = g->field();
  std::size_t p = g->nilpotency_class();
  FreeExtension fe = build_free_extension(g, p);
  const LiePtr& f = fe.f->algebra();
  std::size_t n1 = fe.f->generators();
  Subspace fn = f->product_subspace(Subspace::full(k, f->dim()), fe.kernel);

  B2Formulas out{};
  out.f_p_dim = fe.kernel.dim() - fn.dim();
  // one degree higher, with the canonical vector space inclusion of the kernel
  FreePtr big = FreeNilpotent::build(n1, p + 1, k);
  Matrix inc = fe.f->canonical_inclusion(*big);
  std::vector<Vec> lifted_gens;
  for (std::size_t i = 0; i < fe.kernel.dim(); ++i)
    lifted_gens.push_back(inc.apply(fe.kernel.basis().row(i)));
  Subspace lifted = Subspace::span(k, big->dim(), lifted_gens);
  Subspace prod =
      big->algebra()->product_subspace(Subspace::full(k, big->dim()), lifted);
  std::size_t cut = prod.intersect(big->graded_piece(p + 1)).dim();
  out.b2 = out.f_p_dim + witt_dim(n1, p + 1) - cut;

  GModule triv = GModule::trivial(g, 1);
  out.consistent = out.f_p_dim == filtered_h2(g, triv, long(p)).dim &&
                   out.b2 == ce_cohomology(g, triv, 2).h_dim;
  return out;
}

CentralExtensionCriterion central_extension_criterion(const LiePtr& g) {
  require(g->dim() >= 2, error::code::validate, "criterion needs dimension at least 2");
  const Field& k = g->field();
  std::size_t p = g->nilpotency_class();
  FreeExtension fe = build_free_extension(g, p);
  Subspace fn = fe.f->algebra()->product_subspace(
      Subspace::full(k, fe.f->dim()), fe.kernel);
  CentralExtensionCriterion out{};
  out.lhs = fe.kernel.dim() - fn.dim();
  out.rhs = ce_cohomology(g, GModule::trivial(g, 1), 2).h_dim;
  out.admits_class_p_plus_1 = out.lhs < out.rhs;
  return out;
}

BettiBounds betti_bounds(const LiePtr& g) {
  require(g->dim() >= 1, error::code::validate, "bounds need a nontrivial algebra");
  const Field& k = g->field();
  const std::size_t m = g->dim();
  const std::size_t p = g->nilpotency_class();
  std::vector<std::size_t> type = g->type();
  const std::size_t n1 = type[0];
  FreeExtension fe = build_free_extension(g, p);

  BettiBounds out{};
  out.depth = fe.depth;
  out.b2 = ce_cohomology(g, GModule::trivial(g, 1), 2).h_dim;
  out.big_c = n1 * (n1 - 1) / 2 + (m - n1) * (n1 - 1);
  // a zero kernel behaves as maximal depth: the bound formulas collapse to
  // the free-algebra values
  const std::size_t d_eff = fe.kernel.dim() == 0 ? p : fe.depth;
  long c_signed = long(witt_dim(n1, d_eff)) - long(type[d_eff - 1]);
  out.c = std::size_t(std::max(0L, c_signed));
  out.depth_is_class = d_eff == p;
  if (fe.kernel.dim() > 0) {
    Subspace fn = fe.f->algebra()->product_subspace(
        Subspace::full(k, fe.f->dim()), fe.kernel);
    out.product_fills_depth_layer =
        fn == fe.kernel.intersect(degree_at_least(*fe.f, fe.depth + 1));
  } else {
    out.product_fills_depth_layer = true;
  }
  out.refined_lower = out.c;
  out.refined_upper = out.big_c;
  if (out.depth_is_class && p >= 1) {
    long up = long(out.c) + long(witt_dim(n1, p + 1)) - long(witt_dim(n1, p)) + long(type[p - 1]);
    out.refined_upper = std::min(std::size_t(std::max(0L, up)), out.big_c);
    long low = long(witt_dim(n1, p + 1)) - long(n1) * long(witt_dim(n1, p)) +
               long(n1) * long(type[p - 1]);
    out.refined_lower = out.c + std::size_t(std::max(0L, low));
  }
  out.basic_ok = out.c <= out.b2 && out.b2 <= out.big_c;
  out.refined_ok = out.refined_lower <= out.b2 && out.b2 <= out.refined_upper;
  return out;
}

std::size_t bracket_length(const FreeNilpotent& f, const Vec& x) {
  require(x.size() == f.dim(), error::code::parse, "element dimension mismatch");
  require(f.step() >= 2, error::code::validate, "length needs a degree-2 component");
  require(!is_zero(x), error::code::validate, "length of the zero element is undefined");
  require(f.graded_piece(2).contains(x), error::code::validate,
          "length is defined on the degree-2 component only");
  const std::size_t n = f.generators();
  Matrix a(f.field(), n, n);
  for (std::size_t w = f.degree_start()[2]; w < f.degree_start()[3]; ++w) {
    if (x[w].is_zero()) continue;
    const HallWord& hw = f.words()[w];
    a.at(std::size_t(hw.left), std::size_t(hw.right)) = x[w];
    a.at(std::size_t(hw.right), std::size_t(hw.left)) = -x[w];
  }
  // the minimal bracket decomposition of an alternating 2-form has
  // rank(a)/2 terms (symplectic normal form)
  return a.rank() / 2;
}

AlgebraHom equivalence_automorphism(const FreeExtension& a, const FreeExtension& b) {
  require(a.g.get() == b.g.get(), error::code::parse, "extensions must share the target algebra");
  require(a.f->generators() == b.f->generators() && a.f->step() == b.f->step(),
          error::code::parse, "extensions must share the free cover shape");
  std::vector<Vec> t;
  for (std::size_t i = 0; i < a.f->generators(); ++i) {
    auto s = b.pi.matrix().solve(a.pi.matrix().col(i));
    require(s.has_value(), error::code::internal, "projection fails to cover a generator image");
    t.push_back(*s);
  }
  AlgebraHom theta = a.f->universal_hom(b.f->algebra(), t);
  require(theta.matrix().rank() == a.f->dim(), error::code::internal,
          "generator transport is not invertible");
  require(b.pi.matrix() * theta.matrix() == a.pi.matrix(), error::code::internal,
          "transported projection mismatch");
  return theta;
}

QuotientIdentityReport b2_quotient_identity(const LiePtr& g) {
  std::size_t p = g->nilpotency_class();
  require(p >= 2, error::code::validate, "identity needs class at least 2");
  Subspace gp = g->lower_central_series()[p - 1];
  Quotient q = quotient_algebra(g, gp);
  GModule trg = GModule::trivial(g, 1);
  GModule trh = GModule::trivial(q.algebra, 1);

  QuotientIdentityReport rep{};
  rep.n_dim = gp.dim();
  rep.b1_g = ce_cohomology(g, trg, 1).h_dim;
  rep.b1_h = ce_cohomology(q.algebra, trh, 1).h_dim;
  rep.b2_g = ce_cohomology(g, trg, 2).h_dim;
  rep.b2_h = ce_cohomology(q.algebra, trh, 2).h_dim;
  rep.coker_dim = induced_map_h2(q.projection, trh).cokernel_dim;
  rep.b1_equal = rep.b1_g == rep.b1_h;
  rep.identity_holds = rep.b2_g + rep.n_dim == rep.b2_h + rep.coker_dim;
  return rep;
}

}  // namespace nilcoh
