// End-to-end acceptance checks over the bundled catalog. Each criterion
// prints one PASS/FAIL line; the binary exits nonzero if any fail.
#include <chrono>
#include <iostream>
#include <random>

#include "nilcoh/catalog.hpp"
#include "nilcoh/extensions.hpp"
#include "nilcoh/presentation.hpp"

using namespace nilcoh;

namespace {

std::mt19937_64 rng(2024);

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

struct Checker {
  bool ok = true;
  void expect(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      std::cerr << "  failed: " << what << "\n";
    }
  }
};

LiePtr degree2_quotient(const Field& k, std::size_t n, const std::vector<std::size_t>& words) {
  FreePtr f = FreeNilpotent::build(n, 2, k);
  Vec x = zero_vec(k, f->dim());
  for (std::size_t w : words) x[w] = Scalar::one(k);
  return quotient_algebra(f->algebra(), Subspace::span(k, f->dim(), {x})).algebra;
}

std::size_t b_i(const LiePtr& g, std::size_t i) {
  return ce_cohomology(g, GModule::trivial(g, 1), i).h_dim;
}

/// The degree-(p+1) layer generated by the lifted presentation kernel,
/// inside f_{n, p+1}.
Subspace lifted_kernel_product(const FreeExtension& fe) {
  const Field& k = fe.f->field();
  FreePtr big = FreeNilpotent::build(fe.f->generators(), fe.f->step() + 1, k);
  Matrix inc = fe.f->canonical_inclusion(*big);
  std::vector<Vec> lifted;
  for (std::size_t i = 0; i < fe.kernel.dim(); ++i)
    lifted.push_back(inc.apply(fe.kernel.basis().row(i)));
  return big->algebra()->product_subspace(Subspace::full(k, big->dim()),
                                          Subspace::span(k, big->dim(), lifted));
}

// Witt dimensions match Hall-word enumeration
bool criterion1() {
  Checker c;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto counts = FreeNilpotent::hall_degree_counts(n, 6);
    for (std::size_t i = 1; i <= 6; ++i)
      c.expect(counts[i - 1] == witt_dim(n, i),
               "hall count vs witt formula at n=" + std::to_string(n) + " i=" + std::to_string(i));
  }
  c.expect(witt_dim(2, 2) == 1, "witt(2,2)");
  c.expect(witt_dim(3, 3) == 8, "witt(3,3)");
  return c.ok;
}

// Heisenberg second Betti numbers, by cochain ranks and by the closed form
bool criterion2(const Field& f, bool exact_values) {
  Checker c;
  if (exact_values) c.expect(b_i(heisenberg(f, 1), 2) == 2, "b2(h1)");
  for (std::size_t n : {2u, 3u}) {
    LiePtr h = heisenberg(f, n);
    B2Formulas b = b2_formulas(h);
    c.expect(b.consistent, "formula vs cochain ranks for h_" + std::to_string(n));
    if (exact_values)
      c.expect(b.b2 == choose(2 * n, 2) - 1, "b2(h_" + std::to_string(n) + ") value");
    FreeExtension fe = build_free_extension(h, 2);
    FreePtr big = FreeNilpotent::build(2 * n, 3, f);
    c.expect(lifted_kernel_product(fe) == big->graded_piece(3),
             "kernel product fills the third layer for h_" + std::to_string(n));
  }
  return c.ok;
}

// one-relation quotients of f_{n,2}
bool criterion3(const Field& f, bool exact_values) {
  Checker c;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cases{
      {3, {3}}, {4, {4}}, {4, {4, 9}}};
  for (const auto& [n, words] : cases) {
    LiePtr g = degree2_quotient(f, n, words);
    B2Formulas b = b2_formulas(g);
    c.expect(b.consistent, "formula vs cochain ranks, n=" + std::to_string(n));
    if (exact_values)
      c.expect(b.b2 == 2 * choose(n + 1, 3) - n + 1, "b2 value, n=" + std::to_string(n));
    FreeExtension fe = build_free_extension(g, 2);
    c.expect(lifted_kernel_product(fe).dim() == n,
             "kernel product dimension, n=" + std::to_string(n));
  }
  return c.ok;
}

// both filtration computations agree as subspaces, all modules, all steps
bool criterion4(const Field& f) {
  Checker c;
  for (const auto& [name, g] : standard_catalog(f)) {
    std::size_t p = g->nilpotency_class();
    for (bool adjoint : {false, true}) {
      GModule m = adjoint ? GModule::adjoint(g) : GModule::trivial(g, 1);
      std::size_t q = ascending_filtration(m).q;
      H2Chart chart(g, m);
      for (std::size_t r = std::max(p, q); r <= p + q; ++r) {
        FilteredH2 a = filtered_h2(g, m, long(r), chart);
        FilteredH2 b = filtration_via_kernel(g, m, r, chart);
        c.expect(a.in_chart == b.in_chart,
                 name + (adjoint ? " adjoint" : " trivial") + " r=" + std::to_string(r));
      }
    }
  }
  return c.ok;
}

// exact-sequence dimension identity; span of composed maps for trivial coeffs
bool criterion5() {
  Checker c;
  Field f = Field::rationals();
  for (const auto& [name, g] : standard_catalog(f)) {
    std::size_t p = g->nilpotency_class();
    for (bool adjoint : {false, true}) {
      GModule m = adjoint ? GModule::adjoint(g) : GModule::trivial(g, 1);
      std::size_t q = ascending_filtration(m).q;
      for (std::size_t r = std::max(p, q); r <= p + q; ++r) {
        ExactSequenceReport rep = exact_sequence_identity(g, m, r);
        std::string tag = name + (adjoint ? " adjoint" : " trivial") + " r=" + std::to_string(r);
        c.expect(rep.identity_holds, "dimension identity, " + tag);
        if (!adjoint) {
          c.expect(rep.span_checked, "span check ran, " + tag);
          c.expect(rep.image_spans, "composed maps span the filtration, " + tag);
        } else if (rep.span_checked) {
          c.expect(rep.image_spans, "composed maps span the filtration, " + tag);
        }
      }
    }
  }
  return c.ok;
}

// closed forms for 2-step algebras, trivial and adjoint coefficients
bool criterion6() {
  Checker c;
  Field f = Field::rationals();
  std::vector<LiePtr> algs{heisenberg(f, 1), heisenberg(f, 2), heisenberg(f, 3),
                           degree2_quotient(f, 3, {3}), degree2_quotient(f, 4, {4}),
                           degree2_quotient(f, 4, {4, 9})};
  for (const LiePtr& g : algs) {
    std::size_t n = b_i(g, 1);
    std::size_t d = g->dim();
    std::size_t z = g->center().dim();
    std::size_t der = g->derivation_algebra_dim();
    std::size_t f2k = filtered_h2(g, GModule::trivial(g, 1), 2).dim;
    c.expect(f2k == choose(n, 2) + n - d, "trivial closed form, dim " + std::to_string(d));
    std::size_t f2g = filtered_h2(g, GModule::adjoint(g), 2).dim;
    long rhs = long(choose(n + 1, 2) * z) - long(n * d) - long(d * z) + long(der);
    c.expect(long(f2g) == rhs, "adjoint closed form, dim " + std::to_string(d));
  }
  return c.ok;
}

// central extension criterion and its filtration characterization
bool criterion7() {
  Checker c;
  Field f = Field::rationals();
  c.expect(!central_extension_criterion(heisenberg(f, 2)).admits_class_p_plus_1, "h2 verdict");
  for (const auto& [n, words] : std::vector<std::pair<std::size_t, std::vector<std::size_t>>>{
           {3, {3}}, {4, {4}}, {4, {4, 9}}})
    c.expect(central_extension_criterion(degree2_quotient(f, n, words)).admits_class_p_plus_1,
             "quotient verdict, n=" + std::to_string(n));
  for (const auto& [name, g] : standard_catalog(f)) {
    if (g->dim() < 2) continue;
    CentralExtensionCriterion v = central_extension_criterion(g);
    std::size_t fp = filtered_h2(g, GModule::trivial(g, 1), long(g->nilpotency_class())).dim;
    c.expect(v.admits_class_p_plus_1 == (fp < v.rhs), "verdict vs strict filtration, " + name);
    c.expect(v.rhs == b_i(g, 2), "criterion rhs is b2, " + name);
  }
  return c.ok;
}

// betti number bounds and their refinements
bool criterion8() {
  Checker c;
  Field f = Field::rationals();
  for (const auto& [name, g] : standard_catalog(f)) {
    BettiBounds b = betti_bounds(g);
    c.expect(b.basic_ok, "basic bounds, " + name);
    c.expect(b.refined_ok, "refined bounds, " + name);
  }
  BettiBounds h2b = betti_bounds(heisenberg(f, 2));
  c.expect(h2b.c == 5 && h2b.big_c == 9, "h2 bound values");
  c.expect(h2b.refined_lower == 5 && h2b.refined_upper == 9, "h2 refined interval");
  return c.ok;
}

// structural property suites
bool criterion9() {
  Checker c;
  Field f = Field::rationals();
  auto cat = standard_catalog(f);
  for (const auto& [name, g] : cat) {
    const std::size_t m = g->dim();
    for (bool adjoint : {false, true}) {
      GModule mod = adjoint ? GModule::adjoint(g) : GModule::trivial(g, 1);
      std::size_t kmax = choose(m, 3) * mod.dim() <= 800 ? 2 : 1;
      for (std::size_t k = 0; k <= kmax; ++k) {
        Matrix dd = ce_differential(g, mod, k + 1) * ce_differential(g, mod, k);
        bool zero = true;
        for (std::size_t i = 0; i < dd.rows() && zero; ++i)
          for (std::size_t j = 0; j < dd.cols(); ++j)
            if (!dd.at(i, j).is_zero()) {
              zero = false;
              break;
            }
        c.expect(zero, "d o d = 0, " + name + " k=" + std::to_string(k));
      }
    }
    std::vector<std::size_t> b = betti(g);
    for (std::size_t i = 0; i <= m; ++i)
      c.expect(b[i] == b[m - i], "poincare duality, " + name);
    for (std::size_t i = 1; i < m; ++i)
      c.expect(2 <= b[i] && b[i] <= choose(m, i), "dixmier bounds, " + name);
    if (m >= 2) c.expect(b[1] * b[1] <= 4 * b[2], "golod-shafarevich, " + name);
    for (std::size_t t = 0; t < m; ++t) {
      long s = 0;
      for (std::size_t i = 0; i <= t; ++i) s = long(b[i]) - s;
      c.expect(s >= 1, "euler partial sums, " + name + " t=" + std::to_string(t));
    }
    c.expect(cocycles_vanish_on_center_wedge_derived(g), "cocycle vanishing, " + name);
    if (g->nilpotency_class() >= 2) {
      QuotientIdentityReport rep = b2_quotient_identity(g);
      c.expect(rep.b1_equal && rep.identity_holds, "quotient betti identity, " + name);
    }
  }

  // class sandwich for random cocycle-built extensions
  std::uniform_int_distribution<long> coef(-3, 3);
  std::size_t sandwiches = 0;
  while (sandwiches < 50) {
    const auto& [name, g] = cat[rng() % cat.size()];
    if (g->dim() > 7) continue;
    std::size_t which = rng() % 3;
    GModule m = which == 0   ? GModule::trivial(g, 1)
                : which == 1 ? GModule::trivial(g, 2)
                             : GModule::adjoint(g);
    Subspace z = ce_cohomology(g, m, 2).z;
    Vec omega = zero_vec(f, z.ambient_dim());
    for (std::size_t i = 0; i < z.dim(); ++i)
      add_scaled(omega, Scalar::from_int(f, coef(rng)), z.basis().row(i));
    AbelianExtension ext = extension_from_cocycle(g, m, omega);
    ExtensionClass cls = class_of_extension(ext);
    c.expect(cls.p <= cls.r && cls.r <= cls.p + cls.q, "class sandwich, " + name);
    ++sandwiches;
  }

  // transported projections for random generator re-choices
  for (const LiePtr& g : {heisenberg(f, 2), degree2_quotient(f, 3, {3})}) {
    FreeExtension base = build_free_extension(g, g->nilpotency_class());
    Subspace der = g->derived();
    auto kept = der.complement_std_indices();
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Vec> gens;
      for (std::size_t i : kept) {
        Vec v = zero_vec(f, g->dim());
        v[i] = Scalar::one(f);
        gens.push_back(std::move(v));
      }
      for (int step = 0; step < 8; ++step) {
        std::size_t i = rng() % gens.size(), j = rng() % gens.size();
        if (i != j) add_scaled(gens[i], Scalar::from_int(f, coef(rng)), gens[j]);
        for (std::size_t a = 0; a < der.dim(); ++a)
          add_scaled(gens[i], Scalar::from_int(f, coef(rng)), der.basis().row(a));
      }
      FreeExtension other = build_free_extension(g, g->nilpotency_class(), gens);
      AlgebraHom theta = equivalence_automorphism(base, other);
      c.expect(other.pi.matrix() * theta.matrix() == base.pi.matrix(), "transported projection");
    }
  }
  return c.ok;
}

// prime field reruns of criteria 1-4, asserting two-path consistency
bool criterion10() {
  Checker c;
  for (long p : {5L, 7L}) {
    Field f = Field::prime(p);
    c.expect(criterion1(), "witt counts mod " + std::to_string(p));
    c.expect(criterion2(f, false), "heisenberg consistency mod " + std::to_string(p));
    c.expect(criterion3(f, false), "quotient consistency mod " + std::to_string(p));
    c.expect(criterion4(f), "filtration paths mod " + std::to_string(p));
  }
  return c.ok;
}

}  // namespace

int main() {
  bool all = true;
  auto start = std::chrono::steady_clock::now();
  auto report = [&](int k, bool ok) {
    auto now = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
    start = now;
    std::cout << "CRITERION " << k << ": " << (ok ? "PASS" : "FAIL") << "  (" << ms << " ms)"
              << std::endl;
    all = all && ok;
  };
  Field q = Field::rationals();
  report(1, criterion1());
  report(2, criterion2(q, true));
  report(3, criterion3(q, true));
  report(4, criterion4(q));
  report(5, criterion5());
  report(6, criterion6());
  report(7, criterion7());
  report(8, criterion8());
  report(9, criterion9());
  report(10, criterion10());
  return all ? 0 : 1;
}
