#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcoh/ce.hpp"
#include "nilcoh/io.hpp"
#include "nilcoh/presentation.hpp"

using namespace nilcoh;
using json = nlohmann::json;

namespace {

std::string join_type(const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(t[i]);
  }
  return s;
}

GModule coefficients(const LiePtr& g, const std::string& kind) {
  if (kind == "trivial") return GModule::trivial(g, 1);
  if (kind == "adjoint") return GModule::adjoint(g);
  throw error(error::code::parse, "unknown coefficient module '" + kind + "'");
}

int cmd_check(const std::string& path) {
  AlgebraFile af = read_algebra_file(path);
  std::cout << af.name << ": dim " << af.algebra->dim() << ", class "
            << af.algebra->nilpotency_class() << ", Jacobi OK\n";
  return 0;
}

int cmd_betti(const std::string& path, long max_degree, bool as_json) {
  AlgebraFile af = read_algebra_file(path);
  std::vector<std::size_t> b = betti(af.algebra);
  if (max_degree >= 0 && std::size_t(max_degree) + 1 < b.size()) b.resize(max_degree + 1);
  if (as_json) {
    std::cout << json{{"name", af.name}, {"betti", b}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? " " : "") << b[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_filtration(const std::string& path, const std::string& coeffs, bool as_json) {
  AlgebraFile af = read_algebra_file(path);
  const LiePtr& g = af.algebra;
  GModule m = coefficients(g, coeffs);
  std::size_t p = g->nilpotency_class();
  std::size_t q = ascending_filtration(m).q;
  H2Chart chart(g, m);
  json rows = json::array();
  bool all_equal = true;
  for (std::size_t r = std::max(p, q); r <= p + q; ++r) {
    FilteredH2 a = filtered_h2(g, m, long(r), chart);
    FilteredH2 b = filtration_via_kernel(g, m, r, chart);
    bool eq = a.in_chart == b.in_chart;
    all_equal = all_equal && eq;
    rows.push_back({{"r", r},
                    {"filtered_dim", a.dim},
                    {"kernel_dim", b.dim},
                    {"equal", eq}});
  }
  if (as_json) {
    std::cout << json{{"name", af.name},
                      {"coeffs", coeffs},
                      {"h2_dim", chart.dim()},
                      {"steps", rows},
                      {"verdict", all_equal ? "OK" : "FAIL"}}
                     .dump()
              << "\n";
  } else {
    std::cout << af.name << " (" << coeffs << "), dim H^2 = " << chart.dim() << "\n";
    std::cout << "r filtered kernel equal\n";
    for (const json& row : rows)
      std::cout << row["r"] << " " << row["filtered_dim"] << " " << row["kernel_dim"] << " "
                << (row["equal"].get<bool>() ? "yes" : "NO") << "\n";
    std::cout << "verdict: " << (all_equal ? "OK" : "FAIL") << "\n";
  }
  require(all_equal, error::code::property, "filtration paths disagree");
  return 0;
}

int cmd_free(std::size_t n, std::size_t p) {
  FreePtr f = FreeNilpotent::build(n, p, Field::rationals());
  std::cout << "f_{" << n << "," << p << "}: dim " << f->dim() << "\n";
  std::cout << "degree dims:";
  for (std::size_t d = 1; d <= p; ++d) std::cout << " " << witt_dim(n, d);
  std::cout << "\n";
  for (std::size_t i = 0; i < f->dim(); ++i)
    std::cout << i << " deg " << f->degree_of(i) << " " << f->word_label(i) << "\n";
  return 0;
}

int cmd_free_ext(const std::string& path, long step) {
  AlgebraFile af = read_algebra_file(path);
  const LiePtr& g = af.algebra;
  std::size_t r = step < 0 ? g->nilpotency_class() : std::size_t(step);
  FreeExtension fe = build_free_extension(g, r);
  Subspace fn = fe.f->algebra()->product_subspace(
      Subspace::full(g->field(), fe.f->dim()), fe.kernel);
  std::cout << af.name << ": cover f_{" << fe.f->generators() << "," << r << "}, dim "
            << fe.f->dim() << "\n";
  std::cout << "kernel dim " << fe.kernel.dim() << ", depth " << fe.depth
            << ", dim n/[f,n] = " << fe.kernel.dim() - fn.dim() << "\n";
  std::cout << "generators map to:";
  for (std::size_t i = 0; i < fe.f->generators(); ++i) {
    Vec img = fe.pi.matrix().col(i);
    for (std::size_t a = 0; a < g->dim(); ++a)
      if (!img[a].is_zero()) std::cout << " " << g->labels()[a];
  }
  std::cout << "\n";
  return 0;
}

int cmd_bounds(const std::string& path) {
  AlgebraFile af = read_algebra_file(path);
  BettiBounds b = betti_bounds(af.algebra);
  std::cout << af.name << ": c=" << b.c << " C=" << b.big_c << " b2=" << b.b2 << " refined=["
            << b.refined_lower << "," << b.refined_upper << "] "
            << (b.basic_ok && b.refined_ok ? "OK" : "FAIL") << "\n";
  require(b.basic_ok && b.refined_ok, error::code::property, "betti bounds violated");
  return 0;
}

int cmd_catalog(const std::string& dir, const std::string& report) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  require(!files.empty(), error::code::parse, "no .json files in '" + dir + "'");

  std::string csv = "name,dim,class,type,depth,b1,b2,Fp_dim,ker_pi2_dim,c,C,verdict\n";
  bool all_ok = true;
  for (const auto& path : files) {
    AlgebraFile af = read_algebra_file(path.string());
    const LiePtr& g = af.algebra;
    std::size_t p = g->nilpotency_class();
    GModule triv = GModule::trivial(g, 1);
    H2Chart chart(g, triv);
    std::size_t b1 = ce_cohomology(g, triv, 1).h_dim;
    FilteredH2 fa = filtered_h2(g, triv, long(p), chart);
    FilteredH2 fb = filtration_via_kernel(g, triv, p, chart);
    FreeExtension fe = build_free_extension(g, p);
    BettiBounds bb = betti_bounds(g);
    B2Formulas bf = b2_formulas(g);
    bool ok = fa.in_chart == fb.in_chart && bb.basic_ok && bb.refined_ok && bf.consistent;
    all_ok = all_ok && ok;
    csv += af.name + "," + std::to_string(g->dim()) + "," + std::to_string(p) + "," +
           join_type(g->type()) + "," + std::to_string(fe.depth) + "," + std::to_string(b1) +
           "," + std::to_string(bb.b2) + "," + std::to_string(fa.dim) + "," +
           std::to_string(fb.dim) + "," + std::to_string(bb.c) + "," +
           std::to_string(bb.big_c) + "," + (ok ? "OK" : "FAIL") + "\n";
  }
  if (report.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(report);
    require(out.good(), error::code::parse, "cannot write '" + report + "'");
    out << csv;
    std::cout << "wrote " << files.size() << " rows to " << report << "\n";
  }
  require(all_ok, error::code::property, "catalog verification failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie algebra cohomology toolkit"};
  app.require_subcommand(1);

  std::string path, coeffs = "trivial", report;
  long max_degree = -1, step = -1;
  std::size_t free_n = 2, free_p = 2;
  bool as_json = false;

  CLI::App* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("path", path)->required();

  CLI::App* bet = app.add_subcommand("betti", "betti numbers");
  bet->add_option("path", path)->required();
  bet->add_option("--max-degree", max_degree);
  bet->add_flag("--json", as_json);

  CLI::App* filt = app.add_subcommand("filtration", "H^2 filtration, both paths");
  filt->add_option("path", path)->required();
  filt->add_option("--coeffs", coeffs)->check(CLI::IsMember({"trivial", "adjoint"}));
  filt->add_flag("--json", as_json);

  CLI::App* fr = app.add_subcommand("free", "Hall basis of a free nilpotent algebra");
  fr->add_option("n", free_n)->required();
  fr->add_option("p", free_p)->required();

  CLI::App* fx = app.add_subcommand("free-ext", "free nilpotent extension data");
  fx->add_option("path", path)->required();
  fx->add_option("--class", step);

  CLI::App* bd = app.add_subcommand("bounds", "second betti number bounds");
  bd->add_option("path", path)->required();

  CLI::App* cat = app.add_subcommand("catalog", "verify a directory of algebra files");
  cat->add_option("dir", path)->required();
  cat->add_option("--report", report);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (bet->parsed()) return cmd_betti(path, max_degree, as_json);
    if (filt->parsed()) return cmd_filtration(path, coeffs, as_json);
    if (fr->parsed()) return cmd_free(free_n, free_p);
    if (fx->parsed()) return cmd_free_ext(path, step);
    if (bd->parsed()) return cmd_bounds(path);
    if (cat->parsed()) return cmd_catalog(path, report);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(error::code::internal);
  }
  return 0;
}
