// zline command-line driver: form building, zero certification, truncation
// sweeps, Toeplitz decomposition, and the reproduction suites.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "zline/contkernel.hpp"
#include "zline/errors.hpp"
#include "zline/formbuilder.hpp"
#include "zline/io.hpp"
#include "zline/rankone.hpp"
#include "zline/replab.hpp"
#include "zline/spectral.hpp"
#include "zline/suites.hpp"
#include "zline/toeplitz.hpp"
#include "zline/zeros.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitNotSimple = 3;
constexpr int kExitNotEven = 4;
constexpr int kExitNotReal = 5;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
  std::ofstream f(p);
  f << text;
}

fs::path cache_dir() {
  if (const char* d = std::getenv("ZLINE_CACHE_DIR")) return fs::path(d);
  return {};
}

int cmd_build_form(const std::string& dist_path, int N, const std::string& out) {
  zline::DistributionSpec dist;
  try {
    dist = zline::read_distribution_file(dist_path);
  } catch (const zline::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  }
  const auto Q = zline::build_form(dist, N);
  fs::create_directories(out);
  {
    std::ofstream f(fs::path(out) / "form.csv");
    zline::write_matrix_csv(f, Q.materialize());
  }
  json j;
  j["N"] = Q.N;
  j["a"] = Q.a;
  j["b"] = Q.b;
  j["lambda"] = Q.lambda;
  write_file(fs::path(out) / "form.json", j.dump(2) + "\n");
  std::cout << "wrote " << out << "/form.csv (" << 2 * N + 1 << "x" << 2 * N + 1
            << ")\n";
  return 0;
}

int cmd_verify_zeros(const std::string& dist_path, int N, double tol_real,
                     double tol_gap, const std::string& out) {
  std::string text;
  zline::DistributionSpec dist;
  try {
    text = slurp(dist_path);
    std::istringstream is(text);
    dist = zline::read_distribution(is);
  } catch (const zline::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  }

  const std::string key = zline::content_hash(
      text + "|verify-zeros|" + std::to_string(N) + "|" +
      std::to_string(tol_real) + "|" + std::to_string(tol_gap));
  const fs::path cdir = cache_dir();
  fs::create_directories(out);
  if (!cdir.empty()) {
    const fs::path hit = cdir / (key + ".json");
    if (fs::exists(hit)) {
      const json j = json::parse(slurp(hit.string()));
      write_file(fs::path(out) / "summary.json", j.dump(2) + "\n");
      std::cout << "cache hit " << key << "\n";
      return j["exit_code"].get<int>();
    }
  }

  json summary;
  summary["schema_version"] = 1;
  summary["input_hash"] = key;
  summary["N"] = N;
  int code = 0;
  std::vector<zline::ZeroRow> rows;
  try {
    auto Q = zline::build_form(dist, N);
    const Eigen::MatrixXd M0 = Q.materialize();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es0(M0);
    Q = zline::delta_shift(Q, -es0.eigenvalues()[0] / 2.0);

    const auto p = zline::extremal_pair(Q.materialize(), zline::Which::min,
                                        tol_gap);
    summary["lambda_min_gap"] = p.gap;
    summary["parity"] = zline::to_string(p.parity);
    if (p.parity != zline::Parity::even) throw zline::NotEven(0.0);

    zline::ModelOperator D = zline::ModelOperator::integers(N);
    const auto Dp = zline::build_dprime(Q, D, p.vector);
    const auto spec = zline::dprime_spectrum(Dp);

    std::vector<double> xi(Dp.xi.data(), Dp.xi.data() + 2 * N + 1);
    const auto P = zline::build_p(xi, Q.lambda);
    const auto zr = zline::poly_roots(P, tol_real);

    double nrm = 0.0;
    for (double v : xi) nrm += v * v;
    nrm = std::sqrt(nrm);
    std::vector<double> xin = xi;
    for (double& v : xin) v /= nrm;
    const auto hz = zline::xi_hat_zeros(xin, 2 * std::numbers::pi * (N + 1),
                                        tol_real);
    for (const auto& z : hz.zeros)
      rows.push_back({z, std::abs(zline::xi_hat_eval(xin, z)),
                      std::abs(z.imag()) <= tol_real * (1.0 + std::abs(z))});

    summary["p_roots_max_imag"] = zr.max_abs_imag;
    summary["xi_hat_max_imag"] = hz.max_abs_imag;
    summary["dprime_spectrum_size"] = spec.size();
    summary["certified_real"] = zr.certified_real && hz.certified_real;
    if (!(zr.certified_real && hz.certified_real)) code = kExitNotReal;
  } catch (const zline::NotSimple& e) {
    summary["error"] = e.what();
    code = kExitNotSimple;
  } catch (const zline::NotEven& e) {
    summary["error"] = e.what();
    code = kExitNotEven;
  }
  summary["exit_code"] = code;

  {
    std::ofstream f(fs::path(out) / "zeros.csv");
    zline::write_zero_csv(f, rows);
  }
  write_file(fs::path(out) / "summary.json", summary.dump(2) + "\n");
  if (!cdir.empty())
    write_file(cdir / (key + ".json"), summary.dump(2) + "\n");
  std::cout << (code == 0 ? "certified real" : "not certified") << " (exit "
            << code << ")\n";
  return code;
}

int cmd_sweep(const std::string& dist_path, std::vector<int> ladder,
              double tol_gap, double tol_real, const std::string& out) {
  zline::DistributionSpec dist;
  try {
    dist = zline::read_distribution_file(dist_path);
  } catch (const zline::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  }
  const auto rep = zline::truncation_sweep(dist, ladder, tol_gap, tol_real);
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / "sweep.csv");
  f << std::setprecision(17)
    << "N,lambda_min,gap,parity,simple,max_imag_root,zero_certified\n";
  for (const auto& r : rep.rungs)
    f << r.N << "," << r.lambda_min << "," << r.gap << ","
      << zline::to_string(r.parity) << "," << r.simple << ","
      << r.max_imag_root << "," << r.zero_certified << "\n";
  std::cout << "monotone=" << rep.monotone << ", wrote " << out << "/sweep.csv\n";
  return 0;
}

int cmd_cf_decompose(const std::string& path, const std::string& out) {
  // input: one "re im" pair per line for c_0..c_n
  zline::HermitianToeplitz T;
  {
    std::ifstream f(path);
    if (!f) {
      std::cerr << "schema error: cannot open '" << path << "'\n";
      return kExitSchema;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
      ++lineno;
      std::istringstream ls(line);
      double re, im;
      if (!(ls >> re)) continue;
      if (!(ls >> im)) im = 0.0;
      T.c.emplace_back(re, im);
    }
    if (T.c.empty()) {
      std::cerr << "schema error: no coefficients in '" << path << "'\n";
      return kExitSchema;
    }
  }
  const auto cf = zline::cf_decompose(T);
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / "cf.csv");
  f << std::setprecision(17) << "node_re,node_im,weight\n";
  for (size_t k = 0; k < cf.nodes.size(); ++k)
    f << cf.nodes[k].real() << "," << cf.nodes[k].imag() << ","
      << cf.weights[k] << "\n";
  std::cout << "rank " << cf.nodes.size() << ", reconstruction error "
            << cf.reconstruction_error << "\n";
  return 0;
}

int repro_appendix_a(const std::string& out) {
  if (!zline::mu_table_check()) {
    std::cerr << "FAIL mu-table\n";
    return 1;
  }
  const auto lim = zline::appendix_limits({25, 50, 100, 200});
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / "limits.csv");
  f << std::setprecision(17)
    << "N,lambda_max,lambda_min,gap_max,gap_min,overlap_max,overlap_min\n";
  for (const auto& r : lim.rungs)
    f << r.N << "," << r.lambda_max << "," << r.lambda_min << "," << r.gap_max
      << "," << r.gap_min << "," << r.overlap_max << "," << r.overlap_min
      << "\n";
  if (!lim.gaps_max_decreasing || !lim.gaps_min_decreasing) {
    std::cerr << "FAIL limits-ladder\n";
    return 1;
  }
  std::cout << "appendix-a pass\n";
  return 0;
}

int repro_appendix_b(int grid, const std::string& out) {
  for (int i = 0; i <= 100; ++i) {
    const auto mc = zline::matrix_mc(-5.0 + 0.1 * i);
    if (mc.eig_deviation > 1e-10 || mc.vec_deviation > 1e-10) {
      std::cerr << "FAIL mc-closed-form at c=" << -5.0 + 0.1 * i << "\n";
      return 1;
    }
  }
  const auto map = zline::n2_positivity_scan(grid);
  fs::create_directories(out);
  std::ofstream f(fs::path(out) / "region.csv");
  f << "u,v,feasible,realroot_ok\n";
  for (const auto& c : map.cells)
    f << c.u << "," << c.v << "," << c.feasible << "," << c.realroot_ok << "\n";
  if (map.counterexamples != 0) {
    std::cerr << "FAIL n2-scan: " << map.counterexamples << " counterexamples\n";
    return 1;
  }
  std::cout << "appendix-b pass\n";
  return 0;
}

int repro_toeplitz(int count, unsigned seed) {
  const auto res = zline::suites::run_toeplitz_suite(count, seed);
  if (!res.pass()) {
    std::cerr << "FAIL toeplitz-suite: root dev " << res.worst_root_modulus_dev
              << ", reconstruction " << res.worst_reconstruction
              << ", non-palindromic " << res.non_palindromic << "\n";
    return 1;
  }
  std::cout << "toeplitz-suite pass (" << res.count << " instances)\n";
  return 0;
}

int repro_specaction(int count, unsigned seed) {
  const auto res = zline::suites::run_specaction_suite(count, seed);
  if (!res.pass()) {
    std::cerr << "FAIL spectral-action: fd " << res.worst_fd_rel << ", der-sa "
              << res.worst_dersa_rel << "\n";
    return 1;
  }
  std::cout << "spectral-action pass (" << res.fd_cases << " fd cases, "
            << res.certified << " certified)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zline: structured quadratic forms and zero certification"};
  app.require_subcommand(1);

  std::string dist_path, out = "out", input_path, suite;
  int N = 4, grid = 100, count = 1000;
  unsigned seed = 7;
  double tol_real = 1e-7, tol_gap = -1.0;
  std::vector<int> ladder = {4, 8, 16};

  auto* bf = app.add_subcommand("build-form", "materialize the quadratic form");
  bf->add_option("--dist", dist_path, "distribution file")->required();
  bf->add_option("--N", N, "truncation index");
  bf->add_option("--out", out, "output directory");

  auto* vz = app.add_subcommand("verify-zeros", "run the zero certification pipeline");
  vz->add_option("--dist", dist_path)->required();
  vz->add_option("--N", N);
  vz->add_option("--tol-real", tol_real);
  vz->add_option("--tol-gap", tol_gap);
  vz->add_option("--out", out);

  auto* sw = app.add_subcommand("sweep", "truncation ladder sweep");
  sw->add_option("--dist", dist_path)->required();
  sw->add_option("--ladder", ladder)->delimiter(',');
  sw->add_option("--tol-real", tol_real);
  sw->add_option("--tol-gap", tol_gap);
  sw->add_option("--out", out);

  auto* cf = app.add_subcommand("cf-decompose", "node/weight decomposition");
  cf->add_option("--toeplitz", input_path, "first-column file")->required();
  cf->add_option("--out", out);

  auto* rp = app.add_subcommand("repro", "reproduction suites");
  rp->add_option("suite", suite,
                 "appendix-a | appendix-b | toeplitz-suite | spectral-action")
      ->required();
  rp->add_option("--grid", grid);
  rp->add_option("--count", count);
  rp->add_option("--seed", seed);
  rp->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bf->parsed()) return cmd_build_form(dist_path, N, out);
    if (vz->parsed()) return cmd_verify_zeros(dist_path, N, tol_real, tol_gap, out);
    if (sw->parsed()) return cmd_sweep(dist_path, ladder, tol_gap, tol_real, out);
    if (cf->parsed()) return cmd_cf_decompose(input_path, out);
    if (rp->parsed()) {
      if (suite == "appendix-a") return repro_appendix_a(out);
      if (suite == "appendix-b") return repro_appendix_b(grid, out);
      if (suite == "toeplitz-suite") return repro_toeplitz(count, seed);
      if (suite == "spectral-action")
        return repro_specaction(std::min(count, 100), seed);
      std::cerr << "unknown suite '" << suite << "'\n";
      return kExitSchema;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
