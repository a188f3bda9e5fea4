#ifndef ZLINE_SUITES_HPP
#define ZLINE_SUITES_HPP

// Seeded randomized property suites shared by the CLI repro commands and the
// acceptance runner.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "zline/errors.hpp"
#include "zline/formbuilder.hpp"
#include "zline/rankone.hpp"
#include "zline/spectral.hpp"
#include "zline/specaction.hpp"
#include "zline/toeplitz.hpp"
#include "zline/zeros.hpp"

namespace zline::suites {

struct ToeplitzSuiteResult {
  int count = 0;
  double worst_root_modulus_dev = 0.0;
  double worst_reconstruction = 0.0;
  int non_palindromic = 0;
  bool pass(double tol_root = 1e-7, double tol_rec = 1e-8) const {
    return worst_root_modulus_dev <= tol_root &&
           worst_reconstruction <= tol_rec && non_palindromic == 0;
  }
};

// Conjugate-closed unit-circle nodes with pairwise separation >= min_sep,
// so the resulting Toeplitz matrix is real symmetric.
inline void random_node_set(std::mt19937& rng, int r, double min_sep,
                            std::vector<std::complex<double>>& nodes,
                            std::vector<double>& weights) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (;;) {
    nodes.clear();
    weights.clear();
    std::vector<double> angles;  // in (0, pi)
    const bool self_node = (r % 2 == 1);
    const int pairs = r / 2;
    bool ok = true;
    for (int k = 0; k < pairs && ok; ++k) {
      double th = 0.0;
      int tries = 0;
      for (; tries < 200; ++tries) {
        th = min_sep + (std::numbers::pi - 2 * min_sep) * unif(rng);
        bool sep = 2 * th >= min_sep && 2 * (std::numbers::pi - th) >= min_sep;
        for (double o : angles)
          sep = sep && std::abs(th - o) >= min_sep &&
                std::abs(th + o - 2 * std::numbers::pi) >= min_sep;
        if (sep) break;
      }
      if (tries == 200) ok = false;
      angles.push_back(th);
    }
    if (!ok) continue;
    for (double th : angles) {
      const double w = 0.1 + 1.9 * unif(rng);
      nodes.push_back(std::polar(1.0, th));
      nodes.push_back(std::polar(1.0, -th));
      weights.push_back(w);
      weights.push_back(w);
    }
    if (self_node) {
      nodes.push_back(unif(rng) < 0.5 ? 1.0 : -1.0);
      weights.push_back(0.1 + 1.9 * unif(rng));
    }
    return;
  }
}

inline ToeplitzSuiteResult run_toeplitz_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> size_dist(4, 12);
  ToeplitzSuiteResult res;
  for (int i = 0; i < count; ++i) {
    const int n = size_dist(rng);
    const int r = n - 1;  // one-dimensional kernel
    std::vector<std::complex<double>> nodes;
    std::vector<double> weights;
    random_node_set(rng, r, 0.1, nodes, weights);
    const HermitianToeplitz T = HermitianToeplitz::from_nodes(nodes, weights, n);

    // clustered node sets can push the second eigenvalue below the kernel
    // detection threshold; reject those draws like cf_decompose would
    {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(T.materialize());
      if (es.eigenvalues()[1] < 1e-8 * es.eigenvalues()[n - 1]) {
        --i;
        continue;
      }
    }

    const CFDecomposition cf = cf_decompose(T);
    res.worst_reconstruction =
        std::max(res.worst_reconstruction, cf.reconstruction_error);
    res.worst_root_modulus_dev =
        std::max(res.worst_root_modulus_dev, cf.max_modulus_deviation);

    Eigen::VectorXcd xi = kernel_vector(T);
    // T is real symmetric, so xi is real up to a global phase; remove it.
    int imax = 0;
    for (int j = 1; j < xi.size(); ++j)
      if (std::abs(xi[j]) > std::abs(xi[imax])) imax = j;
    xi *= std::conj(xi[imax]) / std::abs(xi[imax]);
    const RootReport rr = kernel_polynomial_roots(xi);
    res.worst_root_modulus_dev =
        std::max(res.worst_root_modulus_dev, rr.max_modulus_deviation);
    if (palindrome_check(xi, 1e-7) == Symmetry::neither) ++res.non_palindromic;
    ++res.count;
  }
  return res;
}

// A certified instance: PSD structured form with lambda_min = 0 and a
// one-dimensional even kernel, together with its D' operator.
struct CertifiedInstance {
  QuadraticFormStructure Q;
  ModelOperator D;
  RankOneModifiedOperator Dp;
};

inline QuadraticFormStructure random_structured_form(std::mt19937& rng,
                                                     bool general_lambda) {
  std::uniform_int_distribution<int> n_dist(1, 12);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int N = n_dist(rng);
  QuadraticFormStructure Q = QuadraticFormStructure::zero(N);
  if (general_lambda) {
    std::vector<double> pos(N);
    for (;;) {
      for (int i = 0; i < N; ++i) pos[i] = 0.2 + 12.0 * unif(rng);
      std::sort(pos.begin(), pos.end());
      bool ok = true;
      for (int i = 0; i + 1 < N; ++i) ok = ok && pos[i + 1] - pos[i] > 0.1;
      if (ok) break;
    }
    for (int i = 1; i <= N; ++i) {
      Q.lambda[N + i] = pos[i - 1];
      Q.lambda[N - i] = -pos[i - 1];
    }
  }
  for (int i = 0; i <= N; ++i) {
    const double a = gauss(rng), b = gauss(rng);
    Q.at_a(i) = a;
    Q.at_a(-i) = a;  // even diagonal
    Q.at_b(i) = b;
    Q.at_b(-i) = -b;  // odd generator
  }
  Q.at_b(0) = 0.0;
  return Q;
}

// Shift so that lambda_min(Q) = 0 and return the instance when the kernel
// is even, simple, and non-orthogonal to eta; otherwise nullopt-like flag.
inline bool certify(QuadraticFormStructure Q, CertifiedInstance& out) {
  const Eigen::MatrixXd M0 = Q.materialize();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M0);
  const double lmin = es.eigenvalues()[0];
  Q = delta_shift(Q, -lmin / 2.0);

  const Eigen::MatrixXd M = Q.materialize();
  EigenPair p;
  try {
    p = extremal_pair(M, Which::min);
  } catch (const NotSimple&) {
    return false;
  }
  if (p.parity != Parity::even) return false;

  ModelOperator D;
  D.lambda = Eigen::Map<const Eigen::VectorXd>(Q.lambda.data(), Q.lambda.size());
  try {
    out.Dp = build_dprime(Q, D, p.vector);
  } catch (const EtaOrthogonal&) {
    return false;
  }
  out.Q = std::move(Q);
  out.D = std::move(D);
  return true;
}

struct FinmainSuiteResult {
  int generated = 0;
  int certified = 0;
  double worst_commutator = 0.0;
  double worst_selfadjoint = 0.0;  // relative to ||Q|| ||D'||
  double worst_det = 0.0;
  double worst_multiset = 0.0;
  double worst_imag = 0.0;  // relative, |Im z|/(1 + |z|)
  bool pass() const {
    return certified > 0 && worst_commutator <= 1e-12 &&
           worst_selfadjoint <= 1e-11 && worst_det <= 1e-8 &&
           worst_multiset <= 1e-7 && worst_imag <= 1e-7;
  }
};

inline double multiset_distance(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  // greedy nearest matching; adequate for well-separated spectra
  for (const auto& x : a) {
    size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(x - b[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    worst = std::max(worst, bd);
    b.erase(b.begin() + best);
  }
  return worst;
}

inline FinmainSuiteResult run_finmain_suite(int count, unsigned seed,
                                            bool general_lambda) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  FinmainSuiteResult res;
  for (int i = 0; i < count; ++i) {
    ++res.generated;
    QuadraticFormStructure Q0 = random_structured_form(rng, general_lambda);
    CertifiedInstance inst;
    if (!certify(std::move(Q0), inst)) continue;
    ++res.certified;
    const int N = inst.Q.N;

    res.worst_commutator =
        std::max(res.worst_commutator, commutator_residual(inst.Q, inst.D));

    const double scale = inst.Q.materialize().norm() * inst.Dp.dprime.norm();
    res.worst_selfadjoint =
        std::max(res.worst_selfadjoint,
                 q_selfadjoint_residual(inst.Q, inst.Dp) / std::max(scale, 1e-300));

    for (int k = 0; k < 20; ++k) {
      const double rad = 2.0 * N * std::sqrt(unif(rng));
      const double th = 2.0 * std::numbers::pi * unif(rng);
      res.worst_det = std::max(
          res.worst_det, det_identity_residual(inst.Dp, std::polar(rad, th)));
    }

    std::vector<double> xi(inst.Dp.xi.data(), inst.Dp.xi.data() + 2 * N + 1);
    const KernelPolynomial P = build_p(xi, inst.Q.lambda);
    const ZeroReport zr = poly_roots(P, 1e-7);
    std::vector<std::complex<double>> expect = zr.zeros;
    expect.emplace_back(0.0, 0.0);
    res.worst_multiset = std::max(
        res.worst_multiset, multiset_distance(expect, dprime_spectrum(inst.Dp)));
    for (const auto& z : zr.zeros)
      res.worst_imag =
          std::max(res.worst_imag, std::abs(z.imag()) / (1.0 + std::abs(z)));
  }
  return res;
}

struct SpecActionSuiteResult {
  int fd_cases = 0;
  int certified = 0;
  double worst_fd_rel = 0.0;     // gateaux vs Richardson finite differences
  double worst_dersa_rel = 0.0;  // both derivatives vs <D xi, D xi>_Q
  bool pass() const {
    return worst_fd_rel <= 1e-6 && worst_dersa_rel <= 1e-9 && certified > 0;
  }
};

inline double richardson_derivative(const std::vector<double>& poly,
                                    const Eigen::VectorXd& D,
                                    const Eigen::MatrixXd& R, int n) {
  // n = 1: central differences of tr f(D+tR).
  // n = 2: central differences of d/dt tr f(D+tR) = tr(f'(D+tR) R), which
  // avoids the cancellation of a second-order difference quotient.
  std::vector<double> dpoly(poly.size() > 1 ? poly.size() - 1 : 1, 0.0);
  for (size_t k = 1; k < poly.size(); ++k) dpoly[k - 1] = k * poly[k];
  const auto g = [&](double t) {
    const int m = static_cast<int>(D.size());
    Eigen::MatrixXd A = Eigen::MatrixXd(D.asDiagonal()) + t * R;
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
    for (size_t k = dpoly.size(); k-- > 0;) {
      P = P * A;
      P.diagonal().array() += dpoly[k];
    }
    return (P * R).trace();
  };
  const auto fd = [&](double h) {
    if (n == 1)
      return (trace_oracle(poly, D, R, h) - trace_oracle(poly, D, R, -h)) /
             (2 * h);
    return (g(h) - g(-h)) / (2 * h);
  };
  const double d1 = fd(1e-3), d2 = fd(1e-4);  // both O(h^2) accurate
  return (100.0 * d2 - d1) / 99.0;
}

// Node-data function for Prop der-sa: f' = b, f'' = a at the lambda nodes.
// The node values of f itself drop out of the summed identities.
inline SmoothFunction node_function(const std::vector<double>& lambda,
                                    const std::vector<double>& a,
                                    const std::vector<double>& b) {
  SmoothFunction f;
  f.max_order = 2;
  f.eval = [lambda, a, b](double x, int k) {
    size_t best = 0;
    for (size_t j = 1; j < lambda.size(); ++j)
      if (std::abs(x - lambda[j]) < std::abs(x - lambda[best])) best = j;
    if (std::abs(x - lambda[best]) > 1e-6)
      throw Error("node_function: evaluation off the node set");
    if (k == 0) return 0.0;
    if (k == 1) return b[best];
    return a[best];
  };
  return f;
}

inline SpecActionSuiteResult run_specaction_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> deg_dist(1, 6);
  std::uniform_int_distribution<int> m_dist(3, 9);
  SpecActionSuiteResult res;

  for (int i = 0; i < count; ++i) {
    const int deg = deg_dist(rng);
    std::vector<double> poly(deg + 1);
    for (double& c : poly) c = gauss(rng);
    const int m = m_dist(rng);
    Eigen::VectorXd D(m);
    for (int j = 0; j < m; ++j) D[j] = -2.0 + 4.0 * j / (m - 1.0) + 0.1 * gauss(rng);
    std::sort(D.data(), D.data() + m);
    bool sep = true;
    for (int j = 0; j + 1 < m; ++j) sep = sep && D[j + 1] - D[j] > 0.05;
    if (!sep) {
      --i;
      continue;
    }
    Eigen::MatrixXd R(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) R(r, c) = gauss(rng);

    const SmoothFunction f = make_polynomial(poly);
    for (int n = 1; n <= 2; ++n) {
      const double g = gateaux_n(f, D, R, n);
      const double fd = richardson_derivative(poly, D, R, n);
      const double rel = std::abs(g - fd) / std::max({std::abs(g), std::abs(fd), 1.0});
      res.worst_fd_rel = std::max(res.worst_fd_rel, rel);
    }
    ++res.fd_cases;
  }

  // Prop der-sa on certified instances.
  for (int i = 0; res.certified < count && i < 40 * count; ++i) {
    QuadraticFormStructure Q0 = random_structured_form(rng, false);
    CertifiedInstance inst;
    if (!certify(std::move(Q0), inst)) continue;
    ++res.certified;
    const int n = 2 * inst.Q.N + 1;

    const Eigen::VectorXd dxi = inst.D.lambda.cwiseProduct(inst.Dp.xi);
    const Eigen::MatrixXd R = -dxi * Eigen::RowVectorXd::Ones(n);
    const SmoothFunction f = node_function(inst.Q.lambda, inst.Q.a, inst.Q.b);

    double target = 0.0;  // <D xi, D xi>_Q = -sum b_j (D xi)_j
    for (int j = 0; j < n; ++j) target -= inst.Q.b[j] * dxi[j];
    const double scale = std::max({std::abs(target), dxi.squaredNorm(), 1.0});

    for (int ord = 1; ord <= 2; ++ord) {
      const double g = gateaux_n(f, inst.D.lambda, R, ord);
      res.worst_dersa_rel =
          std::max(res.worst_dersa_rel, std::abs(g - target) / scale);
    }
  }
  return res;
}

}  // namespace zline::suites

#endif
