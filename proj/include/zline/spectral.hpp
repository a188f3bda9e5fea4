#ifndef ZLINE_SPECTRAL_HPP
#define ZLINE_SPECTRAL_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zline/formbuilder.hpp"

namespace zline {

enum class Parity { even, odd, mixed };
enum class Which { min, max };

struct EigenDecomposition {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns
};

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double gap = 0.0;  // distance to the nearest other eigenvalue
  Parity parity = Parity::mixed;
};

struct LadderRung {
  int N = 0;
  double lambda_min = 0.0;
  double gap = 0.0;
  Parity parity = Parity::mixed;
  bool simple = false;
  double max_imag_root = 0.0;  // from the zero pipeline, when run
  bool zero_certified = false;
  bool zero_pipeline_ran = false;
};

struct TruncationLadderReport {
  std::vector<LadderRung> rungs;
  bool monotone = true;  // lambda_min nonincreasing along the ladder
};

// Dense symmetric eigendecomposition; throws NotSymmetric.
EigenDecomposition sym_eig(const Eigen::MatrixXd& A, double sym_tol = 1e-12);

// Parity of a vector against the index flip gamma (reversal about the center).
Parity parity_of(const Eigen::VectorXd& v, double tol = 1e-8);

// Extremal eigenpair with simplicity certification (throws NotSimple when the
// gap is below gap_tol; gap_tol < 0 selects the default 1e-8 * ||A||).
EigenPair extremal_pair(const Eigen::MatrixXd& A, Which which, double gap_tol = -1.0);

// Builds Q_N for each N, extracts the minimal pair, and runs the kernel
// polynomial zero pipeline on even simple rungs.
TruncationLadderReport truncation_sweep(const DistributionSpec& dist,
                                        const std::vector<int>& N_list,
                                        double gap_tol = -1.0,
                                        double tol_real = 1e-7);

const char* to_string(Parity p);

}  // namespace zline

#endif
