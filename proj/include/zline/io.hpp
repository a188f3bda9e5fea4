#ifndef ZLINE_IO_HPP
#define ZLINE_IO_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "zline/formbuilder.hpp"

namespace zline {

// Distribution file: key-value lines, '#' comments.
//   L <positive real>
//   delta <weight>
//   coeff <k> <x_k> <y_k>
// Missing coefficients default to zero. Throws SchemaError with the
// offending line number.
DistributionSpec read_distribution(std::istream& in);
DistributionSpec read_distribution_file(const std::string& path);

void write_distribution(std::ostream& out, const DistributionSpec& dist);

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& M);

struct ZeroRow {
  std::complex<double> z;
  double eval_abs = 0.0;
  bool certified = false;
};
void write_zero_csv(std::ostream& out, const std::vector<ZeroRow>& rows);

// FNV-1a over file bytes, for the CLI result cache.
std::string content_hash(const std::string& text);

}  // namespace zline

#endif
