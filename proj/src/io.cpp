#include "zline/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "zline/errors.hpp"

namespace zline {

DistributionSpec read_distribution(std::istream& in) {
  DistributionSpec dist;
  std::string line;
  int lineno = 0;
  bool saw_L = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "L") {
      if (!(ls >> dist.L) || !(dist.L > 0.0))
        throw SchemaError("L must be a positive real", lineno);
      saw_L = true;
    } else if (key == "delta") {
      if (!(ls >> dist.delta_weight))
        throw SchemaError("delta expects one real weight", lineno);
    } else if (key == "coeff") {
      int k;
      double x, y;
      if (!(ls >> k >> x >> y) || k < 0)
        throw SchemaError("coeff expects: k >= 0, x_k, y_k", lineno);
      if (k == 0 && y != 0.0)
        throw SchemaError("y_0 must vanish (a_0 is real)", lineno);
      if (static_cast<size_t>(k) >= dist.coeffs.size())
        dist.coeffs.resize(k + 1, {0.0, 0.0});
      dist.coeffs[k] = {x, y};
    } else {
      throw SchemaError("unknown key '" + key + "'", lineno);
    }
    std::string extra;
    if (ls >> extra) throw SchemaError("trailing tokens", lineno);
  }
  if (!saw_L) dist.L = 1.0;
  if (dist.coeffs.empty()) dist.coeffs.push_back({0.0, 0.0});
  dist.validate();
  return dist;
}

DistributionSpec read_distribution_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open '" + path + "'", 0);
  return read_distribution(f);
}

void write_distribution(std::ostream& out, const DistributionSpec& dist) {
  out << std::setprecision(17);
  out << "L " << dist.L << "\n";
  out << "delta " << dist.delta_weight << "\n";
  for (size_t k = 0; k < dist.coeffs.size(); ++k)
    out << "coeff " << k << " " << dist.coeffs[k][0] << " " << dist.coeffs[k][1]
        << "\n";
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& M) {
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      out << M(i, j) << (j + 1 < M.cols() ? "," : "");
    out << "\n";
  }
}

void write_zero_csv(std::ostream& out, const std::vector<ZeroRow>& rows) {
  out << std::setprecision(17);
  out << "re,im,eval_abs,certified\n";
  for (const auto& r : rows)
    out << r.z.real() << "," << r.z.imag() << "," << r.eval_abs << ","
        << (r.certified ? 1 : 0) << "\n";
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace zline
