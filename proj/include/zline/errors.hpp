#ifndef ZLINE_ERRORS_HPP
#define ZLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zline {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetric : Error {
  explicit NotSymmetric(double dev)
      : Error("matrix not symmetric, max asymmetry " + std::to_string(dev)),
        deviation(dev) {}
  double deviation;
};

struct NotPSD : Error {
  explicit NotPSD(double min_eig)
      : Error("matrix not positive semidefinite, min eigenvalue " +
              std::to_string(min_eig)),
        min_eigenvalue(min_eig) {}
  double min_eigenvalue;
};

struct KernelDimensionNotOne : Error {
  explicit KernelDimensionNotOne(int dim)
      : Error("numerical kernel dimension is " + std::to_string(dim) +
              ", expected 1"),
        dimension(dim) {}
  int dimension;
};

struct LeadingOrTrailingZero : Error {
  LeadingOrTrailingZero()
      : Error("first or last coefficient of kernel vector is numerically zero") {}
};

struct RankDeficiencyNotDetected : Error {
  RankDeficiencyNotDetected()
      : Error("Toeplitz matrix has full numerical rank, no node decomposition") {}
};

struct IllConditionedNodes : Error {
  explicit IllConditionedNodes(double cond)
      : Error("node system ill-conditioned, estimate " + std::to_string(cond)),
        condition(cond) {}
  double condition;
};

struct NotSimple : Error {
  explicit NotSimple(double g)
      : Error("extremal eigenvalue not simple, gap " + std::to_string(g)),
        gap(g) {}
  double gap;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotInKernel : Error {
  explicit NotInKernel(double res)
      : Error("vector not in kernel, residual " + std::to_string(res)),
        residual(res) {}
  double residual;
};

struct NotEven : Error {
  explicit NotEven(double dev)
      : Error("vector not even under index flip, deviation " + std::to_string(dev)),
        deviation(dev) {}
  double deviation;
};

struct EtaOrthogonal : Error {
  EtaOrthogonal() : Error("kernel vector orthogonal to the all-ones vector") {}
};

struct RepeatedLambda : Error {
  RepeatedLambda() : Error("model eigenvalues must be pairwise distinct") {}
};

struct DegenerateDegree : Error {
  DegenerateDegree() : Error("leading polynomial coefficient below tolerance") {}
};

struct DerivativeUnavailable : Error {
  explicit DerivativeUnavailable(int order)
      : Error("derivative of order " + std::to_string(order) + " not available"),
        order(order) {}
  int order;
};

struct SchemaError : Error {
  SchemaError(const std::string& what, int line)
      : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}
  int line;
};

}  // namespace zline

#endif
