#ifndef ZLINE_POLYROOTS_HPP
#define ZLINE_POLYROOTS_HPP

#include <complex>
#include <vector>

namespace zline {

// Roots of sum_k coeffs[k] z^k via the balanced companion matrix.
// The leading coefficient must be nonzero; callers certify the degree.
std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& coeffs);

std::vector<std::complex<double>> companion_roots(
    const std::vector<double>& coeffs);

}  // namespace zline

#endif
