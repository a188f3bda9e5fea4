#ifndef ZLINE_ENTIRE_HPP
#define ZLINE_ENTIRE_HPP

#include <complex>

// Entire helper functions used to evaluate the various transforms without
// removable singularities. Each one switches to its Taylor series close to
// the origin so that values at lattice points are exact limits.

namespace zline {

using Complex = std::complex<double>;

// cyc(t) = (exp(2 pi i t) - 1) / (2 pi i t),  cyc(0) = 1.
// Vanishes at every nonzero integer.
Complex cyc(double t);

// Derivative of cyc. cyc_prime(0) = pi i, cyc_prime(m) = 1/m for integer m != 0.
Complex cyc_prime(double t);

// eps(w) = (exp(-i w) - 1) / (-i w),  eps(0) = 1.
// The Fourier transform of exp(2 pi i j x) restricted to [0,1] is eps(z - 2 pi j).
Complex eps(Complex w);

// csinc(w) = sin(w) / w,  csinc(0) = 1.
Complex csinc(Complex w);

}  // namespace zline

#endif
