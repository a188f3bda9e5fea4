#include "zline/entire.hpp"

#include <cmath>
#include <numbers>

namespace zline {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSeriesWindow = 1e-4;
constexpr int kSeriesTerms = 10;
const Complex kI{0.0, 1.0};
}  // namespace

Complex cyc(double t) {
  const Complex u = kI * (kTwoPi * t);
  if (std::abs(t) < kSeriesWindow) {
    // sum_{m>=0} u^m / (m+1)!
    Complex acc{1.0, 0.0};
    Complex pw{1.0, 0.0};
    double fact = 1.0;
    for (int m = 1; m < kSeriesTerms; ++m) {
      pw *= u;
      fact *= static_cast<double>(m + 1);
      acc += pw / fact;
    }
    return acc;
  }
  return (std::exp(u) - 1.0) / u;
}

Complex cyc_prime(double t) {
  if (std::abs(t) < kSeriesWindow) {
    // sum_{m>=1} m (2 pi i)^m t^(m-1) / (m+1)!
    const Complex c = kI * kTwoPi;
    Complex acc{0.0, 0.0};
    Complex cm = c;  // c^m
    double tp = 1.0; // t^(m-1)
    double fact = 1.0;
    for (int m = 1; m < kSeriesTerms; ++m) {
      fact *= static_cast<double>(m + 1);
      acc += static_cast<double>(m) * cm * tp / fact;
      cm *= c;
      tp *= t;
    }
    return acc;
  }
  const Complex u = kI * (kTwoPi * t);
  const Complex e = std::exp(u);
  // d/dt [(e^u - 1)/u] with u = 2 pi i t
  return (e * (u - 1.0) + 1.0) / (kI * kTwoPi * t * t);
}

Complex eps(Complex w) {
  const Complex u = -kI * w;
  if (std::abs(w) < kSeriesWindow) {
    Complex acc{1.0, 0.0};
    Complex pw{1.0, 0.0};
    double fact = 1.0;
    for (int m = 1; m < kSeriesTerms; ++m) {
      pw *= u;
      fact *= static_cast<double>(m + 1);
      acc += pw / fact;
    }
    return acc;
  }
  return (std::exp(u) - 1.0) / u;
}

Complex csinc(Complex w) {
  if (std::abs(w) < kSeriesWindow) {
    const Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
  }
  return std::sin(w) / w;
}

}  // namespace zline
