#ifndef UDW_NUMERICS_HPP
#define UDW_NUMERICS_HPP

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "udw/errors.hpp"

namespace udw::quad {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct QuadratureConfig {
  double absTol = 1e-10;
  double relTol = 1e-9;
  int maxSubdivisions = 200000;
  // Exponential decay bound used when truncating semi-infinite domains.
  double tailDecayRate = 1.0;
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double errorEstimate = 0.0;
  int subdivisionsUsed = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued f over
/// [a, b].  Interior points where f is non-smooth can be declared in
/// `splitPoints`; panels never straddle them.
QuadResult adaptiveQuadrature(const Integrand& f, double a, double b,
                              const QuadratureConfig& cfg,
                              const std::vector<double>& splitPoints = {});

struct TailOptions {
  // |f(t)| <= envelopeC * exp(-decayRate*|t|) for |t| >= onset.
  double envelopeC = 1.0;
  double onset = 0.0;
  // Rough upper bound on the phase rate of f, sets the initial panel width.
  double maxPhaseRate = 1.0;
  std::vector<double> splitPoints{};
};

/// Integral of f over (-inf, inf) for integrands with an exponentially
/// decaying envelope.  The truncation point T is chosen from the analytic
/// tail bound envelopeC * exp(-decayRate*T) / decayRate < absTol/4; the
/// interior is pre-split into phase-resolving panels and refined adaptively.
QuadResult oscillatoryTailIntegral(const Integrand& f, double decayRate,
                                   const QuadratureConfig& cfg,
                                   const TailOptions& opts = {});

/// Modified Bessel function of the second kind, order zero.  Small-z series
/// below z = 0.1, integral representation above.  Relative error <= 1e-10.
double besselK0(double z);

/// Eigenvalues of a complex 4x4 matrix (row-major) via Hessenberg reduction
/// and unshifted QR iteration; trailing 2x2 blocks are closed out
/// analytically.  Order unspecified.
std::array<Complex, 4> complexEigenvalues4x4(const std::array<Complex, 16>& m);

/// h(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binaryEntropy(double x);

}  // namespace udw::quad

#endif
