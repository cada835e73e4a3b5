#ifndef UDW_ORACLE_HPP
#define UDW_ORACLE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "udw/geometry.hpp"
#include "udw/numerics.hpp"

namespace udw::oracle {

using Complex = std::complex<double>;

struct OracleConfig {
  // Proper-time half-width of the integration window per detector.
  double window = 40.0;
  // Dimensionless regulator seeds, descending; scaled internally by the
  // scenario units (1/kappa^2 for the interval regulator, 1/kappa for the
  // Wightman time shift).
  std::vector<double> epsilonValues{1e-3, 5e-4};
  // Target sample density per unit proper time; sets the pre-split panel
  // width of the iterated quadrature.
  double gridDensity = 64.0;
  quad::QuadratureConfig cfg{1e-9, 1e-8, 400000, 1.0};
};

struct Extrapolated {
  Complex value{0.0, 0.0};
  // Spread of the pairwise extrapolants, a residual-nonlinearity diagnostic.
  double discrepancy = 0.0;
};

/// Richardson extrapolation of samples (epsilon, value) assuming the leading
/// error is linear in epsilon.  Needs at least two distinct epsilons.
Extrapolated epsilonExtrapolate(const std::vector<std::pair<double, Complex>>& samples);

/// Direct double quadrature of the regularized Feynman-propagator cross term
///   -i iint e^{i dEB tauB} e^{i dEA tauA} G_F dtauA dtauB ,
/// G_F = (i/4pi^2) / (s^2 - i eps), epsilon-extrapolated.  Rejects the three
/// delta-supported scenarios (DeltaScenario).
Complex bruteForceCrossTerm(const geom::Scenario& s, const geom::Detector& detA,
                            const geom::Detector& detB, const OracleConfig& oc);

/// As above but for a single regulator value; exposed for window-convergence
/// studies.
Complex bruteForceCrossTermAtEpsilon(const geom::Scenario& s,
                                     const geom::Detector& detA,
                                     const geom::Detector& detB,
                                     const OracleConfig& oc, double epsilonSeed);

/// Excitation rate per unit proper time from direct quadrature of the pulled
/// back Wightman function, epsilon-extrapolated.  The double integral over
/// the window is reduced exactly by stationarity on the boost orbit to the
/// correlator transform  integral e^{i dE u} G_W(u - i eps) du.
double bruteForceResponseRate(const geom::Detector& det, const OracleConfig& oc);

}  // namespace udw::oracle

#endif
