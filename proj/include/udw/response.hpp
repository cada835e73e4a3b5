#ifndef UDW_RESPONSE_HPP
#define UDW_RESPONSE_HPP

#include "udw/geometry.hpp"

namespace udw::response {

// The total excitation probability of an eternally switched detector grows
// linearly with proper time; only rates are physical.  DurationFactor marks
// the formally infinite duration integral that multiplies them.
struct DurationFactor {};

struct ResponseRate {
  double perProperTime = 0.0;  // units of energy
  double perLambda = 0.0;      // dimensionless, lambda = kappa tau
  double temperature = 0.0;    // kappa / 2 pi
};

/// Planck excitation rate (deltaE/2pi) / (exp(2 pi deltaE/kappa) - 1).
double excitationRatePerProperTime(const geom::Detector& det);

/// Rate per unit dimensionless parameter: (x/2pi) / (exp(2 pi x) - 1).
double excitationRatePerLambda(double x);

ResponseRate responseRate(const geom::Detector& det);

}  // namespace udw::response

#endif
