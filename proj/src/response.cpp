#include "udw/response.hpp"

#include <cmath>
#include <numbers>

namespace udw::response {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double excitationRatePerLambda(double x) {
  if (!(x > 0.0)) throw DomainError("excitationRatePerLambda: x must be > 0");
  return (x / kTwoPi) / std::expm1(kTwoPi * x);
}

double excitationRatePerProperTime(const geom::Detector& det) {
  if (!(det.kappa > 0.0))
    throw DomainError("excitationRatePerProperTime: kappa must be > 0");
  return det.kappa * excitationRatePerLambda(det.xRatio());
}

ResponseRate responseRate(const geom::Detector& det) {
  ResponseRate r;
  r.perLambda = excitationRatePerLambda(det.xRatio());
  r.perProperTime = det.kappa * r.perLambda;
  r.temperature = det.kappa / kTwoPi;
  return r;
}

}  // namespace udw::response
