#ifndef UDW_CROSSTERM_HPP
#define UDW_CROSSTERM_HPP

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "udw/geometry.hpp"
#include "udw/numerics.hpp"

namespace udw::cross {

using Complex = std::complex<double>;

/// Distributional cross term: value = coefficient * delta(omega), with the
/// delta in the dimensionless variable lambda_B = kappa_B tau_B and the
/// convention  integral exp(i omega lambda) dlambda = 2 pi delta(omega).
struct DeltaTerm {
  Complex coefficient{0.0, 0.0};
  double omega = 0.0;
  std::string expression;
};

struct FiniteValue {
  Complex value{0.0, 0.0};
  double errorEstimate = 0.0;
};

struct BoundedOnly {
  double upperBound = 0.0;
  std::optional<FiniteValue> numericValue;
};

using CrossTermResult = std::variant<DeltaTerm, FiniteValue, BoundedOnly>;

/// Numeric value carried by a FiniteValue or BoundedOnly result; throws
/// WrongScenario for DeltaTerm or a bound without numerics.
FiniteValue finiteValue(const CrossTermResult& r);

/// The reduced one-dimensional integrand f with  I_E = integral f dtau_B,
/// after the tau_A integral has been closed in the upper half plane and the
/// pole towers summed geometrically.  Throws BranchBoundary at boundary
/// points of the pole structure.
Complex residueReducedIntegrand(const geom::Scenario& s,
                                const geom::Detector& detA,
                                const geom::Detector& detB, double tauB);

/// sigma = acosh[(kA/kB + kB/kA + kA kB rho0^2)/2] >= 0.
double generalizedSigma(double kappaA, double kappaB, double rho0);

/// sin(x sigma)/sinh(sigma), with the analytic sigma -> 0 limit x.
double sinRatio(double x, double sigma);

/// Closed-form delta term for the three energy-conserving scenarios
/// (ParallelTransverse, ParallelDifferentAcceleration, AntiParallelTransverse).
DeltaTerm deltaCoefficient(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB);

/// P factor of the longitudinal-shift bounds: the closed form of
/// integral_0^inf du / (u^2 + b u + 1) with b = kappa*|shift|.
double pFactor(const geom::Scenario& s);

/// Closed-form |I_E| bound for ParallelLongitudinal, AntiParallelLongitudinal
/// and Oriented.
double crossTermUpperBound(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB);

/// Parameters of the vanishing-acceleration limit of BoostedPair: inertial
/// trajectories at relative speed v with transverse offset rho0.
struct InertialLimitParams {
  double v = 0.5;
  double rho0 = 1.0;
  double deltaEA = 1.0;
  double deltaEB = 1.0;
  double ell = 0.0;         // sqrt(1-v^2)/v * rho0
  double epsilonEff = 0.0;  // deltaEB + deltaEA/sqrt(1-v^2)
  double p = 0.0;           // v deltaEA / sqrt(1-v^2)

  InertialLimitParams(double v_, double rho0_, double dEA, double dEB);
};

/// I_E of the inertial limit: (i/2pi) (sqrt(1-v^2)/v) K0(ell sqrt(eps^2-p^2)).
Complex inertialLimitCrossTerm(const InertialLimitParams& params);

/// Full cross-term dispatcher: DeltaTerm for the three delta scenarios,
/// numerically integrated FiniteValue otherwise, wrapped in BoundedOnly where
/// a closed-form bound exists.
CrossTermResult crossTerm(const geom::Scenario& s, const geom::Detector& detA,
                          const geom::Detector& detB,
                          const quad::QuadratureConfig& cfg = {});

}  // namespace udw::cross

#endif
