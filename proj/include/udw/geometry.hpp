#ifndef UDW_GEOMETRY_HPP
#define UDW_GEOMETRY_HPP

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "udw/errors.hpp"

namespace udw::geom {

/// Two-level detector: excitation energy, proper acceleration, squared
/// monopole matrix element.  Energies and accelerations in natural units.
struct Detector {
  double deltaE = 1.0;
  double kappa = 1.0;
  double mSquared = 1.0;
  std::string label;

  Detector() = default;
  Detector(double dE, double k, double m2 = 1.0, std::string lbl = {});

  /// Dimensionless ratio x = deltaE / kappa.
  double xRatio() const { return deltaE / kappa; }
};

enum class Role { Alice, Bob };

// The seven trajectory configurations.  The first detector always rides the
// right-wedge hyperbola through (t, x) = (0, 1/kappaA); the variant fixes the
// second trajectory relative to it.

struct ParallelTransverse {  // same acceleration, transverse offset rho0 > 0
  double kappa, rho0;
};
struct ParallelDifferentAcceleration {  // kappaA > kappaB, same axis
  double kappaA, kappaB;
};
struct ParallelLongitudinal {  // same acceleration, shift x0 along the axis.
  // x0 > 0 places the partner ahead; x0 < 0 (with |kappa x0| < 2) places it
  // behind and realises the role-swapped mirror of the positive-shift case.
  double kappa, x0;
};
struct AntiParallelTransverse {  // opposite wedges, transverse offset >= 0
  double kappaA, kappaB, rho0;
};
struct AntiParallelLongitudinal {  // opposite wedges, axial shift x1 < 2/kappa
  double kappa, x1;
};
struct Oriented {  // equal accelerations at relative angle phi in (0, pi)
  double kappa, phi;
};
struct BoostedPair {  // apex-shifted hyperbolae; inertial relative motion as
                      // kappa -> 0 with speed v = tanh(alpha)
  double kappa, alpha, rho0;
};

using Scenario =
    std::variant<ParallelTransverse, ParallelDifferentAcceleration,
                 ParallelLongitudinal, AntiParallelTransverse,
                 AntiParallelLongitudinal, Oriented, BoostedPair>;

/// Validates the variant's parameter constraints; throws std::invalid_argument.
void validate(const Scenario& s);

std::string scenarioName(const Scenario& s);
double kappaAlice(const Scenario& s);
double kappaBob(const Scenario& s);

/// The same physical configuration described with the detector roles
/// exchanged (shifts attach to the second trajectory by convention).
/// Defined for every variant except ParallelDifferentAcceleration, whose
/// normal form fixes kappaA > kappaB; throws WrongScenario there.
Scenario mirrored(const Scenario& s);

/// Inertial-coordinate event.  Null coordinates u = t-x, v = t+x are carried
/// along because the straight difference t^2 - x^2 loses all precision on
/// late-time hyperbolae; worldlinePosition fills them from closed forms.
struct Event {
  double t = 0, x = 0, y = 0, z = 0;
  double u = 0, v = 0;

  Event() = default;
  Event(double t_, double x_, double y_, double z_)
      : t(t_), x(x_), y(y_), z(z_), u(t_ - x_), v(t_ + x_) {}
  Event(double t_, double x_, double y_, double z_, double u_, double v_)
      : t(t_), x(x_), y(y_), z(z_), u(u_), v(v_) {}
};

Event worldlinePosition(const Scenario& s, Role role, double tau);

/// (t1-t2)^2 - |x1-x2|^2, evaluated as du*dv - dy^2 - dz^2.
double intervalSquared(const Event& e1, const Event& e2);

/// Coefficients of the interval identity
///   s^2(tauA, tauB) = K [ A(tauB) e^{kA tauA} - 2 B(tauB) + C(tauB) e^{-kA tauA} ].
struct IntervalDecomposition {
  std::function<double(double)> evalA;
  std::function<double(double)> evalB;
  std::function<double(double)> evalC;
  double K = 1.0;
  double kappaA = 1.0;
};

IntervalDecomposition intervalDecomposition(const Scenario& s);

/// The scenario's discriminant function D(tauB) with the sign convention of
/// its closed form; satisfies D^2 = B^2 - A C.
double dOfTauB(const Scenario& s, double tauB);

/// tauB values where the pole structure changes branch (zeros of A or of
/// B +- D).  Sorted ascending; empty when the structure is uniform.
std::vector<double> branchBoundaries(const Scenario& s);

enum class OffsetClass { EvenPi, OddPi };

/// One family of poles tau_A = realPart + i*offset of the tauA integrand in
/// the upper half plane, at fixed tauB.
struct PoleBranch {
  int branch;        // +1: (B+D)/A root family, -1: (B-D)/A
  double realPart;   // (1/kappaA) ln|eta|
  OffsetClass offsetClass;
  int epsilonSign;   // side of the real axis the n = 0 even pole comes from
  std::pair<double, double> validityRegion;  // enclosing boundary interval
  std::vector<std::complex<double>> poles;   // instantiated, n = 0..nMax
};

/// Pole towers at the given tauB, up to nMax per branch.  Throws
/// BranchBoundary if tauB sits on a boundary.
std::vector<PoleBranch> polesUpperHalf(const Scenario& s, const Detector& detA,
                                       const Detector& detB, double tauB,
                                       int nMax = 3);

}  // namespace udw::geom

#endif
