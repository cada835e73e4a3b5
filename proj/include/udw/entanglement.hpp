#ifndef UDW_ENTANGLEMENT_HPP
#define UDW_ENTANGLEMENT_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "udw/crossterm.hpp"
#include "udw/geometry.hpp"
#include "udw/numerics.hpp"
#include "udw/response.hpp"

namespace udw::ent {

using Complex = std::complex<double>;
using Matrix4 = std::array<Complex, 16>;  // row-major

/// O(c^2) components of the two-detector state in the basis
/// {|11>, |10>, |01>, |00>}.  The entries never evaluated by the analysis
/// (PAB, WA, WB) default to zero and carry an explicit flag.
struct DensityMatrixComponents {
  double c = 1e-3;
  double PA = 0.0;
  double PB = 0.0;
  Complex E{0.0, 0.0};
  Complex PAB{0.0, 0.0};
  Complex WA{0.0, 0.0};
  Complex WB{0.0, 0.0};
  bool offDiagonalEvaluated = false;
};

enum class Verdict {
  Entangled,
  NotEntangledDelta,
  NotEntangledBounded,
  NotEntangledXi,
};

std::string verdictName(Verdict v);

struct EntanglementReport {
  Verdict verdict = Verdict::NotEntangledDelta;
  std::optional<double> xi;
  std::optional<double> sigma;
  // Rates per unit proper time; "reduced" has c^2 |m|^2 divided out.
  std::optional<double> concurrenceRate;
  std::optional<double> negativityRate;
  std::optional<double> concurrenceRateReduced;
  std::optional<double> negativityRateReduced;
  std::optional<double> bound;
  cross::CrossTermResult crossTerm;
  response::ResponseRate rateA, rateB;
  std::string notes;
};

/// Entanglement condition Xi = |sin(x sigma)|/sinh(sigma) e^{pi x} - x, with
/// the sigma -> 0 limit x (e^{pi x} - 1).
double xi(double x, double sigma);

/// Rate-level entanglement condition: rateA * rateB < rateE^2 (strict).
bool entanglementConditionRates(double rateE, double rateA, double rateB);

struct ConcurrenceRates {
  double concurrencePerProperTime;
  double negativityPerProperTime;
};

/// max[0, (c^2 kappa / pi) mSquared Xi / (e^{2 pi x} - 1)] and half of it;
/// valid in the symmetric configuration (equal energies, accelerations and
/// matrix elements).
ConcurrenceRates concurrenceRatePerProperTime(double x, double sigma, double c,
                                              double mSquared, double kappa);

/// Assembles the O(c^2) density matrix; throws InvalidState if the diagonal
/// leaves [0, 1].
Matrix4 assembleDensityMatrix(const DensityMatrixComponents& comp);

/// -(c^2/2)[PA + PB - sqrt((PA-PB)^2 + 4|E|^2)]; requires PA PB < |E|^2.
double negativityClosedForm(double c, double PA, double PB, double absE);

/// Negativity from the eigenvalues of the partial transpose over the second
/// qubit.
double negativityFromPartialTranspose(const Matrix4& rho);

/// 2 c^2 (|E| - sqrt(PA PB)); requires PA PB < |E|^2.
double concurrenceClosedForm(double c, double PA, double PB, double absE);

/// Wootters concurrence max[0, l1 - l2 - l3 - l4] from the spin-flipped
/// eigenvalue construction.
double concurrenceWootters(const Matrix4& rho);

/// E_F = h((1 + sqrt(1 - C^2))/2) in ebits.
double entanglementOfFormation(double C);

/// Partial transpose over the second qubit, basis {|11>,|10>,|01>,|00>}.
Matrix4 partialTransposeB(const Matrix4& rho);

/// Scenario-level verdict with rates, bound and diagnostics attached.
EntanglementReport verdict(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB, double coupling,
                           const quad::QuadratureConfig& cfg = {});

}  // namespace udw::ent

#endif
