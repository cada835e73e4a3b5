#include "udw/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace udw::ent {

namespace {
constexpr double kPi = std::numbers::pi;

inline Complex& at(Matrix4& m, int i, int j) { return m[4 * i + j]; }
inline const Complex& at(const Matrix4& m, int i, int j) { return m[4 * i + j]; }
}  // namespace

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::Entangled: return "Entangled";
    case Verdict::NotEntangledDelta: return "NotEntangledDelta";
    case Verdict::NotEntangledBounded: return "NotEntangledBounded";
    case Verdict::NotEntangledXi: return "NotEntangledXi";
  }
  return "?";
}

double xi(double x, double sigma) {
  if (!(x > 0.0) || !(sigma >= 0.0))
    throw DomainError("xi: requires x > 0 and sigma >= 0");
  return std::abs(cross::sinRatio(x, sigma)) * std::exp(kPi * x) - x;
}

bool entanglementConditionRates(double rateE, double rateA, double rateB) {
  return rateA * rateB < rateE * rateE;
}

ConcurrenceRates concurrenceRatePerProperTime(double x, double sigma, double c,
                                              double mSquared, double kappa) {
  if (!(x > 0.0) || !(sigma >= 0.0) || !(c >= 0.0) || !(mSquared >= 0.0) ||
      !(kappa > 0.0))
    throw DomainError("concurrenceRatePerProperTime: invalid arguments");
  const double rate = std::max(
      0.0, c * c * kappa / kPi * mSquared * xi(x, sigma) / std::expm1(2.0 * kPi * x));
  return ConcurrenceRates{rate, 0.5 * rate};
}

Matrix4 assembleDensityMatrix(const DensityMatrixComponents& comp) {
  const double c2 = comp.c * comp.c;
  Matrix4 rho{};
  at(rho, 0, 3) = c2 * comp.E;
  at(rho, 3, 0) = c2 * std::conj(comp.E);
  at(rho, 1, 1) = c2 * comp.PA;
  at(rho, 1, 2) = c2 * comp.PAB;
  at(rho, 2, 1) = c2 * std::conj(comp.PAB);
  at(rho, 1, 3) = c2 * comp.WA;
  at(rho, 3, 1) = c2 * std::conj(comp.WA);
  at(rho, 2, 2) = c2 * comp.PB;
  at(rho, 2, 3) = c2 * comp.WB;
  at(rho, 3, 2) = c2 * std::conj(comp.WB);
  at(rho, 3, 3) = 1.0 - c2 * (comp.PA + comp.PB);
  for (int i = 0; i < 4; ++i) {
    const double d = at(rho, i, i).real();
    if (d < 0.0 || d > 1.0)
      throw InvalidState("assembleDensityMatrix: diagonal entry outside [0,1]");
  }
  double tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += at(rho, i, i).real();
  if (std::abs(tr - 1.0) > 1e-12)
    throw InvalidState("assembleDensityMatrix: trace != 1");
  return rho;
}

double negativityClosedForm(double c, double PA, double PB, double absE) {
  if (!(PA >= 0.0) || !(PB >= 0.0) || !(absE >= 0.0))
    throw DomainError("negativityClosedForm: negative inputs");
  if (!(PA * PB < absE * absE))
    throw ConditionNotMet("negativityClosedForm: requires PA*PB < |E|^2");
  const double root = std::sqrt((PA - PB) * (PA - PB) + 4.0 * absE * absE);
  return -0.5 * c * c * (PA + PB - root);
}

Matrix4 partialTransposeB(const Matrix4& rho) {
  // basis index = 2*(1-a) + (1-b) for qubit values a, b; transposing B swaps
  // the b index between bra and ket.
  Matrix4 pt{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          at(pt, 2 * a + b, 2 * ap + bp) = at(rho, 2 * a + bp, 2 * ap + b);
  return pt;
}

double negativityFromPartialTranspose(const Matrix4& rho) {
  const Matrix4 pt = partialTransposeB(rho);
  const auto eig = quad::complexEigenvalues4x4(pt);
  double neg = 0.0;
  for (const Complex& l : eig)
    if (l.real() < 0.0) neg -= l.real();
  return neg;
}

double concurrenceClosedForm(double c, double PA, double PB, double absE) {
  if (!(PA >= 0.0) || !(PB >= 0.0) || !(absE >= 0.0))
    throw DomainError("concurrenceClosedForm: negative inputs");
  if (!(PA * PB < absE * absE))
    throw ConditionNotMet("concurrenceClosedForm: requires PA*PB < |E|^2");
  return 2.0 * c * c * (absE - std::sqrt(PA * PB));
}

double concurrenceWootters(const Matrix4& rho) {
  // R = rho (sy x sy) rho^* (sy x sy); the flip matrix is antidiagonal
  // (-1, 1, 1, -1) in this basis.
  const std::array<double, 4> flip{-1.0, 1.0, 1.0, -1.0};
  Matrix4 flipped{};  // (sy x sy) rho^* (sy x sy)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      at(flipped, i, j) =
          flip[i] * flip[j] * std::conj(at(rho, 3 - i, 3 - j));
  Matrix4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < 4; ++k) sum += at(rho, i, k) * at(flipped, k, j);
      at(r, i, j) = sum;
    }
  auto eig = quad::complexEigenvalues4x4(r);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(eig[i].real(), 0.0));
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entanglementOfFormation(double C) {
  if (!(C >= 0.0 && C <= 1.0))
    throw DomainError("entanglementOfFormation: C outside [0,1]");
  return quad::binaryEntropy(0.5 * (1.0 + std::sqrt(1.0 - C * C)));
}

EntanglementReport verdict(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB, double coupling,
                           const quad::QuadratureConfig& cfg) {
  geom::validate(s);
  EntanglementReport rep;
  rep.rateA = response::responseRate(detA);
  rep.rateB = response::responseRate(detB);
  rep.crossTerm = cross::crossTerm(s, detA, detB, cfg);
  const double xA = detA.xRatio(), xB = detB.xRatio();

  if (const auto* apt = std::get_if<geom::AntiParallelTransverse>(&s)) {
    const double sigma = cross::generalizedSigma(apt->kappaA, apt->kappaB, apt->rho0);
    rep.sigma = sigma;
    if (std::abs(xA - xB) > 1e-12 * std::max(xA, xB)) {
      rep.verdict = Verdict::NotEntangledDelta;
      rep.notes = "delta supported at xA - xB != 0";
      return rep;
    }
    const double xiVal = xi(xA, sigma);
    rep.xi = xiVal;
    if (xiVal > 0.0) {
      rep.verdict = Verdict::Entangled;
      const bool symmetric =
          std::abs(detA.kappa - detB.kappa) <= 1e-12 * detA.kappa &&
          std::abs(detA.mSquared - detB.mSquared) <=
              1e-12 * std::max(detA.mSquared, 1e-300);
      if (symmetric) {
        const auto full = concurrenceRatePerProperTime(xA, sigma, coupling,
                                                       detA.mSquared, detA.kappa);
        const auto reduced =
            concurrenceRatePerProperTime(xA, sigma, 1.0, 1.0, detA.kappa);
        rep.concurrenceRate = full.concurrencePerProperTime;
        rep.negativityRate = full.negativityPerProperTime;
        rep.concurrenceRateReduced = reduced.concurrencePerProperTime;
        rep.negativityRateReduced = reduced.negativityPerProperTime;
      } else {
        rep.notes = "asymmetric detectors: rate formulas not applicable";
      }
    } else {
      rep.verdict = Verdict::NotEntangledXi;
    }
    return rep;
  }

  if (std::holds_alternative<cross::DeltaTerm>(rep.crossTerm)) {
    rep.verdict = Verdict::NotEntangledDelta;
    rep.notes = "delta supported at positive omega";
    return rep;
  }

  rep.verdict = Verdict::NotEntangledBounded;
  if (const auto* bo = std::get_if<cross::BoundedOnly>(&rep.crossTerm))
    rep.bound = bo->upperBound;
  else
    rep.notes = "finite cross term, dominated by linearly growing response";
  return rep;
}

}  // namespace udw::ent
