#include "udw/crossterm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace udw::cross {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

bool isDeltaScenario(const geom::Scenario& s) {
  return std::holds_alternative<geom::ParallelTransverse>(s) ||
         std::holds_alternative<geom::ParallelDifferentAcceleration>(s) ||
         std::holds_alternative<geom::AntiParallelTransverse>(s);
}

void checkDetectors(const geom::Scenario& s, const geom::Detector& detA,
                    const geom::Detector& detB) {
  const double kA = geom::kappaAlice(s), kB = geom::kappaBob(s);
  if (std::abs(detA.kappa - kA) > 1e-12 * kA ||
      std::abs(detB.kappa - kB) > 1e-12 * kB)
    throw std::invalid_argument(
        "crossterm: detector accelerations must match the scenario");
}

// Residue-summed integrand of the generic framework.  At each tauB the two
// root families eta_{+-} = (B +- D)/A carry geometrically summed pole towers;
// a family contributes weight 1, exp(-2 pi xA) or exp(-pi xA) over
// (1 - exp(-2 pi xA)) according to the sign of eta and the side of the real
// axis its even tower approaches from (the sign of +-K D).
class Engine {
 public:
  Engine(const geom::Scenario& s, const geom::Detector& detA,
         const geom::Detector& detB)
      : dec_(geom::intervalDecomposition(s)),
        boundaries_(geom::branchBoundaries(s)),
        kB_(geom::kappaBob(s)),
        dEA_(detA.deltaE),
        dEB_(detB.deltaE) {
    checkDetectors(s, detA, detB);
    xA_ = dEA_ / dec_.kappaA;
    q_ = std::exp(-2.0 * kPi * xA_);
    halfQ_ = std::exp(-kPi * xA_);
    if (const auto* apt = std::get_if<geom::AntiParallelTransverse>(&s)) {
      aptClosed_ = true;
      aptSigma_ = generalizedSigma(apt->kappaA, apt->kappaB, apt->rho0);
    }
  }

  // Guarded evaluation: the log of |eta| is floored so that points inside a
  // vanishing neighbourhood of a boundary give a bounded (phase-garbled)
  // value instead of NaN; integration slivers there are accounted separately.
  Complex evaluate(double tauB) const {
    if (aptClosed_) {
      const double amp = -(kB_ / (4.0 * kPi)) * sinRatio(xA_, aptSigma_) /
                         std::sinh(kPi * xA_);
      const double phase = (dEB_ - xA_ * kB_) * tauB;
      return amp * std::exp(kI * phase);
    }
    const double A = dec_.evalA(tauB);
    const double B = dec_.evalB(tauB);
    const double C = dec_.evalC(tauB);
    const double AC = A * C;
    const double D = std::sqrt(std::max(B * B - AC, 0.0));
    double bpd, bmd;
    if (B >= 0.0) {
      bpd = B + D;
      bmd = (bpd != 0.0) ? AC / bpd : 0.0;
    } else {
      bmd = B - D;
      bpd = (bmd != 0.0) ? AC / bmd : 0.0;
    }
    const double etaP = bpd / A;
    const double etaM = bmd / A;
    const double tP = tower(etaP > 0.0, +1);
    const double tM = tower(etaM > 0.0, -1);
    const double lp = std::log(std::max(std::abs(etaP), 1e-300));
    const double lm = std::log(std::max(std::abs(etaM), 1e-300));
    const Complex bracket =
        tP * std::exp(kI * (xA_ * lp)) - tM * std::exp(kI * (xA_ * lm));
    const Complex prefactor = kI / (4.0 * kPi * dec_.K * dec_.kappaA * D);
    return prefactor * std::exp(kI * (dEB_ * tauB)) * bracket;
  }

  Complex evaluateChecked(double tauB) const {
    for (double b : boundaries_)
      if (std::abs(tauB - b) <= 1e-12 * std::max(1.0, std::abs(b)))
        throw BranchBoundary("residueReducedIntegrand: tauB on a branch boundary");
    return evaluate(tauB);
  }

  const std::vector<double>& boundaries() const { return boundaries_; }
  double kappaB() const { return kB_; }
  double kappaA() const { return dec_.kappaA; }
  double xA() const { return xA_; }
  double deltaEA() const { return dEA_; }
  double deltaEB() const { return dEB_; }
  const geom::IntervalDecomposition& decomposition() const { return dec_; }

 private:
  double tower(bool positive, int branch) const {
    if (!positive) return halfQ_ / (1.0 - q_);
    const bool fromAbove = (dec_.K > 0.0) == (branch > 0);
    return (fromAbove ? 1.0 : q_) / (1.0 - q_);
  }

  geom::IntervalDecomposition dec_;
  std::vector<double> boundaries_;
  double kB_, dEA_, dEB_, xA_, q_, halfQ_;
  bool aptClosed_ = false;
  double aptSigma_ = 0.0;
};

// Polishes a boundary estimate onto the actual floating-point zero of A or C
// (every branch boundary is a zero of one of them).
double polishBoundary(const geom::IntervalDecomposition& dec, double b) {
  const auto& f = (std::abs(dec.evalA(b)) <= std::abs(dec.evalC(b))) ? dec.evalA
                                                                     : dec.evalC;
  double h = std::max(1e-9, 1e-9 * std::abs(b));
  double lo = b - h, hi = b + h;
  for (int i = 0; i < 60 && f(lo) * f(hi) > 0.0; ++i) {
    h *= 4.0;
    lo = b - h;
    hi = b + h;
  }
  if (f(lo) * f(hi) > 0.0) return b;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

struct TailEnvelope {
  double rate;
  double coeff;
  double onset;
};

TailEnvelope calibrateEnvelope(const Engine& eng) {
  const double rate = eng.kappaB();
  const double t0 = 6.0 / rate;
  double c = 0.0;
  for (int j = 0; j < 5; ++j) {
    const double t = t0 + 0.7 * j / rate;
    c = std::max(c, std::abs(eng.evaluate(t)) * std::exp(rate * t));
    c = std::max(c, std::abs(eng.evaluate(-t)) * std::exp(rate * t));
  }
  return TailEnvelope{rate, 3.0 * std::max(c, 1e-300), t0};
}

}  // namespace

FiniteValue finiteValue(const CrossTermResult& r) {
  if (const auto* fv = std::get_if<FiniteValue>(&r)) return *fv;
  if (const auto* bo = std::get_if<BoundedOnly>(&r)) {
    if (bo->numericValue) return *bo->numericValue;
    throw WrongScenario("finiteValue: bound carries no numeric value");
  }
  throw WrongScenario("finiteValue: result is a delta term");
}

Complex residueReducedIntegrand(const geom::Scenario& s,
                                const geom::Detector& detA,
                                const geom::Detector& detB, double tauB) {
  return Engine(s, detA, detB).evaluateChecked(tauB);
}

double generalizedSigma(double kappaA, double kappaB, double rho0) {
  if (!(kappaA > 0.0) || !(kappaB > 0.0) || !(rho0 >= 0.0))
    throw std::invalid_argument("generalizedSigma: kappaA, kappaB > 0, rho0 >= 0");
  const double m =
      0.5 * (kappaA / kappaB + kappaB / kappaA + kappaA * kappaB * rho0 * rho0);
  return std::acosh(std::max(m, 1.0));
}

double sinRatio(double x, double sigma) {
  if (sigma < 1e-6) return x * (1.0 - sigma * sigma * (x * x + 1.0) / 6.0);
  return std::sin(x * sigma) / std::sinh(sigma);
}

DeltaTerm deltaCoefficient(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB) {
  checkDetectors(s, detA, detB);
  const double xA = detA.xRatio(), xB = detB.xRatio();
  const double q = std::exp(-2.0 * kPi * xA);
  if (const auto* pt = std::get_if<geom::ParallelTransverse>(&s)) {
    const double kr = pt->kappa * pt->rho0;
    const double d = kr * std::sqrt(1.0 + 0.25 * kr * kr);
    const double wPlus = 1.0 + 0.5 * kr * kr + d;
    const double wMinus = 1.0 + 0.5 * kr * kr - d;
    const Complex num = std::exp(kI * (xA * std::log(wPlus))) -
                        q * std::exp(kI * (xA * std::log(wMinus)));
    return DeltaTerm{kI / (2.0 * d) * num / (1.0 - q), xA + xB,
                     "energy conservation, delta(xA + xB)"};
  }
  if (const auto* pd = std::get_if<geom::ParallelDifferentAcceleration>(&s)) {
    const double sg = std::log(pd->kappaA / pd->kappaB);
    const Complex num =
        std::exp(kI * (xA * sg)) - q * std::exp(-kI * (xA * sg));
    return DeltaTerm{kI / (2.0 * std::sinh(sg)) * num / (1.0 - q), xA + xB,
                     "boost-energy conservation, delta(xA + xB)"};
  }
  if (const auto* at = std::get_if<geom::AntiParallelTransverse>(&s)) {
    const double sg = generalizedSigma(at->kappaA, at->kappaB, at->rho0);
    const double coeff =
        -0.5 * sinRatio(xA, sg) / std::sinh(kPi * xA);
    return DeltaTerm{Complex{coeff, 0.0}, xA - xB,
                     "boost-energy conservation, delta(xA - xB)"};
  }
  throw WrongScenario("deltaCoefficient: scenario has no delta term");
}

namespace {

double pFactorOf(double b) {
  const double c = 0.5 * b;
  const double eps = 1.0 - c * c;
  if (std::abs(eps) < 1e-4) {
    const double c3 = c * c * c;
    return 1.0 / c - eps / (3.0 * c3) + eps * eps / (5.0 * c3 * c * c);
  }
  if (c < 1.0) {
    const double w = std::sqrt(eps);
    return std::atan(w / c) / w;
  }
  const double v = std::sqrt(-eps);
  return std::log(c + v) / v;
}

}  // namespace

double pFactor(const geom::Scenario& s) {
  geom::validate(s);
  if (const auto* pl = std::get_if<geom::ParallelLongitudinal>(&s))
    return pFactorOf(pl->kappa * std::abs(pl->x0));
  if (const auto* al = std::get_if<geom::AntiParallelLongitudinal>(&s))
    return pFactorOf(al->kappa * std::abs(al->x1));
  throw WrongScenario("pFactor: defined for longitudinal-shift scenarios");
}

double crossTermUpperBound(const geom::Scenario& s, const geom::Detector& detA,
                           const geom::Detector& detB) {
  checkDetectors(s, detA, detB);
  const double xA = detA.xRatio();
  if (const auto* pl = std::get_if<geom::ParallelLongitudinal>(&s)) {
    return pFactorOf(pl->kappa * std::abs(pl->x0)) /
           (2.0 * kPi * pl->kappa * std::abs(pl->x0) * std::tanh(kPi * xA));
  }
  if (const auto* al = std::get_if<geom::AntiParallelLongitudinal>(&s)) {
    const double p = pFactorOf(al->kappa * std::abs(al->x1));
    if (al->x1 < 0.0)
      return p / (2.0 * kPi * al->kappa * -al->x1 * std::sinh(kPi * xA));
    return p / (kPi * al->kappa * al->x1 * -std::expm1(-2.0 * kPi * xA));
  }
  if (const auto* ori = std::get_if<geom::Oriented>(&s)) {
    const double phi = ori->phi;
    return (1.0 / (4.0 * std::sin(phi) * std::tanh(kPi * xA))) *
           (1.0 - (phi / kPi) * std::tanh(kPi * xA) * std::tanh(0.5 * kPi * xA));
  }
  throw WrongScenario("crossTermUpperBound: no closed-form bound for this scenario");
}

InertialLimitParams::InertialLimitParams(double v_, double rho0_, double dEA,
                                         double dEB)
    : v(v_), rho0(rho0_), deltaEA(dEA), deltaEB(dEB) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("InertialLimitParams: v in (0,1)");
  if (!(rho0 > 0.0)) throw DomainError("InertialLimitParams: rho0 > 0");
  if (!(dEA > 0.0 && dEB > 0.0))
    throw DomainError("InertialLimitParams: energies > 0");
  const double g = std::sqrt(1.0 - v * v);
  ell = g / v * rho0;
  epsilonEff = dEB + dEA / g;
  p = v * dEA / g;
  if (!(epsilonEff > p))
    throw DomainError("InertialLimitParams: epsilonEff must exceed p");
}

Complex inertialLimitCrossTerm(const InertialLimitParams& params) {
  const double g = std::sqrt(1.0 - params.v * params.v);
  const double arg =
      params.ell * std::sqrt(params.epsilonEff * params.epsilonEff -
                             params.p * params.p);
  return kI / (2.0 * kPi) * (g / params.v) * quad::besselK0(arg);
}

CrossTermResult crossTerm(const geom::Scenario& s, const geom::Detector& detA,
                          const geom::Detector& detB,
                          const quad::QuadratureConfig& cfg) {
  geom::validate(s);
  if (isDeltaScenario(s)) return deltaCoefficient(s, detA, detB);

  Engine eng(s, detA, detB);
  const double absTol = std::max(cfg.absTol, 1e-14);

  // Polished boundary list with carve radii.
  std::vector<double> bounds;
  for (double b : eng.boundaries())
    bounds.push_back(polishBoundary(eng.decomposition(), b));
  std::sort(bounds.begin(), bounds.end());

  const double osc = 2.0 * (eng.deltaEA() + eng.deltaEB()) + eng.kappaB();
  std::vector<double> carve(bounds.size(), 0.5 / osc);
  for (size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double gap = 0.45 * (bounds[i + 1] - bounds[i]);
    carve[i] = std::min(carve[i], gap);
    carve[i + 1] = std::min(carve[i + 1], gap);
  }

  Complex total{0.0, 0.0};
  double err = 0.0;
  int subdivisions = 0;

  // Neighbourhoods of each boundary in logarithmic coordinates: with
  // tau = b +- exp(u) the log-divergent phase x_A ln|eta| becomes linear in u
  // and the integrand has bounded variation per unit u.
  quad::QuadratureConfig localCfg = cfg;
  localCfg.absTol = absTol / (4.0 * std::max<size_t>(bounds.size(), 1) * 2.0);
  for (size_t i = 0; i < bounds.size(); ++i) {
    const double b = bounds[i];
    const double h = carve[i];
    double localMag = 1e-300;
    for (double probe : {h, 0.25 * h, 0.015625 * h}) {
      localMag = std::max(localMag, std::abs(eng.evaluate(b + probe)));
      localMag = std::max(localMag, std::abs(eng.evaluate(b - probe)));
    }
    const double delta = std::clamp(
        absTol / (16.0 * bounds.size() * 4.0 * localMag), 1e-300, 0.25 * h);
    const double ua = std::log(delta), ub = std::log(h);
    const double uWidth = 0.5 * std::min(1.0, kPi / std::max(eng.xA(), 1.0));
    std::vector<double> uSplits;
    for (double u = ua + uWidth; u < ub; u += uWidth) uSplits.push_back(u);
    for (int sign : {+1, -1}) {
      auto g = [&eng, b, sign](double u) {
        const double e = std::exp(u);
        return eng.evaluate(b + sign * e) * e;
      };
      auto r = quad::adaptiveQuadrature(g, ua, ub, localCfg, uSplits);
      total += r.value;
      err += r.errorEstimate + 4.0 * localMag * delta;
      subdivisions += r.subdivisionsUsed;
    }
  }

  // Everything outside the carved neighbourhoods, as a single masked
  // oscillatory integral with splits at the carve edges.
  const TailEnvelope env = calibrateEnvelope(eng);
  quad::TailOptions opts;
  opts.envelopeC = env.coeff;
  opts.onset = env.onset;
  opts.maxPhaseRate = osc;
  for (size_t i = 0; i < bounds.size(); ++i) {
    opts.splitPoints.push_back(bounds[i] - carve[i]);
    opts.splitPoints.push_back(bounds[i] + carve[i]);
  }
  auto masked = [&](double t) -> Complex {
    for (size_t i = 0; i < bounds.size(); ++i)
      if (std::abs(t - bounds[i]) < carve[i]) return Complex{0.0, 0.0};
    return eng.evaluate(t);
  };
  quad::QuadratureConfig mainCfg = cfg;
  mainCfg.absTol = 0.5 * absTol;
  auto r = quad::oscillatoryTailIntegral(masked, env.rate, mainCfg, opts);
  total += r.value;
  err += r.errorEstimate;
  subdivisions += r.subdivisionsUsed;

  FiniteValue fv{total, err};
  if (std::holds_alternative<geom::ParallelLongitudinal>(s) ||
      std::holds_alternative<geom::AntiParallelLongitudinal>(s) ||
      std::holds_alternative<geom::Oriented>(s))
    return BoundedOnly{crossTermUpperBound(s, detA, detB), fv};
  return fv;
}

}  // namespace udw::cross
