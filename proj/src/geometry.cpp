#include "udw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace udw::geom {

namespace {
constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;
}  // namespace

Detector::Detector(double dE, double k, double m2, std::string lbl)
    : deltaE(dE), kappa(k), mSquared(m2), label(std::move(lbl)) {
  if (!(deltaE > 0.0)) throw std::invalid_argument("Detector: deltaE must be > 0");
  if (!(kappa > 0.0)) throw std::invalid_argument("Detector: kappa must be > 0");
  if (!(mSquared >= 0.0)) throw std::invalid_argument("Detector: mSquared must be >= 0");
}

void validate(const Scenario& s) {
  std::visit(
      Overload{
          [](const ParallelTransverse& p) {
            if (!(p.kappa > 0.0) || !(p.rho0 > 0.0))
              throw std::invalid_argument("ParallelTransverse: kappa > 0, rho0 > 0");
          },
          [](const ParallelDifferentAcceleration& p) {
            if (!(p.kappaA > p.kappaB) || !(p.kappaB > 0.0))
              throw std::invalid_argument(
                  "ParallelDifferentAcceleration: kappaA > kappaB > 0");
          },
          [](const ParallelLongitudinal& p) {
            if (!(p.kappa > 0.0) || p.x0 == 0.0)
              throw std::invalid_argument("ParallelLongitudinal: kappa > 0, x0 != 0");
            if (p.x0 < 0.0 && !(p.kappa * -p.x0 < 2.0))
              throw std::invalid_argument(
                  "ParallelLongitudinal: negative shift needs |kappa x0| < 2");
          },
          [](const AntiParallelTransverse& p) {
            if (!(p.kappaA > 0.0) || !(p.kappaB > 0.0) || !(p.rho0 >= 0.0))
              throw std::invalid_argument(
                  "AntiParallelTransverse: kappaA, kappaB > 0, rho0 >= 0");
          },
          [](const AntiParallelLongitudinal& p) {
            if (!(p.kappa > 0.0) || p.x1 == 0.0 || !(p.x1 < 2.0 / p.kappa))
              throw std::invalid_argument(
                  "AntiParallelLongitudinal: kappa > 0, x1 != 0, x1 < 2/kappa");
          },
          [](const Oriented& p) {
            if (!(p.kappa > 0.0) || !(p.phi > 0.0) || !(p.phi < kPi))
              throw std::invalid_argument("Oriented: kappa > 0, 0 < phi < pi");
          },
          [](const BoostedPair& p) {
            if (!(p.kappa > 0.0) || p.alpha == 0.0 || !(p.rho0 > 0.0))
              throw std::invalid_argument("BoostedPair: kappa > 0, alpha != 0, rho0 > 0");
          },
      },
      s);
}

std::string scenarioName(const Scenario& s) {
  return std::visit(
      Overload{
          [](const ParallelTransverse&) { return std::string("ParallelTransverse"); },
          [](const ParallelDifferentAcceleration&) {
            return std::string("ParallelDifferentAcceleration");
          },
          [](const ParallelLongitudinal&) { return std::string("ParallelLongitudinal"); },
          [](const AntiParallelTransverse&) {
            return std::string("AntiParallelTransverse");
          },
          [](const AntiParallelLongitudinal&) {
            return std::string("AntiParallelLongitudinal");
          },
          [](const Oriented&) { return std::string("Oriented"); },
          [](const BoostedPair&) { return std::string("BoostedPair"); }},
      s);
}

double kappaAlice(const Scenario& s) {
  return std::visit(
      Overload{[](const ParallelTransverse& p) { return p.kappa; },
               [](const ParallelDifferentAcceleration& p) { return p.kappaA; },
               [](const ParallelLongitudinal& p) { return p.kappa; },
               [](const AntiParallelTransverse& p) { return p.kappaA; },
               [](const AntiParallelLongitudinal& p) { return p.kappa; },
               [](const Oriented& p) { return p.kappa; },
               [](const BoostedPair& p) { return p.kappa; }},
      s);
}

double kappaBob(const Scenario& s) {
  return std::visit(
      Overload{[](const ParallelTransverse& p) { return p.kappa; },
               [](const ParallelDifferentAcceleration& p) { return p.kappaB; },
               [](const ParallelLongitudinal& p) { return p.kappa; },
               [](const AntiParallelTransverse& p) { return p.kappaB; },
               [](const AntiParallelLongitudinal& p) { return p.kappa; },
               [](const Oriented& p) { return p.kappa; },
               [](const BoostedPair& p) { return p.kappa; }},
      s);
}

Scenario mirrored(const Scenario& s) {
  validate(s);
  return std::visit(
      Overload{[](const ParallelTransverse& p) -> Scenario { return p; },
               [](const ParallelDifferentAcceleration&) -> Scenario {
                 throw WrongScenario(
                     "mirrored: ParallelDifferentAcceleration normal form fixes "
                     "kappaA > kappaB");
               },
               [](const ParallelLongitudinal& p) -> Scenario {
                 return ParallelLongitudinal{p.kappa, -p.x0};
               },
               [](const AntiParallelTransverse& p) -> Scenario {
                 return AntiParallelTransverse{p.kappaB, p.kappaA, p.rho0};
               },
               [](const AntiParallelLongitudinal& p) -> Scenario { return p; },
               [](const Oriented& p) -> Scenario { return p; },
               [](const BoostedPair& p) -> Scenario {
                 return BoostedPair{p.kappa, -p.alpha, p.rho0};
               }},
      s);
}

namespace {

Event rightHyperbola(double kappa, double tau, double y, double z) {
  const double a = kappa * tau;
  return Event{std::sinh(a) / kappa, std::cosh(a) / kappa, y, z,
               -std::exp(-a) / kappa, std::exp(a) / kappa};
}

Event leftHyperbola(double kappa, double tau, double xShift, double y) {
  const double a = kappa * tau;
  return Event{std::sinh(a) / kappa, -std::cosh(a) / kappa + xShift, y, 0.0,
               std::exp(a) / kappa - xShift, -std::exp(-a) / kappa + xShift};
}

}  // namespace

Event worldlinePosition(const Scenario& s, Role role, double tau) {
  validate(s);
  if (role == Role::Alice) {
    if (const auto* bp = std::get_if<BoostedPair>(&s)) {
      const double a = bp->kappa * tau;
      return Event{std::sinh(a) / bp->kappa, (std::cosh(a) - 1.0) / bp->kappa,
                   0.0, 0.0, -std::expm1(-a) / bp->kappa,
                   std::expm1(a) / bp->kappa};
    }
    return rightHyperbola(kappaAlice(s), tau, 0.0, 0.0);
  }
  return std::visit(
      Overload{
          [&](const ParallelTransverse& p) {
            return rightHyperbola(p.kappa, tau, p.rho0, 0.0);
          },
          [&](const ParallelDifferentAcceleration& p) {
            return rightHyperbola(p.kappaB, tau, 0.0, 0.0);
          },
          [&](const ParallelLongitudinal& p) {
            Event e = rightHyperbola(p.kappa, tau, 0.0, 0.0);
            e.x += p.x0;
            e.u -= p.x0;
            e.v += p.x0;
            return e;
          },
          [&](const AntiParallelTransverse& p) {
            return leftHyperbola(p.kappaB, tau, 0.0, p.rho0);
          },
          [&](const AntiParallelLongitudinal& p) {
            return leftHyperbola(p.kappa, tau, p.x1, 0.0);
          },
          [&](const Oriented& p) {
            const double a = p.kappa * tau;
            const double c = std::cos(p.phi);
            const double ch = std::cosh(a) / p.kappa;
            // u, v grouped so no large sinh/cosh difference appears
            const double u = (std::sinh(a) * (1.0 - c) - std::exp(-a) * c) / p.kappa;
            const double v = (std::sinh(a) * (1.0 - c) + std::exp(a) * c) / p.kappa;
            return Event{std::sinh(a) / p.kappa, ch * c, ch * std::sin(p.phi),
                         0.0, u, v};
          },
          [&](const BoostedPair& p) {
            const double a = p.kappa * tau;
            return Event{(std::sinh(a + p.alpha) - std::sinh(p.alpha)) / p.kappa,
                         (std::cosh(a + p.alpha) - std::cosh(p.alpha)) / p.kappa,
                         p.rho0, 0.0,
                         -std::exp(-p.alpha) * std::expm1(-a) / p.kappa,
                         std::exp(p.alpha) * std::expm1(a) / p.kappa};
          }},
      s);
}

double intervalSquared(const Event& e1, const Event& e2) {
  const double du = e1.u - e2.u;
  const double dv = e1.v - e2.v;
  const double dy = e1.y - e2.y;
  const double dz = e1.z - e2.z;
  return du * dv - dy * dy - dz * dz;
}

IntervalDecomposition intervalDecomposition(const Scenario& s) {
  validate(s);
  return std::visit(
      Overload{
          [](const ParallelTransverse& p) {
            const double k = p.kappa;
            const double b = 1.0 + 0.5 * k * k * p.rho0 * p.rho0;
            return IntervalDecomposition{
                [k](double t) { return std::exp(-k * t); },
                [b](double) { return b; },
                [k](double t) { return std::exp(k * t); }, 1.0 / (k * k), k};
          },
          [](const ParallelDifferentAcceleration& p) {
            const double kB = p.kappaB;
            const double b = 0.5 * (p.kappaA / p.kappaB + p.kappaB / p.kappaA);
            return IntervalDecomposition{
                [kB](double t) { return std::exp(-kB * t); },
                [b](double) { return b; },
                [kB](double t) { return std::exp(kB * t); },
                1.0 / (p.kappaA * p.kappaB), p.kappaA};
          },
          [](const ParallelLongitudinal& p) {
            const double k = p.kappa, kx = p.kappa * p.x0;
            return IntervalDecomposition{
                [k, kx](double t) { return std::exp(-k * t) + kx; },
                [k, kx](double t) {
                  return kx * std::cosh(k * t) + 0.5 * kx * kx + 1.0;
                },
                [k, kx](double t) { return std::exp(k * t) + kx; },
                1.0 / (k * k), k};
          },
          [](const AntiParallelTransverse& p) {
            const double kB = p.kappaB;
            const double b = -0.5 * (p.kappaA / p.kappaB + p.kappaB / p.kappaA +
                                     p.kappaA * p.kappaB * p.rho0 * p.rho0);
            return IntervalDecomposition{
                [kB](double t) { return std::exp(kB * t); },
                [b](double) { return b; },
                [kB](double t) { return std::exp(-kB * t); },
                -1.0 / (p.kappaA * p.kappaB), p.kappaA};
          },
          [](const AntiParallelLongitudinal& p) {
            const double k = p.kappa, kx = p.kappa * p.x1;
            return IntervalDecomposition{
                [k, kx](double t) { return std::exp(k * t) - kx; },
                [k, kx](double t) {
                  return kx * std::cosh(k * t) - 0.5 * kx * kx - 1.0;
                },
                [k, kx](double t) { return std::exp(-k * t) - kx; },
                -1.0 / (k * k), k};
          },
          [](const Oriented& p) {
            const double k = p.kappa;
            const double s2 = std::sin(0.5 * p.phi) * std::sin(0.5 * p.phi);
            const double c2 = std::cos(0.5 * p.phi) * std::cos(0.5 * p.phi);
            const double cot = std::cos(0.5 * p.phi) / std::sin(0.5 * p.phi);
            const double tan = 1.0 / cot;
            return IntervalDecomposition{
                [k, s2, cot](double t) {
                  const double e = std::exp(k * t);
                  return -s2 * std::exp(-k * t) * (e - cot) * (e + cot);
                },
                [](double) { return 1.0; },
                [k, c2, tan](double t) {
                  const double e = std::exp(k * t);
                  return c2 * std::exp(-k * t) * (e - tan) * (e + tan);
                },
                1.0 / (k * k), k};
          },
          [](const BoostedPair& p) {
            const double k = p.kappa, al = p.alpha;
            const double r2 = k * k * p.rho0 * p.rho0;
            return IntervalDecomposition{
                [k, al](double t) {
                  return std::expm1(-k * t) * std::exp(-al) + 1.0;
                },
                [k, al, r2](double t) {
                  return 1.0 + 0.5 * r2 +
                         4.0 * std::cosh(0.5 * (k * t + al)) *
                             std::sinh(0.5 * k * t) * std::sinh(0.5 * al);
                },
                [k, al](double t) {
                  return std::expm1(k * t) * std::exp(al) + 1.0;
                },
                1.0 / (k * k), k};
          }},
      s);
}

double dOfTauB(const Scenario& s, double tauB) {
  validate(s);
  return std::visit(
      Overload{
          [](const ParallelTransverse& p) {
            const double kr = p.kappa * p.rho0;
            return kr * std::sqrt(1.0 + 0.25 * kr * kr);
          },
          [](const ParallelDifferentAcceleration& p) {
            return 0.5 * (p.kappaA / p.kappaB - p.kappaB / p.kappaA);
          },
          [tauB](const ParallelLongitudinal& p) {
            const double kx = p.kappa * p.x0;
            return kx * std::cosh(p.kappa * tauB) + 0.5 * kx * kx;
          },
          [](const AntiParallelTransverse& p) {
            const double m = 0.5 * (p.kappaA / p.kappaB + p.kappaB / p.kappaA +
                                    p.kappaA * p.kappaB * p.rho0 * p.rho0);
            return std::sqrt(std::max(m * m - 1.0, 0.0));  // sinh(sigma)
          },
          [tauB](const AntiParallelLongitudinal& p) {
            const double kx = p.kappa * p.x1;
            const double e = std::exp(p.kappa * tauB);
            return 0.5 * kx * (e - kx + 1.0 / e);
          },
          [tauB](const Oriented& p) {
            return std::sin(p.phi) * std::cosh(p.kappa * tauB);
          },
          [tauB](const BoostedPair& p) {
            const double kr = p.kappa * p.rho0;
            const double w = 0.5 * kr * kr +
                             4.0 * std::cosh(0.5 * (p.kappa * tauB + p.alpha)) *
                                 std::sinh(0.5 * p.kappa * tauB) *
                                 std::sinh(0.5 * p.alpha);
            return std::sqrt(kr * kr + w * w);
          }},
      s);
}

std::vector<double> branchBoundaries(const Scenario& s) {
  validate(s);
  std::vector<double> b = std::visit(
      Overload{
          [](const ParallelTransverse&) { return std::vector<double>{}; },
          [](const ParallelDifferentAcceleration&) { return std::vector<double>{}; },
          [](const ParallelLongitudinal& p) {
            if (p.x0 > 0.0) return std::vector<double>{};
            const double t = std::log(-p.kappa * p.x0) / p.kappa;
            return std::vector<double>{-t, t};
          },
          [](const AntiParallelTransverse&) { return std::vector<double>{}; },
          [](const AntiParallelLongitudinal& p) {
            if (p.x1 < 0.0) return std::vector<double>{};
            const double t = std::log(p.kappa * p.x1) / p.kappa;
            return std::vector<double>{-t, t};
          },
          [](const Oriented& p) {
            const double tc =
                std::log(std::cos(0.5 * p.phi) / std::sin(0.5 * p.phi)) / p.kappa;
            return std::vector<double>{-tc, tc};
          },
          [](const BoostedPair& p) {
            // sign(eta+) = sign(A), sign(eta-) = sign(C): exactly one of the
            // two factors crosses zero, depending on the boost direction.
            if (p.alpha > 0.0)
              return std::vector<double>{std::log(-std::expm1(-p.alpha)) / p.kappa};
            return std::vector<double>{-std::log(-std::expm1(p.alpha)) / p.kappa};
          }},
      s);
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end(),
                      [](double x, double y) { return std::abs(x - y) < 1e-15; }),
          b.end());
  return b;
}

std::vector<PoleBranch> polesUpperHalf(const Scenario& s, const Detector& detA,
                                       const Detector& /*detB*/, double tauB,
                                       int nMax) {
  validate(s);
  const auto dec = intervalDecomposition(s);
  const double kA = dec.kappaA;
  if (std::abs(detA.kappa - kA) > 1e-12 * kA)
    throw std::invalid_argument("polesUpperHalf: detA.kappa != scenario kappaA");

  const auto bounds = branchBoundaries(s);
  for (double bd : bounds)
    if (std::abs(tauB - bd) <= 1e-12 * std::max(1.0, std::abs(bd)))
      throw BranchBoundary("polesUpperHalf: tauB on a branch boundary");

  const double A = dec.evalA(tauB);
  const double B = dec.evalB(tauB);
  const double C = dec.evalC(tauB);
  const double Dp = dOfTauB(s, tauB);  // scenario sign convention

  std::pair<double, double> region{-std::numeric_limits<double>::infinity(),
                                   std::numeric_limits<double>::infinity()};
  for (double bd : bounds) {
    if (bd < tauB) region.first = std::max(region.first, bd);
    if (bd > tauB) region.second = std::min(region.second, bd);
  }

  std::vector<PoleBranch> out;
  for (int branch : {+1, -1}) {
    // Stable B +- D with the scenario's own D sign.
    double bpd;
    if ((branch > 0) == (B * Dp >= 0.0))
      bpd = B + branch * Dp;  // no cancellation
    else
      bpd = A * C / (B - branch * Dp);
    const double eta = bpd / A;
    if (eta == 0.0 || !std::isfinite(eta))
      throw BranchBoundary("polesUpperHalf: pole family degenerate at this tauB");
    PoleBranch pb;
    pb.branch = branch;
    pb.realPart = std::log(std::abs(eta)) / kA;
    pb.offsetClass = eta > 0.0 ? OffsetClass::EvenPi : OffsetClass::OddPi;
    pb.epsilonSign = (branch * dec.K * Dp) >= 0.0 ? +1 : -1;
    pb.validityRegion = region;
    const int n0 = (pb.offsetClass == OffsetClass::EvenPi && pb.epsilonSign < 0) ? 1 : 0;
    for (int n = n0; n < n0 + nMax; ++n) {
      const double offset = (pb.offsetClass == OffsetClass::EvenPi)
                                ? 2.0 * kPi * n / kA
                                : (2.0 * n + 1.0) * kPi / kA;
      pb.poles.emplace_back(pb.realPart, offset);
    }
    out.push_back(std::move(pb));
  }
  return out;
}

}  // namespace udw::geom
