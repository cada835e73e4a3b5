#include "udw/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>

namespace udw::quad {

namespace {

// 15-point Kronrod nodes on [0,1] of |x|, paired symmetrically; the 7-point
// Gauss rule sits on the odd-index nodes.
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evalPanel(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Complex fc = f(c);
  Complex k15 = kKronrodW[7] * fc;
  Complex g7 = kGaussW[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kKronrodX[j];
    const Complex f1 = f(c - dx);
    const Complex f2 = f(c + dx);
    k15 += kKronrodW[j] * (f1 + f2);
    if (j % 2 == 1) g7 += kGaussW[j / 2] * (f1 + f2);
  }
  return Panel{a, b, k15 * h, std::abs(k15 - g7) * std::abs(h)};
}

}  // namespace

QuadResult adaptiveQuadrature(const Integrand& f, double a, double b,
                              const QuadratureConfig& cfg,
                              const std::vector<double>& splitPoints) {
  if (!(a < b)) throw std::invalid_argument("adaptiveQuadrature: need a < b");
  if (cfg.maxSubdivisions < 1)
    throw std::invalid_argument("adaptiveQuadrature: maxSubdivisions >= 1");

  std::set<double> edges{a, b};
  for (double p : splitPoints)
    if (p > a && p < b) edges.insert(p);

  std::priority_queue<Panel> heap;
  Complex total{0.0, 0.0};
  double errSum = 0.0;
  int panels = 0;
  double prev = a;
  for (auto it = std::next(edges.begin()); it != edges.end(); ++it) {
    Panel p = evalPanel(f, prev, *it);
    total += p.value;
    errSum += p.err;
    heap.push(p);
    ++panels;
    prev = *it;
  }

  auto tolerance = [&] {
    return std::max(cfg.absTol, cfg.relTol * std::abs(total));
  };

  while (errSum > tolerance() && panels < cfg.maxSubdivisions) {
    Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    errSum -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep as is.
      total += worst.value;
      errSum += worst.err;
      heap.push(worst);
      break;
    }
    Panel left = evalPanel(f, worst.a, mid);
    Panel right = evalPanel(f, mid, worst.b);
    total += left.value + right.value;
    errSum += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  if (errSum > tolerance() && panels >= cfg.maxSubdivisions)
    throw NonConvergence("adaptiveQuadrature: subdivision budget exhausted, error " +
                         std::to_string(errSum));

  return QuadResult{total, errSum, panels};
}

QuadResult oscillatoryTailIntegral(const Integrand& f, double decayRate,
                                   const QuadratureConfig& cfg,
                                   const TailOptions& opts) {
  if (decayRate <= 0.0)
    throw InvalidDecay("oscillatoryTailIntegral: decayRate must be > 0");

  // Truncate where the analytic tail bound drops below absTol/4.
  double T = std::log(std::max(4.0 * opts.envelopeC / (decayRate * cfg.absTol), 2.0)) /
             decayRate;
  T = std::max({T, opts.onset + 2.0 / decayRate, 1.0});
  const double tailBound = 2.0 * opts.envelopeC * std::exp(-decayRate * T) / decayRate;

  // Pre-split into panels narrow enough to resolve both decay and phase.
  const double width =
      0.5 * std::min(1.0 / decayRate, 2.0 * std::numbers::pi /
                                          std::max(opts.maxPhaseRate, 1e-3));
  std::vector<double> splits = opts.splitPoints;
  const int n = std::max(1, static_cast<int>(std::ceil(2.0 * T / width)));
  splits.reserve(splits.size() + n);
  for (int i = 1; i < n; ++i) splits.push_back(-T + 2.0 * T * i / n);

  QuadResult r = adaptiveQuadrature(f, -T, T, cfg, splits);
  r.errorEstimate += tailBound;
  return r;
}

double besselK0(double z) {
  if (!(z > 0.0)) throw DomainError("besselK0: requires z > 0");
  constexpr double eulerGamma = 0.57721566490153286060651209008240;
  if (z < 0.1) {
    // K0 = -(ln(z/2)+gamma) I0(z) + sum_k (z^2/4)^k / (k!)^2 * H_k
    const double q = 0.25 * z * z;
    double term = 1.0, i0 = 1.0, corr = 0.0, hk = 0.0;
    for (int k = 1; k <= 20; ++k) {
      term *= q / (k * k);
      i0 += term;
      hk += 1.0 / k;
      corr += term * hk;
      if (term < 1e-18) break;
    }
    return -(std::log(0.5 * z) + eulerGamma) * i0 + corr;
  }
  // Integral representation K0(z) = int_0^inf exp(-z cosh t) dt, truncated
  // where exp(-z cosh T) is negligible.
  const double T = std::acosh(std::max(50.0 / z, 2.0));
  QuadratureConfig cfg;
  cfg.absTol = 1e-15;
  cfg.relTol = 1e-13;
  cfg.maxSubdivisions = 4000;
  auto f = [z](double t) { return Complex(std::exp(-z * std::cosh(t)), 0.0); };
  return adaptiveQuadrature(f, 0.0, T, cfg).value.real();
}

namespace {

using Mat = std::array<Complex, 16>;  // row-major 4x4

inline Complex& at(Mat& m, int i, int j) { return m[4 * i + j]; }
inline const Complex& at(const Mat& m, int i, int j) { return m[4 * i + j]; }

void hessenbergReduce(Mat& h) {
  // Householder reflections clearing below the first subdiagonal.
  for (int k = 0; k < 2; ++k) {
    double norm = 0.0;
    for (int i = k + 1; i < 4; ++i) norm += std::norm(at(h, i, k));
    norm = std::sqrt(norm);
    if (norm < 1e-300) continue;
    Complex pivot = at(h, k + 1, k);
    Complex alpha = (std::abs(pivot) > 0.0) ? -(pivot / std::abs(pivot)) * norm
                                            : Complex(-norm, 0.0);
    std::array<Complex, 4> v{};
    double vnorm2 = 0.0;
    for (int i = k + 1; i < 4; ++i) {
      v[i] = at(h, i, k);
      if (i == k + 1) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 < 1e-300) continue;
    // H := (I - 2 v v*/|v|^2) H (I - 2 v v*/|v|^2)
    for (int j = 0; j < 4; ++j) {
      Complex s{0.0, 0.0};
      for (int i = k + 1; i < 4; ++i) s += std::conj(v[i]) * at(h, i, j);
      s *= 2.0 / vnorm2;
      for (int i = k + 1; i < 4; ++i) at(h, i, j) -= v[i] * s;
    }
    for (int i = 0; i < 4; ++i) {
      Complex s{0.0, 0.0};
      for (int j = k + 1; j < 4; ++j) s += at(h, i, j) * v[j];
      s *= 2.0 / vnorm2;
      for (int j = k + 1; j < 4; ++j) at(h, i, j) -= s * std::conj(v[j]);
    }
  }
}

// One unshifted QR sweep on the active block [lo, hi] via Givens rotations.
void qrSweep(Mat& h, int lo, int hi, Complex shift) {
  struct Rot {
    Complex c, s;
    int i;
  };
  std::vector<Rot> rots;
  for (int i = lo; i <= hi; ++i) at(h, i, i) -= shift;
  for (int i = lo; i < hi; ++i) {
    Complex a = at(h, i, i), b = at(h, i + 1, i);
    double r = std::sqrt(std::norm(a) + std::norm(b));
    if (r < 1e-300) {
      rots.push_back({Complex(1, 0), Complex(0, 0), i});
      continue;
    }
    Complex c = a / r, s = b / r;
    rots.push_back({c, s, i});
    for (int j = i; j < 4; ++j) {
      Complex x = at(h, i, j), y = at(h, i + 1, j);
      at(h, i, j) = std::conj(c) * x + std::conj(s) * y;
      at(h, i + 1, j) = -s * x + c * y;
    }
  }
  for (const Rot& r : rots) {
    for (int k = 0; k <= std::min(r.i + 2, 3); ++k) {
      Complex x = at(h, k, r.i), y = at(h, k, r.i + 1);
      at(h, k, r.i) = x * r.c + y * r.s;
      at(h, k, r.i + 1) = -x * std::conj(r.s) + y * std::conj(r.c);
    }
  }
  for (int i = lo; i <= hi; ++i) at(h, i, i) += shift;
}

std::pair<Complex, Complex> eig2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex mean = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {mean + disc, mean - disc};
}

}  // namespace

std::array<Complex, 4> complexEigenvalues4x4(const Mat& m) {
  for (const Complex& v : m)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("complexEigenvalues4x4: non-finite entry");

  Mat h = m;
  hessenbergReduce(h);

  double scale = 0.0;
  for (const Complex& v : h) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return {Complex{}, Complex{}, Complex{}, Complex{}};

  std::array<Complex, 4> eig{};
  int found = 0;
  int hi = 3;
  int iter = 0;
  const int maxIter = 20000;
  auto tiny = [&](int i) {
    double local = std::abs(at(h, i, i)) + std::abs(at(h, i + 1, i + 1));
    if (local == 0.0) local = scale;
    return std::abs(at(h, i + 1, i)) <= 1e-13 * local + 1e-300;
  };

  while (hi >= 0) {
    // Deflate from the bottom.
    if (hi == 0 || tiny(hi - 1)) {
      eig[found++] = at(h, hi, hi);
      --hi;
      continue;
    }
    if (hi == 1 || tiny(hi - 2)) {
      auto [l1, l2] = eig2x2(at(h, hi - 1, hi - 1), at(h, hi - 1, hi),
                             at(h, hi, hi - 1), at(h, hi, hi));
      eig[found++] = l1;
      eig[found++] = l2;
      hi -= 2;
      continue;
    }
    int lo = hi - 2;
    if (lo > 0 && !tiny(lo - 1)) lo = 0;
    // Occasional exceptional shift breaks equal-modulus cycling.
    Complex shift = (iter % 257 == 256)
                        ? at(h, hi, hi) + std::abs(at(h, hi, hi - 1)) * 0.5
                        : Complex{0.0, 0.0};
    qrSweep(h, lo, hi, shift);
    if (++iter > maxIter)
      throw NonConvergence("complexEigenvalues4x4: QR iteration stalled");
  }
  return eig;
}

double binaryEntropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binaryEntropy: x outside [0,1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

}  // namespace udw::quad
