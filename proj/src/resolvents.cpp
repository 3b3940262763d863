#include "hopfren/resolvents.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hopfren/errors.hpp"

namespace hopfren {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

bool lexLess(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Complex evalCubic(const DepressedCubic& c, Complex x) {
  return x * x * x + 3.0 * c.p.toDouble() * x + 2.0 * c.q.toDouble();
}

Complex evalQuartic(const DepressedQuartic& q, Complex x) {
  return ((x * x + q.p.toDouble()) * x + q.q.toDouble()) * x + q.r.toDouble();
}

std::array<Complex, 2> solveQuadratic(Complex b, Complex c) {
  // roots of Z^2 + b Z + c
  Complex s = std::sqrt(b * b - 4.0 * c);
  return {(-b + s) / 2.0, (-b - s) / 2.0};
}

}  // namespace

std::array<Complex, 3> solveCubic(const DepressedCubic& c) {
  double p = c.p.toDouble();
  double q = c.q.toDouble();
  Complex s = std::sqrt(Complex(p * p * p + q * q));
  Complex alpha = -q - s;
  Complex beta = -q + s;
  // Take cube roots of the larger lobe to dodge cancellation.
  bool useBeta = std::abs(beta) > std::abs(alpha);
  Complex lobe = useBeta ? beta : alpha;
  std::array<Complex, 3> roots;
  if (std::abs(lobe) == 0.0) {
    roots = {Complex(0), Complex(0), Complex(0)};  // p = q = 0: triple root
  } else {
    Complex u0 = std::pow(lobe, 1.0 / 3.0);
    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
    for (int k = 0; k < 3; ++k) {
      Complex u = u0;
      for (int j = 0; j < k; ++j) u *= omega;
      // partner lobe value: u v = -p, i.e. v = -p/u
      Complex v = -p / u;
      roots[static_cast<size_t>(k)] = useBeta ? v + u : u + v;
    }
  }
  std::sort(roots.begin(), roots.end(), lexLess);
  return roots;
}

std::array<Complex, 3> solveMonicCubic(const MonicCubic& c) {
  // X = Y - a2/3 depresses to Y^3 + 3 P Y + 2 Q.
  Rational P = (Rational(3) * c.a1 - c.a2 * c.a2) / Rational(9);
  Rational Q = (Rational(2) * c.a2 * c.a2 * c.a2 - Rational(9) * c.a2 * c.a1 + Rational(27) * c.a0) /
               Rational(54);
  std::array<Complex, 3> roots = solveCubic(DepressedCubic{P, Q});
  double shift = (c.a2 / Rational(3)).toDouble();
  for (Complex& r : roots) r -= shift;
  std::sort(roots.begin(), roots.end(), lexLess);
  return roots;
}

MonicCubic resolventCubicOfQuartic(const DepressedQuartic& q) {
  return MonicCubic{-q.p, Rational(-4) * q.r, Rational(4) * q.p * q.r - q.q * q.q};
}

double cubicResidual(const DepressedCubic& c, const std::array<Complex, 3>& roots) {
  double worst = 0;
  for (Complex r : roots) worst = std::max(worst, std::abs(evalCubic(c, r)));
  return worst;
}

double quarticResidual(const DepressedQuartic& q, const std::array<Complex, 4>& roots) {
  double worst = 0;
  for (Complex r : roots) worst = std::max(worst, std::abs(evalQuartic(q, r)));
  return worst;
}

std::array<Complex, 4> solveQuartic(const DepressedQuartic& q) {
  std::array<Complex, 3> alphas = solveMonicCubic(resolventCubicOfQuartic(q));
  double qc = q.q.toDouble();
  double pc = q.p.toDouble();
  double rc = q.r.toDouble();

  std::array<Complex, 4> best{};
  double bestResidual = -1;
  auto consider = [&](Complex sigma, Complex ab, Complex cd) {
    // a + b = sigma, c + d = -sigma
    auto [a, b] = solveQuadratic(-sigma, ab);
    auto [c, d] = solveQuadratic(sigma, cd);
    std::array<Complex, 4> cand{a, b, c, d};
    double res = quarticResidual(q, cand);
    if (bestResidual < 0 || res < bestResidual) {
      bestResidual = res;
      best = cand;
    }
  };

  for (Complex alpha : alphas) {
    // ab and cd are the roots of Z^2 - alpha Z + r.
    auto [ab, cd] = solveQuadratic(-alpha, Complex(rc));
    double scale = 1.0 + std::abs(ab) + std::abs(cd);
    if (std::abs(cd - ab) > 1e-12 * scale) {
      Complex sigma = -qc / (cd - ab);
      consider(sigma, ab, cd);
    } else {
      Complex sigma = std::sqrt(alpha - pc);
      consider(sigma, ab, cd);
      consider(-sigma, ab, cd);
    }
  }
  std::sort(best.begin(), best.end(), lexLess);
  return best;
}

Complex covariantResolvent(Complex a, Complex b, Complex c, Complex d) {
  Complex denom = a + d - b - c;
  double scale = 1.0 + std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  if (std::abs(denom) < 1e-12 * scale)
    throw DegenerateConfigError("covariant resolvent: a + d = b + c");
  return (a * d - b * c) / denom;
}

Rational covariantResolvent(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d) {
  Rational denom = a + d - b - c;
  if (denom.isZero()) throw DegenerateConfigError("covariant resolvent: a + d = b + c");
  return (a * d - b * c) / denom;
}

Complex lineIntersect(Complex a, Complex b, Complex c, Complex d) {
  Complex u = b - a;
  Complex v = d - c;
  double den = cross(u, v);
  double scale = std::abs(u) * std::abs(v);
  if (std::abs(den) < 1e-14 * (1.0 + scale)) throw DegenerateConfigError("parallel lines");
  double t = cross(c - a, v) / den;
  return a + t * u;
}

Complex circumcenter(Complex a, Complex b, Complex c) {
  Complex u = b - a;
  Complex v = c - a;
  double den = 2.0 * cross(u, v);
  double scale = std::abs(u) * std::abs(v);
  if (std::abs(den) < 1e-14 * (1.0 + scale)) throw DegenerateConfigError("collinear points");
  double nu = std::norm(u);
  double nv = std::norm(v);
  double x = (nu * v.imag() - nv * u.imag()) / den;
  double y = (nv * u.real() - nu * v.real()) / den;
  return a + Complex(x, y);
}

Complex circumcircleMeet(Complex a, Complex b, Complex c, Complex d) {
  Complex j = lineIntersect(a, c, b, d);
  Complex o1 = circumcenter(a, b, j);
  Complex o2 = circumcenter(j, c, d);
  Complex axis = o2 - o1;
  if (std::abs(axis) < 1e-12) throw DegenerateConfigError("coincident circumcircles");
  // Reflect j across the line through the two centers.
  return o1 + std::conj((j - o1) / axis) * axis;
}

StarCheckResult starCheck(const std::array<Complex, 5>& pentagon) {
  std::array<Complex, 5> p = pentagon;
  Complex centroid = 0;
  for (Complex z : p) centroid += z;
  centroid /= 5.0;
  double rms = 0;
  for (Complex& z : p) {
    z -= centroid;
    rms += std::norm(z);
  }
  rms = std::sqrt(rms / 5.0);
  if (rms < 1e-14) throw DegenerateConfigError("pentagon collapses to a point");
  for (Complex& z : p) z /= rms;

  auto at = [&p](int i) { return p[static_cast<size_t>(((i % 5) + 5) % 5)]; };

  // Spike triangle at vertex i against the diagonal (i-1, i+1).
  std::array<Complex, 5> centers;
  std::array<Complex, 5> shared;  // crossing common to spikes i and i+1
  for (int i = 0; i < 5; ++i) {
    Complex x = lineIntersect(at(i), at(i + 2), at(i - 1), at(i + 1));
    Complex y = lineIntersect(at(i), at(i - 2), at(i - 1), at(i + 1));
    centers[static_cast<size_t>(i)] = circumcenter(at(i), x, y);
    shared[static_cast<size_t>(i)] = x;
  }

  StarCheckResult out{};
  for (int i = 0; i < 5; ++i) {
    Complex o1 = centers[static_cast<size_t>(i)];
    Complex o2 = centers[static_cast<size_t>((i + 1) % 5)];
    Complex axis = o2 - o1;
    if (std::abs(axis) < 1e-12) throw DegenerateConfigError("coincident spike circumcircles");
    Complex j = shared[static_cast<size_t>(i)];
    out.meets[static_cast<size_t>(i)] = o1 + std::conj((j - o1) / axis) * axis;
  }

  Complex center = circumcenter(out.meets[0], out.meets[1], out.meets[2]);
  double radius = std::abs(out.meets[0] - center);
  out.maxDeviation = 0;
  for (int i = 3; i < 5; ++i)
    out.maxDeviation = std::max(
        out.maxDeviation, std::abs(std::abs(out.meets[static_cast<size_t>(i)] - center) - radius));
  return out;
}

std::array<Complex, 5> randomPentagon(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  std::array<Complex, 5> p;
  const double pi = std::acos(-1.0);
  for (int k = 0; k < 5; ++k) {
    double angle = 2.0 * pi * k / 5.0 + pi / 2.0;
    double dx = jitter(rng);
    double dy = jitter(rng);
    p[static_cast<size_t>(k)] = Complex(std::cos(angle) + dx, std::sin(angle) + dy);
  }
  return p;
}

std::vector<double> starSweep(int count, std::uint64_t seed, Parallelism mode) {
  if (count < 0) throw DomainError("negative sweep count");
  std::vector<double> out(static_cast<size_t>(count));
  par::forEach(count, mode, [&](int i) {
    std::uint64_t caseSeed = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1);
    out[static_cast<size_t>(i)] = starCheck(randomPentagon(caseSeed)).maxDeviation;
  });
  return out;
}

}  // namespace hopfren
