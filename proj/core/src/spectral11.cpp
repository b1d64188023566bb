#include "extspec/spectral11.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extspec/errors.hpp"
#include "roots.hpp"

namespace extspec {

namespace {

double harmonic(int n) {
  double h = 0.0;
  for (int k = n; k >= 1; --k) h += 1.0 / k;
  return h;
}

// G without the pole check.  Near a nonnegative integer k the pole 1/(k - lambda)
// is split off so the remaining digamma argument stays near 1.
double G_unchecked(double lambda) {
  const double re_psi_i = constants().re_psi_i;
  const double k = std::round(lambda);
  if (k >= 0.0 && k <= 4096.0) {
    const int kk = static_cast<int>(k);
    double s = 0.0;
    for (int j = 0; j <= kk; ++j) s += 1.0 / (j - lambda);
    return re_psi_i - digamma(-lambda + kk + 1.0) + s;
  }
  return re_psi_i - digamma(-lambda);
}

void check_integer_pole(double lambda, const char* name) {
  if (lambda > -0.5 && std::abs(lambda - std::round(lambda)) < kPoleTol)
    throw PoleError(std::string(name) + ": lambda at a nonnegative integer");
}

double endpoint_eps(double x) { return 1e-12 * std::max(1.0, std::abs(x)); }

}  // namespace

ExtensionParameter ExtensionParameter::make(double theta) {
  if (!(theta > -kPi) || !(theta <= kPi))
    throw DomainError("ExtensionParameter: theta must lie in (-pi, pi]");
  return ExtensionParameter{theta};
}

cplx ExtensionParameter::zeta() const {
  if (is_H()) return {-1.0, 0.0};
  return std::polar(1.0, theta);
}

double ExtensionParameter::v() const {
  if (is_H()) return std::numeric_limits<double>::infinity();
  return constants().K * std::tan(0.5 * theta);
}

double EigenvectorFamily::norm_sq() const {
  double s = 0.0;
  for (double c : coefficients) s += c * c;
  return s;
}

double EigenvectorFamily::norm_sq_with_tail() const {
  return norm_sq() + lambda * lambda / (static_cast<double>(N_trunc) + 0.5 - lambda);
}

DefectVectors defect_vectors(std::size_t N) {
  DefectVectors d;
  d.x_plus.resize(N + 1);
  d.x_minus.resize(N + 1);
  d.y2.resize(N + 1);
  d.y3.resize(N + 1);
  const cplx i(0.0, 1.0);
  for (std::size_t k = 0; k <= N; ++k) {
    const double kk = static_cast<double>(k);
    d.x_plus[k] = 1.0 / (kk - i);
    d.x_minus[k] = 1.0 / (kk + i);
    d.y2[k] = 1.0 / (1.0 + kk * kk);
    d.y3[k] = kk / (1.0 + kk * kk);
  }
  return d;
}

double G(double lambda) {
  check_integer_pole(lambda, "G");
  return constants().re_psi_i - digamma(-lambda);
}

double G_prime(double lambda) {
  check_integer_pole(lambda, "G_prime");
  return trigamma(-lambda);
}

double G_second(double lambda) {
  check_integer_pole(lambda, "G_second");
  return -tetragamma(-lambda);
}

cplx G(cplx lambda) { return constants().re_psi_i - digamma(-lambda); }
cplx G_prime(cplx lambda) { return trigamma(-lambda); }

double G_series(double lambda, const SeriesControl& ctl) {
  ctl.validate();
  check_integer_pole(lambda, "G_series");
  // terms decay like lambda/k^2; sum backwards and add the integral tail
  const std::size_t N = ctl.max_terms;
  double s = 0.0;
  for (std::size_t k = N; k-- > 0;) {
    const double kk = static_cast<double>(k);
    s += (1.0 + lambda * kk) / ((kk - lambda) * (1.0 + kk * kk));
  }
  const double a = static_cast<double>(N) - 0.5;
  s += -std::log(a - lambda) + 0.5 * std::log1p(a * a);
  return s;
}

SpectrumEntry eigenvalue_bracketed(const ExtensionParameter& t, int n) {
  if (n < 0) throw DomainError("eigenvalue: n must be >= 0");
  if (t.is_H()) return {n, static_cast<double>(n), n - 1.0, n + 0.0};
  const double v = t.v();
  auto f = [v](double x) { return G_unchecked(x) - v; };

  if (n >= 1) {
    const double lo = n - 1.0, hi = n;
    const double a = lo + endpoint_eps(lo), b = hi - endpoint_eps(hi);
    const double lam = detail::increasing_root(f, a, b, f(a), f(b));
    return {n, lam, lo, hi};
  }
  const double b = -endpoint_eps(0.0);
  double a = -1.0, fa = f(a);
  while (!(fa < 0.0)) {
    a *= 2.0;
    if (a < -1e300) throw BracketError("eigenvalue: lambda_0 below -1e300");
    fa = f(a);
  }
  const double lam = detail::increasing_root(f, a, b, fa, f(b));
  return {0, lam, a, 0.0};
}

double eigenvalue(const ExtensionParameter& t, int n) { return eigenvalue_bracketed(t, n).lambda; }

SpectrumTable spectrum(const ExtensionParameter& t, int n_max) {
  if (n_max < 0) throw DomainError("spectrum: n_max must be >= 0");
  SpectrumTable tab;
  tab.theta = t.theta;
  tab.entries.reserve(static_cast<std::size_t>(n_max) + 1);
  const double v = t.v();
  for (int n = 0; n <= n_max; ++n) {
    tab.entries.push_back(eigenvalue_bracketed(t, n));
    if (!t.is_H())
      tab.residual_bound =
          std::max(tab.residual_bound, std::abs(G_unchecked(tab.entries.back().lambda) - v));
  }
  return tab;
}

EigenvectorFamily eigenvector(const ExtensionParameter& t, int n, std::size_t N_trunc) {
  if (N_trunc < 10) throw DomainError("eigenvector: N_trunc must be >= 10");
  EigenvectorFamily y;
  y.theta = t.theta;
  y.n = n;
  y.N_trunc = N_trunc;
  y.lambda = eigenvalue(t, n);
  y.coefficients.assign(N_trunc + 1, 0.0);
  if (t.is_H()) {
    if (static_cast<std::size_t>(n) <= N_trunc) y.coefficients[n] = 1.0;
    return y;
  }
  const double lam = y.lambda;
  for (std::size_t k = 0; k <= N_trunc; ++k) y.coefficients[k] = lam / (static_cast<double>(k) - lam);
  // sum_{k>N} 1/(k-lambda)^2 <= 1/(N - lambda)
  y.tail_norm_sq = lam * lam / (static_cast<double>(N_trunc) - std::max(lam, 0.0));
  return y;
}

TruncatedInner eigen_inner(const EigenvectorFamily& a, const EigenvectorFamily& b) {
  const std::size_t N = std::min(a.N_trunc, b.N_trunc);
  TruncatedInner r;
  for (std::size_t k = N + 1; k-- > 0;) r.value += a.coefficients[k] * b.coefficients[k];
  const double top = std::max({a.lambda, b.lambda, 0.0});
  r.tail_bound = std::abs(a.lambda * b.lambda) / (static_cast<double>(N) - top);
  return r;
}

EigenResidual eigen_residual(const EigenvectorFamily& y) {
  EigenResidual r;
  const double lam = y.lambda;
  const bool is_H = (y.theta == kPi);
  for (std::size_t k = 0; k <= y.N_trunc; ++k) {
    const double kk = static_cast<double>(k);
    const double res = (kk - lam) * y.coefficients[k] - (is_H ? 0.0 : lam);
    r.coordinate = std::max(r.coordinate, std::abs(res));
  }
  if (is_H) return r;

  const double tn = std::tan(0.5 * y.theta);
  double s = 0.0;
  for (std::size_t k = y.N_trunc + 1; k-- > 0;) {
    const double kk = static_cast<double>(k);
    s += y.coefficients[k] - lam * (kk + tn) / (1.0 + kk * kk);
  }
  // midpoint-rule tail of lambda [1/(k-lambda) - (k + tan)/(1+k^2)]
  const double a = static_cast<double>(y.N_trunc) + 0.5;
  s += lam * (-std::log(a - lam) + 0.5 * std::log1p(a * a) - tn * (0.5 * kPi - std::atan(a)));
  r.domain = std::abs(s);
  return r;
}

cplx eigenvalue_raw_F(const ExtensionParameter& t, double lambda) {
  if (t.is_H()) throw DomainError("eigenvalue_raw_F: zeta = -1 has no nontrivial roots");
  const cplx z = t.zeta();
  const cplx i(0.0, 1.0);
  return (1.0 + z) * G(lambda) - i * constants().K * (1.0 - z);
}

double asymptotic_lambda(const ExtensionParameter& t, int n) {
  if (n < 0) throw DomainError("asymptotic_lambda: n must be >= 0");
  if (t.is_H()) return n;
  const double K = constants().K, half_g0 = 0.5 * constants().gamma0;
  const double c = 1.0 / std::tan(0.5 * t.theta) / K;
  if (kPi - t.theta <= 0.2) {
    const double x = c;
    return n - x + (harmonic(n) - half_g0) * x * x;
  }
  if (t.theta + kPi <= 0.2) {
    if (n == 0) throw DomainError("asymptotic_lambda: lambda_0 has no expansion near -pi");
    const double y = -c;
    return (n - 1) + y + (harmonic(n - 1) - half_g0) * y * y;
  }
  throw DomainError("asymptotic_lambda: theta outside the trust region around +-pi");
}

ContourResult contour_eigenvalue_detail(const ExtensionParameter& t, int n, int quad_points,
                                        double radius) {
  if (t.is_H()) throw DomainError("contour_eigenvalue: theta = pi has v = infinity");
  if (n < 1) throw DomainError("contour_eigenvalue: n must be >= 1");
  if (quad_points < 8) throw DomainError("contour_eigenvalue: quad_points must be >= 8");
  const double c = n - 0.5;
  const double v = t.v();
  if (radius <= 0.0) {
    // pick the radius whose circle stays farthest, in Newton-step distance
    // |G - v|/|G'|, from every zero and pole of G - v
    double best = -1.0;
    for (int j = 0; j < 9; ++j) {
      const double r = 0.55 + 0.05 * j;
      double score = std::numeric_limits<double>::infinity();
      for (int q = 0; q < 64; ++q) {
        const cplx z = c + r * e2pi(q / 64.0);
        score = std::min(score, std::abs((G(z) - v) / G_prime(z)));
      }
      if (score > best) {
        best = score;
        radius = r;
      }
    }
  }
  if (!(radius < 1.0)) throw RadiusError("contour_eigenvalue: radius not in (0, 1)");
  ContourResult out;
  double pole_sum = 0.0;
  for (int k = std::max(0, n - 2); k <= n + 1; ++k) {
    const double d = std::abs(k - c);
    if (std::abs(d - radius) < 1e-6) throw RadiusError("contour_eigenvalue: pole on the contour");
    if (d < radius) {
      ++out.poles;
      pole_sum += k;
    }
  }
  cplx I1(0.0), W(0.0);
  for (int q = 0; q < quad_points; ++q) {
    const cplx u = e2pi(static_cast<double>(q) / quad_points);
    const cplx z = c + radius * u;
    const cplx dlog = G_prime(z) / (G(z) - v) * (radius * u);
    W += dlog;
    I1 += z * dlog;
  }
  W /= static_cast<double>(quad_points);
  I1 /= static_cast<double>(quad_points);
  out.winding = W.real();
  const double w = std::round(W.real());
  if (std::abs(W.real() - w) > 1e-3 || std::abs(W.imag()) > 1e-3)
    throw RadiusError("contour_eigenvalue: winding number not an integer");
  out.zeros = static_cast<int>(w) + out.poles;
  if (out.zeros != 1) throw RadiusError("contour_eigenvalue: contour does not enclose exactly one root");
  out.lambda = I1.real() + pole_sum;
  out.radius = radius;
  return out;
}

double contour_eigenvalue(const ExtensionParameter& t, int n, int quad_points, double radius) {
  return contour_eigenvalue_detail(t, n, quad_points, radius).lambda;
}

double boundary_form(cplx c_plus, cplx c_minus) {
  return (std::norm(c_plus) - std::norm(c_minus)) * constants().K;
}

}  // namespace extspec
