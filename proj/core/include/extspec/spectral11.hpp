#pragma once

#include <cstddef>
#include <vector>

#include "extspec/specfun.hpp"

namespace extspec {

// Selfadjoint extension H_zeta of the index-(1,1) restriction L, zeta = e^{i theta}.
// theta = pi is H itself.
struct ExtensionParameter {
  double theta = kPi;

  static ExtensionParameter make(double theta);  // DomainError outside (-pi, pi]
  cplx zeta() const;
  bool is_H() const { return theta == kPi; }
  double v() const;  // K tan(theta/2)
};

struct SpectrumEntry {
  int n = 0;
  double lambda = 0.0;
  double lo = 0.0, hi = 0.0;
};

struct SpectrumTable {
  double theta = kPi;
  std::vector<SpectrumEntry> entries;
  double residual_bound = 0.0;  // max |G(lambda) - v| over the entries
};

struct EigenvectorFamily {
  double theta = kPi;
  int n = 0;
  double lambda = 0.0;
  std::vector<double> coefficients;  // lambda/(k - lambda), k = 0..N_trunc
  std::size_t N_trunc = 0;
  double tail_norm_sq = 0.0;         // bound on sum_{k > N_trunc} |y_k|^2

  double norm_sq() const;            // truncated
  // truncated sum plus lambda^2/(N + 1/2 - lambda), the midpoint estimate of the tail
  double norm_sq_with_tail() const;
};

struct DefectVectors {
  std::vector<cplx> x_plus, x_minus;  // 1/(k -+ i)
  std::vector<double> y2, y3;         // 1/(1+k^2), k/(1+k^2)
};

DefectVectors defect_vectors(std::size_t N);

// G(lambda) = Re psi(i) - psi(-lambda)
double G(double lambda);
double G_prime(double lambda);   // psi'(-lambda)
double G_second(double lambda);  // -psi''(-lambda)
cplx G(cplx lambda);
cplx G_prime(cplx lambda);
// sum_k (1 + lambda k)/((k - lambda)(1 + k^2)) summed directly, for cross-checks.
double G_series(double lambda, const SeriesControl& ctl = {});

double eigenvalue(const ExtensionParameter& t, int n);
SpectrumEntry eigenvalue_bracketed(const ExtensionParameter& t, int n);
SpectrumTable spectrum(const ExtensionParameter& t, int n_max);

EigenvectorFamily eigenvector(const ExtensionParameter& t, int n, std::size_t N_trunc = 100000);

// <y_n, y_m> on the common truncation, plus the tail bound |lambda_n lambda_m|/N.
struct TruncatedInner {
  double value = 0.0;
  double tail_bound = 0.0;
};
TruncatedInner eigen_inner(const EigenvectorFamily& a, const EigenvectorFamily& b);

struct EigenResidual {
  double coordinate = 0.0;  // max_k |(k - lambda) y_k - lambda|
  double domain = 0.0;      // |sum_k (y - lambda w)_k| with w = y3 + tan(theta/2) y2
};
EigenResidual eigen_residual(const EigenvectorFamily& y);

// F(lambda) = sum [lambda(1+zeta)k + i lambda(1-zeta) + (1+zeta) - i(1-zeta)k]/((k-lambda)(1+k^2))
// in closed form (1+zeta) G(lambda) - i K (1-zeta).
cplx eigenvalue_raw_F(const ExtensionParameter& t, double lambda);

// Second order expansions near theta = +-pi.
double asymptotic_lambda(const ExtensionParameter& t, int n);

struct ContourResult {
  double lambda = 0.0;
  int zeros = 0;
  int poles = 0;
  double winding = 0.0;  // (1/2 pi i) \oint (G-v)'/(G-v), before rounding
  double radius = 0.0;
};
ContourResult contour_eigenvalue_detail(const ExtensionParameter& t, int n, int quad_points,
                                        double radius = 0.75);
// radius <= 0 selects one of 0.55, 0.60, ..., 0.95 automatically.
double contour_eigenvalue(const ExtensionParameter& t, int n, int quad_points,
                          double radius = 0.75);

// |c+|^2 ||x+||^2 - |c-|^2 ||x-||^2 with ||x+-||^2 = K.
double boundary_form(cplx c_plus, cplx c_minus);

}  // namespace extspec
