#pragma once

#include <complex>
#include <cstddef>

namespace extspec {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kPoleTol = 1e-8;

// Truncation policy for the infinite sums over k in N_0.
struct SeriesControl {
  std::size_t max_terms = 1'000'000;
  double rel_tol = 1e-14;
  double abs_tol = 1e-15;

  void validate() const;  // throws DomainError
};

struct NamedConstants {
  double K;            // sum 1/(1+n^2) = (1 + pi coth pi)/2 = Im psi(i)
  double gamma_euler;
  double gamma0;       // 2*gamma + psi(i) + psi(-i)
  double re_psi_i;
};

const NamedConstants& constants();

// e(x) = exp(2 pi i x), with x reduced mod 1 before the trig call so that
// e(1/2) = -1 and e(1/4) = i exactly.
cplx e2pi(double x);
double frac1(double x);  // x mod 1 in [0,1)

cplx digamma(cplx z);
double digamma(double x);
double trigamma(double x);
cplx trigamma(cplx z);
double tetragamma(double x);
cplx tetragamma(cplx z);

// Z(x) = sum_{n>=0} e(nx)/(1+n^2).  Real part from the closed form, imaginary
// part from the Lerch integral representation.
cplx hurwitz_Z(double x, const SeriesControl& ctl = {});
// Independent evaluation of the same series: real part with the Bernoulli
// polynomial sums of cos(2 pi n x)/n^{2k} subtracted, imaginary part as a
// plain partial sum of length ctl.max_terms.
cplx hurwitz_Z_series(double x, const SeriesControl& ctl = {});
double re_Z_closed(double x);

// phi(x) = (e^{-2 pi x} li(e^{2 pi x}) - e^{2 pi x} li(e^{-2 pi x}))/2
double li_kernel_phi(double x);
// sum_{n=-n_wrap}^{n_wrap} phi(x+n); with tail_correction the remaining
// |n| > n_wrap terms are added from the large-argument expansion of phi.
double im_Z_via_periodization(double x, int n_wrap, bool tail_correction = true);

double log_integral(double x);
double zeta1(double phi);

// Phi(z,s,v) = sum z^k/(k+v)^s.
cplx lerch_phi(cplx z, double s, cplx v, const SeriesControl& ctl = {});
// Abel value of the same sum for |z| <= 1, z != 1 when s = 1; integer s >= 1.
// On the unit circle with s = 1 this is the conditionally convergent sum.
cplx lerch_phi_disk(cplx z, int s, cplx v);

}  // namespace extspec
