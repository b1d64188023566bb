#include "extspec/specfun.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/polygamma.hpp>

#include <cmath>
#include <string>

#include "extspec/errors.hpp"

namespace extspec {

namespace {

// B_{2k} for k = 1..8
constexpr double kB2k[8] = {1.0 / 6,         -1.0 / 30, 1.0 / 42, -1.0 / 30,
                            5.0 / 66,        -691.0 / 2730, 7.0 / 6,
                            -3617.0 / 510};

constexpr double kShift = 12.0;
constexpr double kReflect = -10.0;

template <class T>
T psi_asym(T z) {
  const T w = T(1) / (z * z);
  T p = w, s = T(0);
  for (int k = 1; k <= 8; ++k) {
    s += kB2k[k - 1] / (2.0 * k) * p;
    p *= w;
  }
  return std::log(z) - T(0.5) / z - s;
}

template <class T>
T psi1_asym(T z) {
  const T iz = T(1) / z, w = iz * iz;
  T p = w * iz, s = T(0);
  for (int k = 1; k <= 8; ++k) {
    s += kB2k[k - 1] * p;
    p *= w;
  }
  return iz + T(0.5) * w + s;
}

template <class T>
T psi2_asym(T z) {
  const T iz = T(1) / z, w = iz * iz;
  T p = w * w, s = T(0);
  for (int k = 1; k <= 8; ++k) {
    s += (2.0 * k + 1) * kB2k[k - 1] * p;
    p *= w;
  }
  return -w - w * iz - s;
}

double re_of(double x) { return x; }
double re_of(const cplx& z) { return z.real(); }
double im_of(double) { return 0.0; }
double im_of(const cplx& z) { return z.imag(); }

template <class T>
void check_pole(const T& z, const char* name) {
  const double re = re_of(z);
  if (re > 0.5) return;
  const double n = std::round(re);
  if (std::abs(re - n) < kPoleTol && std::abs(im_of(z)) < kPoleTol)
    throw PoleError(std::string(name) + ": argument at nonpositive integer " +
                    std::to_string(static_cast<long long>(n)));
}

// Values of cot, csc^2 and cos/sin^3 at pi*z with the real part reduced mod 1.
struct TrigPi {
  cplx cot, csc2, cos_sin3;
};

TrigPi trig_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx w = kPi * cplx(z.real() - n, z.imag());
  if (std::abs(w.imag()) > 20.0) {
    const double sg = w.imag() > 0 ? 1.0 : -1.0;
    return {cplx(0.0, -sg), cplx(0.0), cplx(0.0)};
  }
  const cplx s = std::sin(w), c = std::cos(w);
  return {c / s, 1.0 / (s * s), c / (s * s * s)};
}

template <class T>
T trig_to(const cplx& v) {
  if constexpr (std::is_same_v<T, double>) return v.real();
  else return v;
}

template <class T>
T digamma_impl(T z) {
  check_pole(z, "digamma");
  if (re_of(z) < kReflect) {
    const TrigPi t = trig_pi(cplx(z));
    return digamma_impl<T>(T(1) - z) - kPi * trig_to<T>(t.cot);
  }
  T acc = T(0);
  while (re_of(z) < kShift) {
    acc -= T(1) / z;
    z += T(1);
  }
  return acc + psi_asym(z);
}

template <class T>
T trigamma_impl(T z) {
  check_pole(z, "trigamma");
  if (re_of(z) < kReflect) {
    const TrigPi t = trig_pi(cplx(z));
    return -trigamma_impl<T>(T(1) - z) + kPi * kPi * trig_to<T>(t.csc2);
  }
  T acc = T(0);
  while (re_of(z) < kShift) {
    acc += T(1) / (z * z);
    z += T(1);
  }
  return acc + psi1_asym(z);
}

template <class T>
T tetragamma_impl(T z) {
  check_pole(z, "tetragamma");
  if (re_of(z) < kReflect) {
    const TrigPi t = trig_pi(cplx(z));
    return tetragamma_impl<T>(T(1) - z) -
           2.0 * kPi * kPi * kPi * trig_to<T>(t.cos_sin3);
  }
  T acc = T(0);
  while (re_of(z) < kShift) {
    acc -= T(2) / (z * z * z);
    z += T(1);
  }
  return acc + psi2_asym(z);
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 16) throw DomainError("SeriesControl: max_terms must be >= 16");
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("SeriesControl: tolerances must be positive");
}

const NamedConstants& constants() {
  static const NamedConstants c = [] {
    NamedConstants r{};
    r.K = 0.5 * (1.0 + kPi / std::tanh(kPi));
    r.gamma_euler = kEulerGamma;
    r.re_psi_i = digamma(cplx(0.0, 1.0)).real();
    r.gamma0 = 2.0 * kEulerGamma + 2.0 * r.re_psi_i;
    return r;
  }();
  return c;
}

double frac1(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

cplx e2pi(double x) {
  double f = frac1(x);
  if (f == 0.0) return {1.0, 0.0};
  if (f == 0.5) return {-1.0, 0.0};
  if (f == 0.25) return {0.0, 1.0};
  if (f == 0.75) return {0.0, -1.0};
  if (f > 0.5) f -= 1.0;
  const double a = 2.0 * kPi * f;
  return {std::cos(a), std::sin(a)};
}

cplx digamma(cplx z) { return digamma_impl<cplx>(z); }
double digamma(double x) { return digamma_impl<double>(x); }
double trigamma(double x) { return trigamma_impl<double>(x); }
cplx trigamma(cplx z) { return trigamma_impl<cplx>(z); }
double tetragamma(double x) { return tetragamma_impl<double>(x); }
cplx tetragamma(cplx z) { return tetragamma_impl<cplx>(z); }

double re_Z_closed(double x) {
  const double y = frac1(x);
  return 0.5 * kPi * std::cosh(2.0 * kPi * (y - 0.5)) / std::sinh(kPi) + 0.5;
}

cplx hurwitz_Z(double x, const SeriesControl& ctl) {
  ctl.validate();
  const double y = frac1(x);
  const double re = re_Z_closed(y);
  if (y == 0.0 || y == 0.5) return {re, 0.0};
  const cplx z = e2pi(y);
  const cplx i(0.0, 1.0);
  const cplx d = lerch_phi_disk(z, 1, -i) - lerch_phi_disk(z, 1, i);
  return {re, (d / (2.0 * i)).imag()};
}

cplx hurwitz_Z_series(double x, const SeriesControl& ctl) {
  ctl.validate();
  const double y = frac1(x);
  const double p2 = kPi * kPi, p4 = p2 * p2, p6 = p4 * p2;
  const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  const double b2 = y2 - y + 1.0 / 6;
  const double b4 = y4 - 2.0 * y3 + y2 - 1.0 / 30;
  const double b6 = y4 * y2 - 3.0 * y4 * y + 2.5 * y4 - 0.5 * y2 + 1.0 / 42;
  // sum_{n>=1} cos(2 pi n y)/n^{2k} for k = 1, 2, 3
  const double c2 = p2 * b2;
  const double c4 = -p4 / 3.0 * b4;
  const double c6 = 2.0 * p6 / 45.0 * b6;
  const std::size_t n_re = std::min<std::size_t>(ctl.max_terms, 4000);
  double rem = 0.0;
  for (std::size_t n = n_re; n >= 1; --n) {
    const double nn = static_cast<double>(n), n2 = nn * nn;
    rem += e2pi(nn * y).real() / (n2 * n2 * n2 * (1.0 + n2));
  }
  const double re = 1.0 + c2 - c4 + c6 - rem;

  double im = 0.0;
  if (y != 0.0 && y != 0.5) {
    for (std::size_t n = ctl.max_terms; n >= 1; --n) {
      const double nn = static_cast<double>(n);
      im += e2pi(frac1(nn * y)).imag() / (1.0 + nn * nn);
    }
  }
  return {re, im};
}

double log_integral(double x) {
  if (!(x > 0.0) || x == 1.0 || !std::isfinite(x))
    throw DomainError("log_integral: requires x > 0, x != 1");
  return boost::math::expint(std::log(x));
}

double li_kernel_phi(double x) {
  if (x == 0.0) return 0.0;
  const double sg = x < 0 ? -1.0 : 1.0;
  const double a = 2.0 * kPi * std::abs(x);
  double v;
  if (a > 40.0) {
    // sum over even j of j!/a^{j+1}
    const double ia2 = 1.0 / (a * a);
    double term = 1.0 / a;
    v = term;
    for (int j = 2; j < 60; j += 2) {
      term *= (j - 1.0) * j * ia2;
      v += term;
      if (term < 1e-18 * v) break;
    }
  } else {
    v = 0.5 * (std::exp(-a) * boost::math::expint(a) -
               std::exp(a) * boost::math::expint(-a));
  }
  if (!std::isfinite(v)) throw QuadratureError("li_kernel_phi: non-finite value");
  return sg * v;
}

double im_Z_via_periodization(double x, int n_wrap, bool tail_correction) {
  if (n_wrap < 1) throw DomainError("im_Z_via_periodization: n_wrap must be >= 1");
  double s = li_kernel_phi(x);
  for (int n = 1; n <= n_wrap; ++n) s += li_kernel_phi(x + n) + li_kernel_phi(x - n);
  if (!tail_correction) return s;
  // phi(xi) ~ sum_{j even} j!/(2 pi xi)^{j+1}; the |n| > n_wrap sums of
  // (n+x)^{-p} - (n-x)^{-p} are Hurwitz zeta differences.
  const double q = n_wrap + 1.0;
  const double tp = 2.0 * kPi;
  double tail = (digamma(q - x) - digamma(q + x)) / tp;
  const double fact[3] = {1.0, 2.0, 24.0};
  for (int k = 1; k <= 2; ++k) {
    const int p = 2 * k + 1;
    // zeta(p, a) = -polygamma(p-1, a)/(p-1)!  (p odd)
    const double pf = std::tgamma(static_cast<double>(p));
    const double zp = -boost::math::polygamma(p - 1, q + x) / pf;
    const double zm = -boost::math::polygamma(p - 1, q - x) / pf;
    tail += fact[k] / std::pow(tp, p) * (zp - zm);
  }
  return s + tail;
}

double zeta1(double phi) {
  if (phi < -0.5 && std::abs(phi - std::round(phi)) < kPoleTol)
    throw PoleError("zeta1: pole at negative integer");
  return trigamma(phi + 1.0);
}

}  // namespace extspec
