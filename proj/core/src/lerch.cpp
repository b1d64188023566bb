#include <cmath>

#include "extspec/errors.hpp"
#include "extspec/specfun.hpp"
#include "quadrature.hpp"

namespace extspec {

namespace {

constexpr double kMinShift = 20.0;

void check_v(cplx v, const char* name) {
  if (v.real() > 0.5 || std::abs(v.imag()) >= kPoleTol) return;
  const double n = std::round(v.real());
  if (std::abs(v.real() - n) < kPoleTol)
    throw PoleError(std::string(name) + ": v at a nonpositive integer");
}

// (1/Gamma(s)) int_0^1 (-ln u)^{s-1} u^{b-1}/(1 - z u) du, Re b >= kMinShift.
// Substituting u = 1 - t, the panels are graded geometrically toward t = 0
// where both the Szego-type factor 1/(1 - z u) and, for large b, the factor
// u^{b-1} have their structure.
cplx lerch_integral(cplx z, double s, cplx b) {
  const bool at_one = (z == cplx(1.0));
  const double dist = at_one ? 1.0 : std::abs(1.0 - z);
  const cplx bm1 = b - 1.0;
  const cplx one_minus_z = 1.0 - z;
  const bool unit_s = (s == 1.0);
  auto f = [&](double t) -> cplx {
    const double lu = std::log1p(-t);  // ln u
    cplx g = std::exp(bm1 * lu) / (one_minus_z + z * t);
    if (!unit_s) g *= std::pow(-lu, s - 1.0);
    return g;
  };
  cplx acc(0.0);
  double hi = 1.0;
  for (int j = 0; j < 1100; ++j) {
    const double lo = 0.5 * hi;
    // skip panels where u^{Re b - 1} is negligible
    const double decay = bm1.real() * (-std::log1p(-lo));
    if (decay < 60.0) acc += detail::gl_panel(f, lo, hi);
    hi = lo;
    if (hi < 1e-18 * dist && hi < 1e-18) break;
  }
  // remaining [0, hi]: integrand ~ t^{s-1}/(1-z), or t^{s-2} at z = 1 (s > 1 there)
  acc += at_one ? std::pow(hi, s - 1.0) / (s - 1.0) : std::pow(hi, s) / s / (1.0 - z);
  return acc / std::tgamma(s);
}

cplx powv(cplx w, double s) { return s == 1.0 ? 1.0 / w : std::pow(w, -s); }

cplx lerch_shifted(cplx z, double s, cplx v) {
  const int shift = std::max(0, static_cast<int>(std::ceil(kMinShift - v.real())));
  cplx head(0.0), zk(1.0);
  for (int k = 0; k < shift; ++k) {
    head += zk * powv(v + static_cast<double>(k), s);
    zk *= z;
  }
  return head + zk * lerch_integral(z, s, v + static_cast<double>(shift));
}

}  // namespace

cplx lerch_phi_disk(cplx z, int s, cplx v) {
  check_v(v, "lerch_phi_disk");
  if (s < 1) throw DomainError("lerch_phi_disk: s must be >= 1");
  if (std::abs(z) > 1.0 + 1e-14) throw DomainError("lerch_phi_disk: |z| > 1");
  if (s == 1 && std::abs(1.0 - z) < 1e-14)
    throw ConvergenceError("lerch_phi_disk: divergent at z = 1, s = 1");
  if (std::abs(z) <= 0.5) return lerch_phi(z, s, v);
  return lerch_shifted(z, static_cast<double>(s), v);
}

cplx lerch_phi(cplx z, double s, cplx v, const SeriesControl& ctl) {
  ctl.validate();
  check_v(v, "lerch_phi");
  const double az = std::abs(z);
  if (az > 1.0 + 1e-14) throw DomainError("lerch_phi: |z| > 1");
  if (az > 1.0 - 1e-14 && s <= 1.0)
    throw ConvergenceError("lerch_phi: |z| = 1 requires s > 1");
  if (s < 1.0) throw DomainError("lerch_phi: s < 1 not supported");

  if (az <= 0.5) {
    cplx sum(0.0), zk(1.0);
    for (std::size_t k = 0; k < ctl.max_terms; ++k) {
      sum += zk * powv(v + static_cast<double>(k), s);
      const double kk = static_cast<double>(k + 1);
      const double next = std::pow(az, kk) /
                          std::pow(std::max(std::abs(v + kk), 1e-300), s) / (1.0 - az);
      if (next <= ctl.rel_tol * std::abs(sum) + ctl.abs_tol) return sum;
      zk *= z;
    }
    throw ConvergenceError("lerch_phi: max_terms exhausted");
  }
  return lerch_shifted(z, s, v);
}

}  // namespace extspec
