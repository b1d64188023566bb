#include "extspec/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "extspec/errors.hpp"
#include "quadrature.hpp"

namespace extspec {

namespace {

constexpr double kPointTol = 1e-12;

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx s(0.0);
  for (std::size_t k = c.size(); k-- > 0;) s = s * z + c[k];
  return s;
}

void check_sizes(const DomainElement& f, const BoundarySet& F) {
  if (f.a.size() != F.m() || f.b.size() != F.m())
    throw DimensionError("DomainElement: a and b must have one entry per boundary point");
}

// pow(conj(zeta), n) through the angle, so large n stays on the circle
cplx conj_power(const BoundarySet& F, std::size_t j, std::size_t n) {
  return e2pi(-frac1(F.angles[j] * static_cast<double>(n)));
}

}  // namespace

cplx HardyFunction::taylor_at(cplx z) const { return horner(taylor, z); }

cplx HardyFunction::operator()(cplx z) const {
  cplx s = taylor_at(z);
  for (const auto& p : poles) s += p.residue / (z - p.zeta);
  return s;
}

double HardyFunction::h2_norm_sq() const {
  double s = 0.0;
  for (const auto& c : taylor) s += std::norm(c);
  return s;
}

HardyFunction SzegoKernel::section(std::size_t N) const {
  HardyFunction f;
  f.taylor.resize(N + 1);
  const cplx wb = std::conj(w);
  cplx p(1.0);
  for (std::size_t k = 0; k <= N; ++k, p *= wb) f.taylor[k] = p;
  return f;
}

cplx szego_reproduce(const HardyFunction& f, cplx z, int quad_points) {
  if (!(std::abs(z) < 1.0)) throw DomainError("szego_reproduce: |z| must be < 1");
  if (!f.is_taylor()) throw RepresentationError("szego_reproduce: f has pole terms");
  if (quad_points < 1) throw DomainError("szego_reproduce: quad_points must be positive");
  cplx s(0.0);
  for (int q = 0; q < quad_points; ++q) {
    const cplx u = e2pi(static_cast<double>(q) / quad_points);
    s += f.taylor_at(u) / (1.0 - std::conj(u) * z);
  }
  return s / static_cast<double>(quad_points);
}

HardyFunction apply_zddz(const HardyFunction& f) {
  if (!f.is_taylor())
    throw RepresentationError("apply_zddz: z d/dz of a simple pole is a double pole");
  HardyFunction out;
  out.taylor.resize(f.taylor.size());
  for (std::size_t k = 0; k < f.taylor.size(); ++k) out.taylor[k] = static_cast<double>(k) * f.taylor[k];
  return out;
}

std::pair<HardyFunction, HardyFunction> rho_functions(std::size_t N) {
  HardyFunction r2, r3;
  r2.taylor.resize(N + 1);
  r3.taylor.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    r2.taylor[n] = 1.0 / (1.0 + nn * nn);
    r3.taylor[n] = nn / (1.0 + nn * nn);
  }
  return {r2, r3};
}

cplx rho2(cplx w) {
  if (std::abs(w - 1.0) < kPointTol) return constants().K;
  const cplx i(0.0, 1.0);
  return (lerch_phi_disk(w, 1, -i) - lerch_phi_disk(w, 1, i)) / (2.0 * i);
}

cplx rho3(cplx w) {
  if (std::abs(w - 1.0) < kPointTol) throw PoleError("rho3: logarithmic singularity at w = 1");
  const cplx i(0.0, 1.0);
  return 0.5 * (lerch_phi_disk(w, 1, -i) + lerch_phi_disk(w, 1, i));
}

HardyFunction cp_extract(const HardyFunction& f, const BoundarySet& F) {
  HardyFunction out;
  for (const auto& p : f.poles) {
    bool listed = false;
    for (std::size_t j = 0; j < F.m() && !listed; ++j) listed = std::abs(p.zeta - F.point(j)) < kPointTol;
    if (!listed) throw UnlistedPoleError("cp_extract: pole off the boundary set");
    out.poles.push_back(p);
  }
  return out;
}

void check_domain_element(const DomainElement& f, const BoundarySet& F, double tol) {
  check_sizes(f, F);
  if (!f.g.is_taylor()) throw RepresentationError("DomainElement: g must be a Taylor polynomial");
  double scale = 0.0;
  for (const auto& c : f.g.taylor) scale += std::abs(c);
  for (std::size_t j = 0; j < F.m(); ++j)
    if (std::abs(f.g.taylor_at(F.point(j))) > tol * std::max(1.0, scale))
      throw DomainError("DomainElement: g does not vanish on F");
}

HardyFunction to_taylor(const DomainElement& f, const BoundarySet& F, std::size_t N) {
  check_sizes(f, F);
  HardyFunction out;
  out.taylor.assign(N + 1, cplx(0.0));
  for (std::size_t n = 0; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    cplx s = n < f.g.taylor.size() ? f.g.taylor[n] : cplx(0.0);
    for (std::size_t j = 0; j < F.m(); ++j)
      s += conj_power(F, j, n) * (f.a[j] + f.b[j] * nn) / (1.0 + nn * nn);
    out.taylor[n] = s;
  }
  return out;
}

cplx evaluate(const DomainElement& f, const BoundarySet& F, cplx z) {
  check_sizes(f, F);
  cplx s = f.g.taylor_at(z);
  for (std::size_t j = 0; j < F.m(); ++j) {
    const cplx w = std::conj(F.point(j)) * z;
    s += f.a[j] * rho2(w) + f.b[j] * rho3(w);
  }
  return s;
}

HardyFunction adjoint_apply(const DomainElement& f, const BoundarySet& F, std::size_t N) {
  check_domain_element(f, F);
  HardyFunction out;
  out.taylor.assign(N + 1, cplx(0.0));
  for (std::size_t n = 0; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    cplx s = n < f.g.taylor.size() ? nn * f.g.taylor[n] : cplx(0.0);
    for (std::size_t j = 0; j < F.m(); ++j)
      s += conj_power(F, j, n) * (f.a[j] * nn - f.b[j]) / (1.0 + nn * nn);
    out.taylor[n] = s;
  }
  return out;
}

cplx adjoint_apply_cp(const DomainElement& f, const BoundarySet& F, cplx z) {
  check_domain_element(f, F);
  if (!(std::abs(z) < 1.0)) throw DomainError("adjoint_apply_cp: |z| must be < 1");
  // z f'(z) = z g'(z) + sum a_j rho3(w_j) + b_j [1/(1 - w_j) - rho2(w_j)],  w_j = conj(zeta_j) z,
  // and 1/(1 - w_j) = -zeta_j/(z - zeta_j)
  HardyFunction zfp = apply_zddz(f.g);
  cplx regular(0.0);
  for (std::size_t j = 0; j < F.m(); ++j) {
    const cplx zeta = F.point(j);
    const cplx w = std::conj(zeta) * z;
    regular += f.a[j] * rho3(w) - f.b[j] * rho2(w);
    zfp.poles.push_back({zeta, -f.b[j] * zeta});
  }
  const cplx full = zfp(z) + regular;
  return full - cp_extract(zfp, F)(z);
}

std::vector<cplx> residues(const DomainElement& f, const BoundarySet& F) {
  check_domain_element(f, F);
  std::vector<cplx> C(F.m());
  for (std::size_t j = 0; j < F.m(); ++j) C[j] = -f.b[j] * F.point(j);
  return C;
}

cplx abel_boundary_value(const HardyFunction& f, cplx zeta) {
  if (!f.is_taylor()) throw RepresentationError("abel_boundary_value: f has pole terms");
  // Neville table in h = 2^{-k}, k = 8..20, for an expansion in integer powers of h
  constexpr int k0 = 8, levels = 13;
  std::vector<std::vector<cplx>> T(levels);
  cplx best = 0.0;
  double best_diff = std::numeric_limits<double>::infinity();
  for (int i = 0; i < levels; ++i) {
    const double h = std::ldexp(1.0, -(k0 + i));
    T[i].resize(i + 1);
    T[i][0] = f.taylor_at((1.0 - h) * zeta);
    for (int j = 1; j <= i; ++j) {
      const double p = std::ldexp(1.0, j);
      T[i][j] = T[i][j - 1] + (T[i][j - 1] - T[i - 1][j - 1]) / (p - 1.0);
    }
    if (i > 0) {
      const double d = std::abs(T[i][i] - T[i - 1][i - 1]);
      if (d < best_diff) {
        best_diff = d;
        best = T[i][i];
      }
    }
  }
  return best;
}

cplx finite_boundary_value(const DomainElement& f, const BoundarySet& F, std::size_t j) {
  check_sizes(f, F);
  const cplx zj = F.point(j);
  cplx s = abel_boundary_value(f.g, zj);
  for (std::size_t l = 0; l < F.m(); ++l) {
    if (l == j) {
      s += f.a[l] * constants().K;
      continue;
    }
    const cplx w = std::conj(F.point(l)) * zj;
    s += f.a[l] * rho2(w) + f.b[l] * rho3(w);
  }
  return s;
}

double residue_boundary_form(const DomainElement& f, const BoundarySet& F) {
  const std::vector<cplx> C = residues(f, F);
  cplx s(0.0);
  for (std::size_t j = 0; j < F.m(); ++j)
    s += std::conj(F.point(j)) * C[j] * std::conj(finite_boundary_value(f, F, j));
  return s.imag();
}

double von_neumann_form(const DomainElement& f, const GramKernel& g) {
  check_sizes(f, g.F);
  const std::size_t m = g.F.m();
  CVector p(m), q(m);
  const cplx i(0.0, 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    p[j] = 0.5 * (f.b[j] - i * f.a[j]);
    q[j] = 0.5 * (f.b[j] + i * f.a[j]);
  }
  return (p.dot(g.Z * p) - q.dot(g.Z * q)).real();
}

DomainElement from_von_neumann(const HardyFunction& g, const CVector& p, const CVector& q) {
  if (p.size() != q.size()) throw DimensionError("from_von_neumann: p and q differ in length");
  DomainElement f;
  f.g = g;
  const cplx i(0.0, 1.0);
  for (Eigen::Index j = 0; j < p.size(); ++j) {
    f.a.push_back(i * (p[j] - q[j]));
    f.b.push_back(p[j] + q[j]);
  }
  return f;
}

DefectIntegrals defect_boundary_integrals(int N_quad) {
  if (N_quad < 64) throw DomainError("defect_boundary_integrals: N_quad must be >= 64");
  const int panels = (N_quad + 19) / 20;
  const std::size_t n_coef = static_cast<std::size_t>(N_quad / 8) + 1;
  DefectIntegrals out;
  out.f_plus.taylor.resize(n_coef);
  out.f_minus.taylor.resize(n_coef);
  out.y2.taylor.resize(n_coef);
  double even = 0.0, odd = 0.0;
  int n_even = 0, n_odd = 0;
  for (std::size_t n = 0; n < n_coef; ++n) {
    const double nn = static_cast<double>(n);
    auto kernel = [nn](double x) { return e2pi(-nn * x); };
    out.f_plus.taylor[n] = detail::gl_composite(
        [&](double x) { return std::exp(-2.0 * kPi * x) * kernel(x); }, 0.0, 1.0, panels);
    out.f_minus.taylor[n] = detail::gl_composite(
        [&](double x) { return std::exp(2.0 * kPi * x) * kernel(x); }, 0.0, 1.0, panels);
    // e^{-2 pi |x|} has a kink at 0; integrate the two halves separately
    const int half = std::max(1, panels / 2);
    out.y2.taylor[n] =
        detail::gl_composite([&](double x) { return std::exp(2.0 * kPi * x) * kernel(x); }, -0.5, 0.0, half) +
        detail::gl_composite([&](double x) { return std::exp(-2.0 * kPi * x) * kernel(x); }, 0.0, 0.5, half);
    const double c = out.y2.taylor[n].real() * (1.0 + nn * nn);
    if (n % 2 == 0) {
      even += c;
      ++n_even;
    } else {
      odd += c;
      ++n_odd;
    }
  }
  out.y2_even_constant = even / n_even;
  out.y2_odd_constant = odd / n_odd;
  return out;
}

std::vector<BoundarySample> boundary_samples(const HardyFunction& f, int count) {
  if (count < 1) throw DomainError("boundary_samples: count must be positive");
  std::vector<BoundarySample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int q = 0; q < count; ++q) {
    const double x = static_cast<double>(q) / count;
    out.push_back({x, f(e2pi(x))});
  }
  return out;
}

}  // namespace extspec
