#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "extspec/extfinite.hpp"
#include "extspec/specfun.hpp"

namespace extspec {

struct PoleTerm {
  cplx zeta;     // |zeta| = 1
  cplx residue;  // r in r/(z - zeta)
};

// Truncated Taylor part c_0..c_N plus simple poles on the unit circle.
struct HardyFunction {
  std::vector<cplx> taylor;
  std::vector<PoleTerm> poles;

  std::size_t N() const { return taylor.empty() ? 0 : taylor.size() - 1; }
  bool is_taylor() const { return poles.empty(); }
  cplx taylor_at(cplx z) const;
  cplx operator()(cplx z) const;
  double h2_norm_sq() const;  // sum |c_k|^2 of the Taylor part
};

struct SzegoKernel {
  cplx w;
  cplx operator()(cplx z) const { return 1.0 / (1.0 - std::conj(w) * z); }
  HardyFunction section(std::size_t N) const;  // coefficients conj(w)^k
};

// f(z) = \int_0^1 f~(x)/(1 - conj(e(x)) z) dx by the trapezoid rule on the circle.
cplx szego_reproduce(const HardyFunction& f, cplx z, int quad_points);

HardyFunction apply_zddz(const HardyFunction& f);

// rho2(z) = sum z^n/(1+n^2), rho3(z) = sum n z^n/(1+n^2)
std::pair<HardyFunction, HardyFunction> rho_functions(std::size_t N);
cplx rho2(cplx w);  // |w| <= 1
cplx rho3(cplx w);  // |w| <= 1, w != 1

// Principal parts at the points of F.
HardyFunction cp_extract(const HardyFunction& f, const BoundarySet& F);

// f = g + sum_j a_j R2(zeta_j, .) + sum_j b_j R3(zeta_j, .), R_p(zeta, z) = rho_p(conj(zeta) z),
// an element of D(L_F^*); g is a Taylor polynomial vanishing on F.
struct DomainElement {
  HardyFunction g;
  std::vector<cplx> a, b;
};

void check_domain_element(const DomainElement& f, const BoundarySet& F, double tol = 1e-9);
HardyFunction to_taylor(const DomainElement& f, const BoundarySet& F, std::size_t N);
cplx evaluate(const DomainElement& f, const BoundarySet& F, cplx z);  // via Lerch

// L_F^* f = z g' + sum a_j R3_j - sum b_j R2_j, truncated to N Taylor coefficients.
HardyFunction adjoint_apply(const DomainElement& f, const BoundarySet& F, std::size_t N);
// (1 - CP_F) z d/dz f at z, with z f'(z) assembled from w dPhi/dw = 1/(1-w) - v Phi
// and the principal parts removed through cp_extract.
cplx adjoint_apply_cp(const DomainElement& f, const BoundarySet& F, cplx z);

// C_j = lim_{w -> zeta_j} (w - zeta_j) w f'(w) = -b_j zeta_j
std::vector<cplx> residues(const DomainElement& f, const BoundarySet& F);

// Radial limit of a Taylor polynomial by Richardson extrapolation over r = 1 - 2^{-k}.
cplx abel_boundary_value(const HardyFunction& f, cplx zeta);

// Boundary value of f at zeta_j with the real divergent term b_j rho3(r) removed.
cplx finite_boundary_value(const DomainElement& f, const BoundarySet& F, std::size_t j);

// B(f,f) = Im sum_j conj(zeta_j) C_j conj(f~(zeta_j))
double residue_boundary_form(const DomainElement& f, const BoundarySet& F);
// ||f+||^2 - ||f-||^2 in the von Neumann coordinates p = (b - i a)/2, q = (b + i a)/2.
double von_neumann_form(const DomainElement& f, const GramKernel& g);
DomainElement from_von_neumann(const HardyFunction& g, const CVector& p, const CVector& q);

struct DefectIntegrals {
  HardyFunction f_plus, f_minus, y2;
  double y2_even_constant = 0.0;  // measured c_n (1 + n^2) for even n
  double y2_odd_constant = 0.0;   // and for odd n
};

// Taylor coefficients of \int_0^1 e^{-+2 pi x}/(1 - conj(e(x)) z) dx and of
// \int_{-1/2}^{1/2} e^{-2 pi |x|}/(1 - conj(e(x)) z) dx, n = 0..N_quad/8, by
// composite Gauss-Legendre with N_quad nodes.
DefectIntegrals defect_boundary_integrals(int N_quad);

struct BoundarySample {
  double x;
  cplx value;
};
std::vector<BoundarySample> boundary_samples(const HardyFunction& f, int count);

}  // namespace extspec
