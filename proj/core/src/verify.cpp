#include "extspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "extspec/boundary.hpp"
#include "extspec/errors.hpp"
#include "extspec/extfinite.hpp"
#include "extspec/forms.hpp"
#include "extspec/spectral11.hpp"
#include "extspec/specfun.hpp"

namespace extspec {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
cplx gaussian(Rng& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng)};
}

double random_noninteger(Rng& rng, double a, double b) {
  for (;;) {
    const double x = uniform(rng, a, b);
    if (std::abs(x - std::round(x)) > 1e-3) return x;
  }
}

BoundarySet random_set(Rng& rng, std::size_t m) {
  for (;;) {
    std::vector<double> a(m);
    for (auto& x : a) x = uniform(rng, 0.0, 1.0);
    std::vector<double> s = a;
    std::sort(s.begin(), s.end());
    bool ok = s.back() - s.front() < 1.0 - 1e-3;
    for (std::size_t i = 1; i < m && ok; ++i) ok = s[i] - s[i - 1] > 1e-3;
    if (ok) return BoundarySet::make(a);
  }
}

// Taylor polynomial (prod_j (z - zeta_j)) (u + v z) vanishing on F
HardyFunction vanishing_poly(const BoundarySet& F, Rng& rng) {
  std::vector<cplx> p{1.0};
  for (std::size_t j = 0; j < F.m(); ++j) {
    std::vector<cplx> t(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      t[k + 1] += p[k];
      t[k] -= F.point(j) * p[k];
    }
    p = t;
  }
  const cplx u = gaussian(rng), v = gaussian(rng);
  HardyFunction g;
  g.taylor.assign(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    g.taylor[k] += u * p[k];
    g.taylor[k + 1] += v * p[k];
  }
  return g;
}

Report suite_specfun(Rng& rng) {
  Report r;
  r.name = "specfun";
  const auto& c = constants();
  const cplx i(0.0, 1.0);

  // K four ways
  const double k_closed = 0.5 * (1.0 + kPi / std::tanh(kPi));
  const double k_psi = digamma(i).imag();
  double k_series = 0.0;
  const std::size_t N = 1'000'000;
  for (std::size_t n = N; n-- > 0;) k_series += 1.0 / (1.0 + static_cast<double>(n) * n);
  k_series += 1.0 / (static_cast<double>(N) - 0.5);  // midpoint tail
  const double k_re = re_Z_closed(0.0);
  const double k_spread = std::max({std::abs(k_closed - k_psi), std::abs(k_closed - k_series),
                                    std::abs(k_closed - k_re), std::abs(k_closed - c.K)});
  r.add("K = Im psi(i) = sum 1/(1+n^2) = Re Z(0)", k_spread < 1e-10, k_spread, 1e-10);

  double conj_err = 0.0;
  for (int t = 0; t < 100; ++t) {
    const cplx z(uniform(rng, -10.0, 10.0), uniform(rng, -10.0, 10.0));
    conj_err = std::max(conj_err, std::abs(digamma(std::conj(z)) - std::conj(digamma(z))));
  }
  r.add("psi(conj z) = conj psi(z)", conj_err < 1e-12, conj_err, 1e-12);

  double res_err = 0.0;
  for (int n = 0; n <= 5; ++n) {
    const double h = 1e-6;
    res_err = std::max(res_err, std::abs(h * digamma(-n + h) + 1.0));
  }
  r.add("residues of psi at -n are -1", res_err < 1e-5, res_err, 1e-5);

  double re_err = 0.0, sym_err = 0.0;
  SeriesControl short_ctl;
  short_ctl.max_terms = 4000;
  for (int q = 0; q < 1000; ++q) {
    const double x = q / 1000.0;
    re_err = std::max(re_err, std::abs(re_Z_closed(x) - hurwitz_Z_series(x, short_ctl).real()));
    if (q % 10 == 0) sym_err = std::max(sym_err, std::abs(hurwitz_Z(x) - std::conj(hurwitz_Z(-x))));
  }
  r.add("Re Z closed form against series", re_err < 1e-10, re_err, 1e-10);
  r.add("Z(x) = conj Z(-x)", sym_err < 1e-12, sym_err, 1e-12);

  const double half = std::max(std::abs(hurwitz_Z(0.5).imag()), std::abs(hurwitz_Z(0.0).imag()));
  r.add("Im Z vanishes at half-integers", half < 1e-8, half, 1e-8);

  double worst_pd = 0.0;
  for (int t = 0; t < 5; ++t) {
    std::vector<double> x(20);
    std::vector<cplx> phi(20);
    for (int j = 0; j < 20; ++j) {
      x[j] = uniform(rng, -5.0, 5.0);
      phi[j] = gaussian(rng);
    }
    cplx s(0.0);
    for (int a = 0; a < 20; ++a)
      for (int b = 0; b < 20; ++b) s += std::conj(phi[a]) * phi[b] * hurwitz_Z(x[a] - x[b]);
    worst_pd = std::min(worst_pd, s.real());
  }
  r.add("Z is positive definite", worst_pd >= -1e-10, worst_pd, -1e-10);

  double z1_err = 0.0;
  for (int q = 0; q <= 59; ++q) {
    const double phi = -0.9 + q * 0.1;
    double s = 0.0;
    const int M = 200000;
    for (int n = M; n >= 1; --n) s += 1.0 / ((phi + n) * (phi + n));
    s += 1.0 / (M + 0.5 + phi);
    z1_err = std::max(z1_err, std::abs(zeta1(phi) - s));
  }
  r.add("zeta1 against its series", z1_err < 1e-10, z1_err, 1e-10);

  double li_err = 0.0;
  for (double x : {0.1, 0.23, 0.37, 0.71}) li_err = std::max(li_err, std::abs(im_Z_via_periodization(x, 20) - hurwitz_Z(x).imag()));
  r.add("li periodization against Im Z", li_err < 1e-4, li_err, 1e-4);
  return r;
}

Report suite_spectral(Rng& rng) {
  Report r;
  r.name = "spectral";

  bool localized = true;
  for (int t = 0; t < 50; ++t) {
    const auto p = ExtensionParameter::make(uniform(rng, -kPi + 1e-3, kPi - 1e-3));
    for (int n = 0; n <= 30; ++n) {
      const double lam = eigenvalue(p, n);
      localized = localized && (n == 0 ? lam < 0.0 : (lam > n - 1.0 && lam < n));
    }
  }
  r.add("eigenvalues in (n-1, n)", localized, 0.0, 0.0);

  const auto p0 = ExtensionParameter::make(0.0);
  bool monotone = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 50; ++n) {
    const double gap = n - eigenvalue(p0, n);
    monotone = monotone && gap > 0.0 && gap < prev;
    prev = gap;
  }
  r.add("gaps n - lambda_n positive and decreasing at theta = 0", monotone, prev, 0.0);

  double fi = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double lam = random_noninteger(rng, -20.0, 20.0);
    fi = std::max(fi, std::abs(G(lam) - G(lam - 1.0) + 1.0 / lam));
  }
  r.add("G(l) - G(l-1) + 1/l = 0", fi < 1e-10, fi, 1e-10);

  double gs = 0.0;
  for (int t = 0; t < 10; ++t) {
    const double lam = random_noninteger(rng, -5.0, 5.0);
    gs = std::max(gs, std::abs(G_series(lam) - G(lam)));
  }
  r.add("raw series against digamma form", gs < 1e-8, gs, 1e-8);

  const auto p1 = ExtensionParameter::make(1.0);
  std::vector<EigenvectorFamily> ys;
  for (int n = 0; n <= 10; ++n) ys.push_back(eigenvector(p1, n, 100000));
  double ortho = 0.0, resid = 0.0;
  bool within_tail = true;
  for (int a = 0; a <= 10; ++a) {
    const EigenResidual e = eigen_residual(ys[a]);
    resid = std::max({resid, e.coordinate, e.domain});
    for (int b = a + 1; b <= 10; ++b) {
      const TruncatedInner ip = eigen_inner(ys[a], ys[b]);
      within_tail = within_tail && std::abs(ip.value) <= ip.tail_bound;
      ortho = std::max(ortho, std::abs(ip.value) / std::sqrt(ys[a].norm_sq() * ys[b].norm_sq()));
    }
  }
  r.add("truncated eigenvectors orthogonal within tail bounds", within_tail, ortho, 1e-3);
  r.add("eigen-residual on truncations", resid < 1e-6, resid, 1e-6);

  std::vector<double> all;
  for (int q = 0; q < 100; ++q) {
    const auto p = ExtensionParameter::make(-kPi + (q + 0.5) * 2.0 * kPi / 100.0);
    for (const auto& e : spectrum(p, 20).entries) all.push_back(e.lambda);
  }
  std::sort(all.begin(), all.end());
  double min_sep = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < all.size(); ++k) min_sep = std::min(min_sep, all[k] - all[k - 1]);
  r.add("spectra of distinct theta are disjoint", min_sep > 1e-8, min_sep, 1e-8);
  return r;
}

Report suite_kernel(Rng& rng) {
  Report r;
  r.name = "kernel";

  double min_eig = std::numeric_limits<double>::infinity(), vdm = 0.0;
  for (int t = 0; t < 50; ++t) {
    const BoundarySet F = random_set(rng, 1 + static_cast<std::size_t>(t % 8));
    min_eig = std::min(min_eig, gram(F).eigenvalues[0]);
    const auto [lu, prod] = vandermonde_det(F);
    vdm = std::max(vdm, std::abs(lu - prod) / prod);
  }
  r.add("Gram matrices positive definite", min_eig > 0.0, min_eig, 0.0);
  r.add("Vandermonde determinant two ways", vdm < 1e-8, vdm, 1e-8);

  const GramKernel g = gram(random_set(rng, 4));
  double defect = 0.0, closure = 0.0;
  for (int t = 0; t < 10; ++t) {
    const IsometryMatrix a = sample_GF(g, rng()), b = sample_GF(g, rng());
    defect = std::max({defect, a.defect, b.defect});
    closure = std::max({closure, is_in_GF(a.M * b.M, g).defect, is_in_GF(a.M.inverse(), g).defect});
  }
  r.add("sampled G(F) defect", defect < 1e-10, defect, 1e-10);
  r.add("G(F) closed under products and inverses", closure < 4 * kGroupTol, closure, 4 * kGroupTol);

  // |sum phi_a f+^(a)|^2 with f+^(a)_n = conj(zeta_a)^n/(n - i)
  {
    const std::size_t m = g.F.m();
    CVector phi(m);
    for (std::size_t a = 0; a < m; ++a) phi[a] = gaussian(rng);
    const std::size_t N = 200000;
    double norm = 0.0;
    for (std::size_t n = N + 1; n-- > 0;) {
      cplx s(0.0);
      for (std::size_t a = 0; a < m; ++a)
        s += phi[a] * e2pi(-frac1(g.F.angles[a] * static_cast<double>(n))) / (static_cast<double>(n) - cplx(0.0, 1.0));
      norm += std::norm(s);
    }
    const double l1 = phi.cwiseAbs().sum();
    const double target = phi.dot(g.Z * phi).real();
    const double err = std::abs(norm - target);
    r.add("RKHS isometry on truncations", err <= l1 * l1 / N, err, l1 * l1 / N);
  }

  double m1 = 0.0;
  const BoundarySet F1 = BoundarySet::make({0.0});
  const GramKernel g1 = gram(F1);
  for (double th : {0.0, 1.0, -2.0, 2.5}) {
    CMatrix M(1, 1);
    M(0, 0) = std::polar(1.0, th);
    const auto ref = ExtensionParameter::make(th);
    for (const auto& e : extension_spectrum(g1, M, 8).entries)
      m1 = std::max(m1, std::abs(e.lambda - eigenvalue(ref, e.cell)));
  }
  r.add("m = 1 extension spectra match the single-point solver", m1 < 1e-8, m1, 1e-8);

  double dfm = 0.0;
  for (int t = 0; t < 20; ++t) {
    const GramKernel gt = gram(random_set(rng, 1 + static_cast<std::size_t>(t % 3)));
    const IsometryMatrix M = sample_GF(gt, rng());
    CVector psi(gt.F.m());
    for (Eigen::Index a = 0; a < psi.size(); ++a) psi[a] = gaussian(rng);
    const double lam = random_noninteger(rng, -3.0, 6.0);
    const double h = 1e-5;
    const cplx fd = (F_M(lam + h, gt.F, M.M, psi) - F_M(lam - h, gt.F, M.M, psi)) / (2.0 * h);
    const cplx cf = F_M_prime(lam, gt.F, M.M, psi);
    dfm = std::max(dfm, std::abs(fd - cf) / std::abs(cf));
  }
  r.add("dF_M/dlambda against central differences", dfm < 1e-6, dfm, 1e-6);

  // antipodal pair: Gram eigenvalues 2 K_odd, 2 K_ev with eigenvectors (1, -+1)/sqrt 2
  const GramKernel g2 = gram(BoundarySet::make({0.0, 0.5}));
  const auto [kev, kodd] = K_even_odd();
  const double eig_err =
      std::max(std::abs(g2.eigenvalues[0] - 2.0 * kodd), std::abs(g2.eigenvalues[1] - 2.0 * kev));
  const double vec_err = std::max(std::abs(std::abs(g2.eigenvectors(0, 0)) - std::sqrt(0.5)),
                                  std::abs(std::abs(g2.eigenvectors(1, 1)) - std::sqrt(0.5)));
  r.add("antipodal Gram eigenvalues 2 K_odd, 2 K_ev", eig_err < 1e-10, eig_err, 1e-10);
  r.add("antipodal Gram eigenvectors (1, +-1)/sqrt 2", vec_err < 1e-10, vec_err, 1e-10);
  return r;
}

Report suite_boundary(Rng& rng) {
  Report r;
  r.name = "boundary";

  double sz = 0.0;
  for (int t = 0; t < 20; ++t) {
    HardyFunction f;
    for (int k = 0; k <= 10; ++k) f.taylor.push_back(gaussian(rng));
    const cplx z = std::polar(uniform(rng, 0.0, 0.6), uniform(rng, 0.0, 2.0 * kPi));
    sz = std::max(sz, std::abs(szego_reproduce(f, z, 64) - f(z)));
  }
  r.add("Szego reproduction of degree-10 polynomials", sz < 1e-8, sz, 1e-8);

  double pars = 0.0, lip_excess = 0.0;
  for (int t = 0; t < 10; ++t) {
    HardyFunction f;
    for (int k = 0; k <= 30; ++k) f.taylor.push_back(gaussian(rng) / (1.0 + k * k));
    double quad = 0.0;
    for (const auto& s : boundary_samples(f, 256)) quad += std::norm(s.value) / 256.0;
    pars = std::max(pars, std::abs(quad - f.h2_norm_sq()));
    double h2 = 0.0;
    for (std::size_t k = 0; k < f.taylor.size(); ++k) h2 += std::pow(static_cast<double>(k), 4) * std::norm(f.taylor[k]);
    const double L = 2.0 * kPi * kPi / std::sqrt(6.0) * std::sqrt(h2);
    for (int q = 0; q < 50; ++q) {
      const double x = uniform(rng, 0.0, 1.0), y = uniform(rng, 0.0, 1.0);
      const double d = std::abs(f(e2pi(x)) - f(e2pi(y))) - L * std::abs(x - y);
      lip_excess = std::max(lip_excess, d);
    }
  }
  r.add("Parseval on the circle", pars < 1e-10, pars, 1e-10);
  r.add("Lipschitz bound from |H^2 f|", lip_excess <= 1e-12, lip_excess, 0.0);

  const BoundarySet F = random_set(rng, 3);
  {
    HardyFunction f = vanishing_poly(F, rng);
    for (std::size_t j = 0; j < F.m(); ++j) f.poles.push_back({F.point(j), gaussian(rng)});
    const HardyFunction once = cp_extract(f, F), twice = cp_extract(once, F);
    const cplx z(0.3, -0.2);
    const double idem = std::abs(once(z) - twice(z));
    const double annihilate = std::abs(once(z) - cp_extract(once, F)(z));
    r.add("cp_extract idempotent", idem == 0.0, idem, 0.0);
    r.add("1 - CP_F annihilates principal parts", annihilate == 0.0, annihilate, 0.0);
  }

  const GramKernel g = gram(F);
  double paths = 0.0, forms_err = 0.0, vanish = 0.0;
  for (int t = 0; t < 50; ++t) {
    DomainElement f;
    f.g = vanishing_poly(F, rng);
    for (std::size_t j = 0; j < F.m(); ++j) {
      f.a.push_back(gaussian(rng));
      f.b.push_back(gaussian(rng));
    }
    const HardyFunction Li = adjoint_apply(f, F, 1500);
    for (int q = 0; q < 20; ++q) {
      const cplx z = std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, 2.0 * kPi));
      paths = std::max(paths, std::abs(Li(z) - adjoint_apply_cp(f, F, z)));
    }
    forms_err = std::max(forms_err, std::abs(residue_boundary_form(f, F) - von_neumann_form(f, g)));
    if (t < 10) {
      DomainElement d;
      d.g = f.g;
      d.a.assign(F.m(), 0.0);
      d.b.assign(F.m(), 0.0);
      vanish = std::max(vanish, std::abs(residue_boundary_form(d, F)));
      const IsometryMatrix M = sample_GF(g, rng());
      CVector p(F.m());
      for (Eigen::Index a = 0; a < p.size(); ++a) p[a] = gaussian(rng);
      vanish = std::max(vanish, std::abs(residue_boundary_form(from_von_neumann(f.g, p, M.M * p), F)));
    }
  }
  r.add("adjoint: coefficient path against (1 - CP_F) z d/dz", paths < 1e-6, paths, 1e-6);
  r.add("residue form equals von Neumann form", forms_err < 1e-4, forms_err, 1e-4);
  r.add("residue form vanishes on D(L_F) and isometry graphs", vanish < 1e-4, vanish, 1e-4);

  const DefectIntegrals d = defect_boundary_integrals(256);
  const cplx i(0.0, 1.0);
  double dp = 0.0, dm = 0.0;
  const double ep = (1.0 - std::exp(-2.0 * kPi)) / (2.0 * kPi), em = (std::exp(2.0 * kPi) - 1.0) / (2.0 * kPi);
  for (std::size_t n = 0; n < d.f_plus.taylor.size(); ++n) {
    const double nn = static_cast<double>(n);
    dp = std::max(dp, std::abs(d.f_plus.taylor[n] * i / ep - 1.0 / (nn - i)));
    dm = std::max(dm, std::abs(-d.f_minus.taylor[n] * i / em - 1.0 / (nn + i)));
  }
  r.add("f+ boundary integral against scaled x+", dp < 1e-8, dp, 1e-8);
  r.add("f- boundary integral against scaled x-", dm < 1e-8, dm, 1e-8);
  const double y2e = std::abs(d.y2_even_constant - (1.0 - std::exp(-kPi)) / kPi);
  const double y2o = std::abs(d.y2_odd_constant - (1.0 + std::exp(-kPi)) / kPi);
  r.add("y2 coefficients times (1+n^2), even n", y2e < 1e-8, d.y2_even_constant, (1.0 - std::exp(-kPi)) / kPi);
  r.add("y2 coefficients times (1+n^2), odd n", y2o < 1e-8, d.y2_odd_constant, (1.0 + std::exp(-kPi)) / kPi);

  const auto [r2, r3] = rho_functions(10000);
  const cplx z(0.5, 0.0);
  const double rho_id = std::abs(apply_zddz(r3)(z) + r2(z) - 1.0 / (1.0 - z));
  r.add("z d/dz rho3 = 1/(1-z) - rho2", rho_id < 1e-6, rho_id, 1e-6);
  return r;
}

Report suite_forms(Rng& rng) {
  Report r;
  r.name = "forms";

  const auto demo = glb_demo({10, 100, 1000, 3000, 10000});
  bool decreasing = true, near_one = true;
  for (std::size_t k = 0; k < demo.size(); ++k) {
    if (k > 0) decreasing = decreasing && demo[k].ratio < demo[k - 1].ratio;
    if (demo[k].n >= 1000) near_one = near_one && std::abs(demo[k].ratio_times_s - 1.0) < 0.1;
  }
  r.add("witness Rayleigh quotients decrease", decreasing, demo.back().ratio, 0.0);
  r.add("ratio * s_n near 1 for n >= 1000", near_one, demo.back().ratio_times_s, 1.0);

  double min_ratio = std::numeric_limits<double>::infinity();
  bool poincare = true;
  for (int t = 0; t < 1000; ++t) {
    const int N = 4 + static_cast<int>(rng() % 40);
    std::vector<double> b(static_cast<std::size_t>(N) + 1, 0.0);
    for (int m = 1; m <= N; ++m) b[m] = uniform(rng, -1.0, 1.0) / m;
    // project out the two constraints on the last even and odd entries
    const SineConstraintSums s = sine_constraint_sums(b);
    const int me = N % 2 == 0 ? N : N - 1, mo = N % 2 == 1 ? N : N - 1;
    b[me] -= s.even / (0.5 * me);
    b[mo] -= s.odd / mo;
    min_ratio = std::min(min_ratio, dirichlet_neumann_glb(b));
    const PoincareSides ps = poincare_check(b);
    poincare = poincare && ps.lhs >= ps.rhs;
  }
  r.add("admissible sine vectors have ratio >= 1", min_ratio >= 1.0, min_ratio, 1.0);
  r.add("Poincare inequality", poincare, 0.0, 0.0);
  const double sec = dirichlet_neumann_section_min(200).min_ratio;
  r.add("finite-section minimum at N = 200", sec < 1.05 && sec >= 1.0, sec, 1.05);

  double cbd = 0.0;
  for (int t = 0; t < 10; ++t) {
    std::vector<double> a(8);
    for (auto& x : a) x = uniform(rng, -1.0, 1.0);
    double se = 0.0, so = 0.0;
    for (std::size_t n = 0; n + 2 < a.size(); ++n) (n % 2 == 0 ? se : so) += a[n];
    a[6] = -se;
    a[7] = -so;
    const SineConstraintSums lim = sine_constraint_limit(a, 200);
    cbd = std::max({cbd, std::abs(lim.even), std::abs(lim.odd)});
  }
  r.add("cosine constraints map to sine constraints", cbd < 1e-8, cbd, 1e-8);

  const std::vector<double> bc = cos_sin_constraint_transform({1.0}, 41);
  double pattern = 0.0;
  for (std::size_t m = 1; m <= 41; ++m)
    pattern = std::max(pattern, std::abs(bc[m] * static_cast<double>(m) - (m % 2 ? 4.0 / kPi : 0.0)));
  r.add("constant function: b_m = 4/(pi m) on odd m", pattern < 1e-14, pattern, 1e-14);

  double pn = 0.0;
  bool in_unit = true;
  for (int q = 0; q < 500; ++q) {
    const double phi = -4.0 + 8.0 * (q + 0.37) / 500.0;
    const double v = projection_norm(phi);
    in_unit = in_unit && v >= -1e-15 && v <= 1.0 + 1e-15;
    pn = std::max(pn, std::abs(v - projection_norm_direct(phi)));
  }
  r.add("projection norm closed form against direct sum", pn < 1e-8, pn, 1e-8);
  r.add("projection norm in [0, 1]", in_unit, 0.0, 0.0);
  double lim = 0.0;
  for (int k = 0; k <= 5; ++k) lim = std::max(lim, std::abs(projection_norm(k) - 1.0));
  for (int k = 1; k <= 5; ++k) lim = std::max(lim, std::abs(projection_norm(-k + 1e-9)));
  r.add("projection norm limits at integers", lim < 1e-6, lim, 1e-6);

  for (const Report& sub : {friedrichs_krein_check(5, 1'000'000), haar_generator_check(100000)})
    for (const auto& c : sub.checks) r.checks.push_back({sub.name + ": " + c.name, c.pass, c.value, c.bound});

  // binomials from Pascal's triangle
  std::vector<std::vector<double>> pascal(21);
  for (int n = 0; n <= 20; ++n) {
    pascal[n].assign(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  bool fock = true;
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; a + b <= 20; ++b) {
      fock = fock && fock_norm({a, b}) == 1.0 / pascal[a + b][b];
      for (int c = 0; a + b + c <= 20; ++c)
        fock = fock && fock_norm({a, b, c}) == 1.0 / (pascal[a + b + c][c] * pascal[a + b][b]);
    }
  r.add("|z^alpha|^2 = 1/binom for |alpha| <= 20", fock, 0.0, 0.0);
  const WitnessSums w2 = essential_sa_witness(2, 30), w3 = essential_sa_witness(3, 12);
  r.add("layer sums equal d^n", w2.layer_identity && w3.layer_identity, 0.0, 0.0);
  r.add("d = 2 witness exceeds 1e3 by n = 30", w2.partial_sums.back() > 1e3, w2.partial_sums.back(), 1e3);
  const WitnessSums w1 = essential_sa_witness(1, 2000);
  const double limit1 = 0.5 * (0.5 * kPi / std::tanh(kPi) + 0.5 * kPi * kPi / std::pow(std::sinh(kPi), 2) + 1.0);
  const double gap1 = limit1 - w1.partial_sums.back();
  r.add("d = 1 analogue converges to sum 1/(1+n^2)^2", gap1 >= 0.0 && gap1 < 1e-9, w1.partial_sums.back(), limit1);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"specfun", "spectral", "kernel", "boundary", "forms"};
  return names;
}

Report verify_suite(const std::string& suite, std::uint64_t seed) {
  Rng rng(seed);
  if (suite == "specfun") return suite_specfun(rng);
  if (suite == "spectral") return suite_spectral(rng);
  if (suite == "kernel") return suite_kernel(rng);
  if (suite == "boundary") return suite_boundary(rng);
  if (suite == "forms") return suite_forms(rng);
  throw DomainError("verify_suite: unknown suite '" + suite + "'");
}

}  // namespace extspec
