// Acceptance run: one PASS/FAIL line per criterion, checked literally with the
// tolerances written below.  Exit status is 0 exactly when the failing set equals
// kExpectedFailures; an unexpected pass or fail is reported and exits 1.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "extspec/boundary.hpp"
#include "extspec/extfinite.hpp"
#include "extspec/forms.hpp"
#include "extspec/spectral11.hpp"
#include "extspec/specfun.hpp"

using namespace extspec;

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what, double value, double bound) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s%s=%.6e (bound %.3e)", detail.empty() ? "" : "; ", what.c_str(), value, bound);
    detail += buf;
    if (!ok) detail += " FAILED";
    pass = pass && ok;
  }
  void flag(bool ok, const std::string& what) {
    detail += (detail.empty() ? "" : "; ") + what + (ok ? " ok" : " FAILED");
    pass = pass && ok;
  }
};

// Criteria that cannot hold as written; the reason is printed with the FAIL line.
const std::set<int> kExpectedFailures{1, 4, 8};
const char* expected_reason(int id) {
  switch (id) {
    case 1:
      return "gamma0 = 2 gamma + psi(i) + psi(-i) evaluates to +1.3437319710, so the stated -1.34373 has the wrong "
             "sign; K and Re psi(i) agree";
    case 4:
      return "n - lambda_n(0) decays like K/ln n and is about 0.22 at n = 100; a gap below 1e-2 needs n near e^200";
    case 8:
      return "the antipodal Gram matrix [[K, Z(1/2)], [Z(1/2), K]] has eigenvalues K -+ Z(1/2) = 2 K_odd, 2 K_ev, "
             "twice the stated K_odd, K_ev; positivity, eigenvectors and Vandermonde hold";
    default:
      return "";
  }
}

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

Outcome c1_constants() {
  Outcome o;
  const cplx psi_i = digamma(cplx(0.0, 1.0));
  const double K_closed = 0.5 * (1.0 + kPi / std::tanh(kPi));
  o.require(std::abs(psi_i.imag() - 2.0766740474) <= 1e-6, "|Im psi(i) - 2.0766740474|",
            std::abs(psi_i.imag() - 2.0766740474), 1e-6);
  o.require(std::abs(K_closed - psi_i.imag()) <= 1e-6, "|(1+pi coth pi)/2 - Im psi(i)|",
            std::abs(K_closed - psi_i.imag()), 1e-6);
  o.require(std::abs(psi_i.real() - 0.0946503) <= 1e-6, "|Re psi(i) - 0.0946503|", std::abs(psi_i.real() - 0.0946503),
            1e-6);
  const double g0 = constants().gamma0;
  o.require(std::abs(g0 - (-1.34373)) <= 1e-4, "|gamma0 - (-1.34373)| with gamma0=" + std::to_string(g0),
            std::abs(g0 + 1.34373), 1e-4);
  return o;
}

Outcome c2_bracketing() {
  Outcome o;
  o.require(G(-1.0) > 0.4233, "G(-1)", G(-1.0), 0.4233);
  o.require(G(-2.0) < -0.0347, "G(-2)", G(-2.0), -0.0347);
  const double l0 = eigenvalue(ExtensionParameter::make(0.0), 0);
  o.flag(l0 > -2.0 && l0 < -1.0, "v=0 root in (-2,-1)");
  o.require(std::abs(G(l0)) < 1e-10, "|G(lambda_0)|", std::abs(G(l0)), 1e-10);
  return o;
}

Outcome c3_functional_identity(Rng& rng) {
  Outcome o;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double lam = random_noninteger(rng, -20.0, 20.0);
    worst = std::max(worst, std::abs(G(lam) - G(lam - 1.0) + 1.0 / lam));
  }
  o.require(worst < 1e-10, "max |G(l) - G(l-1) + 1/l|", worst, 1e-10);
  return o;
}

Outcome c4_spectrum_structure(Rng& rng) {
  Outcome o;
  bool intervals = true;
  for (int t = 0; t < 50; ++t) {
    const auto p = ExtensionParameter::make(uniform(rng, -kPi + 1e-6, kPi));
    for (int n = 0; n <= 30; ++n) {
      const double lam = eigenvalue(p, n);
      intervals = intervals && (p.is_H() ? lam == n : (n == 0 ? lam < 0.0 : (lam > n - 1.0 && lam < n)));
    }
  }
  o.flag(intervals, "50 random theta: lambda_0 < 0 and lambda_n in (n-1, n)");
  const auto p0 = ExtensionParameter::make(0.0);
  bool positive_decreasing = true;
  double prev = std::numeric_limits<double>::infinity(), gap = 0.0;
  for (int n = 1; n <= 100; ++n) {
    gap = n - eigenvalue(p0, n);
    positive_decreasing = positive_decreasing && gap > 0.0 && gap < prev;
    prev = gap;
  }
  o.flag(positive_decreasing, "gaps positive and decreasing to n = 100");
  o.require(gap < 1e-2, "gap at n = 100", gap, 1e-2);
  return o;
}

Outcome c5_asymptotics() {
  Outcome o;
  for (int n : {0, 1, 5}) {
    double C[2];
    int k = 0;
    for (double d : {1e-2, 1e-3}) {
      const auto p = ExtensionParameter::make(kPi - d);
      C[k++] = std::abs(eigenvalue(p, n) - asymptotic_lambda(p, n)) / (d * d * d);
    }
    const double drift = std::abs(C[1] / C[0] - 1.0);
    o.require(drift < 0.1, "n=" + std::to_string(n) + " |C(1e-3)/C(1e-2) - 1|, C=" + std::to_string(C[1]), drift, 0.1);
  }
  return o;
}

Outcome c6_contour() {
  Outcome o;
  double worst = 0.0;
  for (double th : {0.0, 1.0, -2.0}) {
    const auto p = ExtensionParameter::make(th);
    for (int n = 1; n <= 5; ++n) worst = std::max(worst, std::abs(contour_eigenvalue(p, n, 1024) - eigenvalue(p, n)));
  }
  o.require(worst < 1e-6, "max |contour - bracketed|", worst, 1e-6);
  return o;
}

Outcome c7_orthogonality() {
  Outcome o;
  const auto p = ExtensionParameter::make(0.0);
  std::vector<EigenvectorFamily> ys;
  for (int n = 0; n <= 10; ++n) ys.push_back(eigenvector(p, n, 100000));
  double off = 0.0, norm_err = 0.0;
  for (int a = 0; a <= 10; ++a) {
    const double target = ys[a].lambda * ys[a].lambda * G_prime(ys[a].lambda);
    norm_err = std::max(norm_err, std::abs(ys[a].norm_sq_with_tail() - target) / target);
    for (int b = a + 1; b <= 10; ++b)
      off = std::max(off, std::abs(eigen_inner(ys[a], ys[b]).value) / std::sqrt(ys[a].norm_sq() * ys[b].norm_sq()));
  }
  o.require(off < 1e-3, "max off-diagonal/diagonal", off, 1e-3);
  o.require(norm_err < 1e-6, "max relative |norm^2 (tail-corrected) - lambda^2 psi'(-lambda)|", norm_err, 1e-6);
  return o;
}

Outcome c8_kernel(Rng& rng) {
  Outcome o;
  double min_eig = std::numeric_limits<double>::infinity(), vdm = 0.0;
  for (int t = 0; t < 50; ++t) {
    const BoundarySet F = random_set(rng, 1 + static_cast<std::size_t>(t % 8));
    min_eig = std::min(min_eig, gram(F).eigenvalues[0]);
    const auto [lu, prod] = vandermonde_det(F);
    vdm = std::max(vdm, std::abs(lu - prod) / prod);
  }
  o.require(min_eig > 0.0, "min Gram eigenvalue over 50 sets", min_eig, 0.0);
  const GramKernel g = gram(BoundarySet::make({0.0, 0.5}));
  const auto [kev, kodd] = K_even_odd();
  const double eig_err = std::max(std::abs(g.eigenvalues[0] - kodd), std::abs(g.eigenvalues[1] - kev));
  o.require(eig_err < 1e-10, "F={+-1} |eigenvalues - (K_odd, K_ev)|", eig_err, 1e-10);
  const double r = std::sqrt(0.5);
  const double vec_err = std::max({std::abs(std::abs(g.eigenvectors(0, 0)) - r), std::abs(std::abs(g.eigenvectors(1, 0)) - r),
                                   std::abs(g.eigenvectors(0, 0) + g.eigenvectors(1, 0)),
                                   std::abs(g.eigenvectors(0, 1) - g.eigenvectors(1, 1))});
  o.require(vec_err < 1e-10, "F={+-1} eigenvectors vs (1,-+1)/sqrt2", vec_err, 1e-10);
  o.require(vdm < 1e-8, "Vandermonde relative", vdm, 1e-8);
  return o;
}

Outcome c9_group(Rng& rng) {
  Outcome o;
  const GramKernel g = gram(random_set(rng, 4));
  double defect = 0.0, closure = 0.0;
  for (int t = 0; t < 20; ++t) {
    const IsometryMatrix a = sample_GF(g, rng()), b = sample_GF(g, rng());
    defect = std::max({defect, a.defect, b.defect});
    closure = std::max({closure, is_in_GF(a.M * b.M, g).defect, is_in_GF(a.M.inverse(), g).defect});
  }
  o.require(defect < 1e-10, "max sampled defect", defect, 1e-10);
  o.require(closure <= kGroupTol, "max defect of products and inverses", closure, kGroupTol);
  double m1 = 0.0;
  const GramKernel g1 = gram(BoundarySet::make({0.0}));
  for (double th : {0.0, 1.0, -2.0, 2.5, -3.0}) {
    CMatrix M(1, 1);
    M(0, 0) = std::polar(1.0, th);
    const auto ref = ExtensionParameter::make(th);
    for (const auto& e : extension_spectrum(g1, M, 10).entries)
      m1 = std::max(m1, std::abs(e.lambda - eigenvalue(ref, e.cell)) / std::max(1.0, std::abs(e.lambda)));
  }
  o.require(m1 < 1e-8, "m=1 extension vs single-point spectrum", m1, 1e-8);
  return o;
}

Outcome c10_fm_derivative(Rng& rng) {
  Outcome o;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const GramKernel g = gram(random_set(rng, 1 + static_cast<std::size_t>(t % 4)));
    const IsometryMatrix M = sample_GF(g, rng());
    CVector psi(g.F.m());
    for (Eigen::Index a = 0; a < psi.size(); ++a) psi[a] = gaussian(rng);
    const double lam = random_noninteger(rng, -3.0, 6.0);
    const double h = 1e-5;
    const cplx fd = (F_M(lam + h, g.F, M.M, psi) - F_M(lam - h, g.F, M.M, psi)) / (2.0 * h);
    const cplx cf = F_M_prime(lam, g.F, M.M, psi);
    worst = std::max(worst, std::abs(fd - cf) / std::abs(cf));
  }
  o.require(worst < 1e-6, "max relative |central difference - closed form|", worst, 1e-6);
  return o;
}

Outcome c11_boundary(Rng& rng) {
  Outcome o;
  const BoundarySet F = random_set(rng, 3);
  const GramKernel g = gram(F);
  double paths = 0.0, vanish_min = 0.0, vanish_graph = 0.0;
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
    DomainElement d;
    d.g = f.g;
    d.a.assign(F.m(), 0.0);
    d.b.assign(F.m(), 0.0);
    vanish_min = std::max(vanish_min, std::abs(residue_boundary_form(d, F)));
    const IsometryMatrix M = sample_GF(g, rng());
    CVector p(F.m());
    for (Eigen::Index a = 0; a < p.size(); ++a) p[a] = gaussian(rng);
    vanish_graph = std::max(vanish_graph, std::abs(residue_boundary_form(from_von_neumann(f.g, p, M.M * p), F)));
  }
  o.require(paths < 1e-6, "max |path (i) - path (ii)|", paths, 1e-6);
  o.require(vanish_min < 1e-4, "max |B| on D(L_F)", vanish_min, 1e-4);
  o.require(vanish_graph < 1e-4, "max |B| on isometry graphs", vanish_graph, 1e-4);
  return o;
}

Outcome c12_hurwitz() {
  Outcome o;
  SeriesControl ctl;
  ctl.max_terms = 4000;
  double re_err = 0.0;
  for (int q = 0; q < 1000; ++q) {
    const double x = q / 1000.0;
    re_err = std::max(re_err, std::abs(re_Z_closed(x) - hurwitz_Z_series(x, ctl).real()));
  }
  o.require(re_err < 1e-10, "max |Re Z closed - series| on 1000 points", re_err, 1e-10);
  double half = 0.0;
  for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5}) half = std::max(half, std::abs(hurwitz_Z(x).imag()));
  o.require(half < 1e-8, "max |Im Z| at half-integers", half, 1e-8);
  double li_err = 0.0;
  for (double x : {0.1, 0.25, 0.37, 0.71, 0.9})
    li_err = std::max(li_err, std::abs(im_Z_via_periodization(x, 20) - hurwitz_Z(x).imag()));
  o.require(li_err < 1e-4, "max |li periodization(n_wrap=20) - Im Z|", li_err, 1e-4);
  return o;
}

Outcome c13_forms(Rng& rng) {
  Outcome o;
  double worst_dev = 0.0;
  for (const auto& p : glb_demo({1000, 3000, 10000, 100000})) worst_dev = std::max(worst_dev, std::abs(p.ratio_times_s - 1.0));
  o.require(worst_dev < 0.1, "max |ratio * s_n - 1| for n >= 1e3", worst_dev, 0.1);
  double min_ratio = std::numeric_limits<double>::infinity();
  bool poincare = true;
  for (int t = 0; t < 1000; ++t) {
    const int N = 4 + static_cast<int>(rng() % 60);
    std::vector<double> b(static_cast<std::size_t>(N) + 1, 0.0);
    for (int m = 1; m <= N; ++m) b[m] = uniform(rng, -1.0, 1.0) / m;
    const SineConstraintSums s = sine_constraint_sums(b);
    const int me = N % 2 == 0 ? N : N - 1, mo = N % 2 == 1 ? N : N - 1;
    b[me] -= s.even / (0.5 * me);
    b[mo] -= s.odd / mo;
    min_ratio = std::min(min_ratio, dirichlet_neumann_glb(b));
    const PoincareSides ps = poincare_check(b);
    poincare = poincare && ps.lhs >= ps.rhs;
  }
  o.require(min_ratio >= 1.0, "min Rayleigh over 1000 admissible vectors", min_ratio, 1.0);
  const double sec = dirichlet_neumann_section_min(200).min_ratio;
  o.require(sec < 1.05, "finite-section minimum at N = 200", sec, 1.05);
  o.flag(poincare, "Poincare on all trials");
  return o;
}

Outcome c14_projection() {
  Outcome o;
  double worst = 0.0;
  for (int q = 0; q < 500; ++q) {
    const double phi = -4.0 + 8.0 * (q + 0.37) / 500.0;
    worst = std::max(worst, std::abs(projection_norm(phi) - projection_norm_direct(phi)));
  }
  o.require(worst < 1e-8, "max |closed - direct| on 500 points", worst, 1e-8);
  double at_n = 0.0, at_neg = 0.0;
  for (int k = 0; k <= 10; ++k) at_n = std::max(at_n, std::abs(projection_norm(k) - 1.0));
  for (int k = 1; k <= 10; ++k)
    for (double e : {1e-9, -1e-9, 0.0}) at_neg = std::max(at_neg, std::abs(projection_norm(-k + e)));
  o.require(at_n < 1e-6, "max |P - 1| on N_0", at_n, 1e-6);
  o.require(at_neg < 1e-6, "max |P| at negative integers", at_neg, 1e-6);
  return o;
}

Outcome c15_friedrichs() {
  Outcome o;
  const Report r = friedrichs_krein_check(10, 1'000'000);
  for (const auto& c : r.checks) {
    if (c.name.rfind("b: R^2", 0) == 0) {
      o.require(c.value > 0.99, "log N fit R^2", c.value, 0.99);
    } else {
      o.flag(c.pass, c.name);
    }
  }
  return o;
}

Outcome c16_fock() {
  Outcome o;
  std::vector<std::vector<double>> pascal(21);
  for (int n = 0; n <= 20; ++n) {
    pascal[n].assign(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
  }
  bool exact = true;
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; a + b <= 20; ++b) {
      exact = exact && fock_norm({a, b}) == 1.0 / pascal[a + b][b];
      for (int c = 0; a + b + c <= 20; ++c)
        exact = exact && fock_norm({a, b, c}) == 1.0 / (pascal[a + b + c][c] * pascal[a + b][b]);
    }
  o.flag(exact, "|z^alpha|^2 = 1/binom exactly for |alpha| <= 20");
  const WitnessSums w2 = essential_sa_witness(2, 30), w3 = essential_sa_witness(3, 20), w4 = essential_sa_witness(4, 20);
  o.flag(w2.layer_identity && w3.layer_identity && w4.layer_identity, "layer sums = d^n exactly (d = 2, 3, 4)");
  o.require(w2.partial_sums.back() > 1e3, "d=2 partial sum at n_max=30", w2.partial_sums.back(), 1e3);
  // d = 1: 1/(1+n^2)^2 <= 1/n^4 for n >= 1, so the sum is below 1 + pi^4/90
  const double bound = 1.1 * (1.0 + std::pow(kPi, 4) / 90.0);
  const WitnessSums w1 = essential_sa_witness(1, 4000);
  const double tail_step = w1.partial_sums[4000] - w1.partial_sums[2000];
  o.require(w1.partial_sums.back() < bound, "d=1 partial sum at n_max=4000", w1.partial_sums.back(), bound);
  o.require(tail_step < 1e-9, "d=1 increment from n=2000 to 4000", tail_step, 1e-9);
  return o;
}

}  // namespace

int main() {
  Rng rng(20240601);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"constants", c1_constants},
      {"root bracketing", c2_bracketing},
      {"functional identity", [&] { return c3_functional_identity(rng); }},
      {"spectrum structure", [&] { return c4_spectrum_structure(rng); }},
      {"asymptotic expansions", c5_asymptotics},
      {"contour identity", c6_contour},
      {"eigenvector orthogonality", c7_orthogonality},
      {"kernel suite", [&] { return c8_kernel(rng); }},
      {"G(F) suite", [&] { return c9_group(rng); }},
      {"F_M derivative", [&] { return c10_fm_derivative(rng); }},
      {"boundary calculus", [&] { return c11_boundary(rng); }},
      {"Hurwitz zeta", c12_hurwitz},
      {"forms", [&] { return c13_forms(rng); }},
      {"projection norm", c14_projection},
      {"Friedrichs/Krein", c15_friedrichs},
      {"Fock", c16_fock},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60.0) o.flag(false, "runtime under 60 s");
    if (!o.pass) failed.insert(id);
    std::printf("%s criterion %2d %-26s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first.c_str(), secs,
                o.detail.c_str());
    if (!o.pass && kExpectedFailures.count(id)) std::printf("     known: %s\n", expected_reason(id));
  }

  std::printf("\n%zu of %zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  bool as_expected = failed == kExpectedFailures;
  for (int id : failed)
    if (!kExpectedFailures.count(id)) std::printf("unexpected failure: criterion %d\n", id);
  for (int id : kExpectedFailures)
    if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed; update kExpectedFailures\n", id);
  if (as_expected) std::printf("failing set matches the known-unattainable set {1, 4, 8}\n");
  return as_expected ? 0 : 1;
}
