#include "extspec/forms.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numeric>

#include "extspec/errors.hpp"

namespace extspec {

namespace {

__extension__ typedef unsigned __int128 u128;

// sin(pi x) with the argument reduced to [-1/2, 1/2]
double sinpi(double x) {
  const double r = x - std::round(x);
  const double s = std::sin(kPi * r);
  return (static_cast<long long>(std::round(x)) % 2 == 0) ? s : -s;
}

struct LinearFit {
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  return f;
}

void enumerate_layer(int d, int n, const std::function<void(const MultiIndex&)>& visit) {
  MultiIndex alpha(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      alpha[pos] = left;
      visit(alpha);
      return;
    }
    for (int a = left; a >= 0; --a) {
      alpha[pos] = a;
      rec(pos + 1, left - a);
    }
  };
  rec(0, n);
}

u128 multinomial_exact(const MultiIndex& alpha) {
  u128 m = 1;
  unsigned n = 0;
  for (int a : alpha)
    for (int i = 1; i <= a; ++i) {
      ++n;
      m = m * n / static_cast<unsigned>(i);
    }
  return m;
}

}  // namespace

double rayleigh_Q(const std::vector<cplx>& x, double tol) {
  cplx sum(0.0);
  double l1 = 0.0, num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sum += x[k];
    l1 += std::abs(x[k]);
    num += static_cast<double>(k) * std::norm(x[k]);
    den += std::norm(x[k]);
  }
  if (den == 0.0) throw DomainError("rayleigh_Q: zero vector");
  if (std::abs(sum) > tol * l1) throw DomainError("rayleigh_Q: sum x_k != 0");
  return num / den;
}

std::vector<cplx> glb_witness(int n) {
  if (n < 1) throw DomainError("glb_witness: n must be >= 1");
  std::vector<cplx> x(static_cast<std::size_t>(n) + 1);
  double s = 0.0;
  for (int j = n; j >= 1; --j) {
    x[j] = 1.0 / j;
    s += 1.0 / j;
  }
  x[0] = -s;
  return x;
}

std::vector<GlbPoint> glb_demo(const std::vector<int>& n_list) {
  std::vector<GlbPoint> out;
  for (int n : n_list) {
    GlbPoint p;
    p.n = n;
    for (int j = n; j >= 1; --j) {
      p.s_n += 1.0 / j;
      p.sum_inv_sq += 1.0 / (static_cast<double>(j) * j);
    }
    p.ratio = rayleigh_Q(glb_witness(n));
    p.ratio_times_s = p.ratio * p.s_n;
    out.push_back(p);
  }
  return out;
}

SineConstraintSums sine_constraint_sums(const std::vector<double>& b) {
  SineConstraintSums s;
  for (std::size_t m = b.size(); m-- > 1;) {
    if (m % 2 == 0)
      s.even += 0.5 * static_cast<double>(m) * b[m];
    else
      s.odd += static_cast<double>(m) * b[m];
  }
  return s;
}

void check_sine_constraints(const std::vector<double>& b, double tol) {
  double scale = 0.0;
  for (std::size_t m = 1; m < b.size(); ++m) scale += static_cast<double>(m) * std::abs(b[m]);
  const SineConstraintSums s = sine_constraint_sums(b);
  if (std::abs(s.even) > tol * scale || std::abs(s.odd) > tol * scale)
    throw DomainError("sine coefficients violate f'(0) = f'(pi) = 0");
}

double dirichlet_neumann_glb(const std::vector<double>& b) {
  check_sine_constraints(b);
  double num = 0.0, den = 0.0;
  for (std::size_t m = 1; m < b.size(); ++m) {
    const double mm = static_cast<double>(m);
    num += mm * mm * b[m] * b[m];
    den += b[m] * b[m];
  }
  if (den == 0.0) throw DomainError("dirichlet_neumann_glb: zero vector");
  return num / den;
}

SectionMinimum dirichlet_neumann_section_min(int N) {
  if (N < 4) throw DomainError("dirichlet_neumann_section_min: N must be >= 4");
  // the constraints and the quadratic form split over even and odd indices
  SectionMinimum best;
  best.N = N;
  best.min_ratio = std::numeric_limits<double>::infinity();
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> idx;
    for (int m = 1; m <= N; ++m)
      if (m % 2 == parity) idx.push_back(m);
    const Eigen::Index n = static_cast<Eigen::Index>(idx.size());
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) w[i] = idx[i];
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
    const Eigen::MatrixXd Q = qr.householderQ();
    const Eigen::MatrixXd B = Q.rightCols(n - 1);  // orthonormal basis of w^perp
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) D(i, i) = static_cast<double>(idx[i]) * idx[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B.transpose() * D * B);
    if (es.eigenvalues()[0] < best.min_ratio) {
      best.min_ratio = es.eigenvalues()[0];
      const Eigen::VectorXd v = B * es.eigenvectors().col(0);
      best.minimizer.assign(static_cast<std::size_t>(N) + 1, 0.0);
      for (Eigen::Index i = 0; i < n; ++i) best.minimizer[idx[i]] = v[i];
    }
  }
  return best;
}

std::vector<double> cos_sin_constraint_transform(const std::vector<double>& a, std::size_t N_out) {
  std::vector<double> b(N_out + 1, 0.0);
  for (std::size_t m = 1; m <= N_out; ++m) {
    const double mm = static_cast<double>(m);
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
      if ((m + n) % 2 == 0 || a[n] == 0.0) continue;
      const double nn = static_cast<double>(n);
      s += a[n] * 2.0 * mm / ((mm - nn) * (mm + nn));
    }
    b[m] = 2.0 / kPi * s;
  }
  return b;
}

SineConstraintSums sine_constraint_limit(const std::vector<double>& a, std::size_t N) {
  // the summands are rational in m with m b_m = O(1/m^2), so the tails expand in
  // integer powers of 1/N; Richardson over N, 2N, ..., 16N
  constexpr int levels = 5;
  N = std::max<std::size_t>(4, (N + 3) / 4 * 4);
  const std::vector<double> b = cos_sin_constraint_transform(a, N << (levels - 1));
  std::vector<double> te(levels), to(levels);
  SineConstraintSums run;
  std::size_t m = 1;
  for (int l = 0; l < levels; ++l) {
    for (; m <= (N << l); ++m) {
      if (m % 2 == 0)
        run.even += 0.5 * static_cast<double>(m) * b[m];
      else
        run.odd += static_cast<double>(m) * b[m];
    }
    te[l] = run.even;
    to[l] = run.odd;
  }
  for (int j = 1; j < levels; ++j) {
    const double p = std::ldexp(1.0, j);
    for (int l = levels - 1; l >= j; --l) {
      te[l] = te[l] + (te[l] - te[l - 1]) / (p - 1.0);
      to[l] = to[l] + (to[l] - to[l - 1]) / (p - 1.0);
    }
  }
  return {te[levels - 1], to[levels - 1]};
}

PoincareSides poincare_check(const std::vector<double>& b) {
  PoincareSides p;
  bool zero = std::all_of(b.begin() + std::min<std::size_t>(1, b.size()), b.end(),
                          [](double v) { return v == 0.0; });
  if (zero) return p;
  check_sine_constraints(b);
  for (std::size_t m = 1; m < b.size(); ++m) {
    const double mm = static_cast<double>(m);
    p.lhs += 0.5 * kPi * mm * mm * b[m] * b[m];
    p.rhs += 0.5 * kPi * b[m] * b[m];
  }
  if (p.lhs < p.rhs) throw DomainError("poincare_check: inequality violated");
  return p;
}

double projection_norm(double phi) {
  const double s = sinpi(phi);
  const double nearest = std::round(phi);
  if (nearest <= -1.0 && std::abs(phi - nearest) < 0.5) {
    // zeta1(phi) contains 1/(phi + m)^2 with m = -nearest; that term is sinc^2(phi + m)
    const int m = static_cast<int>(-nearest);
    const double eps = phi + m;
    const double sinc = eps == 0.0 ? 1.0 : s / (kPi * eps);
    double rest = trigamma(phi + m + 1.0);
    for (int n = 1; n < m; ++n) rest += 1.0 / ((phi + n) * (phi + n));
    return 1.0 - sinc * sinc - s * s / (kPi * kPi) * rest;
  }
  return 1.0 - s * s / (kPi * kPi) * zeta1(phi);
}

double projection_norm_direct(double phi, std::size_t N_terms) {
  const double s = sinpi(phi);
  double sum = 0.0;
  for (std::size_t n = N_terms; n-- > 0;) {
    const double d = phi - static_cast<double>(n);
    if (d == 0.0) {
      sum += 1.0;
      continue;
    }
    const double sinc = s / (kPi * d);
    sum += sinc * sinc;
  }
  // sum_{n >= N} 1/(n - phi)^2 ~ 1/(N - 1/2 - phi)
  sum += s * s / (kPi * kPi) / (static_cast<double>(N_terms) - 0.5 - phi);
  return sum;
}

Report friedrichs_krein_check(int n_max, std::size_t N_trunc) {
  if (n_max < 1) throw DomainError("friedrichs_krein_check: n_max must be >= 1");
  if (N_trunc < 1000) throw DomainError("friedrichs_krein_check: N_trunc must be >= 1000");
  Report r;
  r.name = "friedrichs_krein";
  const double K = constants().K;
  const cplx i(0.0, 1.0);

  // (a) e_n - e_0 lies in D(L) and L(e_n - e_0) = n e_n
  double worst_a = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<double> x(static_cast<std::size_t>(n) + 1, 0.0);
    x[0] = -1.0;
    x[n] = 1.0;
    double sum = 0.0, res = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      sum += x[k];
      const double target = (static_cast<int>(k) == n) ? n : 0.0;
      res = std::max(res, std::abs(static_cast<double>(k) * x[k] - target));
    }
    worst_a = std::max({worst_a, std::abs(sum), res});
  }
  r.add("a: L(e_n - e_0) = n e_n", worst_a == 0.0, worst_a, 0.0);

  // (b) sum_{k<=N} k^3/(1+k^2)^2 grows like log N
  std::vector<double> logs, sums;
  {
    double s = 0.0;
    std::size_t next = 100;
    for (std::size_t k = 1; k <= N_trunc; ++k) {
      const double kk = static_cast<double>(k);
      s += kk * kk * kk / ((1.0 + kk * kk) * (1.0 + kk * kk));
      if (k == next || k == N_trunc) {
        logs.push_back(std::log(kk));
        sums.push_back(s);
        next = static_cast<std::size_t>(std::llround(static_cast<double>(next) * std::sqrt(10.0)));
        if (k == N_trunc) break;
      }
    }
  }
  const LinearFit fit = fit_line(logs, sums);
  r.add("b: slope of partial sums against log N", std::abs(fit.slope - 1.0) < 1e-3, fit.slope, 1e-3);
  r.add("b: R^2 of the log fit", fit.r2 > 0.9999, fit.r2, 0.9999);
  const double ratio = sums.back() / logs.back();
  r.add("b: partial sum / log N", std::abs(ratio - 1.0) < 0.1, ratio, 0.1);

  // (d) e_0 = l + c+ x+ + c- x-, l_k = delta_k0 - 1/(K(1+k^2)), c+- = -+ i/(2K);
  // L* e_0 = k l_k + i c+ x+ - i c- x- must vanish
  const cplx cp = -i / (2.0 * K), cm = i / (2.0 * K);
  double l_sum = 0.0, worst_d = 0.0, decomp = 0.0;
  std::vector<cplx> Lstar_e0(N_trunc + 1);
  for (std::size_t k = N_trunc + 1; k-- > 0;) {
    const double kk = static_cast<double>(k);
    const double l = (k == 0 ? 1.0 : 0.0) - 1.0 / (K * (1.0 + kk * kk));
    l_sum += l;
    const cplx xp = 1.0 / (kk - i), xm = 1.0 / (kk + i);
    decomp = std::max(decomp, std::abs(l + cp * xp + cm * xm - (k == 0 ? 1.0 : 0.0)));
    Lstar_e0[k] = kk * l + i * cp * xp - i * cm * xm;
    worst_d = std::max(worst_d, std::abs(Lstar_e0[k]));
  }
  r.add("d: decomposition of e_0", decomp < 1e-14, decomp, 1e-14);
  const double tail = 1.0 / (K * static_cast<double>(N_trunc));
  r.add("d: sum of l_k on the truncation", std::abs(l_sum) <= 2.0 * tail, std::abs(l_sum), 2.0 * tail);
  r.add("d: L* e_0 = 0", worst_d < 1e-14, worst_d, 1e-14);

  // (c) graph inner products <e_0, x+->_* = <e_0, x+-> + <L* e_0, +-i x+->
  for (double sign : {1.0, -1.0}) {
    cplx ip(0.0);
    for (std::size_t k = N_trunc + 1; k-- > 0;) {
      const double kk = static_cast<double>(k);
      const cplx x = 1.0 / (kk - sign * i);
      if (k == 0) ip += x;
      ip += std::conj(Lstar_e0[k]) * (sign * i * x);
    }
    const double err = std::abs(ip - sign * i);
    r.add(sign > 0 ? "c: <e_0, x+>_* = i" : "c: <e_0, x->_* = -i", err < 1e-4, err, 1e-4);
  }
  return r;
}

Report haar_generator_check(std::size_t N) {
  if (N < 16) throw DomainError("haar_generator_check: N must be >= 16");
  Report r;
  r.name = "haar_generator";
  const cplx i(0.0, 1.0);
  double coef_err = 0.0, l2 = 0.0, h1 = 0.0;
  std::vector<double> xs, ys;
  for (std::size_t j = 1; j <= N; j += 2) {
    const double jj = static_cast<double>(j);
    // triangle wave cosine coefficient at frequency 2 pi j, differentiated
    const double t = 2.0 / (kPi * kPi * jj * jj);
    const double sine = -2.0 * kPi * jj * t;
    const cplx c_from_tri = sine / (2.0 * i);
    const cplx c = 2.0 * i / (kPi * jj);
    coef_err = std::max(coef_err, std::abs(c - c_from_tri));
    l2 += std::norm(c);
    h1 += std::norm(jj * c);
    if (j + 2 > N || (j > 16 && ((j - 1) & (j - 2)) == 0)) {
      xs.push_back(jj);
      ys.push_back(h1);
    }
  }
  r.add("coefficients from the triangle wave", coef_err < 1e-15, coef_err, 1e-15);
  r.add("sum |c_n|^2 <= 1/2", l2 <= 0.5 + 1e-15, l2, 0.5);
  const double gap = 0.5 - l2;
  r.add("sum |c_n|^2 -> 1/2", gap <= 1.0 / static_cast<double>(N), gap, 1.0 / static_cast<double>(N));
  const LinearFit fit = fit_line(xs, ys);
  const double rate = 2.0 / (kPi * kPi);
  r.add("sum |n c_n|^2 grows linearly", std::abs(fit.slope / rate - 1.0) < 1e-2 && fit.r2 > 0.9999,
        fit.slope, rate);
  const double ratio = h1 / (rate * static_cast<double>(N));
  r.add("sum |n c_n|^2 / ((2/pi^2) N)", std::abs(ratio - 1.0) <= 2.0 / static_cast<double>(N), ratio,
        2.0 / static_cast<double>(N));
  return r;
}

double log_multinomial(const MultiIndex& alpha) {
  if (alpha.empty()) throw DomainError("multi-index must have d >= 1");
  double n = 0.0, s = 0.0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("multi-index entries must be nonnegative");
    n += a;
    s -= std::lgamma(a + 1.0);
  }
  return s + std::lgamma(n + 1.0);
}

double fock_norm(const MultiIndex& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("fock_norm: negative entry");
    total += a;
  }
  if (alpha.empty()) throw DomainError("fock_norm: d must be >= 1");
  if (total <= 60) {
    double m = 1.0, n = 0.0;
    for (int a : alpha)
      for (int i = 1; i <= a; ++i) {
        n += 1.0;
        m = m * n / i;
      }
    return 1.0 / m;
  }
  return std::exp(-log_multinomial(alpha));
}

double fock_norm_f(const std::map<MultiIndex, cplx>& coeffs) {
  double s = 0.0;
  for (const auto& [alpha, c] : coeffs) s += std::norm(c) * fock_norm(alpha);
  return s;
}

WitnessSums essential_sa_witness(int d, int n_max) {
  if (d < 1) throw DomainError("essential_sa_witness: d must be >= 1");
  if (n_max < 0) throw DomainError("essential_sa_witness: n_max must be >= 0");
  WitnessSums w;
  w.d = d;
  w.layer_identity = true;
  const double log_max = std::log(DBL_MAX);
  double total = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double layer = 0.0;
    u128 exact = 0;
    const bool check_exact = n <= 20;
    enumerate_layer(d, n, [&](const MultiIndex& alpha) {
      double sq = 1.0;
      for (int a : alpha) sq += static_cast<double>(a) * a;
      const double lt = log_multinomial(alpha) - 2.0 * std::log(sq);
      if (lt > log_max) throw OverflowError("essential_sa_witness: term overflows");
      layer += std::exp(lt);
      if (check_exact) exact += multinomial_exact(alpha);
    });
    if (check_exact) {
      u128 p = 1;
      for (int k = 0; k < n; ++k) p *= static_cast<unsigned>(d);
      w.layer_identity = w.layer_identity && (p == exact);
    }
    total += layer;
    if (!std::isfinite(total)) throw OverflowError("essential_sa_witness: partial sum overflows");
    w.partial_sums.push_back(total);
  }
  return w;
}

}  // namespace extspec
