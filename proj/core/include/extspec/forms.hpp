#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "extspec/report.hpp"
#include "extspec/specfun.hpp"

namespace extspec {

// Q_L(x)/|x|^2 = sum k |x_k|^2 / sum |x_k|^2; DomainError unless |sum x_k| <= tol |x|_1.
double rayleigh_Q(const std::vector<cplx>& x, double tol = 1e-10);

// x_0 = -s_n, x_j = 1/j for 1 <= j <= n
std::vector<cplx> glb_witness(int n);

struct GlbPoint {
  int n = 0;
  double s_n = 0.0;         // harmonic number
  double sum_inv_sq = 0.0;  // sum_{j<=n} 1/j^2
  double ratio = 0.0;       // Rayleigh quotient of the witness
  double ratio_times_s = 0.0;
};
std::vector<GlbPoint> glb_demo(const std::vector<int>& n_list);

// Sine coefficients of functions on (0, pi) are real and indexed from 1; b[0] is ignored.
struct SineConstraintSums {
  double even = 0.0;  // sum_n n b_{2n}
  double odd = 0.0;   // sum_n (2n+1) b_{2n+1}
};
SineConstraintSums sine_constraint_sums(const std::vector<double>& b);
void check_sine_constraints(const std::vector<double>& b, double tol = 1e-10);

// sum n^2 b_n^2 / sum b_n^2 for admissible b
double dirichlet_neumann_glb(const std::vector<double>& b);

struct SectionMinimum {
  int N = 0;
  double min_ratio = 0.0;
  std::vector<double> minimizer;  // normalized, indices 0..N
};
// Minimum of the ratio over admissible b supported on 1..N.
SectionMinimum dirichlet_neumann_section_min(int N);

// b_m = (2/pi) \int_0^pi (sum a_n cos nx) sin mx dx for m = 1..N_out, from
// \int_0^pi cos(nx) sin(mx) dx = m (1 - (-1)^{m+n})/(m^2 - n^2).
std::vector<double> cos_sin_constraint_transform(const std::vector<double>& a, std::size_t N_out);
// The sine constraint sums of the transform of a, extrapolated from truncations N, 2N, 4N.
SineConstraintSums sine_constraint_limit(const std::vector<double>& a, std::size_t N);

struct PoincareSides {
  double lhs = 0.0;  // \int_0^pi |f'|^2
  double rhs = 0.0;  // \int_0^pi |f|^2
};
PoincareSides poincare_check(const std::vector<double>& b);

// |P_{L+} e_phi|^2 = 1 - sin^2(pi phi)/pi^2 zeta1(phi)
double projection_norm(double phi);
// sum_{n>=0} sinc^2(phi - n) over n < N_terms plus a midpoint tail
double projection_norm_direct(double phi, std::size_t N_terms = 100000);

Report friedrichs_krein_check(int n_max, std::size_t N_trunc);
Report haar_generator_check(std::size_t N);

using MultiIndex = std::vector<int>;

double log_multinomial(const MultiIndex& alpha);
// |z^alpha|^2 = 1/binom(|alpha|; alpha) in the symmetric Fock space
double fock_norm(const MultiIndex& alpha);
double fock_norm_f(const std::map<MultiIndex, cplx>& coeffs);

struct WitnessSums {
  int d = 0;
  std::vector<double> partial_sums;  // index n: sum over |alpha| <= n
  bool layer_identity = false;       // sum_{|alpha|=n} binom = d^n exactly, n <= min(n_max, 20)
};
// Partial sums of binom(|alpha|; alpha)/(1 + sum alpha_j^2)^2.
WitnessSums essential_sa_witness(int d, int n_max);

}  // namespace extspec
