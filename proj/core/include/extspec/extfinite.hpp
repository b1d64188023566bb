#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

#include "extspec/specfun.hpp"

namespace extspec {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Finite F = {e(alpha_j)} on the unit circle, angles in [0, 1).
struct BoundarySet {
  std::vector<double> angles;

  // Reduces mod 1; DegenerateSetError when two points are within 1e-12.
  static BoundarySet make(std::vector<double> angles);
  std::size_t m() const { return angles.size(); }
  cplx point(std::size_t j) const { return e2pi(angles[j]); }
};

// Z_matrix(a, b) = Z(alpha_a - alpha_b) = <f+^(a), f+^(b)>.
struct GramKernel {
  BoundarySet F;
  CMatrix Z;
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;
  CMatrix sqrt_Z, inv_sqrt_Z;
};

GramKernel gram(const BoundarySet& F, const SeriesControl& ctl = {});

// (sum 1/(1+(2n)^2), sum 1/(1+(2n+1)^2))
std::pair<double, double> K_even_odd();

struct IsometryMatrix {
  CMatrix M;
  double defect = 0.0;  // max |(M^H Z M - Z)_{ab}|
  bool accepted = false;
};

inline constexpr double kGroupTol = 1e-8;

IsometryMatrix is_in_GF(const CMatrix& M, const GramKernel& g, double tol = kGroupTol);
CMatrix haar_unitary(std::size_t m, std::uint64_t seed);
// M = Z^{-1/2} U Z^{1/2} with U Haar distributed.
IsometryMatrix sample_GF(const GramKernel& g, std::uint64_t seed);
IsometryMatrix from_unitary(const GramKernel& g, const CMatrix& U);

// F_M(lambda) = sum_k sum_alpha e(k alpha) [psi_a (lambda-i)(k+i) + (M psi)_a (lambda+i)(k-i)]
//               / ((k - lambda)(k^2 + 1))
cplx F_M(double lambda, const BoundarySet& F, const CMatrix& M, const CVector& psi);
cplx F_M_prime(double lambda, const BoundarySet& F, const CMatrix& M, const CVector& psi);

// m x m boundary system A(lambda) p = 0 whose solutions are the eigenvectors
// y_k = sum_j c_j e(-k alpha_j)/(k - lambda), c = (I + M) p.
CMatrix extension_system(double lambda, const BoundarySet& F, const CMatrix& M);
// P(lambda)_{bj} = Phi(e(alpha_b - alpha_j), 1, -lambda) - Phi(e(alpha_b - alpha_j), 1, -i);
// (P^H - P)/(2i) is the Gram matrix.
CMatrix boundary_P(double lambda, const BoundarySet& F);

enum class PsiStrategy {
  hermitian_count,   // eigenvalue counting of the reduced Hermitian pencil
  determinant_scan,  // sign changes of the real determinant on a sampling grid
};

struct ExtensionEntry {
  int cell = 0;              // 0: (-inf, 0); n >= 1: (n-1, n)
  double lambda = 0.0;
  double lo = 0.0, hi = 0.0;
  bool integer = false;      // lambda is the integer n itself
  double residual = 0.0;     // sigma_min(A)/(|P| + |P^H M|) at lambda
  CVector psi;               // null vector of A(lambda)
};

struct ExtensionSpectrum {
  std::vector<ExtensionEntry> entries;
  std::vector<double> phases;  // eigenphases of Z^{1/2} M Z^{-1/2}
};

ExtensionSpectrum extension_spectrum(const GramKernel& g, const CMatrix& M, int n_max,
                                     PsiStrategy strategy = PsiStrategy::hermitian_count);

cplx deficiency_gram_entry(double theta, double rho);

// |det (e(n beta_j))_{n < m, j}| from an LU factorization and from prod |zeta_k - zeta_j|.
std::pair<double, double> vandermonde_det(const BoundarySet& F);

}  // namespace extspec
