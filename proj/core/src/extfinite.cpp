#include "extspec/extfinite.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "extspec/errors.hpp"
#include "extspec/spectral11.hpp"
#include "roots.hpp"

namespace extspec {

namespace {

constexpr double kPhaseTol = 1e-9;

void check_square(const CMatrix& M, std::size_t m, const char* name) {
  if (static_cast<std::size_t>(M.rows()) != m || static_cast<std::size_t>(M.cols()) != m)
    throw DimensionError(std::string(name) + ": matrix is not m x m");
}

double max_abs(const CMatrix& A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

int count_negative(const CMatrix& H) {
  if (H.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  int c = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) c += es.eigenvalues()(i) < 0.0;
  return c;
}

// Orthonormal basis of the complement of w in C^d.
CMatrix complement_basis(const CVector& w) {
  const Eigen::Index d = w.size();
  const CMatrix W = w;
  Eigen::HouseholderQR<CMatrix> qr(W);
  CMatrix Q = qr.householderQ() * CMatrix::Identity(d, d);
  return Q.rightCols(d - 1);
}

// The reduced Hermitian pencil H1(lambda) = T^H Gm(lambda) T - diag(tan(phi_j/2))
// over the eigenphases of U = Z^{1/2} M Z^{-1/2} away from pi.  Gm = (P + P^H)/2
// with P the boundary matrix; its off-diagonal entries are Phi(z,1,-lambda) - rho3(z).
class Pencil {
 public:
  Pencil(const GramKernel& g, const CMatrix& M) : F_(g.F), m_(g.F.m()), M_(M) {
    const CMatrix U = g.sqrt_Z * M * g.inv_sqrt_Z;
    Eigen::ComplexSchur<CMatrix> schur(U);
    const CMatrix& Tm = schur.matrixT();
    const CMatrix& Q = schur.matrixU();
    std::vector<Eigen::Index> j1;
    for (std::size_t j = 0; j < m_; ++j) {
      const double phi = std::arg(Tm(j, j));
      phases_.push_back(phi);
      if (std::abs(std::cos(0.5 * phi)) >= kPhaseTol) {
        j1.push_back(static_cast<Eigen::Index>(j));
        tans_.push_back(std::tan(0.5 * phi));
      }
    }
    m1_ = static_cast<Eigen::Index>(j1.size());
    T_.resize(m_, m1_);
    const CMatrix TQ = g.inv_sqrt_Z * Q;
    for (Eigen::Index c = 0; c < m1_; ++c) T_.col(c) = TQ.col(j1[c]);
    T_scale_ = T_.size() ? T_.norm() : 0.0;

    z_.resize(m_ * m_);
    rho3_.resize(m_ * m_);
    for (std::size_t b = 0; b < m_; ++b)
      for (std::size_t j = 0; j < m_; ++j) {
        if (b == j) continue;
        const cplx z = e2pi(F_.angles[b] - F_.angles[j]);
        z_[b * m_ + j] = z;
        const cplx i(0.0, 1.0);
        rho3_[b * m_ + j] = 0.5 * (lerch_phi_disk(z, 1, -i) + lerch_phi_disk(z, 1, i));
      }
  }

  Eigen::Index m1() const { return m1_; }
  const std::vector<double>& phases() const { return phases_; }

  // Gm with the pole at kstar removed (kstar < 0: nothing removed).
  CMatrix gm_regular(double lambda, int kstar) const {
    CMatrix Gm(m_, m_);
    const double re_psi_i = constants().re_psi_i;
    double gdiag;
    if (kstar >= 0) {
      double s = 0.0;
      for (int j = 0; j < kstar; ++j) s += 1.0 / (j - lambda);
      gdiag = re_psi_i - digamma(-lambda + kstar + 1.0) + s;
    } else {
      gdiag = re_psi_i - digamma(-lambda);
    }
    for (std::size_t b = 0; b < m_; ++b) {
      Gm(b, b) = gdiag;
      for (std::size_t j = b + 1; j < m_; ++j) {
        const cplx z = z_[b * m_ + j];
        cplx L;
        if (kstar >= 0) {
          cplx head(0.0), zk(1.0);
          for (int k = 0; k < kstar; ++k) {
            head += zk / (k - lambda);
            zk *= z;
          }
          zk *= z;  // z^{kstar+1}
          L = head + zk * lerch_phi_disk(z, 1, cplx(kstar + 1.0 - lambda));
        } else {
          L = lerch_phi_disk(z, 1, cplx(-lambda));
        }
        Gm(b, j) = L - rho3_[b * m_ + j];
        Gm(j, b) = std::conj(Gm(b, j));
      }
    }
    return Gm;
  }

  CVector pole_vector(int k) const {
    CVector v(m_);
    for (std::size_t b = 0; b < m_; ++b) v(b) = e2pi(k * F_.angles[b]);
    return v;
  }

  CMatrix reduce(const CMatrix& Gm) const {
    CMatrix H = T_.adjoint() * Gm * T_;
    for (Eigen::Index c = 0; c < m1_; ++c) H(c, c) -= tans_[c];
    return 0.5 * (H + H.adjoint());
  }

  static int nearest_pole(double lambda) {
    const double k = std::round(lambda);
    return k >= 0.0 ? static_cast<int>(k) : -1;
  }

  CMatrix H1(double lambda) const {
    const int k = nearest_pole(lambda);
    CMatrix H = reduce(gm_regular(lambda, k));
    if (k >= 0) {
      const CVector w = T_.adjoint() * pole_vector(k);
      H += (w * w.adjoint()) / (k - lambda);
    }
    return H;
  }

  Eigen::VectorXd mu(double lambda) const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H1(lambda), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }

  // Number of negative eigenvalues of H1 as lambda -> n from the given side.
  int neg_limit(int n, int side) const {
    if (m1_ == 0) return 0;
    const CMatrix R = reduce(gm_regular(n, n));
    const CVector w = T_.adjoint() * pole_vector(n);
    if (w.norm() <= 1e-10 * T_scale_ * std::sqrt(static_cast<double>(m_))) return count_negative(R);
    const CMatrix Q2 = complement_basis(w);
    const int rest = count_negative(Q2.adjoint() * R * Q2);
    return rest + (side > 0 ? 1 : 0);
  }

  const CMatrix& M() const { return M_; }
  const BoundarySet& F() const { return F_; }

  // [[A_reg(n), v], [v^H (I + M), 0]]
  CMatrix bordered(int n) const {
    const CMatrix Gm = gm_regular(n, n);
    CMatrix Preg(m_, m_);
    const cplx i(0.0, 1.0);
    const cplx psi_mi = digamma(-i);
    for (std::size_t b = 0; b < m_; ++b)
      for (std::size_t j = 0; j < m_; ++j) {
        if (b == j) {
          // psi(-i) - psi(-n) with the k = n pole dropped
          Preg(b, b) = Gm(b, b) - constants().re_psi_i + psi_mi;
        } else {
          const cplx z = z_[b * m_ + j];
          const cplx L = Gm(b, j) + rho3_[b * m_ + j];
          Preg(b, j) = L - lerch_phi_disk(z, 1, -i);
        }
      }
    const CMatrix A = Preg + Preg.adjoint() * M_;
    const CVector v = pole_vector(n);
    CMatrix B = CMatrix::Zero(m_ + 1, m_ + 1);
    B.topLeftCorner(m_, m_) = A;
    B.topRightCorner(m_, 1) = v;
    B.bottomLeftCorner(1, m_) = v.adjoint() * (CMatrix::Identity(m_, m_) + M_);
    return B;
  }

 private:
  BoundarySet F_;
  std::size_t m_;
  CMatrix M_;
  std::vector<double> phases_, tans_;
  Eigen::Index m1_ = 0;
  CMatrix T_;
  double T_scale_ = 0.0;
  std::vector<cplx> z_, rho3_;
};

// sigma_min(A) relative to the size of the two terms of A = P + P^H M
void fill_residual(ExtensionEntry& e, const CMatrix& P, const CMatrix& M) {
  const CMatrix B = P.adjoint() * M;
  Eigen::JacobiSVD<CMatrix> svd(P + B, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const Eigen::Index last = s.size() - 1;
  const double scale = P.norm() + B.norm();
  e.residual = scale > 0.0 ? s(last) / scale : 0.0;
  e.psi = svd.matrixV().col(last);
}

double left_edge(const Pencil& P, double& lo) {
  // G -> -inf logarithmically as lambda -> -inf, so every reduced eigenvalue
  // eventually turns negative
  lo = -1.0;
  while (true) {
    const Eigen::VectorXd mu = P.mu(lo);
    if (mu.size() == 0 || mu(mu.size() - 1) < 0.0) return lo;
    lo *= 2.0;
    if (lo < -1e300) throw BracketError("extension_spectrum: no lower bracket above -1e300");
  }
}

// Moves a cell endpoint toward the pole until mu_k has the required sign.
double approach(const Pencil& P, Eigen::Index k, double pole, int dir, bool want_negative) {
  double delta = 1e-3;
  const double floor = 1e-14 * std::max(1.0, std::abs(pole));
  while (delta >= floor) {
    const double x = pole + dir * delta;
    const double val = P.mu(x)(k);
    if (want_negative ? val < 0.0 : val > 0.0) return x;
    delta /= 8.0;
  }
  throw BracketError("extension_spectrum: root too close to an integer to bracket");
}

void solve_cell_counting(const Pencil& P, int cell, double a0, double b0, int neg_left,
                         int neg_right, std::vector<ExtensionEntry>& out) {
  if (neg_left < neg_right) throw BracketError("extension_spectrum: inconsistent eigenvalue counts");
  for (int k = neg_right; k < neg_left; ++k) {
    auto f = [&](double x) { return P.mu(x)(k); };
    const double a = cell == 0 ? a0 : approach(P, k, a0, +1, true);
    const double b = approach(P, k, b0, -1, false);
    ExtensionEntry e;
    e.cell = cell;
    e.lambda = detail::increasing_root(f, a, b, f(a), f(b));
    e.lo = cell == 0 ? a0 : cell - 1.0;
    e.hi = cell == 0 ? 0.0 : static_cast<double>(cell);
    out.push_back(e);
  }
}

double reduced_det(const Pencil& P, double x) {
  const CMatrix H = P.H1(x);
  return H.rows() ? H.determinant().real() : 1.0;
}

void solve_cell_scan(const Pencil& P, int cell, const std::vector<double>& grid, double lo,
                     double hi, std::vector<ExtensionEntry>& out) {
  int found = 0;
  double xa = grid.front(), fa = reduced_det(P, xa);
  for (std::size_t i = 1; i < grid.size() && found < P.m1(); ++i) {
    const double xb = grid[i], fb = reduced_det(P, xb);
    if ((fa < 0.0) != (fb < 0.0)) {
      auto f = [&](double x) { return reduced_det(P, x); };
      std::uintmax_t iters = 200;
      boost::math::tools::eps_tolerance<double> tol(50);
      const auto r = boost::math::tools::toms748_solve(f, xa, xb, fa, fb, tol, iters);
      ExtensionEntry e;
      e.cell = cell;
      e.lambda = 0.5 * (r.first + r.second);
      e.lo = lo;
      e.hi = hi;
      out.push_back(e);
      ++found;
    }
    xa = xb;
    fa = fb;
  }
}

}  // namespace

BoundarySet BoundarySet::make(std::vector<double> angles) {
  if (angles.empty()) throw DomainError("BoundarySet: m must be >= 1");
  for (double& a : angles) {
    if (!std::isfinite(a)) throw DomainError("BoundarySet: non-finite angle");
    a = frac1(a);
  }
  for (std::size_t i = 0; i < angles.size(); ++i)
    for (std::size_t j = i + 1; j < angles.size(); ++j) {
      const double d = std::abs(angles[i] - angles[j]);
      if (std::min(d, 1.0 - d) <= 1e-12) throw DegenerateSetError("BoundarySet: coincident points");
    }
  return BoundarySet{std::move(angles)};
}

GramKernel gram(const BoundarySet& F, const SeriesControl& ctl) {
  const std::size_t m = F.m();
  if (m == 0) throw DomainError("gram: empty boundary set");
  GramKernel g;
  g.F = F;
  g.Z.resize(m, m);
  const double K = constants().K;
  for (std::size_t a = 0; a < m; ++a) {
    g.Z(a, a) = K;
    for (std::size_t b = a + 1; b < m; ++b) {
      g.Z(a, b) = hurwitz_Z(F.angles[a] - F.angles[b], ctl);
      g.Z(b, a) = std::conj(g.Z(a, b));
    }
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g.Z);
  g.eigenvalues = es.eigenvalues();
  g.eigenvectors = es.eigenvectors();
  if (g.eigenvalues(0) <= 1e-10 * K)
    throw DegenerateSetError("gram: kernel matrix is numerically singular");
  const Eigen::VectorXd s = g.eigenvalues.cwiseSqrt();
  g.sqrt_Z = g.eigenvectors * s.asDiagonal() * g.eigenvectors.adjoint();
  g.inv_sqrt_Z = g.eigenvectors * s.cwiseInverse().asDiagonal() * g.eigenvectors.adjoint();
  return g;
}

std::pair<double, double> K_even_odd() {
  // sum_m 1/(1+4m^2) = (1 + (pi/2) coth(pi/2))/2, sum_m 1/(1+(2m+1)^2) = (pi/4) tanh(pi/2)
  const double h = 0.5 * kPi;
  return {0.5 * (1.0 + h / std::tanh(h)), 0.25 * kPi * std::tanh(h)};
}

IsometryMatrix is_in_GF(const CMatrix& M, const GramKernel& g, double tol) {
  check_square(M, g.F.m(), "is_in_GF");
  IsometryMatrix r;
  r.M = M;
  r.defect = max_abs(M.adjoint() * g.Z * M - g.Z);
  r.accepted = r.defect <= tol;
  return r;
}

CMatrix haar_unitary(std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix A(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) A(i, j) = cplx(nd(rng), nd(rng));
  Eigen::HouseholderQR<CMatrix> qr(A);
  CMatrix Q = qr.householderQ() * CMatrix::Identity(m, m);
  const CMatrix& R = qr.matrixQR();
  for (std::size_t j = 0; j < m; ++j) {
    const double a = std::abs(R(j, j));
    if (a > 0.0) Q.col(j) *= R(j, j) / a;
  }
  return Q;
}

IsometryMatrix from_unitary(const GramKernel& g, const CMatrix& U) {
  check_square(U, g.F.m(), "from_unitary");
  return is_in_GF(g.inv_sqrt_Z * U * g.sqrt_Z, g);
}

IsometryMatrix sample_GF(const GramKernel& g, std::uint64_t seed) {
  return from_unitary(g, haar_unitary(g.F.m(), seed));
}

cplx F_M(double lambda, const BoundarySet& F, const CMatrix& M, const CVector& psi) {
  const std::size_t m = F.m();
  check_square(M, m, "F_M");
  if (static_cast<std::size_t>(psi.size()) != m) throw DimensionError("F_M: psi has wrong length");
  if (psi.norm() == 0.0) throw DomainError("F_M: psi must be nonzero");
  const CVector Mpsi = M * psi;
  const cplx i(0.0, 1.0);
  cplx acc(0.0);
  for (std::size_t a = 0; a < m; ++a) {
    cplx p, q;
    if (F.angles[a] == 0.0) {
      const cplx dl = digamma(cplx(-lambda));
      p = digamma(-i) - dl;
      q = digamma(i) - dl;
    } else {
      const cplx z = F.point(a);
      const cplx L = lerch_phi_disk(z, 1, cplx(-lambda));
      p = L - lerch_phi_disk(z, 1, -i);
      q = L - lerch_phi_disk(z, 1, i);
    }
    acc += psi(a) * p + Mpsi(a) * q;
  }
  return acc;
}

cplx F_M_prime(double lambda, const BoundarySet& F, const CMatrix& M, const CVector& psi) {
  const std::size_t m = F.m();
  check_square(M, m, "F_M_prime");
  if (static_cast<std::size_t>(psi.size()) != m) throw DimensionError("F_M_prime: psi has wrong length");
  if (psi.norm() == 0.0) throw DomainError("F_M_prime: psi must be nonzero");
  const CVector w = psi + M * psi;
  cplx acc(0.0);
  for (std::size_t a = 0; a < m; ++a) {
    const cplx d = F.angles[a] == 0.0 ? cplx(trigamma(-lambda))
                                      : lerch_phi_disk(F.point(a), 2, cplx(-lambda));
    acc += w(a) * d;
  }
  return acc;
}

CMatrix extension_system(double lambda, const BoundarySet& F, const CMatrix& M) {
  check_square(M, F.m(), "extension_system");
  const CMatrix P = boundary_P(lambda, F);
  return P + P.adjoint() * M;
}

CMatrix boundary_P(double lambda, const BoundarySet& F) {
  const std::size_t m = F.m();
  const cplx i(0.0, 1.0);
  CMatrix P(m, m);
  const cplx diag = digamma(-i) - digamma(cplx(-lambda));
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t j = 0; j < m; ++j) {
      if (b == j) {
        P(b, j) = diag;
        continue;
      }
      const cplx z = e2pi(F.angles[b] - F.angles[j]);
      P(b, j) = lerch_phi_disk(z, 1, cplx(-lambda)) - lerch_phi_disk(z, 1, -i);
    }
  return P;
}

ExtensionSpectrum extension_spectrum(const GramKernel& g, const CMatrix& M, int n_max,
                                     PsiStrategy strategy) {
  if (n_max < 0) throw DomainError("extension_spectrum: n_max must be >= 0");
  const IsometryMatrix iso = is_in_GF(M, g);
  if (!iso.accepted) throw DomainError("extension_spectrum: M is not in G(F)");
  const Pencil P(g, M);
  ExtensionSpectrum out;
  out.phases = P.phases();
  const int m1 = static_cast<int>(P.m1());
  std::vector<ExtensionEntry>& E = out.entries;

  double lo = -1.0;
  if (m1 > 0) left_edge(P, lo);

  if (strategy == PsiStrategy::hermitian_count) {
    std::vector<int> right(n_max + 1), left(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      left[n] = P.neg_limit(n, -1);
      right[n] = P.neg_limit(n, +1);
    }
    solve_cell_counting(P, 0, lo, 0.0, m1, left[0], E);
    for (int n = 1; n <= n_max; ++n) solve_cell_counting(P, n, n - 1.0, n, right[n - 1], left[n], E);
  } else if (m1 > 0) {
    const int per_cell = 48 * m1;
    std::vector<double> grid;
    const double l0 = std::log(-lo), l1 = std::log(1e-9);
    for (int i = 0; i <= per_cell; ++i) grid.push_back(-std::exp(l0 + (l1 - l0) * i / per_cell));
    solve_cell_scan(P, 0, grid, lo, 0.0, E);
    for (int n = 1; n <= n_max; ++n) {
      grid.clear();
      for (int i = 0; i <= per_cell; ++i) grid.push_back(n - 1.0 + (1e-9 + (1.0 - 2e-9) * i / per_cell));
      solve_cell_scan(P, n, grid, n - 1.0, n, E);
    }
  }

  for (int n = 0; n < n_max; ++n) {
    Eigen::JacobiSVD<CMatrix> svd(P.bordered(n));
    const auto& s = svd.singularValues();
    for (Eigen::Index k = s.size(); k-- > 0;) {
      if (s(k) > 1e-10 * s(0)) break;
      ExtensionEntry e;
      e.cell = n + 1;
      e.lambda = n;
      e.lo = n;
      e.hi = n + 1.0;
      e.integer = true;
      e.residual = s(k) / s(0);
      E.push_back(e);
    }
  }

  for (ExtensionEntry& e : E)
    if (!e.integer) fill_residual(e, boundary_P(e.lambda, P.F()), P.M());
  std::stable_sort(E.begin(), E.end(),
                   [](const ExtensionEntry& a, const ExtensionEntry& b) { return a.lambda < b.lambda; });
  return out;
}

cplx deficiency_gram_entry(double theta, double rho) { return hurwitz_Z(theta - rho); }

std::pair<double, double> vandermonde_det(const BoundarySet& F) {
  const std::size_t m = F.m();
  CMatrix V(m, m);
  for (std::size_t n = 0; n < m; ++n)
    for (std::size_t j = 0; j < m; ++j) V(n, j) = e2pi(static_cast<double>(n) * F.angles[j]);
  const double lu = std::abs(V.partialPivLu().determinant());
  double prod = 1.0;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) prod *= std::abs(F.point(k) - F.point(j));
  return {lu, prod};
}

}  // namespace extspec
