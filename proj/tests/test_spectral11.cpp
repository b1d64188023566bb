#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "extspec/errors.hpp"
#include "extspec/spectral11.hpp"

using namespace extspec;

namespace {

constexpr double kK = 2.07667404746858117413405079475;

struct RootRef {
  double theta;
  double lambda[4];  // n = 0, 1, 2, 5
};

// Bisection on G(l) = K tan(theta/2) at 30 digits, computed offline with mpmath.
const RootRef kRoots[] = {
    {0.0, {-1.563967383653514306, 0.49348961359998748326, 1.5639090809866760431, 4.6454885227157781692}},
    {1.0, {-0.76845148347344841279, 0.61419176108507183954, 1.6672804946040953988, 4.7256883382788718292}},
    {-2.0, {-28.405534241527709354, 0.22920070949112995041, 1.2714444955930446034, 4.3381798293706152132}},
    {2.5, {-0.17154056674712578132, 0.85632504162205109387, 1.8661213661747688024, 4.8786729988863506923}},
};
const int kRootN[] = {0, 1, 2, 5};

}  // namespace

TEST(ExtensionParameter, Range) {
  EXPECT_THROW(ExtensionParameter::make(4.0), DomainError);
  EXPECT_THROW(ExtensionParameter::make(-kPi), DomainError);
  EXPECT_TRUE(ExtensionParameter::make(kPi).is_H());
  EXPECT_NEAR(ExtensionParameter::make(1.0).v(), kK * std::tan(0.5), 1e-14);
  EXPECT_NEAR(std::abs(ExtensionParameter::make(0.0).zeta() - cplx(1.0, 0.0)), 0.0, 1e-15);
}

TEST(G, ReferenceValues) {
  EXPECT_NEAR(G(-0.5), 2.05816034664390045671285481572, 1e-13);
  EXPECT_NEAR(G(0.3), -2.01865945901292189613522772011, 1e-13);
  EXPECT_NEAR(G(2.7), 1.20999744976316658918208139675, 1e-13);
  EXPECT_NEAR(G(-3.2), -0.904188570664122671040507600004, 1e-13);
  EXPECT_NEAR(G(10.5), -2.30358880891330463609595316337, 1e-13);
}

TEST(G, BracketingBounds) {
  EXPECT_NEAR(G(-1.0), 0.671865985524009837878390572804, 1e-13);
  EXPECT_NEAR(G(-2.0), -0.328134014475990162121609427196, 1e-13);
  EXPECT_GT(G(-1.0), 2.0 - kPi / std::tanh(kPi) / 2.0);
  EXPECT_LT(G(-2.0), -215.0 / 6188.0);
}

TEST(G, PolesRaise) {
  EXPECT_THROW(G(0.0), PoleError);
  EXPECT_THROW(G(3.0), PoleError);
  EXPECT_THROW(G_prime(1.0), PoleError);
  EXPECT_THROW(G_second(2.0), PoleError);
  EXPECT_NO_THROW(G(-3.0));
}

TEST(G, DifferenceIdentity) {
  EXPECT_NEAR(G(2.5) - G(1.5), -0.4, 1e-14);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int t = 0; t < 100; ++t) {
    double lam = u(rng);
    if (std::abs(lam - std::round(lam)) < 1e-3) continue;
    EXPECT_NEAR(G(lam) - G(lam - 1.0), -1.0 / lam, 1e-10) << lam;
  }
}

TEST(G, SeriesAgrees) {
  for (double lam : {-4.3, -0.5, 0.5, 2.2, 6.9}) EXPECT_NEAR(G_series(lam), G(lam), 1e-8) << lam;
}

TEST(G, Derivatives) {
  EXPECT_NEAR(G_prime(-0.5), kPi * kPi / 2.0, 1e-13);
  EXPECT_NEAR(G_prime(2.7), 14.7693758451323150181651576095, 1e-12);
  EXPECT_GT(G_second(-1.0), 0.0);
  const double h = 1e-5;
  EXPECT_NEAR((G(0.5 + h) - G(0.5 - h)) / (2 * h), G_prime(0.5), 1e-6);
  EXPECT_NEAR((G_prime(0.5 + h) - G_prime(0.5 - h)) / (2 * h), G_second(0.5), 1e-4);
  for (double lam : {-7.5, -0.1, 0.1, 3.3}) EXPECT_GT(G_prime(lam), 0.0);
}

TEST(G, ComplexMatchesReal) {
  for (double lam : {-2.5, 0.4, 3.6}) {
    EXPECT_NEAR(std::abs(G(cplx(lam, 0.0)) - G(lam)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(G_prime(cplx(lam, 0.0)) - G_prime(lam)), 0.0, 1e-12);
  }
}

TEST(Eigenvalue, ReferenceRoots) {
  for (const auto& r : kRoots) {
    const auto p = ExtensionParameter::make(r.theta);
    for (int k = 0; k < 4; ++k) {
      const double tol = 1e-10 * std::max(1.0, std::abs(r.lambda[k]));
      EXPECT_NEAR(eigenvalue(p, kRootN[k]), r.lambda[k], tol) << "theta " << r.theta << " n " << kRootN[k];
    }
  }
}

TEST(Eigenvalue, IntegersAtH) {
  const auto p = ExtensionParameter::make(kPi);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(eigenvalue(p, n), static_cast<double>(n));
}

TEST(Eigenvalue, ResidualAndBracket) {
  const auto p = ExtensionParameter::make(0.0);
  const SpectrumEntry e0 = eigenvalue_bracketed(p, 0);
  EXPECT_GT(e0.lambda, -2.0);
  EXPECT_LT(e0.lambda, -1.0);
  EXPECT_LT(std::abs(G(e0.lambda)), 1e-10);
  EXPECT_LE(e0.lo, e0.lambda);
  EXPECT_GE(e0.hi, e0.lambda);
  EXPECT_THROW(eigenvalue(p, -1), DomainError);
}

TEST(Eigenvalue, IntervalInvariantRandomTheta) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-kPi + 1e-3, kPi - 1e-3);
  for (int t = 0; t < 50; ++t) {
    const auto p = ExtensionParameter::make(u(rng));
    const double v = p.v();
    double prev = -HUGE_VAL;
    for (int n = 0; n <= 30; ++n) {
      const double lam = eigenvalue(p, n);
      if (n == 0)
        EXPECT_LT(lam, 0.0);
      else {
        EXPECT_GT(lam, n - 1.0);
        EXPECT_LT(lam, static_cast<double>(n));
      }
      EXPECT_GT(lam, prev);
      EXPECT_LT(std::abs(G(lam) - v), 1e-10 * std::max(1.0, std::abs(v)));
      prev = lam;
    }
  }
}

TEST(Eigenvalue, ApproachesIntegersFromBelowNearPi) {
  double prev = -HUGE_VAL;
  for (double d : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double lam = eigenvalue(ExtensionParameter::make(kPi - d), 3);
    EXPECT_LT(lam, 3.0);
    EXPECT_GT(lam, prev);
    prev = lam;
  }
  EXPECT_NEAR(prev, 3.0, 1e-3);
}

TEST(Eigenvalue, DeepNegativeTheta) {
  const auto p = ExtensionParameter::make(-kPi + 0.5);
  const double l0 = eigenvalue(p, 0);
  EXPECT_LT(l0, -1e3);
  EXPECT_LT(std::abs(G(l0) - p.v()) / std::abs(p.v()), 1e-10);
}

TEST(Spectrum, GapsAtThetaZero) {
  const SpectrumTable tab = spectrum(ExtensionParameter::make(0.0), 20);
  ASSERT_EQ(tab.entries.size(), 21u);
  EXPECT_LT(tab.residual_bound, 1e-10);
  double prev = HUGE_VAL;
  for (int n = 1; n <= 20; ++n) {
    const double gap = n - tab.entries[n].lambda;
    EXPECT_GT(gap, 0.0);
    EXPECT_LT(gap, prev);
    prev = gap;
  }
  EXPECT_THROW(spectrum(ExtensionParameter::make(0.0), -1), DomainError);
}

TEST(Spectrum, HIsIdentityGrid) {
  const SpectrumTable tab = spectrum(ExtensionParameter::make(kPi), 10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(tab.entries[n].lambda, n);
}

TEST(DefectVectors, Entries) {
  const DefectVectors d = defect_vectors(50);
  ASSERT_EQ(d.x_plus.size(), 51u);
  const cplx I(0.0, 1.0);
  double np = 0.0, nm = 0.0;
  for (std::size_t k = 0; k <= 50; ++k) {
    const double kk = static_cast<double>(k);
    EXPECT_NEAR(std::abs(d.x_plus[k] - 1.0 / (kk - I)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d.x_minus[k] - 1.0 / (kk + I)), 0.0, 1e-15);
    EXPECT_NEAR(d.y2[k], 1.0 / (1.0 + kk * kk), 1e-16);
    EXPECT_NEAR(d.y3[k], kk / (1.0 + kk * kk), 1e-16);
    np += std::norm(d.x_plus[k]);
    nm += std::norm(d.x_minus[k]);
  }
  EXPECT_NEAR(np, nm, 1e-14);
}

TEST(Eigenvector, NormMatchesTrigammaForm) {
  const auto p = ExtensionParameter::make(0.0);
  for (int n = 0; n <= 5; ++n) {
    const EigenvectorFamily y = eigenvector(p, n, 100000);
    const double target = y.lambda * y.lambda * G_prime(y.lambda);
    EXPECT_LE(std::abs(y.norm_sq() - target), y.tail_norm_sq + 1e-12) << n;
    EXPECT_LT(std::abs(y.norm_sq_with_tail() - target) / target, 1e-10) << n;
  }
}

TEST(Eigenvector, OrthogonalWithinTail) {
  const auto p = ExtensionParameter::make(0.0);
  std::vector<EigenvectorFamily> ys;
  for (int n = 0; n <= 6; ++n) ys.push_back(eigenvector(p, n, 100000));
  for (int a = 0; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      const TruncatedInner ip = eigen_inner(ys[a], ys[b]);
      EXPECT_LE(std::abs(ip.value), ip.tail_bound);
      EXPECT_LT(std::abs(ip.value) / std::sqrt(ys[a].norm_sq() * ys[b].norm_sq()), 1e-3);
    }
}

TEST(Eigenvector, ResidualSmall) {
  const EigenvectorFamily y = eigenvector(ExtensionParameter::make(1.0), 3, 100000);
  const EigenResidual r = eigen_residual(y);
  EXPECT_LT(r.coordinate, 1e-12);
  EXPECT_LT(r.domain, 1e-6);
}

TEST(Eigenvector, UnitVectorsAtH) {
  const EigenvectorFamily y = eigenvector(ExtensionParameter::make(kPi), 4, 100);
  for (std::size_t k = 0; k < y.coefficients.size(); ++k) EXPECT_EQ(y.coefficients[k], k == 4 ? 1.0 : 0.0);
  EXPECT_THROW(eigenvector(ExtensionParameter::make(0.0), 1, 5), DomainError);
}

TEST(RawF, VanishesAtEigenvalues) {
  for (double th : {0.0, 1.0, -2.0}) {
    const auto p = ExtensionParameter::make(th);
    for (int n = 0; n <= 5; ++n) EXPECT_LT(std::abs(eigenvalue_raw_F(p, eigenvalue(p, n))), 1e-8);
  }
}

TEST(RawF, ClosedFormAgainstDirectSum) {
  const auto p = ExtensionParameter::make(1.0);
  const cplx z = p.zeta(), I(0.0, 1.0);
  const double lam = 0.5;
  cplx s(0.0);
  const int N = 2'000'000;
  for (int k = N; k >= 0; --k)
    s += (lam * (1.0 + z) * double(k) + I * lam * (1.0 - z) + (1.0 + z) - I * (1.0 - z) * double(k)) /
         ((k - lam) * (1.0 + double(k) * k));
  // the k-linear numerator terms leave a tail (1+z)lam/N - i(1-z)/N
  s += ((1.0 + z) * lam - I * (1.0 - z)) / double(N);
  EXPECT_NEAR(std::abs(eigenvalue_raw_F(p, lam) - s), 0.0, 1e-10);
}

TEST(RawF, DegenerateAtH) {
  EXPECT_THROW(eigenvalue_raw_F(ExtensionParameter::make(kPi), 0.5), DomainError);
  EXPECT_THROW(eigenvalue_raw_F(ExtensionParameter::make(0.0), 2.0), PoleError);
}

TEST(Asymptotic, ThirdOrderError) {
  for (int n : {0, 1, 5}) {
    double c_prev = 0.0;
    for (double d : {1e-2, 1e-3}) {
      const auto p = ExtensionParameter::make(kPi - d);
      const double err = std::abs(eigenvalue(p, n) - asymptotic_lambda(p, n));
      const double c = err / (d * d * d);
      EXPECT_LT(c, 1.0) << n;
      if (c_prev > 0.0) EXPECT_NEAR(c / c_prev, 1.0, 0.05) << n;
      c_prev = c;
    }
  }
}

TEST(Asymptotic, NegativeBranch) {
  const auto p = ExtensionParameter::make(-kPi + 1e-3);
  for (int n : {1, 2, 6}) EXPECT_LT(std::abs(eigenvalue(p, n) - asymptotic_lambda(p, n)), 1e-8);
  EXPECT_THROW(asymptotic_lambda(p, 0), DomainError);
}

TEST(Asymptotic, TrustRegion) {
  EXPECT_THROW(asymptotic_lambda(ExtensionParameter::make(0.0), 1), DomainError);
  EXPECT_EQ(asymptotic_lambda(ExtensionParameter::make(kPi), 3), 3.0);
}

TEST(Contour, MatchesRootFinder) {
  for (double th : {0.0, 1.0, -2.0}) {
    const auto p = ExtensionParameter::make(th);
    for (int n = 1; n <= 5; ++n)
      EXPECT_NEAR(contour_eigenvalue(p, n, 1024), eigenvalue(p, n), 1e-6) << th << " " << n;
  }
}

TEST(Contour, WindingCounts) {
  const ContourResult r = contour_eigenvalue_detail(ExtensionParameter::make(0.0), 3, 1024, 0.75);
  EXPECT_EQ(r.zeros, 1);
  EXPECT_EQ(r.poles, 2);
  EXPECT_NEAR(r.winding, -1.0, 1e-6);
  EXPECT_NEAR(r.lambda, eigenvalue(ExtensionParameter::make(0.0), 3), 1e-6);
}

TEST(Contour, Errors) {
  EXPECT_THROW(contour_eigenvalue(ExtensionParameter::make(kPi), 2, 512), DomainError);
  EXPECT_THROW(contour_eigenvalue(ExtensionParameter::make(0.0), 0, 512), DomainError);
  EXPECT_THROW(contour_eigenvalue_detail(ExtensionParameter::make(0.0), 2, 512, 0.02), RadiusError);
}

TEST(BoundaryForm, Values) {
  EXPECT_NEAR(boundary_form(1.0, std::polar(1.0, 0.7)), 0.0, 1e-14);
  EXPECT_NEAR(boundary_form(1.0, 0.0), kK, 1e-14);
  EXPECT_NEAR(boundary_form(0.0, 2.0), -4.0 * kK, 1e-13);
}
