#pragma once

#include <array>

namespace extspec::detail {

// 20-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre20 {
  std::array<double, 20> x;
  std::array<double, 20> w;
};

const GaussLegendre20& gl20();

template <class F>
auto gl_panel(const F& f, double a, double b) {
  const auto& q = gl20();
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  decltype(f(c)) s{};
  for (int i = 0; i < 20; ++i) s += q.w[i] * f(c + h * q.x[i]);
  return s * h;
}

template <class F>
auto gl_composite(const F& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  decltype(f(a)) s{};
  for (int p = 0; p < panels; ++p) s += gl_panel(f, a + p * h, a + (p + 1) * h);
  return s;
}

}  // namespace extspec::detail
