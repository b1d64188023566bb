#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace extspec::detail {

const GaussLegendre20& gl20() {
  static const GaussLegendre20 rule = [] {
    using G = boost::math::quadrature::gauss<double, 20>;
    GaussLegendre20 r{};
    const auto& ab = G::abscissa();
    const auto& wt = G::weights();
    for (std::size_t i = 0; i < 10; ++i) {
      r.x[i] = -ab[i];
      r.w[i] = wt[i];
      r.x[19 - i] = ab[i];
      r.w[19 - i] = wt[i];
    }
    return r;
  }();
  return rule;
}

}  // namespace extspec::detail
