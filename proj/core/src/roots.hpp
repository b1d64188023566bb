#pragma once

#include <boost/math/tools/toms748_solve.hpp>

#include <cstdint>
#include <utility>

#include "extspec/errors.hpp"

namespace extspec::detail {

// Root of an increasing f on [a, b] with f(a) < 0 < f(b).  Returns the
// endpoint of the final bracket with the smaller |f|.
template <class F>
double increasing_root(const F& f, double a, double b, double fa, double fb) {
  if (!(fa < 0.0) || !(fb > 0.0)) throw BracketError("no sign change on bracket");
  std::uintmax_t iters = 200;
  boost::math::tools::eps_tolerance<double> tol(52);
  const std::pair<double, double> r =
      boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
  if (iters >= 200) throw BracketError("root refinement did not converge");
  if (r.first == r.second) return r.first;
  const double f1 = f(r.first), f2 = f(r.second);
  return std::abs(f1) <= std::abs(f2) ? r.first : r.second;
}

}  // namespace extspec::detail
