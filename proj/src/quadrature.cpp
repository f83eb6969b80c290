#include "needlecomp/quadrature.hpp"

#include <algorithm>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace needlecomp {

namespace {

double integrate_piece(const std::function<double(double)>& f, double a, double b,
                       QuadratureTolerance tol) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  // Boost stops once its estimate is within relative * L1 and never reports
  // less than a few ulps of L1, so smooth pieces terminate early.
  return Rule::integrate(f, a, b, tol.max_depth, tol.relative);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, QuadratureTolerance tol) {
  if (!(a < b)) return 0.0;
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(a);
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate_piece(f, cuts[i], cuts[i + 1], tol);
  }
  return total;
}

}  // namespace needlecomp
