#include "lambdaphase/poisson.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lambdaphase {

double poisson_weight(double nbar, int n) {
  if (!(nbar >= 0.0) || n < 0) throw std::invalid_argument("poisson_weight: need nbar >= 0 and n >= 0");
  if (nbar == 0.0) return n == 0 ? 1.0 : 0.0;
  const double log_p = -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
  return std::exp(0.5 * log_p);
}

int truncation_cutoff(double nbar, double epsilon) {
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw std::invalid_argument("truncation_cutoff: need nbar >= 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("truncation_cutoff: need 0 < epsilon < 1");
  if (nbar == 0.0) return 0;

  // Tails are summed from the far end so that tiny epsilon is resolved
  // without cancellation against 1.
  const int far = static_cast<int>(std::ceil(nbar + 40.0 * std::sqrt(nbar) + 60.0));
  std::vector<double> p(static_cast<std::size_t>(far) + 1);
  for (int n = 0; n <= far; ++n) {
    const double q = poisson_weight(nbar, n);
    p[static_cast<std::size_t>(n)] = q * q;
  }
  double tail = 0.0;  // sum over n > N
  int cutoff = far;
  for (int n = far; n >= 0; --n) {
    // tail currently holds the mass strictly above n
    if (tail > epsilon) break;
    cutoff = n;
    tail += p[static_cast<std::size_t>(n)];
  }
  return cutoff;
}

}  // namespace lambdaphase
