#include "lsys/entropy_geometry.hpp"

#include <cmath>
#include <vector>

#include "lsys/error.hpp"

namespace lsys {
namespace {

void require_positive(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(Errc::ParameterOutOfRange, "a must be > 0");
}

}  // namespace

ExtendedReal entropy_of_a(double a) {
  require_positive(a);
  if (a == 1.0) return ExtendedReal::infinity();
  if (a < 1.0) return ExtendedReal(std::log1p(a) - std::log1p(-a));
  return ExtendedReal(std::log(a + 1.0) - std::log(a - 1.0));
}

double dissipation_of_a(double a) {
  require_positive(a);
  return 4.0 * a / ((1.0 + a) * (1.0 + a));
}

EntropyCurvePoint curve_point(double a) { return {a, entropy_of_a(a), dissipation_of_a(a)}; }

double entropy_derivative(double a) { return 1.0 / (a + 1.0) - 1.0 / (a - 1.0); }

double residue_probe(Pole pole, std::span<const double> h) {
  if (h.empty()) throw Error(Errc::ParameterOutOfRange, "residue probe needs step sizes");
  const double a0 = static_cast<double>(static_cast<int>(pole));
  std::vector<double> table;
  table.reserve(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (!(h[k] > 0.0 && h[k] <= 0.1)) {
      throw Error(Errc::ParameterOutOfRange, "step sizes must lie in (0, 0.1]");
    }
    if (k > 0 && !(h[k] < h[k - 1])) {
      throw Error(Errc::ParameterOutOfRange, "step sizes must decrease");
    }
    table.push_back(h[k] * entropy_derivative(a0 + h[k]));
  }
  // Neville's scheme evaluated at h = 0.
  for (std::size_t level = 1; level < table.size(); ++level) {
    for (std::size_t k = table.size() - 1; k >= level; --k) {
      const double hk = h[k];
      const double hl = h[k - level];
      table[k] = (hl * table[k] - hk * table[k - 1]) / (hl - hk);
    }
  }
  return table.back();
}

MatchingPair matching_pair(double d_target) {
  if (!(d_target > 0.0 && d_target <= 1.0)) {
    throw Error(Errc::ParameterOutOfRange, "dissipation target must lie in (0, 1]");
  }
  if (d_target == 1.0) return {1.0, 1.0, true};
  // Roots of d a^2 + (2d - 4) a + d = 0; the small one is written without
  // the cancellation in (2 - d - 2 sqrt(1 - d))/d.
  const double root = 2.0 * std::sqrt(1.0 - d_target);
  const double a_large = (2.0 - d_target + root) / d_target;
  const double a_small = d_target / (2.0 - d_target + root);
  return {a_small, a_large, false};
}

}  // namespace lsys
