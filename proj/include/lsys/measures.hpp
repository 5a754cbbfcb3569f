#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace lsys {

using complex = std::complex<double>;

struct Atom {
  double lambda = 0.0;
  double weight = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Nonnegative density tabulated on a strictly increasing grid, integrated
/// with the composite trapezoidal rule on exactly that grid.
struct Density {
  std::vector<double> grid;
  std::vector<double> values;

  friend bool operator==(const Density&, const Density&) = default;
};

/// Finite Borel measure on the real line (atoms plus an optional tabulated
/// density) together with the real constant Q of the Herglotz representation
///
///   M(z) = Q + \int (1/(l - z) - l/(1 + l^2)) dsigma(l).
///
/// Finite data is always a desk-scale surrogate for the infinite measures the
/// theory is stated for; surrogate() reports that.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;

  /// Validates: positive atom weights, pairwise distinct atom locations,
  /// density grid strictly increasing with >= 2 points and nonnegative values.
  /// Throws Error(InvalidMeasure).
  SpectralMeasure(std::vector<Atom> atoms, std::optional<Density> density = std::nullopt,
                  double shift_q = 0.0);

  static SpectralMeasure point_mass(double lambda, double weight = 1.0);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::optional<Density>& density() const { return density_; }
  double shift_q() const { return shift_q_; }

  bool empty() const { return atoms_.empty() && !density_.has_value(); }
  bool surrogate() const { return true; }

  /// Same measure with every mass multiplied by `factor` (> 0); Q is scaled too.
  SpectralMeasure scaled(double factor) const;

  /// Equal up to atom ordering, exact field comparison.
  friend bool operator==(const SpectralMeasure& lhs, const SpectralMeasure& rhs);

 private:
  std::vector<Atom> atoms_;
  std::optional<Density> density_;
  double shift_q_ = 0.0;
};

/// a = \int dsigma / (1 + l^2). Throws Error(EmptyMeasure).
double norming_constant(const SpectralMeasure& sigma);

/// Herglotz integral transform at non-real z. Throws Error(RealAxisEvaluation).
complex herglotz_transform(const SpectralMeasure& sigma, complex z);

}  // namespace lsys
