#pragma once

#include <array>
#include <complex>

#include "lsys/bi_extension.hpp"
#include "lsys/extended_real.hpp"
#include "lsys/herglotz.hpp"

namespace lsys {

/// The operator i d/dt on [0, l]: symmetric part with both boundary values
/// zero, antiperiodic reference extension x(0) = -x(l).
///
/// The closed forms below are meromorphic in z and are evaluated wherever
/// their denominators do not vanish; z = 0 is a boundary probe.
class DifferentialModel {
 public:
  /// Throws Error(ParameterOutOfRange) unless ell > 0.
  explicit DifferentialModel(double ell);

  double ell() const { return ell_; }
  /// e^{-i l z}
  complex shift(complex z) const;

  /// M(z) as a registered closed-form HerglotzMap.
  HerglotzMap weyl_map() const;

 private:
  double ell_;
};

/// (e^l - e^{-ilz})/(1 - e^l e^{-ilz}). Throws Error(DegeneratePoint).
complex ex_livsic(const DifferentialModel& model, complex z);

/// i (e^l + 1)/(e^l - 1) (e^{-ilz} - 1)/(e^{-ilz} + 1). Throws Error(DegeneratePoint).
complex ex_weyl(const DifferentialModel& model, complex z);

/// Transfer function of the kappa = 0 system: (e^l e^{-ilz} - 1)/(e^l - e^{-ilz}).
complex ex_transfer_theta10(const DifferentialModel& model, complex z);
/// Transfer function of the system with impedance a M: e^{-ilz}.
complex ex_transfer_theta1a(const DifferentialModel& model, complex z);
/// Transfer function of the system with impedance -1/(a M): -e^{-ilz}.
complex ex_transfer_theta1a_inv(const DifferentialModel& model, complex z);

/// i (e^{-ilz} - 1)/(e^{-ilz} + 1) = a M(z).
complex ex_impedance_theta1a(const DifferentialModel& model, complex z);
/// i (e^{-ilz} + 1)/(e^{-ilz} - 1) = -1/(a M(z)).
complex ex_impedance_theta1a_inv(const DifferentialModel& model, complex z);

struct ExampleParams {
  double kappa;         // e^{-l}
  double a;             // (e^l - 1)/(e^l + 1)
  ExtendedReal entropy; // l
  double dissipation;   // 1 - e^{-2l}
};

ExampleParams ex_params(const DifferentialModel& model);

/// Coefficients over the boundary functionals {delta(t), delta(t - l)}:
/// (x, delta(t)) = x(0), (x, delta(t - l)) = x(l).
struct BoundaryVector {
  complex c_start{};  // delta(t)
  complex c_end{};    // delta(t - l)
};

double max_deviation(const BoundaryVector& x, const BoundaryVector& y);

/// sum_jk m[j][k] ( . , d_j) d_k with d_0 = delta(t), d_1 = delta(t - l).
struct BoundaryOperator {
  std::array<std::array<complex, 2>, 2> m{};
};

double max_deviation(const BoundaryOperator& x, const BoundaryOperator& y);

/// phi and psi written over the boundary functionals.
BoundaryVector phi_boundary(const DifferentialModel& model);
BoundaryVector psi_boundary(const DifferentialModel& model);

BoundaryVector to_boundary(const DifferentialModel& model, const CoeffVector& v);
BoundaryOperator to_boundary(const DifferentialModel& model, const OperatorCoeffs& op);

struct ChannelCoefficients {
  double minus_prefactor;  // phi - psi = minus_prefactor [delta(t - l) - delta(t)]
  double plus_prefactor;   // phi + psi = plus_prefactor  [delta(t - l) + delta(t)]
  CoeffVector chi10;       // chi_of(0, -1)
  CoeffVector chi1a;       // chi_of(e^{-l}, -1)
  double chi10_deviation;  // |chi10 - (phi - psi)/sqrt 2|
  double chi1a_deviation;  // |chi1a - sqrt(a/2)(phi - psi)|
};

ChannelCoefficients ex_channel_coefficients(const DifferentialModel& model);

}  // namespace lsys
