#include "lsys/differential_example.hpp"

#include <algorithm>
#include <cmath>

#include "lsys/error.hpp"

namespace lsys {
namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kPoleTolerance = 1e-14;

complex checked_ratio(complex num, complex den, const char* what) {
  if (std::abs(den) <= kPoleTolerance) throw Error(Errc::DegeneratePoint, what);
  return num / den;
}

}  // namespace

DifferentialModel::DifferentialModel(double ell) : ell_(ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) {
    throw Error(Errc::ParameterOutOfRange, "interval length must be positive");
  }
}

complex DifferentialModel::shift(complex z) const { return std::exp(-kI * ell_ * z); }

HerglotzMap DifferentialModel::weyl_map() const {
  return HerglotzMap::closed_form("interval_weyl", {{"ell", ell_}});
}

complex ex_livsic(const DifferentialModel& model, complex z) {
  const double e = std::exp(model.ell());
  const complex w = model.shift(z);
  return checked_ratio(e - w, 1.0 - e * w, "Livsic function pole");
}

complex ex_weyl(const DifferentialModel& model, complex z) {
  const double e = std::exp(model.ell());
  const complex w = model.shift(z);
  return kI * ((e + 1.0) / (e - 1.0)) * checked_ratio(w - 1.0, w + 1.0, "Weyl function pole");
}

complex ex_transfer_theta10(const DifferentialModel& model, complex z) {
  const double e = std::exp(model.ell());
  const complex w = model.shift(z);
  return checked_ratio(e * w - 1.0, e - w, "transfer function pole");
}

complex ex_transfer_theta1a(const DifferentialModel& model, complex z) { return model.shift(z); }

complex ex_transfer_theta1a_inv(const DifferentialModel& model, complex z) {
  return -model.shift(z);
}

complex ex_impedance_theta1a(const DifferentialModel& model, complex z) {
  const complex w = model.shift(z);
  return kI * checked_ratio(w - 1.0, w + 1.0, "impedance pole");
}

complex ex_impedance_theta1a_inv(const DifferentialModel& model, complex z) {
  const complex w = model.shift(z);
  return kI * checked_ratio(w + 1.0, w - 1.0, "impedance pole");
}

ExampleParams ex_params(const DifferentialModel& model) {
  const double ell = model.ell();
  ExampleParams p;
  p.kappa = std::exp(-ell);
  p.a = std::tanh(ell / 2.0);  // (e^l - 1)/(e^l + 1)
  p.entropy = ExtendedReal(ell);
  p.dissipation = -std::expm1(-2.0 * ell);
  return p;
}

double max_deviation(const BoundaryVector& x, const BoundaryVector& y) {
  return std::max(std::abs(x.c_start - y.c_start), std::abs(x.c_end - y.c_end));
}

double max_deviation(const BoundaryOperator& x, const BoundaryOperator& y) {
  double worst = 0.0;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) worst = std::max(worst, std::abs(x.m[j][k] - y.m[j][k]));
  return worst;
}

// phi = (e^l delta(t - l) - delta(t))/sqrt(e^{2l} - 1),
// psi = (e^l delta(t) - delta(t - l))/sqrt(e^{2l} - 1).
BoundaryVector phi_boundary(const DifferentialModel& model) {
  const double e = std::exp(model.ell());
  const double norm = std::sqrt(std::expm1(2.0 * model.ell()));
  return {-1.0 / norm, e / norm};
}

BoundaryVector psi_boundary(const DifferentialModel& model) {
  const double e = std::exp(model.ell());
  const double norm = std::sqrt(std::expm1(2.0 * model.ell()));
  return {e / norm, -1.0 / norm};
}

BoundaryVector to_boundary(const DifferentialModel& model, const CoeffVector& v) {
  const BoundaryVector phi = phi_boundary(model);
  const BoundaryVector psi = psi_boundary(model);
  return {v.c_phi * phi.c_start + v.c_psi * psi.c_start, v.c_phi * phi.c_end + v.c_psi * psi.c_end};
}

BoundaryOperator to_boundary(const DifferentialModel& model, const OperatorCoeffs& op) {
  // Rows of the change of basis: b_j = sum_n basis[j][n] d_n.
  const BoundaryVector phi = phi_boundary(model);
  const BoundaryVector psi = psi_boundary(model);
  const std::array<std::array<complex, 2>, 2> basis{{{phi.c_start, phi.c_end},
                                                     {psi.c_start, psi.c_end}}};
  BoundaryOperator out;
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          out.m[p][q] += std::conj(basis[j][p]) * op.m[j][k] * basis[k][q];
  return out;
}

ChannelCoefficients ex_channel_coefficients(const DifferentialModel& model) {
  const double e = std::exp(model.ell());
  ChannelCoefficients out;
  out.minus_prefactor = std::sqrt((e + 1.0) / (e - 1.0));
  out.plus_prefactor = std::sqrt((e - 1.0) / (e + 1.0));
  out.chi10 = chi_of(VonNeumannParams(0.0, -1.0));
  out.chi1a = chi_of(VonNeumannParams(std::exp(-model.ell()), -1.0));
  const CoeffVector difference = kPhi - kPsi;
  out.chi10_deviation = max_deviation(out.chi10, (1.0 / std::sqrt(2.0)) * difference);
  const double a = ex_params(model).a;
  out.chi1a_deviation = max_deviation(out.chi1a, std::sqrt(a / 2.0) * difference);
  return out;
}

}  // namespace lsys
