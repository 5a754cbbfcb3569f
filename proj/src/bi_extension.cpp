#include "lsys/bi_extension.hpp"

#include <algorithm>
#include <cmath>

#include "lsys/error.hpp"

namespace lsys {
namespace {

constexpr complex kI{0.0, 1.0};

// sqrt(2) |1 + kappa U| sqrt(1 - kappa^2), the common denominator of chi.
double chi_denominator(const VonNeumannParams& p) {
  return std::sqrt(2.0) * std::abs(1.0 + p.kappa() * p.u()) * std::sqrt(1.0 - p.kappa() * p.kappa());
}

}  // namespace

OperatorCoeffs operator+(const OperatorCoeffs& x, const OperatorCoeffs& y) {
  OperatorCoeffs r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) r.m[j][k] = x.m[j][k] + y.m[j][k];
  return r;
}

OperatorCoeffs operator-(const OperatorCoeffs& x, const OperatorCoeffs& y) {
  OperatorCoeffs r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) r.m[j][k] = x.m[j][k] - y.m[j][k];
  return r;
}

OperatorCoeffs operator*(complex s, const OperatorCoeffs& x) {
  OperatorCoeffs r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) r.m[j][k] = s * x.m[j][k];
  return r;
}

double max_deviation(const OperatorCoeffs& x, const OperatorCoeffs& y) {
  double worst = 0.0;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) worst = std::max(worst, std::abs(x.m[j][k] - y.m[j][k]));
  return worst;
}

double max_deviation(const CoeffVector& x, const CoeffVector& y) {
  return std::max(std::abs(x.c_phi - y.c_phi), std::abs(x.c_psi - y.c_psi));
}

OperatorCoeffs RankOnePerturbation::coeffs() const {
  OperatorCoeffs r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) r.m[j][k] = scalar * std::conj(bra[j]) * ket[k];
  return r;
}

OperatorCoeffs outer(const CoeffVector& v) { return RankOnePerturbation{1.0, v, v}.coeffs(); }

VonNeumannParams::VonNeumannParams(double kappa, complex u) : kappa_(kappa), u_(u) {
  if (!(kappa >= 0.0 && kappa < 1.0)) {
    throw Error(Errc::ParameterOutOfRange, "kappa must lie in [0, 1)");
  }
  if (!(std::abs(std::abs(u) - 1.0) <= 1e-12)) {
    throw Error(Errc::NotUnimodular, "|U| must equal 1");
  }
}

CoeffVector chi_of(const VonNeumannParams& p) {
  const double k = p.kappa();
  const complex u = p.u();
  const double den = chi_denominator(p);
  return {(k * k + 1.0 + 2.0 * k * u) / den, (k * k * u + 2.0 * k + u) / den};
}

RankOnePerturbation state_space_perturbation(const VonNeumannParams& p) {
  const double k = p.kappa();
  const complex c = std::sqrt(2.0) * kI * (k + std::conj(p.u())) /
                    (std::abs(1.0 + k * p.u()) * std::sqrt(1.0 - k * k));
  return {c, CoeffVector{k, 1.0}, chi_of(p)};
}

OperatorCoeffs state_space_of(const VonNeumannParams& p) {
  return state_space_perturbation(p).coeffs();
}

OperatorCoeffs im_of(const VonNeumannParams& p) { return outer(chi_of(p)); }

RankOnePerturbation re_perturbation(const VonNeumannParams& p) {
  const double k = p.kappa();
  const complex c = -kI * std::sqrt(1.0 - k * k) / (std::sqrt(2.0) * std::abs(1.0 + k * p.u()));
  return {c, CoeffVector{1.0, -p.u()}, chi_of(p)};
}

OperatorCoeffs re_of(const VonNeumannParams& p) { return re_perturbation(p).coeffs(); }

double decompose_check(const VonNeumannParams& p) {
  return max_deviation(state_space_of(p), re_of(p) + kI * im_of(p));
}

CoeffVector apply_to_dom(const OperatorCoeffs& op, const DomVector& v) {
  const std::array<complex, 2> pairing{v.c_plus, v.c_minus};
  CoeffVector out;
  for (std::size_t j = 0; j < 2; ++j) {
    out.c_phi += op.m[j][0] * pairing[j];
    out.c_psi += op.m[j][1] * pairing[j];
  }
  return out;
}

}  // namespace lsys
