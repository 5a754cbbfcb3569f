#pragma once

#include <array>
#include <complex>

namespace lsys {

using complex = std::complex<double>;

/// c_phi * phi + c_psi * psi over the formal basis phi = R^{-1} g_+,
/// psi = R^{-1} g_-.
struct CoeffVector {
  complex c_phi{};
  complex c_psi{};

  friend CoeffVector operator+(const CoeffVector& x, const CoeffVector& y) {
    return {x.c_phi + y.c_phi, x.c_psi + y.c_psi};
  }
  friend CoeffVector operator-(const CoeffVector& x, const CoeffVector& y) {
    return {x.c_phi - y.c_phi, x.c_psi - y.c_psi};
  }
  friend CoeffVector operator*(complex s, const CoeffVector& x) {
    return {s * x.c_phi, s * x.c_psi};
  }
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

  complex operator[](std::size_t k) const { return k == 0 ? c_phi : c_psi; }
};

inline constexpr CoeffVector kPhi{1.0, 0.0};
inline constexpr CoeffVector kPsi{0.0, 1.0};

/// sum_jk m[j][k] ( . , b_j) b_k with b_0 = phi, b_1 = psi.
struct OperatorCoeffs {
  std::array<std::array<complex, 2>, 2> m{};

  friend OperatorCoeffs operator+(const OperatorCoeffs& x, const OperatorCoeffs& y);
  friend OperatorCoeffs operator-(const OperatorCoeffs& x, const OperatorCoeffs& y);
  friend OperatorCoeffs operator*(complex s, const OperatorCoeffs& x);
  friend bool operator==(const OperatorCoeffs&, const OperatorCoeffs&) = default;
};

/// Largest entrywise modulus of x - y.
double max_deviation(const OperatorCoeffs& x, const OperatorCoeffs& y);
double max_deviation(const CoeffVector& x, const CoeffVector& y);

/// scalar * ( . , bra) ket. The bra slot is conjugate-linear, so the
/// coefficient matrix is scalar * conj(bra_j) * ket_k.
struct RankOnePerturbation {
  complex scalar{1.0};
  CoeffVector bra;
  CoeffVector ket;

  OperatorCoeffs coeffs() const;
};

/// ( . , v) v
OperatorCoeffs outer(const CoeffVector& v);

/// c_plus * g_+ + c_minus * g_-; pairs with the basis as (g_+, phi) = 1,
/// (g_+, psi) = 0, (g_-, phi) = 0, (g_-, psi) = 1.
struct DomVector {
  complex c_plus{};
  complex c_minus{};
};

inline constexpr double kIllConditionedGap = 1e-8;

/// Von Neumann parameters (kappa, U) of the main operator and of the
/// reference extension: g_+ - kappa g_- in Dom(T), g_+ + U g_- in Dom(A).
class VonNeumannParams {
 public:
  /// Throws Error(ParameterOutOfRange) for kappa outside [0,1) and
  /// Error(NotUnimodular) when ||U| - 1| > 1e-12.
  VonNeumannParams(double kappa, complex u);

  double kappa() const { return kappa_; }
  complex u() const { return u_; }

  /// Set when 1 - kappa^2 < 1e-8; results are still produced.
  bool ill_conditioned() const { return 1.0 - kappa_ * kappa_ < kIllConditionedGap; }

  friend bool operator==(const VonNeumannParams&, const VonNeumannParams&) = default;

 private:
  double kappa_;
  complex u_;
};

/// Channel vector chi with Im A = ( . , chi) chi.
CoeffVector chi_of(const VonNeumannParams& p);

/// Rank-one part of the state-space operator A = A_dot^* + c ( . , kappa phi + psi) chi.
RankOnePerturbation state_space_perturbation(const VonNeumannParams& p);
OperatorCoeffs state_space_of(const VonNeumannParams& p);

OperatorCoeffs im_of(const VonNeumannParams& p);

/// Rank-one part of Re A.
RankOnePerturbation re_perturbation(const VonNeumannParams& p);
OperatorCoeffs re_of(const VonNeumannParams& p);

/// max-entry deviation between state_space_of and re_of + i im_of.
double decompose_check(const VonNeumannParams& p);

/// sum_jk m[j][k] (v, b_j) b_k.
CoeffVector apply_to_dom(const OperatorCoeffs& op, const DomVector& v);

}  // namespace lsys
