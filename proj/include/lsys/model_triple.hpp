#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lsys/measures.hpp"

namespace lsys {

inline constexpr std::size_t kMaxModelAtoms = 4096;

/// Finite diagonal realization of the model triple: multiplication by the
/// independent variable in L^2(R; sigma) for a discrete sigma. Deficiency
/// vectors are g_+(l) = 1/(l - i), g_-(l) = 1/(l + i), g_z(l) = 1/(l - z).
///
/// Inner products are sigma-weighted, conjugate-linear in the second slot:
///   (f, g) = sum_j w_j f_j conj(g_j).
class ModelTriple {
 public:
  /// Throws Error(EmptyMeasure) for n = 0, Error(DimensionMismatch) when the
  /// lists differ in length, Error(InvalidMeasure) for repeated locations or
  /// non-positive weights, Error(ParameterOutOfRange) for kappa outside [0,1)
  /// or n > kMaxModelAtoms.
  ModelTriple(std::vector<double> lambdas, std::vector<double> weights, double kappa = 0.0);

  /// Atoms of a purely atomic measure; Q is ignored.
  static ModelTriple from_measure(const SpectralMeasure& sigma, double kappa = 0.0);

  std::size_t size() const { return lambdas_.size(); }
  const std::vector<double>& lambdas() const { return lambdas_; }
  const std::vector<double>& weights() const { return weights_; }
  double kappa() const { return kappa_; }

  std::vector<complex> g_plus() const;
  std::vector<complex> g_minus() const;
  std::vector<complex> g_z(complex z) const;

  complex inner(std::span<const complex> f, std::span<const complex> g) const;

  /// ||g_+||^2, which is the norming constant of sigma.
  double norming_constant() const;

  SpectralMeasure measure() const;

 private:
  std::vector<double> lambdas_;
  std::vector<double> weights_;
  double kappa_;
};

/// ((B z + I)(B - z)^{-1} g, g) for the unit vector g = g_+/||g_+||.
/// Throws Error(RealAxisEvaluation).
complex weyl_from_resolvent(const ModelTriple& model, complex z);

struct OracleComparison {
  complex resolvent_path;  // a * weyl_from_resolvent
  complex transform_path;  // herglotz_transform with Q = 0
  double abs_difference;
};

OracleComparison oracle_compare(const ModelTriple& model, complex z);

/// ((z - i)/(z + i)) (g_z, g_-)/(g_z, g_+) for Im z > 0.
/// Throws Error(NotDonoghueNormalized) unless |a - 1| <= 1e-9 and
/// Error(DegenerateDeficiencyPairing) when (g_z, g_+) vanishes.
complex livsic_from_deficiency(const ModelTriple& model, complex z);

/// sum_j w_j f_j; zero exactly on the domain of the symmetric restriction.
/// Throws Error(DimensionMismatch).
complex domain_functional(const ModelTriple& model, std::span<const complex> f);

}  // namespace lsys
