#include "lsys/model_triple.hpp"

#include <algorithm>
#include <cmath>

#include "lsys/error.hpp"
#include "lsys/herglotz.hpp"

namespace lsys {
namespace {

constexpr complex kI{0.0, 1.0};

}  // namespace

ModelTriple::ModelTriple(std::vector<double> lambdas, std::vector<double> weights, double kappa)
    : lambdas_(std::move(lambdas)), weights_(std::move(weights)), kappa_(kappa) {
  if (lambdas_.size() != weights_.size()) {
    throw Error(Errc::DimensionMismatch, "lambdas and weights differ in length");
  }
  if (lambdas_.empty()) throw Error(Errc::EmptyMeasure, "model triple needs at least one atom");
  if (lambdas_.size() > kMaxModelAtoms) {
    throw Error(Errc::ParameterOutOfRange, "model triple is capped at 4096 atoms");
  }
  if (!(kappa_ >= 0.0 && kappa_ < 1.0)) {
    throw Error(Errc::ParameterOutOfRange, "kappa must lie in [0, 1)");
  }
  // Reuse the measure validation for positivity and distinctness.
  (void)measure();
}

ModelTriple ModelTriple::from_measure(const SpectralMeasure& sigma, double kappa) {
  if (sigma.density()) {
    throw Error(Errc::InvalidMeasure, "model triple needs a purely atomic measure");
  }
  std::vector<double> lambdas;
  std::vector<double> weights;
  for (const Atom& atom : sigma.atoms()) {
    lambdas.push_back(atom.lambda);
    weights.push_back(atom.weight);
  }
  return ModelTriple(std::move(lambdas), std::move(weights), kappa);
}

std::vector<complex> ModelTriple::g_plus() const { return g_z(kI); }

std::vector<complex> ModelTriple::g_minus() const { return g_z(-kI); }

std::vector<complex> ModelTriple::g_z(complex z) const {
  std::vector<complex> g(lambdas_.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = 1.0 / (lambdas_[j] - z);
  return g;
}

complex ModelTriple::inner(std::span<const complex> f, std::span<const complex> g) const {
  if (f.size() != size() || g.size() != size()) {
    throw Error(Errc::DimensionMismatch, "vector length does not match the model");
  }
  complex sum = 0.0;
  for (std::size_t j = 0; j < size(); ++j) sum += weights_[j] * f[j] * std::conj(g[j]);
  return sum;
}

double ModelTriple::norming_constant() const {
  const std::vector<complex> g = g_plus();
  return inner(g, g).real();
}

SpectralMeasure ModelTriple::measure() const {
  std::vector<Atom> atoms;
  atoms.reserve(size());
  for (std::size_t j = 0; j < size(); ++j) atoms.push_back({lambdas_[j], weights_[j]});
  return SpectralMeasure(std::move(atoms));
}

complex weyl_from_resolvent(const ModelTriple& model, complex z) {
  if (z.imag() == 0.0) throw Error(Errc::RealAxisEvaluation, "resolvent needs Im z != 0");
  std::vector<complex> g = model.g_plus();
  const double norm = std::sqrt(model.norming_constant());
  for (complex& v : g) v /= norm;
  std::vector<complex> image(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double l = model.lambdas()[j];
    image[j] = (l * z + 1.0) / (l - z) * g[j];
  }
  return model.inner(image, g);
}

OracleComparison oracle_compare(const ModelTriple& model, complex z) {
  OracleComparison out;
  out.resolvent_path = model.norming_constant() * weyl_from_resolvent(model, z);
  out.transform_path = herglotz_transform(model.measure(), z);
  out.abs_difference = std::abs(out.resolvent_path - out.transform_path);
  return out;
}

complex livsic_from_deficiency(const ModelTriple& model, complex z) {
  if (!(z.imag() > 0.0)) {
    throw Error(Errc::RealAxisEvaluation, "Livsic function is defined for Im z > 0");
  }
  if (std::abs(model.norming_constant() - 1.0) > kClassTolerance) {
    throw Error(Errc::NotDonoghueNormalized, "needs norming constant a = 1");
  }
  const std::vector<complex> gz = model.g_z(z);
  const complex num = model.inner(gz, model.g_minus());
  const complex den = model.inner(gz, model.g_plus());
  if (std::abs(den) == 0.0) {
    throw Error(Errc::DegenerateDeficiencyPairing, "(g_z, g_+) vanishes");
  }
  return (z - kI) / (z + kI) * num / den;
}

complex domain_functional(const ModelTriple& model, std::span<const complex> f) {
  if (f.size() != model.size()) {
    throw Error(Errc::DimensionMismatch, "vector length does not match the model");
  }
  complex sum = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) sum += model.weights()[j] * f[j];
  return sum;
}

}  // namespace lsys
