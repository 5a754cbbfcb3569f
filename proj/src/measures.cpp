#include "lsys/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lsys/error.hpp"

namespace lsys {
namespace {

void validate_atoms(const std::vector<Atom>& atoms) {
  for (const Atom& atom : atoms) {
    if (!std::isfinite(atom.lambda) || !std::isfinite(atom.weight)) {
      throw Error(Errc::InvalidMeasure, "atom fields must be finite");
    }
    if (!(atom.weight > 0.0)) {
      throw Error(Errc::InvalidMeasure,
                  "atom at " + std::to_string(atom.lambda) + " has non-positive weight");
    }
  }
  std::vector<double> locations;
  locations.reserve(atoms.size());
  for (const Atom& atom : atoms) locations.push_back(atom.lambda);
  std::sort(locations.begin(), locations.end());
  if (std::adjacent_find(locations.begin(), locations.end()) != locations.end()) {
    throw Error(Errc::InvalidMeasure, "atom locations must be pairwise distinct");
  }
}

void validate_density(const Density& density) {
  if (density.grid.size() < 2) {
    throw Error(Errc::InvalidMeasure, "density grid needs at least two points");
  }
  if (density.grid.size() != density.values.size()) {
    throw Error(Errc::InvalidMeasure, "density grid and values differ in length");
  }
  for (std::size_t k = 0; k < density.grid.size(); ++k) {
    if (!std::isfinite(density.grid[k]) || !std::isfinite(density.values[k])) {
      throw Error(Errc::InvalidMeasure, "density entries must be finite");
    }
    if (density.values[k] < 0.0) {
      throw Error(Errc::InvalidMeasure, "density values must be nonnegative");
    }
    if (k > 0 && !(density.grid[k] > density.grid[k - 1])) {
      throw Error(Errc::InvalidMeasure, "density grid must be strictly increasing");
    }
  }
}

// Composite trapezoid of values[k] * kernel(grid[k]).
template <typename Kernel>
auto trapezoid(const Density& density, Kernel kernel) {
  using value_type = decltype(kernel(0.0));
  value_type sum{};
  for (std::size_t k = 1; k < density.grid.size(); ++k) {
    const double h = density.grid[k] - density.grid[k - 1];
    sum += 0.5 * h *
           (density.values[k - 1] * kernel(density.grid[k - 1]) +
            density.values[k] * kernel(density.grid[k]));
  }
  return sum;
}

}  // namespace

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::optional<Density> density,
                                 double shift_q)
    : atoms_(std::move(atoms)), density_(std::move(density)), shift_q_(shift_q) {
  if (!std::isfinite(shift_q_)) throw Error(Errc::InvalidMeasure, "Q must be finite");
  validate_atoms(atoms_);
  if (density_) validate_density(*density_);
}

SpectralMeasure SpectralMeasure::point_mass(double lambda, double weight) {
  return SpectralMeasure({Atom{lambda, weight}});
}

SpectralMeasure SpectralMeasure::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(Errc::ParameterOutOfRange, "scale factor must be positive");
  }
  std::vector<Atom> atoms = atoms_;
  for (Atom& atom : atoms) atom.weight *= factor;
  std::optional<Density> density = density_;
  if (density) {
    for (double& v : density->values) v *= factor;
  }
  return SpectralMeasure(std::move(atoms), std::move(density), shift_q_ * factor);
}

bool operator==(const SpectralMeasure& lhs, const SpectralMeasure& rhs) {
  if (lhs.shift_q_ != rhs.shift_q_ || lhs.density_ != rhs.density_) return false;
  if (lhs.atoms_.size() != rhs.atoms_.size()) return false;
  auto by_location = [](const Atom& x, const Atom& y) { return x.lambda < y.lambda; };
  std::vector<Atom> a = lhs.atoms_;
  std::vector<Atom> b = rhs.atoms_;
  std::sort(a.begin(), a.end(), by_location);
  std::sort(b.begin(), b.end(), by_location);
  return a == b;
}

double norming_constant(const SpectralMeasure& sigma) {
  if (sigma.empty()) throw Error(Errc::EmptyMeasure, "norming constant of an empty measure");
  double a = 0.0;
  for (const Atom& atom : sigma.atoms()) a += atom.weight / (1.0 + atom.lambda * atom.lambda);
  if (sigma.density()) {
    a += trapezoid(*sigma.density(), [](double l) { return 1.0 / (1.0 + l * l); });
  }
  return a;
}

complex herglotz_transform(const SpectralMeasure& sigma, complex z) {
  if (z.imag() == 0.0) {
    throw Error(Errc::RealAxisEvaluation, "Herglotz transform needs Im z != 0");
  }
  auto kernel = [z](double l) -> complex { return 1.0 / (l - z) - l / (1.0 + l * l); };
  complex m = sigma.shift_q();
  for (const Atom& atom : sigma.atoms()) m += atom.weight * kernel(atom.lambda);
  if (sigma.density()) m += trapezoid(*sigma.density(), kernel);
  return m;
}

}  // namespace lsys
