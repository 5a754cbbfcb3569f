#pragma once

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lsys/measures.hpp"

namespace lsys {

inline constexpr double kClassTolerance = 1e-9;

/// s = (m - i)/(m + i). Throws Error(PoleAtCayleyCenter) at m = -i.
complex cayley_m_to_s(complex m);

/// m = (1/i)(s + 1)/(s - 1). Throws Error(PoleAtCayleyCenter) at s = 1.
complex cayley_s_to_m(complex s);

/// Reduces an angle into [0, pi).
double canonical_alpha(double alpha);

/// Weyl function of the rotated reference extension:
///   (cos a * m - sin a) / (cos a + sin a * m).
/// Throws Error(MoebiusPole) when the denominator vanishes.
complex alpha_transform(complex m, double alpha);

/// Livsic-side image of the rotation: e^{2 i alpha} s.
complex livsic_phase_law_check(complex s, double alpha);

/// Immutable expression tree of Herglotz-Nevanlinna functions on the upper
/// half-plane. Copies share structure.
class HerglotzMap {
 public:
  struct FromMeasure {
    SpectralMeasure measure;
  };
  struct ClosedForm {
    std::string id;
    std::map<std::string, double> params;
  };
  struct Scaled;
  struct AlphaRotated;

  static HerglotzMap from_measure(SpectralMeasure measure);
  /// Throws Error(UnknownClosedForm) for unregistered ids and
  /// Error(ParameterOutOfRange) for missing or invalid parameters.
  static HerglotzMap closed_form(std::string id, std::map<std::string, double> params = {});
  static HerglotzMap scaled(double a, HerglotzMap inner);
  static HerglotzMap alpha_rotated(double alpha, HerglotzMap inner);

  complex operator()(complex z) const { return evaluate(z); }
  complex evaluate(complex z) const;

  bool is_from_measure() const;
  bool is_closed_form() const;
  bool is_scaled() const;
  bool is_alpha_rotated() const;

  const FromMeasure& as_from_measure() const;
  const ClosedForm& as_closed_form() const;
  const Scaled& as_scaled() const;
  const AlphaRotated& as_alpha_rotated() const;

  /// Innermost measure when the tree bottoms out in one, else nullptr.
  const SpectralMeasure* underlying_measure() const;

  /// Structural equality of the expression trees.
  friend bool operator==(const HerglotzMap& lhs, const HerglotzMap& rhs);

 private:
  struct Node;
  explicit HerglotzMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct HerglotzMap::Scaled {
  double a;
  HerglotzMap inner;
};

struct HerglotzMap::AlphaRotated {
  double alpha;
  HerglotzMap inner;
};

/// Identifiers accepted by HerglotzMap::closed_form.
std::vector<std::string> registered_closed_forms();

/// Contraction s(z) = cayley_m_to_s(M(z)).
class LivsicMap {
 public:
  explicit LivsicMap(HerglotzMap m) : m_(std::move(m)) {}
  complex operator()(complex z) const { return cayley_m_to_s(m_(z)); }
  const HerglotzMap& weyl() const { return m_; }

 private:
  HerglotzMap m_;
};

enum class DonoghueClass { M_kappa, M_0, M_kappa_inv };

const char* to_string(DonoghueClass tag);

struct ClassReport {
  double a = 0.0;
  double kappa = 0.0;
  DonoghueClass class_tag = DonoghueClass::M_0;
};

/// kappa(a) = |1 - a| / (1 + a), with kappa = 0 inside the M_0 tolerance band.
double kappa_of_norming(double a, double tol = kClassTolerance);

/// Reads the norming constant from f(i) and places f in its Donoghue class.
/// Throws Error(NotHerglotz) when Im f(i) <= 0 and Error(NotCentered) when
/// |Re f(i)| > 1e-9.
ClassReport classify(const HerglotzMap& f);

}  // namespace lsys

namespace lsys {

/// Deterministic spread of n points in the upper half-plane:
/// Re z in [-3, 3) (golden-ratio stride), Im z in (0.1, 3.1).
std::vector<complex> upper_half_plane_grid(std::size_t n);

}  // namespace lsys
