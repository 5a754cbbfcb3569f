#include "lsys/herglotz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <variant>

#include "lsys/error.hpp"

namespace lsys {
namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kPoleTolerance = 1e-14;

struct ClosedFormEntry {
  std::vector<std::string> params;
  std::function<complex(const std::map<std::string, double>&, complex)> eval;
};

// e^{-i l z}
complex shift_exponential(double ell, complex z) { return std::exp(-kI * ell * z); }

const std::map<std::string, ClosedFormEntry>& registry() {
  static const std::map<std::string, ClosedFormEntry> entries = {
      // -1/z: the Donoghue function of the unit point mass at 0.
      {"neg_reciprocal",
       {{},
        [](const std::map<std::string, double>&, complex z) -> complex { return -1.0 / z; }}},
      // Weyl function of i d/dt on [0, l] with antiperiodic reference extension.
      {"interval_weyl",
       {{"ell"},
        [](const std::map<std::string, double>& p, complex z) -> complex {
          const double ell = p.at("ell");
          const double e = std::exp(ell);
          const complex w = shift_exponential(ell, z);
          if (std::abs(w + 1.0) < kPoleTolerance) {
            throw Error(Errc::DegeneratePoint, "interval_weyl pole");
          }
          return kI * ((e + 1.0) / (e - 1.0)) * (w - 1.0) / (w + 1.0);
        }}},
  };
  return entries;
}

}  // namespace

struct HerglotzMap::Node {
  std::variant<FromMeasure, ClosedForm, Scaled, AlphaRotated> kind;
};

complex cayley_m_to_s(complex m) {
  const complex den = m + kI;
  if (std::abs(den) <= kPoleTolerance) {
    throw Error(Errc::PoleAtCayleyCenter, "m = -i has no Cayley image");
  }
  return (m - kI) / den;
}

complex cayley_s_to_m(complex s) {
  const complex den = s - 1.0;
  if (std::abs(den) <= kPoleTolerance) {
    throw Error(Errc::PoleAtCayleyCenter, "s = 1 has no inverse Cayley image");
  }
  return (s + 1.0) / (kI * den);
}

double canonical_alpha(double alpha) {
  if (!std::isfinite(alpha)) throw Error(Errc::ParameterOutOfRange, "alpha must be finite");
  double r = std::fmod(alpha, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r = 0.0;
  return r;
}

complex alpha_transform(complex m, double alpha) {
  const double a = canonical_alpha(alpha);
  if (a == 0.0) return m;
  const double c = std::cos(a);
  const double s = std::sin(a);
  const complex den = c + s * m;
  if (std::abs(den) <= kPoleTolerance) {
    throw Error(Errc::MoebiusPole, "cos(alpha) + sin(alpha) m vanishes");
  }
  return (c * m - s) / den;
}

complex livsic_phase_law_check(complex s, double alpha) {
  return std::polar(1.0, 2.0 * alpha) * s;
}

HerglotzMap HerglotzMap::from_measure(SpectralMeasure measure) {
  return HerglotzMap(std::make_shared<const Node>(Node{FromMeasure{std::move(measure)}}));
}

HerglotzMap HerglotzMap::closed_form(std::string id, std::map<std::string, double> params) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw Error(Errc::UnknownClosedForm, "no closed form '" + id + "'");
  for (const std::string& name : it->second.params) {
    const auto p = params.find(name);
    if (p == params.end()) {
      throw Error(Errc::ParameterOutOfRange, id + " needs parameter '" + name + "'");
    }
    if (!(p->second > 0.0) || !std::isfinite(p->second)) {
      throw Error(Errc::ParameterOutOfRange, id + " parameter '" + name + "' must be positive");
    }
  }
  for (const auto& [name, value] : params) {
    (void)value;
    if (std::find(it->second.params.begin(), it->second.params.end(), name) ==
        it->second.params.end()) {
      throw Error(Errc::ParameterOutOfRange, id + " has no parameter '" + name + "'");
    }
  }
  return HerglotzMap(
      std::make_shared<const Node>(Node{ClosedForm{std::move(id), std::move(params)}}));
}

HerglotzMap HerglotzMap::scaled(double a, HerglotzMap inner) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(Errc::ParameterOutOfRange, "scale a must be > 0");
  return HerglotzMap(std::make_shared<const Node>(Node{Scaled{a, std::move(inner)}}));
}

HerglotzMap HerglotzMap::alpha_rotated(double alpha, HerglotzMap inner) {
  return HerglotzMap(
      std::make_shared<const Node>(Node{AlphaRotated{canonical_alpha(alpha), std::move(inner)}}));
}

complex HerglotzMap::evaluate(complex z) const {
  if (z.imag() == 0.0) throw Error(Errc::RealAxisEvaluation, "evaluation needs Im z != 0");
  return std::visit(
      [z](const auto& k) -> complex {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, FromMeasure>) {
          return herglotz_transform(k.measure, z);
        } else if constexpr (std::is_same_v<K, ClosedForm>) {
          return registry().at(k.id).eval(k.params, z);
        } else if constexpr (std::is_same_v<K, Scaled>) {
          return k.a * k.inner.evaluate(z);
        } else {
          return alpha_transform(k.inner.evaluate(z), k.alpha);
        }
      },
      node_->kind);
}

bool HerglotzMap::is_from_measure() const { return std::holds_alternative<FromMeasure>(node_->kind); }
bool HerglotzMap::is_closed_form() const { return std::holds_alternative<ClosedForm>(node_->kind); }
bool HerglotzMap::is_scaled() const { return std::holds_alternative<Scaled>(node_->kind); }
bool HerglotzMap::is_alpha_rotated() const {
  return std::holds_alternative<AlphaRotated>(node_->kind);
}

const HerglotzMap::FromMeasure& HerglotzMap::as_from_measure() const {
  return std::get<FromMeasure>(node_->kind);
}
const HerglotzMap::ClosedForm& HerglotzMap::as_closed_form() const {
  return std::get<ClosedForm>(node_->kind);
}
const HerglotzMap::Scaled& HerglotzMap::as_scaled() const { return std::get<Scaled>(node_->kind); }
const HerglotzMap::AlphaRotated& HerglotzMap::as_alpha_rotated() const {
  return std::get<AlphaRotated>(node_->kind);
}

const SpectralMeasure* HerglotzMap::underlying_measure() const {
  if (is_from_measure()) return &as_from_measure().measure;
  if (is_scaled()) return as_scaled().inner.underlying_measure();
  if (is_alpha_rotated()) return as_alpha_rotated().inner.underlying_measure();
  return nullptr;
}

bool operator==(const HerglotzMap& lhs, const HerglotzMap& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& l = lhs.node_->kind;
  const auto& r = rhs.node_->kind;
  if (l.index() != r.index()) return false;
  if (const auto* x = std::get_if<HerglotzMap::FromMeasure>(&l)) {
    return x->measure == std::get<HerglotzMap::FromMeasure>(r).measure;
  }
  if (const auto* x = std::get_if<HerglotzMap::ClosedForm>(&l)) {
    const auto& y = std::get<HerglotzMap::ClosedForm>(r);
    return x->id == y.id && x->params == y.params;
  }
  if (const auto* x = std::get_if<HerglotzMap::Scaled>(&l)) {
    const auto& y = std::get<HerglotzMap::Scaled>(r);
    return x->a == y.a && x->inner == y.inner;
  }
  const auto& x = std::get<HerglotzMap::AlphaRotated>(l);
  const auto& y = std::get<HerglotzMap::AlphaRotated>(r);
  return x.alpha == y.alpha && x.inner == y.inner;
}

std::vector<std::string> registered_closed_forms() {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : registry()) {
    (void)entry;
    ids.push_back(id);
  }
  return ids;
}

const char* to_string(DonoghueClass tag) {
  switch (tag) {
    case DonoghueClass::M_kappa: return "M_kappa";
    case DonoghueClass::M_0: return "M_0";
    case DonoghueClass::M_kappa_inv: return "M_kappa_inv";
  }
  return "unknown";
}

double kappa_of_norming(double a, double tol) {
  if (!(a > 0.0)) throw Error(Errc::ParameterOutOfRange, "norming constant must be > 0");
  if (std::abs(a - 1.0) <= tol) return 0.0;
  return std::abs(1.0 - a) / (1.0 + a);
}

ClassReport classify(const HerglotzMap& f) {
  const complex m = f(kI);
  if (!(m.imag() > 0.0)) throw Error(Errc::NotHerglotz, "Im f(i) must be positive");
  if (std::abs(m.real()) > kClassTolerance) {
    throw Error(Errc::NotCentered, "Re f(i) = " + std::to_string(m.real()) + " (Q != 0)");
  }
  ClassReport report;
  report.a = m.imag();
  report.kappa = kappa_of_norming(report.a);
  if (report.a < 1.0 - kClassTolerance) {
    report.class_tag = DonoghueClass::M_kappa;
  } else if (report.a > 1.0 + kClassTolerance) {
    report.class_tag = DonoghueClass::M_kappa_inv;
  } else {
    report.class_tag = DonoghueClass::M_0;
  }
  return report;
}

}  // namespace lsys

namespace lsys {

std::vector<complex> upper_half_plane_grid(std::size_t n) {
  constexpr double kStride = 0.6180339887498949;
  std::vector<complex> grid;
  grid.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double frac = std::fmod(static_cast<double>(k) * kStride, 1.0);
    const double im = 0.1 + 3.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    grid.emplace_back(6.0 * frac - 3.0, im);
  }
  return grid;
}

}  // namespace lsys
