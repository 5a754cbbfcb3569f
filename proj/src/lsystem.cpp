#include "lsys/lsystem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lsys/error.hpp"

namespace lsys {
namespace {

constexpr complex kI{0.0, 1.0};
constexpr double kPoleTolerance = 1e-14;
constexpr double kReportTolerance = 1e-12;
constexpr double kCrossCheckTolerance = 1e-9;

ExtendedReal neg_log(double x) {
  if (x == 0.0) return ExtendedReal::infinity();
  return ExtendedReal(-std::log(x));
}

// |W| values inside the M_0 band count as the exact zero (or pole) that a = 1
// produces; measure-backed impedances only reach a = 1 to rounding.
ExtendedReal banded_neg_log(double modulus) {
  if (modulus <= kClassTolerance) return ExtendedReal::infinity();
  return ExtendedReal(-std::log(modulus));
}

}  // namespace

complex impedance_to_transfer(complex v) {
  const complex den = 1.0 + kI * v;
  if (std::abs(den) <= kPoleTolerance) throw Error(Errc::MoebiusPole, "1 + iV vanishes");
  return (1.0 - kI * v) / den;
}

complex transfer_to_impedance(complex w) {
  const complex den = w + 1.0;
  if (std::abs(den) <= kPoleTolerance) throw Error(Errc::MoebiusPole, "W + 1 vanishes");
  return kI * (w - 1.0) / den;
}

EntropyReport EntropyReport::from_entropy(ExtendedReal entropy) {
  if (entropy.is_infinite()) return {entropy, 1.0};
  if (!(entropy.value() >= 0.0)) {
    throw Error(Errc::ParameterOutOfRange, "c-entropy must be nonnegative");
  }
  return {entropy, -std::expm1(-2.0 * entropy.value())};
}

EntropyReport EntropyReport::from_kappa(double kappa) {
  if (!(kappa >= 0.0 && kappa < 1.0)) {
    throw Error(Errc::ParameterOutOfRange, "kappa must lie in [0, 1)");
  }
  return {neg_log(kappa), 1.0 - kappa * kappa};
}

EntropyReport EntropyReport::from_pair(ExtendedReal entropy, double dissipation) {
  const EntropyReport expected = from_entropy(entropy);
  if (!(dissipation >= 0.0 && dissipation <= 1.0) ||
      std::abs(dissipation - expected.dissipation()) > kReportTolerance) {
    throw Error(Errc::ParameterOutOfRange, "dissipation inconsistent with c-entropy");
  }
  return {entropy, dissipation};
}

EntropyReport couple(const EntropyReport& r1, const EntropyReport& r2) {
  const ExtendedReal s = r1.entropy() + r2.entropy();
  if (s.is_infinite()) return EntropyReport::from_entropy(s);
  const double d1 = r1.dissipation();
  const double d2 = r2.dissipation();
  return EntropyReport::from_pair(s, d1 + d2 - d1 * d2);
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Unscaled: return "t-6";
    case Provenance::Rotated: return "t-8";
    case Provenance::ScaledBelow: return "t-9";
    case Provenance::ScaledAbove: return "t-10";
  }
  return "unknown";
}

LSystemRecord represent(double a, double alpha, const HerglotzMap& reference) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(Errc::ParameterOutOfRange, "a must be > 0");
  const double rotation = canonical_alpha(alpha);
  const bool unit = std::abs(a - 1.0) <= kClassTolerance;
  if (rotation != 0.0 && !unit) {
    throw Error(Errc::UnsupportedCombination, "alpha != 0 is only represented for a = 1");
  }
  const ClassReport reference_class = classify(reference);
  if (reference_class.class_tag != DonoghueClass::M_0) {
    throw Error(Errc::NotDonoghueNormalized, "reference function must satisfy M(i) = i");
  }

  double kappa = 0.0;
  complex u = -1.0;
  Provenance provenance = Provenance::Unscaled;
  if (unit && rotation != 0.0) {
    u = -std::polar(1.0, 2.0 * rotation);
    provenance = Provenance::Rotated;
  } else if (a < 1.0 && !unit) {
    kappa = (1.0 - a) / (1.0 + a);
    provenance = Provenance::ScaledBelow;
  } else if (a > 1.0 && !unit) {
    kappa = (a - 1.0) / (1.0 + a);
    u = 1.0;
    provenance = Provenance::ScaledAbove;
  }

  HerglotzMap impedance = rotation == 0.0 ? reference
                                          : HerglotzMap::alpha_rotated(rotation, reference);
  if (a != 1.0) impedance = HerglotzMap::scaled(a, impedance);
  const VonNeumannParams params(kappa, u);
  return LSystemRecord{kappa, u, a, rotation, std::move(impedance), chi_of(params), provenance};
}

ExtendedReal c_entropy(const LSystemRecord& rec) { return neg_log(rec.kappa); }

double dissipation_coefficient(const LSystemRecord& rec) { return 1.0 - rec.kappa * rec.kappa; }

EntropyReport entropy_report(const LSystemRecord& rec) {
  return EntropyReport::from_kappa(rec.kappa);
}

double entropy_dissipation_check(const LSystemRecord& rec) {
  const ExtendedReal s = c_entropy(rec);
  const double law = s.is_infinite() ? 1.0 : -std::expm1(-2.0 * s.value());
  return std::abs(dissipation_coefficient(rec) - law);
}

EntropyCrossCheck entropy_cross_check(const LSystemRecord& rec) {
  EntropyCrossCheck out;
  out.from_kappa = c_entropy(rec);

  const complex v_plus = rec.impedance(kI);
  const complex v_minus = std::conj(v_plus);
  out.from_w_minus_i = banded_neg_log(std::abs(impedance_to_transfer(v_minus)));
  // z = i is a pole of W exactly when kappa = 0; |W(i)| = 1/|1 + i V(i)| * |1 - i V(i)|.
  const double pole_gap = std::abs(1.0 + kI * v_plus);
  out.from_w_plus_i = banded_neg_log(pole_gap / std::abs(1.0 - kI * v_plus));

  out.max_disagreement = 0.0;
  out.agree = true;
  for (const ExtendedReal& other : {out.from_w_minus_i, out.from_w_plus_i}) {
    if (other.is_infinite() != out.from_kappa.is_infinite()) {
      out.agree = false;
      out.max_disagreement = std::numeric_limits<double>::infinity();
    } else if (other.is_finite()) {
      out.max_disagreement =
          std::max(out.max_disagreement, std::abs(other.value() - out.from_kappa.value()));
    }
  }
  out.agree = out.agree && out.max_disagreement <= kCrossCheckTolerance;
  return out;
}

}  // namespace lsys
