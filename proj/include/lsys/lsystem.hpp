#pragma once

#include <complex>
#include <optional>
#include <string>

#include "lsys/bi_extension.hpp"
#include "lsys/extended_real.hpp"
#include "lsys/herglotz.hpp"

namespace lsys {

/// W = (1 - i V)/(1 + i V). Throws Error(MoebiusPole) at V = i.
complex impedance_to_transfer(complex v);

/// V = i (W - 1)/(W + 1). Throws Error(MoebiusPole) at W = -1.
complex transfer_to_impedance(complex w);

/// c-entropy and coefficient of dissipation of one L-system.
/// Invariant: dissipation = 1 - exp(-2 entropy), exp(-inf) = 0.
class EntropyReport {
 public:
  static EntropyReport from_entropy(ExtendedReal entropy);
  static EntropyReport from_kappa(double kappa);
  /// Accepts a pair read from outside; throws Error(ParameterOutOfRange) when
  /// the fields are out of range or violate the invariant by more than 1e-12.
  static EntropyReport from_pair(ExtendedReal entropy, double dissipation);

  ExtendedReal entropy() const { return entropy_; }
  double dissipation() const { return dissipation_; }

 private:
  EntropyReport(ExtendedReal entropy, double dissipation)
      : entropy_(entropy), dissipation_(dissipation) {}
  ExtendedReal entropy_;
  double dissipation_;
};

/// Coupling of two systems: entropies add, dissipations compose as
/// D1 + D2 - D1 D2. (inf, 1) absorbs, (0, 0) is neutral.
EntropyReport couple(const EntropyReport& r1, const EntropyReport& r2);

/// Which representation theorem branch produced a record.
enum class Provenance { Unscaled, Rotated, ScaledBelow, ScaledAbove };

/// Audit label of the branch: "t-6", "t-8", "t-9", "t-10".
const char* to_string(Provenance p);

/// An L-system identified by its von Neumann parameters together with its
/// impedance function and channel vector.
struct LSystemRecord {
  double kappa;
  complex u;
  double a;
  double alpha;
  HerglotzMap impedance;
  CoeffVector channel;
  Provenance provenance;

  VonNeumannParams params() const { return {kappa, u}; }

  /// Equal iff (kappa, U, impedance) agree.
  friend bool operator==(const LSystemRecord& lhs, const LSystemRecord& rhs) {
    return lhs.kappa == rhs.kappa && lhs.u == rhs.u && lhs.impedance == rhs.impedance;
  }
};

/// Builds the unique L-system whose impedance is a * M_alpha, where M is a
/// Donoghue-class reference function and M_alpha its rotation by alpha.
///
///   a = 1, alpha = 0      kappa = 0,                U = -1
///   a = 1, alpha != 0     kappa = 0,                U = -e^{2 i alpha}
///   0 < a < 1, alpha = 0  kappa = (1 - a)/(1 + a),  U = -1
///   a > 1, alpha = 0      kappa = (a - 1)/(1 + a),  U = 1
///
/// |a - 1| <= 1e-9 counts as a = 1. Throws Error(ParameterOutOfRange) for
/// a <= 0, Error(UnsupportedCombination) for alpha != 0 with a != 1 and
/// Error(NotDonoghueNormalized) when M is not in M_0.
LSystemRecord represent(double a, double alpha, const HerglotzMap& reference);

/// -ln kappa, +inf for kappa = 0.
ExtendedReal c_entropy(const LSystemRecord& rec);

/// 1 - kappa^2.
double dissipation_coefficient(const LSystemRecord& rec);

EntropyReport entropy_report(const LSystemRecord& rec);

/// |D - (1 - exp(-2 S))|.
double entropy_dissipation_check(const LSystemRecord& rec);

/// c-entropy recomputed from the transfer function: -ln|W(-i)| with
/// V(-i) = conj(V(i)), and ln|W(i)|. Both are compared to -ln kappa.
struct EntropyCrossCheck {
  ExtendedReal from_kappa;
  ExtendedReal from_w_minus_i;
  ExtendedReal from_w_plus_i;
  double max_disagreement;  // 0 when all three are +inf
  bool agree;               // max_disagreement <= 1e-9 and infinities match
};

EntropyCrossCheck entropy_cross_check(const LSystemRecord& rec);

}  // namespace lsys
