#pragma once

#include <span>

#include "lsys/extended_real.hpp"

namespace lsys {

struct EntropyCurvePoint {
  double a;
  ExtendedReal entropy;
  double dissipation;
};

/// ln|(a + 1)/(a - 1)|, +inf at a = 1. Throws Error(ParameterOutOfRange) for a <= 0.
ExtendedReal entropy_of_a(double a);

/// 4a/(1 + a)^2. Throws Error(ParameterOutOfRange) for a <= 0.
double dissipation_of_a(double a);

EntropyCurvePoint curve_point(double a);

/// Derivative of ln(a + 1) - ln(a - 1): 1/(a + 1) - 1/(a - 1).
double entropy_derivative(double a);

enum class Pole { Plus = 1, Minus = -1 };

/// Residue estimate of the entropy one-form at a = +1 or a = -1 from samples
/// (a - a0) S'(a) at a = a0 + h, extrapolated to h = 0 (Neville). Throws
/// Error(ParameterOutOfRange) for an empty sequence or h outside (0, 0.1].
double residue_probe(Pole pole, std::span<const double> h);

/// Both solutions of 4a/(1 + a)^2 = d. For d = 1 the pair collapses to the
/// double root a = 1 and double_root is set.
struct MatchingPair {
  double a_small;
  double a_large;
  bool double_root;
};

/// Throws Error(ParameterOutOfRange) for d outside (0, 1].
MatchingPair matching_pair(double d_target);

}  // namespace lsys
