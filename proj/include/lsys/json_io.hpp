#pragma once

#include <string>

#include "json.hpp"
#include "lsys/herglotz.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/measures.hpp"

namespace lsys {

using Json = nlohmann::ordered_json;

/// Deterministic compact rendering: floats with 17 significant digits
/// (always carrying a decimal point or exponent), keys in insertion order.
std::string dump_canonical(const Json& doc);

std::string format_double(double x);

/// Parses `{"q":..., "atoms":[{"lambda":..,"weight":..}], "density":{..}|null}`.
/// Throws Error(ParseError) for schema violations and Error(InvalidMeasure)
/// for invalid data.
SpectralMeasure measure_from_json(const Json& doc);
Json to_json(const SpectralMeasure& sigma);

Json to_json(complex z);
complex complex_from_json(const Json& doc);

/// Extended reals: numbers, or the string "inf".
Json to_json(ExtendedReal x);
ExtendedReal extended_from_json(const Json& doc);

/// Expression trees with a "kind" discriminator:
/// "measure", "closed_form", "scaled", "alpha_rotated".
Json to_json(const HerglotzMap& f);
HerglotzMap herglotz_from_json(const Json& doc);

Json to_json(const ClassReport& report);
Json to_json(const EntropyReport& report);
EntropyReport entropy_report_from_json(const Json& doc);
Json to_json(const LSystemRecord& rec);

}  // namespace lsys
