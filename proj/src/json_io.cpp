#include "lsys/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lsys/error.hpp"

namespace lsys {
namespace {

void write(const Json& doc, std::ostringstream& out) {
  switch (doc.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, value] : doc.items()) {
        if (!first) out << ',';
        first = false;
        out << Json(key).dump() << ':';
        write(value, out);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      for (std::size_t k = 0; k < doc.size(); ++k) {
        if (k > 0) out << ',';
        write(doc[k], out);
      }
      out << ']';
      break;
    }
    case Json::value_t::number_float:
      out << format_double(doc.get<double>());
      break;
    default:
      out << doc.dump();
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(Errc::ParseError, std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

double require_number(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_number()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::vector<double> number_array(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_array()) throw Error(Errc::ParseError, std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw Error(Errc::ParseError, std::string("'") + key + "' holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "\"nan\"";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  if (x == 0.0) x = 0.0;  // drops the sign of -0.0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string dump_canonical(const Json& doc) {
  std::ostringstream out;
  write(doc, out);
  return out.str();
}

SpectralMeasure measure_from_json(const Json& doc) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "measure document must be an object");
  const double q = doc.contains("q") ? require_number(doc, "q") : 0.0;
  std::vector<Atom> atoms;
  if (doc.contains("atoms")) {
    const Json& list = doc.at("atoms");
    if (!list.is_array()) throw Error(Errc::ParseError, "'atoms' must be an array");
    for (const Json& atom : list) {
      atoms.push_back({require_number(atom, "lambda"), require_number(atom, "weight")});
    }
  }
  std::optional<Density> density;
  if (doc.contains("density") && !doc.at("density").is_null()) {
    const Json& d = doc.at("density");
    density = Density{number_array(d, "grid"), number_array(d, "values")};
  }
  return SpectralMeasure(std::move(atoms), std::move(density), q);
}

Json to_json(const SpectralMeasure& sigma) {
  Json atoms = Json::array();
  for (const Atom& atom : sigma.atoms()) {
    atoms.push_back(Json{{"lambda", atom.lambda}, {"weight", atom.weight}});
  }
  Json doc{{"q", sigma.shift_q()}, {"atoms", atoms}};
  if (sigma.density()) {
    doc["density"] = Json{{"grid", sigma.density()->grid}, {"values", sigma.density()->values}};
  } else {
    doc["density"] = nullptr;
  }
  return doc;
}

Json to_json(complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

complex complex_from_json(const Json& doc) {
  return {require_number(doc, "re"), require_number(doc, "im")};
}

Json to_json(ExtendedReal x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

ExtendedReal extended_from_json(const Json& doc) {
  if (doc.is_string() && doc.get<std::string>() == "inf") return ExtendedReal::infinity();
  if (doc.is_number()) return ExtendedReal(doc.get<double>());
  throw Error(Errc::ParseError, "expected a number or \"inf\"");
}

Json to_json(const HerglotzMap& f) {
  if (f.is_from_measure()) {
    return Json{{"kind", "measure"}, {"measure", to_json(f.as_from_measure().measure)}};
  }
  if (f.is_closed_form()) {
    Json params = Json::object();
    for (const auto& [name, value] : f.as_closed_form().params) params[name] = value;
    return Json{{"kind", "closed_form"}, {"id", f.as_closed_form().id}, {"params", params}};
  }
  if (f.is_scaled()) {
    return Json{{"kind", "scaled"}, {"a", f.as_scaled().a}, {"inner", to_json(f.as_scaled().inner)}};
  }
  return Json{{"kind", "alpha_rotated"},
              {"alpha", f.as_alpha_rotated().alpha},
              {"inner", to_json(f.as_alpha_rotated().inner)}};
}

HerglotzMap herglotz_from_json(const Json& doc) {
  const Json& kind = require(doc, "kind");
  if (!kind.is_string()) throw Error(Errc::ParseError, "'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "measure") return HerglotzMap::from_measure(measure_from_json(require(doc, "measure")));
  if (k == "closed_form") {
    const Json& id = require(doc, "id");
    if (!id.is_string()) throw Error(Errc::ParseError, "'id' must be a string");
    std::map<std::string, double> params;
    if (doc.contains("params")) {
      for (const auto& [name, value] : doc.at("params").items()) {
        if (!value.is_number()) throw Error(Errc::ParseError, "closed-form parameters are numbers");
        params[name] = value.get<double>();
      }
    }
    return HerglotzMap::closed_form(id.get<std::string>(), std::move(params));
  }
  if (k == "scaled") {
    return HerglotzMap::scaled(require_number(doc, "a"), herglotz_from_json(require(doc, "inner")));
  }
  if (k == "alpha_rotated") {
    return HerglotzMap::alpha_rotated(require_number(doc, "alpha"),
                                      herglotz_from_json(require(doc, "inner")));
  }
  throw Error(Errc::ParseError, "unknown kind '" + k + "'");
}

Json to_json(const ClassReport& report) {
  return Json{{"a", report.a}, {"kappa", report.kappa}, {"class", to_string(report.class_tag)}};
}

Json to_json(const EntropyReport& report) {
  return Json{{"entropy", to_json(report.entropy())}, {"dissipation", report.dissipation()}};
}

EntropyReport entropy_report_from_json(const Json& doc) {
  return EntropyReport::from_pair(extended_from_json(require(doc, "entropy")),
                                  require_number(doc, "dissipation"));
}

Json to_json(const LSystemRecord& rec) {
  return Json{{"kappa", rec.kappa},
              {"u", to_json(rec.u)},
              {"a", rec.a},
              {"alpha", rec.alpha},
              {"chi", Json{{"c_phi", to_json(rec.channel.c_phi)}, {"c_psi", to_json(rec.channel.c_psi)}}},
              {"provenance", to_string(rec.provenance)}};
}

}  // namespace lsys
