#include "lsys/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lsys/differential_example.hpp"
#include "lsys/entropy_geometry.hpp"
#include "lsys/error.hpp"
#include "lsys/herglotz.hpp"
#include "lsys/json_io.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/model_triple.hpp"

namespace lsys::cli {
namespace {

constexpr complex kI{0.0, 1.0};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, "'" + path + "': " + e.what());
  }
}

SpectralMeasure read_measure(const std::string& path) {
  return measure_from_json(read_json_file(path));
}

complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "--z expects 're,im', got '" + text + "'");
  }
}

void emit(std::ostream& out, const Json& doc) { out << dump_canonical(doc) << '\n'; }

int report_error(std::ostream& err, Errc code, const std::string& message) {
  Json doc{{"status", "error"}, {"code", std::string(to_string(code))}, {"message", message}};
  err << dump_canonical(doc) << '\n';
  if (code == Errc::ParseError) return kUsage;
  if (code == Errc::UnsupportedCombination) return kUnsupported;
  return kDomain;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  emit(out, to_json(classify(HerglotzMap::from_measure(read_measure(path)))));
  return kOk;
}

int cmd_represent(const std::string& path, double a, double alpha, std::ostream& out) {
  emit(out, to_json(represent(a, alpha, HerglotzMap::from_measure(read_measure(path)))));
  return kOk;
}

int cmd_entropy(std::optional<double> a, std::optional<double> kappa, std::ostream& out) {
  if (a) {
    const EntropyCurvePoint p = curve_point(*a);
    emit(out, to_json(EntropyReport::from_pair(p.entropy, p.dissipation)));
  } else {
    emit(out, to_json(EntropyReport::from_kappa(*kappa)));
  }
  return kOk;
}

int cmd_couple(const std::vector<std::string>& paths, std::ostream& out) {
  EntropyReport total = EntropyReport::from_entropy(ExtendedReal(0.0));
  for (const std::string& path : paths) {
    const Json doc = read_json_file(path);
    if (doc.is_array()) {
      for (const Json& item : doc) total = couple(total, entropy_report_from_json(item));
    } else {
      total = couple(total, entropy_report_from_json(doc));
    }
  }
  emit(out, to_json(total));
  return kOk;
}

int cmd_curve(double amin, double amax, int n, std::ostream& out) {
  if (!(amin > 0.0) || !(amax >= amin) || n < 1) {
    throw Error(Errc::ParameterOutOfRange, "curve needs 0 < amin <= amax and n >= 1");
  }
  out << "a,entropy,dissipation\n";
  for (int k = 0; k < n; ++k) {
    const double a = n == 1 ? amin : amin + (amax - amin) * k / (n - 1);
    const EntropyCurvePoint p = curve_point(a);
    const std::string entropy = p.entropy.is_infinite() ? "inf" : format_double(p.entropy.value());
    out << format_double(a) << ',' << entropy << ',' << format_double(p.dissipation) << '\n';
  }
  return kOk;
}

int cmd_example(double ell, std::ostream& out) {
  const DifferentialModel model(ell);
  const ExampleParams params = ex_params(model);
  const ChannelCoefficients channel = ex_channel_coefficients(model);
  const double w_minus_i = std::abs(ex_transfer_theta1a(model, -kI));
  Json doc{
      {"ell", ell},
      {"kappa", params.kappa},
      {"a", params.a},
      {"entropy", to_json(params.entropy)},
      {"dissipation", params.dissipation},
      {"entropy_via_transfer", -std::log(w_minus_i)},
      {"entropy_of_a", to_json(entropy_of_a(params.a))},
      {"dissipation_of_a", dissipation_of_a(params.a)},
      {"dissipation_of_inverse_a", dissipation_of_a(1.0 / params.a)},
      {"weyl_at_i", to_json(ex_weyl(model, kI))},
      {"livsic_at_i", to_json(ex_livsic(model, kI))},
      {"transfer_theta10_at_minus_i", to_json(ex_transfer_theta10(model, -kI))},
      {"transfer_theta1a_at_minus_i", to_json(ex_transfer_theta1a(model, -kI))},
      {"transfer_theta1a_at_i", to_json(ex_transfer_theta1a(model, kI))},
      {"entropy_theta10", to_json(EntropyReport::from_kappa(0.0).entropy())},
      {"minus_prefactor", channel.minus_prefactor},
      {"plus_prefactor", channel.plus_prefactor},
      {"chi10_deviation", channel.chi10_deviation},
      {"chi1a_deviation", channel.chi1a_deviation},
  };
  emit(out, doc);
  return kOk;
}

int cmd_oracle(const std::string& path, int grid_size, std::ostream& out) {
  if (grid_size < 1) throw Error(Errc::ParameterOutOfRange, "--grid must be >= 1");
  const SpectralMeasure sigma = read_measure(path);
  const ModelTriple model = ModelTriple::from_measure(sigma);
  const bool normalized = std::abs(model.norming_constant() - 1.0) <= kClassTolerance;
  double max_dev = 0.0;
  double max_livsic_dev = 0.0;
  for (const complex z : upper_half_plane_grid(static_cast<std::size_t>(grid_size))) {
    max_dev = std::max(max_dev, oracle_compare(model, z).abs_difference);
    if (normalized) {
      const complex via_cayley = cayley_m_to_s(weyl_from_resolvent(model, z));
      max_livsic_dev =
          std::max(max_livsic_dev, std::abs(livsic_from_deficiency(model, z) - via_cayley));
    }
  }
  Json doc{{"n_atoms", model.size()},
           {"grid", grid_size},
           {"norming_constant", model.norming_constant()},
           {"max_abs_dev", max_dev}};
  doc["max_livsic_dev"] = normalized ? Json(max_livsic_dev) : Json(nullptr);
  doc["surrogate"] = sigma.surrogate();
  emit(out, doc);
  return kOk;
}

int cmd_impedance(const std::string& path, double a, double alpha, const std::string& z_text,
                  std::ostream& out) {
  const complex z = parse_complex(z_text);
  const LSystemRecord rec = represent(a, alpha, HerglotzMap::from_measure(read_measure(path)));
  const complex v = rec.impedance(z);
  Json doc{{"z", to_json(z)}, {"impedance", to_json(v)}};
  try {
    doc["transfer"] = to_json(impedance_to_transfer(v));
  } catch (const Error&) {
    doc["transfer"] = nullptr;
  }
  doc["provenance"] = to_string(rec.provenance);
  emit(out, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Donoghue-class Herglotz functions, L-system representations and c-entropy", "lsys"};
  app.require_subcommand(1);

  std::string measure_path;
  double a = 1.0;
  double alpha = 0.0;

  auto* classify_cmd = app.add_subcommand("classify", "Donoghue class of a measure-backed function");
  classify_cmd->add_option("measure_file", measure_path)->required();

  auto* represent_cmd = app.add_subcommand("represent", "Representing L-system of a M_alpha");
  represent_cmd->add_option("measure_file", measure_path)->required();
  represent_cmd->add_option("--a", a, "scale a > 0");
  represent_cmd->add_option("--alpha", alpha, "rotation angle");

  std::optional<double> entropy_a;
  std::optional<double> entropy_kappa;
  auto* entropy_cmd = app.add_subcommand("entropy", "c-entropy and dissipation");
  auto* a_opt = entropy_cmd->add_option("--a", entropy_a, "norming constant");
  auto* kappa_opt = entropy_cmd->add_option("--kappa", entropy_kappa, "von Neumann parameter");
  a_opt->excludes(kappa_opt);
  kappa_opt->excludes(a_opt);
  entropy_cmd->require_option(1);

  std::vector<std::string> report_paths;
  auto* couple_cmd = app.add_subcommand("couple", "couple entropy reports");
  couple_cmd->add_option("reports", report_paths)->required();

  double amin = 0.1;
  double amax = 10.0;
  int n = 100;
  auto* curve_cmd = app.add_subcommand("curve", "CSV of entropy and dissipation against a");
  curve_cmd->add_option("--amin", amin);
  curve_cmd->add_option("--amax", amax);
  curve_cmd->add_option("--n", n);

  double ell = 1.0;
  auto* example_cmd = app.add_subcommand("example", "interval model closed forms");
  example_cmd->add_option("--ell", ell)->required();

  int grid = 50;
  auto* oracle_cmd = app.add_subcommand("oracle", "resolvent oracle against the Herglotz transform");
  oracle_cmd->add_option("measure_file", measure_path)->required();
  oracle_cmd->add_option("--grid", grid);

  std::string z_text;
  auto* impedance_cmd = app.add_subcommand("impedance", "evaluate the impedance V at --z");
  impedance_cmd->add_option("measure_file", measure_path)->required();
  impedance_cmd->add_option("--a", a);
  impedance_cmd->add_option("--alpha", alpha);
  impedance_cmd->add_option("--z", z_text, "re,im")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream diag;
    const int code = app.exit(e, out, diag);
    if (code == 0) return kOk;
    return report_error(err, Errc::ParseError, e.what());
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(measure_path, out);
    if (represent_cmd->parsed()) return cmd_represent(measure_path, a, alpha, out);
    if (entropy_cmd->parsed()) return cmd_entropy(entropy_a, entropy_kappa, out);
    if (couple_cmd->parsed()) return cmd_couple(report_paths, out);
    if (curve_cmd->parsed()) return cmd_curve(amin, amax, n, out);
    if (example_cmd->parsed()) return cmd_example(ell, out);
    if (oracle_cmd->parsed()) return cmd_oracle(measure_path, grid, out);
    if (impedance_cmd->parsed()) return cmd_impedance(measure_path, a, alpha, z_text, out);
  } catch (const Error& e) {
    return report_error(err, e.code(), e.what());
  }
  return kUsage;
}

}  // namespace lsys::cli
