#include "lsys/json_io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "test_support.hpp"

namespace lsys {
namespace {

Json reparse(const Json& doc) { return Json::parse(dump_canonical(doc)); }

TEST(FormatDouble, Canonical) {
  EXPECT_EQ(format_double(1.0), "1.0");
  EXPECT_EQ(format_double(0.0), "0.0");
  EXPECT_EQ(format_double(-0.0), "0.0");
  EXPECT_EQ(format_double(0.75), "0.75");
  EXPECT_EQ(format_double(1e300), "1.0000000000000001e+300");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "\"inf\"");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.33333333333333331");
}

TEST(FormatDouble, RoundTripsBits) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int k = 0; k < 1000; ++k) {
    const double x = d(rng) * std::exp(d(rng) * 1e-4);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(DumpCanonical, KeyOrderAndIntegers) {
  Json doc;
  doc["b"] = 1.0;
  doc["a"] = 2;
  doc["c"] = Json::array({0.5, "inf", nullptr, true});
  EXPECT_EQ(dump_canonical(doc), R"({"b":1.0,"a":2,"c":[0.5,"inf",null,true]})");
}

TEST(Measure, ParsesSchema) {
  const SpectralMeasure m = measure_from_json(Json::parse(
      R"({"q": 0.25, "atoms": [{"lambda": -1.0, "weight": 2.0}], "density": {"grid": [0, 1], "values": [1, 1]}})"));
  EXPECT_EQ(m.shift_q(), 0.25);
  ASSERT_EQ(m.atoms().size(), 1u);
  EXPECT_EQ(m.atoms()[0].weight, 2.0);
  ASSERT_TRUE(m.density().has_value());
  const SpectralMeasure bare = measure_from_json(Json::parse(R"({"atoms": [{"lambda": 0, "weight": 1}]})"));
  EXPECT_EQ(bare, SpectralMeasure::point_mass(0.0));
}

TEST(Measure, SchemaErrors) {
  EXPECT_ERRC(measure_from_json(Json::parse("[]")), Errc::ParseError);
  EXPECT_ERRC(measure_from_json(Json::parse(R"({"atoms": {}})")), Errc::ParseError);
  EXPECT_ERRC(measure_from_json(Json::parse(R"({"atoms": [{"lambda": 0}]})")), Errc::ParseError);
  EXPECT_ERRC(measure_from_json(Json::parse(R"({"atoms": [{"lambda": "x", "weight": 1}]})")), Errc::ParseError);
  EXPECT_ERRC(measure_from_json(Json::parse(R"({"q": "0"})")), Errc::ParseError);
  EXPECT_ERRC(measure_from_json(Json::parse(R"({"atoms": [{"lambda": 0, "weight": -1}]})")), Errc::InvalidMeasure);
}

TEST(Measure, RoundTripProperty) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> q(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    std::optional<Density> density;
    if (k % 2 == 0) density = Density{{-1.0, 0.0, 2.5}, {q(rng) + 3.0, 0.0, 1.0}};
    const SpectralMeasure m(testing::random_atoms(rng, 1 + k % 7), density, q(rng));
    EXPECT_EQ(measure_from_json(reparse(to_json(m))), m);
  }
}

TEST(Complex, RoundTrip) {
  const complex z(0.1, -2.0 / 3.0);
  EXPECT_EQ(complex_from_json(reparse(to_json(z))), z);
  EXPECT_EQ(dump_canonical(to_json(complex(1.0, 0.0))), R"({"re":1.0,"im":0.0})");
}

TEST(Extended, RoundTrip) {
  EXPECT_EQ(dump_canonical(to_json(ExtendedReal::infinity())), "\"inf\"");
  EXPECT_TRUE(extended_from_json(Json("inf")).is_infinite());
  EXPECT_EQ(extended_from_json(reparse(to_json(ExtendedReal(std::numbers::ln2)))), ExtendedReal(std::numbers::ln2));
  EXPECT_ERRC(extended_from_json(Json("infinity")), Errc::ParseError);
}

HerglotzMap random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 1);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  switch (kind(rng)) {
    case 0:
      return HerglotzMap::from_measure(SpectralMeasure(testing::random_atoms(rng, 3), std::nullopt, u(rng) - 1.5));
    case 1:
      return rng() % 2 ? HerglotzMap::closed_form("neg_reciprocal")
                       : HerglotzMap::closed_form("interval_weyl", {{"ell", u(rng)}});
    case 2:
      return HerglotzMap::scaled(u(rng), random_tree(rng, depth - 1));
    default:
      return HerglotzMap::alpha_rotated(u(rng), random_tree(rng, depth - 1));
  }
}

TEST(Herglotz, RoundTripProperty) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    const HerglotzMap f = random_tree(rng, 3);
    const HerglotzMap g = herglotz_from_json(reparse(to_json(f)));
    EXPECT_EQ(g, f);
    const complex z(0.3, 1.2);
    EXPECT_EQ(g(z), f(z));
  }
}

TEST(Herglotz, Errors) {
  EXPECT_ERRC(herglotz_from_json(Json::parse(R"({"kind": "spline"})")), Errc::ParseError);
  EXPECT_ERRC(herglotz_from_json(Json::parse(R"({"a": 1})")), Errc::ParseError);
  EXPECT_ERRC(herglotz_from_json(Json::parse(R"({"kind": "closed_form", "id": "nope", "params": {}})")),
              Errc::UnknownClosedForm);
}

TEST(Reports, Shapes) {
  EXPECT_EQ(dump_canonical(to_json(ClassReport{1.0, 0.0, DonoghueClass::M_0})),
            R"({"a":1.0,"kappa":0.0,"class":"M_0"})");
  EXPECT_EQ(dump_canonical(to_json(EntropyReport::from_kappa(0.0))), R"({"entropy":"inf","dissipation":1.0})");
  const EntropyReport r = EntropyReport::from_kappa(0.5);
  const EntropyReport back = entropy_report_from_json(reparse(to_json(r)));
  EXPECT_EQ(back.entropy(), r.entropy());
  EXPECT_EQ(back.dissipation(), r.dissipation());
  EXPECT_ERRC(entropy_report_from_json(Json::parse(R"({"entropy": 1.0, "dissipation": 0.1})")),
              Errc::ParameterOutOfRange);
}

TEST(Reports, LSystemRecordFields) {
  const LSystemRecord rec = represent(3.0, 0.0, HerglotzMap::closed_form("neg_reciprocal"));
  const Json doc = to_json(rec);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"kappa", "u", "a", "alpha", "chi", "provenance"}));
  EXPECT_EQ(doc["provenance"], "t-10");
  EXPECT_EQ(doc["u"]["re"], 1.0);
  EXPECT_TRUE(doc["chi"].contains("c_phi"));
}

}  // namespace
}  // namespace lsys
