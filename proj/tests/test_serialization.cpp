#include <cstring>

#include "doctest.h"
#include "helpers.hpp"
#include "twistform/serialization.hpp"
#include "twistform/verify.hpp"

using namespace twistform;

TEST_CASE("graded elements round-trip bit-exactly through text") {
  Rng rng(71);
  for (int m = 1; m <= 6; ++m)
    for (int q = 0; q <= m; ++q)
      for (Kind k : {Kind::Covector, Kind::Vector})
        for (Parity p : {Parity::Even, Parity::Odd}) {
          const SpaceDescriptor space(m, q % 2);
          const auto x = random_element(rng, k, p, q, space, 1e3 * rng.unit());
          const std::string text = to_json(x).dump();
          const auto y = graded_from_json(parse_json_text(text, "mem"));
          REQUIRE(y.kind() == k);
          REQUIRE(y.parity() == p);
          REQUIRE(y.space() == space);
          for (int i = 0; i < x.size(); ++i) CHECK(std::memcmp(&x.coeffs()[i], &y.coeffs()[i], sizeof(double)) == 0);
        }
}

TEST_CASE("tensors and densities round-trip") {
  Rng rng(72);
  const SpaceDescriptor space(4, 0);
  const TensorQM t(random_element(rng, Kind::Vector, Parity::Even, 2, space), -3.0 * unit_volume(space));
  const TensorQM u = tensor_from_json(json::parse(to_json(t).dump()));
  CHECK(max_abs_diff(u.w(), t.w()) == 0.0);

  const QuadraticDensity k = random_density(rng, space, 0.25);
  const QuadraticDensity k2 = density_from_json(json::parse(to_json(k).dump()), space);
  const AffinePoint o = AffinePoint::Zero(4);
  CHECK(k2.lambda(o).matrix() == k.lambda(o).matrix());
  CHECK(k2.mu(o).matrix() == k.mu(o).matrix());
  CHECK(k2.nu(o).matrix() == k.nu(o).matrix());
  CHECK(k2.offset(o) == 0.25);
}

TEST_CASE("missing coefficients read as zero and labels are checked") {
  const json j = json::parse(R"({"kind":"covector","parity":"even","grade":2,"dim":4,"coeffs":{"0,1":2.0}})");
  const auto f = graded_from_json(j, 0);
  CHECK(f.coeff({0, 1}) == 2.0);
  CHECK(f.max_abs() == 2.0);
  CHECK_THROWS_AS(graded_from_json(j, 1), SerializationError);  // label 0 out of range
  const json bad = json::parse(R"({"kind":"covector","parity":"even","grade":2,"dim":4,"coeffs":{"2,1":2.0}})");
  CHECK_THROWS_AS(graded_from_json(bad, 0), SerializationError);
  const json short_key = json::parse(R"({"kind":"covector","parity":"even","grade":2,"dim":4,"coeffs":{"1":2.0}})");
  CHECK_THROWS_AS(graded_from_json(short_key, 0), SerializationError);
}

TEST_CASE("errors carry a location") {
  try {
    parse_json_text("{\"a\": [1, 2,", "input.json");
    FAIL("no throw");
  } catch (const SerializationError& e) {
    CHECK(e.where().find("input.json") == 0);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  const MinkowskiStructure ms;
  const json j = json::parse(R"({"A":{"family":"polynomial","terms":[{"coeff":1,"index":[0]}]}})");
  try {
    trajectory_from_json(j, ms);
    FAIL("no throw");
  } catch (const SerializationError& e) {
    CHECK(e.where() == "/A/terms/0");
  }
  CHECK_THROWS_AS(trajectory_from_json(json::parse(R"({"A":{"family":"nope"}})"), ms), SerializationError);
  CHECK_THROWS_AS(trajectory_from_json(json::parse(R"({"A":{"family":"zero"},"G":"other"})"), ms),
                  SerializationError);
  CHECK_THROWS_AS(cube_from_json(json::parse(R"({"min":[0,0,0,0],"max":[1,0,1,1]})"), 4), SerializationError);
}

TEST_CASE("field families from JSON agree with the constructors") {
  Rng rng(73);
  const MinkowskiStructure ms;
  const json j = json::parse(R"({"family":"plane_wave","params":{"k":[1,0,0,1],"pol":[0,1,0,0],"amp":0.5,"phase":0.1}})");
  Eigen::VectorXd k(4), pol(4);
  k << 1, 0, 0, 1;
  pol << 0, 1, 0, 0;
  const SmoothForm a = field_from_json(j, ms.space());
  const SmoothForm b = plane_wave(ms.space(), k, pol, 0.5, 0.1);
  for (int i = 0; i < 5; ++i) {
    const AffinePoint x = random_vector(rng, 4);
    CHECK(max_abs_diff(a(x), b(x)) == 0.0);
  }
}

TEST_CASE("verification reports") {
  VerifyConfig cfg;
  const Report r = run_suite("lemma1", cfg);
  CHECK(r.pass());
  CHECK(to_json(r).dump() == to_json(run_suite("lemma1", cfg)).dump());
  CHECK(to_json(r)["tool_version"] == kToolVersion);
  CHECK_THROWS_AS(run_suite("nope", cfg), std::invalid_argument);
  cfg.dim_hi = kMaxDim + 1;
  CHECK_THROWS_AS(run_suite("lemma1", cfg), std::invalid_argument);
  CHECK(suite_names().size() == 6);
}
