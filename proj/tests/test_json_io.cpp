#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "symprod/json_io.hpp"

using namespace symprod;
using namespace symprod::io;
using namespace testutil;

namespace {

std::string round_trip_dump(const AnyConfig& c) {
  json j = config_to_json(c);
  AnyConfig back = config_from_json(parse_document(j.dump()));
  return config_to_json(back).dump();
}

}  // namespace

TEST_CASE("document parsing") {
  CHECK(parse_document("{\"a\": 1}").at("a") == 1);
  CHECK_THROWS_AS(parse_document("{\"a\": "), Error);
  CHECK_THROWS_AS(parse_document(""), Error);
}

TEST_CASE("configuration round trips") {
  for (AnyConfig c : {AnyConfig(specpos::fixture_pencil(3, 3)),
                      AnyConfig(specpos::fixture_quadric_ruling(4)),
                      AnyConfig(specpos::fixture_scroll(5)),
                      AnyConfig(specpos::fixture_triangle()),
                      AnyConfig(specpos::fixture_random_skew(4, 3, 2))}) {
    CHECK(round_trip_dump(c) == config_to_json(c).dump());
  }
  SUBCASE("prime field configurations carry their modulus") {
    AnyConfig c(specpos::reduce_mod(specpos::fixture_pencil(3, 3), 5));
    json j = config_to_json(c);
    CHECK(j.at("field").at("prime") == 5);
    CHECK(round_trip_dump(c) == j.dump());
  }
  SUBCASE("the rational tag is explicit") {
    json j = config_to_json(AnyConfig(specpos::fixture_triangle()));
    CHECK(j.at("field") == "rational");
    CHECK(j.at("n") == 3);
    CHECK(j.at("k") == 2);
    CHECK(j.at("subspaces").size() == 3);
  }
  SUBCASE("a fractional entry survives the trip") {
    auto s = qspace(3, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    QMat rows(RationalField{}, 2, 4);
    rows.set_row(0, {Rational(1), Q("-2/7"), Rational(0), Rational(0)});
    rows.set_row(1, {Rational(0), Rational(0), Rational(1), Q("1/2")});
    auto frac = proj::Subspace<RationalField>::from_rows(3, std::move(rows));
    AnyConfig c(specpos::make_configuration<RationalField>(3, 2, {frac, s}));
    json j = config_to_json(c);
    CHECK(j.at("subspaces").at(0).at(0).at(1) == "-2/7");
    CHECK(round_trip_dump(c) == j.dump());
  }
}

TEST_CASE("configuration parse failures") {
  auto parse = [](const char* text) { return config_from_json(parse_document(text)); };
  CHECK_THROWS_AS(parse("[1,2]"), Error);
  CHECK_THROWS_AS(parse("{\"k\":2,\"subspaces\":[]}"), Error);  // n missing
  CHECK_THROWS_AS(parse("{\"n\":3,\"k\":2}"), Error);           // subspaces missing
  CHECK_THROWS_AS(
      parse("{\"n\":3,\"k\":2,\"field\":\"complex\",\"subspaces\":[]}"), Error);
  CHECK_THROWS_AS(parse("{\"n\":3,\"k\":2,\"field\":{\"prime\":1},\"subspaces\":[]}"), Error);
  CHECK_THROWS_AS(parse("{\"n\":3,\"k\":2,\"field\":{\"prime\":4},\"subspaces\":[]}"), Error);
  // Row of the wrong width.
  CHECK_THROWS_AS(
      parse("{\"n\":3,\"k\":2,\"subspaces\":[[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"]]]}"),
      Error);
  // Numeric entries must be strings.
  CHECK_THROWS_AS(
      parse("{\"n\":3,\"k\":2,\"subspaces\":[[[1,0,0,0],[0,1,0,0]]]}"), Error);
}

TEST_CASE("subspace documents") {
  SUBCASE("the field tag defaults to rational") {
    auto any = subspace_from_json(
        parse_document("{\"ambient_n\":3,\"rows\":[[\"1\",\"0\",\"0\",\"1/3\"]]}"));
    REQUIRE(std::holds_alternative<proj::Subspace<RationalField>>(any));
    const auto& s = std::get<proj::Subspace<RationalField>>(any);
    CHECK(s.dim() == 0);
    CHECK(s.basis().at(0, 3) == Q("1/3"));
  }
  SUBCASE("prime field subspace") {
    auto any = subspace_from_json(parse_document(
        "{\"ambient_n\":2,\"field\":{\"prime\":7},\"rows\":[[\"1\",\"9\",\"-1\"]]}"));
    REQUIRE(std::holds_alternative<proj::Subspace<PrimeField>>(any));
    const auto& s = std::get<proj::Subspace<PrimeField>>(any);
    CHECK(s.basis().at(0, 1) == 2);  // 9 mod 7
    CHECK(s.basis().at(0, 2) == 6);  // -1 mod 7
  }
  SUBCASE("emission inverts parsing") {
    auto s = qspace(4, {{1, 2, 3, 4, 5}, {0, 0, 1, 0, 1}});
    json j = subspace_to_json(s);
    auto any = subspace_from_json(j);
    CHECK(std::get<proj::Subspace<RationalField>>(any) == s);
  }
  CHECK_THROWS_AS(subspace_from_json(parse_document("{\"ambient_n\":3}")), Error);
  CHECK_THROWS_AS(subspace_from_json(parse_document("{\"rows\":[[\"1\"]]}")), Error);
}

TEST_CASE("span report serialization") {
  specpos::SpanBoundReport r;
  r.span_dim = 2;
  r.bound = 2;
  r.applicable = true;
  r.theorem_range = true;
  r.satisfied = true;
  json j = span_report_to_json(r);
  CHECK(j.at("span_dim") == 2);
  CHECK(j.at("bound") == 2);
  CHECK(j.at("ok") == true);

  SUBCASE("ok is null when the bound does not apply") {
    r.applicable = false;
    r.satisfied = false;
    json k1 = span_report_to_json(r);
    CHECK(k1.at("ok").is_null());
    CHECK(k1.at("satisfied") == false);
  }
}

TEST_CASE("oracle report serialization") {
  specpos::OracleReport r;
  r.special = true;
  r.planes_enumerated = 130;
  r.prime = 3;
  json j = oracle_report_to_json(r);
  CHECK(j.at("special") == true);
  CHECK(j.at("planes_enumerated") == 130);
  CHECK(j.at("prime") == 3);
}

TEST_CASE("certificates serialize with their verdicts") {
  RationalField f;
  SUBCASE("special") {
    auto cert = specpos::decide(specpos::fixture_pencil(3, 3), 10, 1);
    json j = certificate_to_json(f, cert);
    CHECK(j.at("verdict") == "special");
    REQUIRE(j.at("dependencies").size() == 3);
    CHECK(j.at("dependencies").at(2) == json::array({"1", "1"}));
  }
  SUBCASE("not special") {
    auto cert = specpos::decide(specpos::fixture_triangle(), 200, 1);
    json j = certificate_to_json(f, cert);
    CHECK(j.at("verdict") == "not_special");
    CHECK(j.at("excluded_index") == 0);
    CHECK(j.at("trial").get<int>() >= 1);
    CHECK(j.at("witness").at("ambient_n") == 3);
    CHECK(j.at("witness").at("rows").size() == 2);  // a line has a 2-row basis
  }
  SUBCASE("undecided") {
    auto cert = specpos::decide(specpos::fixture_random_skew(5, 3, 3), 7, 3);
    json j = certificate_to_json(f, cert);
    CHECK(j.at("verdict") == "undecided");
    CHECK(j.at("trials_used") == 7);
  }
}

TEST_CASE("profile round trips") {
  curves::CurveProfile p;
  p.genus = 7;
  p.cls = curves::CurveClass::non_hyperelliptic;
  p.gonality = 4;
  p.delta[2] = 6;
  p.delta[3] = 8;
  p.elliptic_cover_degree = 2;
  json j = profile_to_json(p);
  auto back = profile_from_json(j);
  CHECK(profile_to_json(back).dump() == j.dump());
  CHECK(back.genus == 7);
  CHECK(back.cls == curves::CurveClass::non_hyperelliptic);
  CHECK(*back.gonality == 4);
  CHECK(back.delta.at(2) == 6);
  CHECK(back.delta.at(3) == 8);
  CHECK(*back.elliptic_cover_degree == 2);

  SUBCASE("minimal profile defaults to the arbitrary class") {
    auto q = profile_from_json(parse_document("{\"genus\": 5}"));
    CHECK(q.genus == 5);
    CHECK(q.cls == curves::CurveClass::arbitrary);
    CHECK(!q.gonality);
  }
  SUBCASE("parse failures") {
    CHECK_THROWS_AS(profile_from_json(parse_document("{}")), Error);
    CHECK_THROWS_AS(profile_from_json(parse_document("{\"genus\":3,\"class\":\"smooth\"}")),
                    Error);
    CHECK_THROWS_AS(
        profile_from_json(parse_document("{\"genus\":3,\"delta\":{\"4\":9}}")), Error);
    CHECK_THROWS_AS(
        profile_from_json(parse_document("{\"genus\":3,\"delta\":{\"2\":\"6\"}}")), Error);
    // Structurally fine but mathematically inconsistent: validation runs too.
    CHECK_THROWS_AS(profile_from_json(parse_document("{\"genus\":2}")), Error);
  }
}

TEST_CASE("interval serialization") {
  bounds::BoundInterval b;
  b.lo = 5;
  b.hi = 15;
  b.exact = false;
  b.provenance = {"thm1.4iii", "prop1.1"};
  json j = interval_to_json(b);
  CHECK(j.at("lo") == 5);
  CHECK(j.at("hi") == 15);
  CHECK(j.at("exact") == false);
  CHECK(j.at("provenance") == json::array({"thm1.4iii", "prop1.1"}));
  CHECK(j.at("notes") == json::array());

  b.hi.reset();
  CHECK(interval_to_json(b).at("hi").is_null());
}

TEST_CASE("moving bound serialization") {
  bounds::MovingGonalityBound m;
  m.bound = 4;
  m.rigidity_applicable = true;
  m.equality_note = "equality holds";
  json j = moving_to_json(m);
  CHECK(j.at("bound") == 4);
  CHECK(j.at("rigidity_applicable") == true);
  CHECK(j.at("equality_note") == "equality holds");
}

TEST_CASE("certificate report serialization") {
  SUBCASE("a valid report carries the quadratic and its discriminant") {
    auto rep = nefcone::verify_tau_certificate(6, int_of(32), int_of(13), Q("9/4"), 4);
    json j = cert_report_to_json(rep);
    CHECK(j.at("valid") == true);
    CHECK(j.at("a") == "32");
    CHECK(j.at("b") == "13");
    CHECK(j.at("ratio") == "32/13");
    CHECK(j.at("l_squared") == "179");
    CHECK(j.at("quadratic").at("A") == "10");
    CHECK(j.at("quadratic").at("B") == "-153");
    CHECK(j.at("quadratic").at("C") == "715");
    CHECK(j.at("discriminant") == "-5191");
    CHECK(j.at("checked_points") == json::array());
    CHECK(j.at("failed_check").is_null());
  }
  SUBCASE("a ratio failure stops before the quadratic exists") {
    auto rep = nefcone::verify_tau_certificate(6, int_of(29), int_of(13), Q("9/4"), 4);
    json j = cert_report_to_json(rep);
    CHECK(j.at("valid") == false);
    CHECK(j.at("failed_check") == "ratio");
    CHECK(!j.contains("quadratic"));
    CHECK(j.at("discriminant").is_null());
  }
  SUBCASE("an integer-point failure records the audited points") {
    auto rep = nefcone::verify_tau_certificate(8, int_of(17), int_of(6), Rational(1), 1);
    json j = cert_report_to_json(rep);
    CHECK(j.at("failed_check") == "integer-point");
    CHECK(j.contains("quadratic"));
    CHECK(j.at("checked_points") == json::array({json::array({"2", "-10"})}));
  }
}

TEST_CASE("search result serialization") {
  SUBCASE("published pairs carry no extra note") {
    auto res = nefcone::search_min_ratio(6, 4, Q("9/4"), 13);
    json j = search_result_to_json(res);
    CHECK(j.at("a") == "32");
    CHECK(j.at("b") == "13");
    CHECK(j.at("ratio") == "32/13");
    CHECK(j.at("report").at("valid") == true);
    CHECK(j.at("notes") == json::array());
  }
  SUBCASE("anything else is flagged as toolkit-derived") {
    auto res = nefcone::search_min_ratio(6, 4, Q("5/2"), 13);
    json j = search_result_to_json(res);
    CHECK(j.at("notes") == json::array({"toolkit-derived, unpublished"}));
  }
}
