#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "symprod.h"

using nlohmann::json;

namespace {

// RAII wrappers so a failing CHECK cannot leak the C-side allocations.
struct Str {
  char* p = nullptr;
  Str() = default;
  Str(const Str&) = delete;
  Str& operator=(const Str&) = delete;
  ~Str() { symprod_string_free(p); }
  std::string get() const { return p ? p : ""; }
  json parsed() const { return json::parse(get()); }
};

struct Cfg {
  symprod_config* p = nullptr;
  Cfg() = default;
  Cfg(Cfg&& o) noexcept : p(o.p) { o.p = nullptr; }
  Cfg(const Cfg&) = delete;
  Cfg& operator=(const Cfg&) = delete;
  ~Cfg() { symprod_config_free(p); }
};

Cfg fixture(const char* family, int d, int n, uint64_t seed = 1) {
  Cfg c;
  REQUIRE(symprod_config_fixture(family, d, n, seed, &c.p) == SYMPROD_OK);
  return c;
}

}  // namespace

TEST_CASE("version and error strings") {
  CHECK(std::string(symprod_version()) == "1.0.0");
  symprod_config* out = nullptr;
  CHECK(symprod_config_parse(nullptr, &out) == SYMPROD_EINVAL);
  CHECK(std::string(symprod_last_error()).find("null") != std::string::npos);
  Str s;
  Cfg c = fixture("pencil", 3, 3);
  CHECK(symprod_config_to_json(c.p, &s.p) == SYMPROD_OK);
  CHECK(std::string(symprod_last_error()).empty());  // success clears the slot
}

TEST_CASE("config parse and emit round trip") {
  Cfg c = fixture("pencil", 3, 3);
  Str first;
  REQUIRE(symprod_config_to_json(c.p, &first.p) == SYMPROD_OK);
  Cfg back;
  REQUIRE(symprod_config_parse(first.p, &back.p) == SYMPROD_OK);
  Str second;
  REQUIRE(symprod_config_to_json(back.p, &second.p) == SYMPROD_OK);
  CHECK(first.get() == second.get());
  json j = first.parsed();
  CHECK(j.at("n") == 3);
  CHECK(j.at("k") == 2);
  CHECK(j.at("field") == "rational");
  CHECK(j.at("subspaces").size() == 3);
}

TEST_CASE("config error codes") {
  symprod_config* out = nullptr;
  CHECK(symprod_config_parse("{\"n\": 3,", &out) == SYMPROD_EPARSE);
  CHECK(symprod_config_parse("{\"k\":2,\"subspaces\":[]}", &out) == SYMPROD_EPARSE);
  // Well-formed JSON, inconsistent geometry: k > n.
  CHECK(symprod_config_parse(
            "{\"n\":1,\"k\":2,\"subspaces\":[[[\"1\",\"0\"],[\"0\",\"1\"]],"
            "[[\"1\",\"0\"],[\"0\",\"1\"]]]}",
            &out) == SYMPROD_EINVAL);
  CHECK(symprod_config_fixture("moebius", 3, 3, 1, &out) == SYMPROD_EINVAL);
  CHECK(std::string(symprod_last_error()).find("moebius") != std::string::npos);
}

TEST_CASE("reduction to a prime field") {
  Cfg c = fixture("pencil", 3, 3);
  Cfg mod5;
  REQUIRE(symprod_config_reduce_mod(c.p, 5, &mod5.p) == SYMPROD_OK);
  Str s;
  REQUIRE(symprod_config_to_json(mod5.p, &s.p) == SYMPROD_OK);
  CHECK(s.parsed().at("field").at("prime") == 5);
  // Reducing twice makes no sense and says so.
  Cfg again;
  CHECK(symprod_config_reduce_mod(mod5.p, 7, &again.p) == SYMPROD_EINVAL);
}

TEST_CASE("decide verdicts across the three outcomes") {
  int32_t verdict = -1;
  Str cert;
  Cfg pencil = fixture("pencil", 3, 3);
  REQUIRE(symprod_specpos_decide(pencil.p, 50, 1, &verdict, &cert.p) == SYMPROD_OK);
  CHECK(verdict == SYMPROD_VERDICT_SPECIAL);
  CHECK(cert.parsed().at("verdict") == "special");

  Str cert2;
  Cfg tri = fixture("triangle", 3, 3);
  REQUIRE(symprod_specpos_decide(tri.p, 200, 1, &verdict, &cert2.p) == SYMPROD_OK);
  CHECK(verdict == SYMPROD_VERDICT_NOT_SPECIAL);
  CHECK(cert2.parsed().at("verdict") == "not_special");

  Str cert3;
  Cfg skew5 = fixture("random_skew", 5, 3, 3);
  REQUIRE(symprod_specpos_decide(skew5.p, 25, 3, &verdict, &cert3.p) == SYMPROD_OK);
  CHECK(verdict == SYMPROD_VERDICT_UNDECIDED);
  CHECK(cert3.parsed().at("trials_used") == 25);
}

TEST_CASE("span bound through the C layer") {
  Cfg c = fixture("pencil", 3, 3);
  Str s;
  REQUIRE(symprod_specpos_span(c.p, &s.p) == SYMPROD_OK);
  json j = s.parsed();
  CHECK(j.at("span_dim") == 2);
  CHECK(j.at("bound") == 2);
  CHECK(j.at("ok") == true);
}

TEST_CASE("oracle wants a prime field configuration") {
  Cfg c = fixture("pencil", 3, 3);
  Str s;
  CHECK(symprod_specpos_oracle(c.p, &s.p) == SYMPROD_EINVAL);
  CHECK(std::string(symprod_last_error()).find("reduce mod p") != std::string::npos);
  Cfg mod3;
  REQUIRE(symprod_config_reduce_mod(c.p, 3, &mod3.p) == SYMPROD_OK);
  Str s2;
  REQUIRE(symprod_specpos_oracle(mod3.p, &s2.p) == SYMPROD_OK);
  json j = s2.parsed();
  CHECK(j.at("special") == true);
  CHECK(j.at("planes_enumerated") == 130);
  CHECK(j.at("prime") == 3);
}

TEST_CASE("plucker coordinates of a subspace document") {
  Str s;
  REQUIRE(symprod_subspace_plucker(
              "{\"ambient_n\":3,\"rows\":[[\"1\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"]]}",
              &s.p) == SYMPROD_OK);
  json j = s.parsed();
  CHECK(j.at("ambient_n") == 3);
  CHECK(j.at("k") == 2);
  CHECK(j.at("coords") == json::array({"1", "0", "0", "0", "0", "0"}));
  CHECK(symprod_subspace_plucker("{]", &s.p) == SYMPROD_EPARSE);
}

TEST_CASE("curve numerology scalars") {
  int64_t v = 0;
  REQUIRE(symprod_brill_noether_rho(4, 1, 3, &v) == SYMPROD_OK);
  CHECK(v == 0);
  REQUIRE(symprod_generic_min_degree(6, 2, &v) == SYMPROD_OK);
  CHECK(v == 6);
  REQUIRE(symprod_generic_gonality(7, &v) == SYMPROD_OK);
  CHECK(v == 5);
  CHECK(symprod_brill_noether_rho(-1, 1, 3, &v) == SYMPROD_EINVAL);
  CHECK(symprod_generic_gonality(7, nullptr) == SYMPROD_EINVAL);
}

TEST_CASE("bound reports from profile documents") {
  Str s;
  REQUIRE(symprod_degirr("{\"genus\":6,\"class\":\"very_general\"}", &s.p) == SYMPROD_OK);
  json j = s.parsed();
  CHECK(j.at("lo") == 5);
  CHECK(j.at("hi") == 15);
  CHECK(j.at("exact") == false);

  Str s2;
  REQUIRE(symprod_deg_gonality("{\"genus\":3,\"class\":\"very_general\"}", 2, &s2.p) ==
          SYMPROD_OK);
  json j2 = s2.parsed();
  CHECK(j2.at("lo") == 3);
  CHECK(j2.at("hi") == 3);
  CHECK(j2.at("exact") == true);

  Str s3;
  REQUIRE(symprod_gonality_report("{\"genus\":6,\"class\":\"very_general\"}", &s3.p) ==
          SYMPROD_OK);
  json j3 = s3.parsed();
  CHECK(j3.at("bound") == 4);
  CHECK(j3.at("rigidity_applicable") == true);

  Str bad;
  CHECK(symprod_degirr("{\"genus\":", &bad.p) == SYMPROD_EPARSE);
  CHECK(symprod_degirr("{\"genus\":2}", &bad.p) == SYMPROD_EINVAL);  // undeclared hyperelliptic
  CHECK(symprod_deg_gonality("{\"genus\":5}", 2, &bad.p) == SYMPROD_EINVAL);
  CHECK(std::string(symprod_last_error()).find("gonality") != std::string::npos);
}

TEST_CASE("nefcone verification and search") {
  Str s;
  REQUIRE(symprod_nefcone_verify(6, "32", "13", "9/4", -1, &s.p) == SYMPROD_OK);
  json j = s.parsed();
  CHECK(j.at("valid") == true);
  CHECK(j.at("c") == 4);  // the default constant for genus 6
  CHECK(j.at("l_squared") == "179");
  CHECK(j.at("quadratic").at("A") == "10");

  Str s2;
  REQUIRE(symprod_nefcone_verify(6, "29", "13", "9/4", 4, &s2.p) == SYMPROD_OK);
  CHECK(s2.parsed().at("failed_check") == "ratio");

  Str s3;
  CHECK(symprod_nefcone_verify(6, "thirty", "13", "9/4", 4, &s3.p) == SYMPROD_EPARSE);
  CHECK(symprod_nefcone_verify(3, "5042", "2911", "1", 1, &s3.p) == SYMPROD_ETOOLARGE);
  CHECK(symprod_nefcone_verify(2, "3", "1", "1", 4, &s3.p) == SYMPROD_EINVAL);

  Str s4;
  REQUIRE(symprod_nefcone_search(6, -1, "9/4", 13, &s4.p) == SYMPROD_OK);
  json r = s4.parsed();
  CHECK(r.at("a") == "32");
  CHECK(r.at("b") == "13");
  CHECK(r.at("notes") == json::array());
  CHECK(r.at("report").at("valid") == true);

  Str s5;
  CHECK(symprod_nefcone_search(6, 4, "9/4", 0, &s5.p) == SYMPROD_EINVAL);
}
