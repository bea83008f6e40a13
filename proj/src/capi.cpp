#include "symprod.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "symprod/bounds.hpp"
#include "symprod/curves.hpp"
#include "symprod/errors.hpp"
#include "symprod/json_io.hpp"
#include "symprod/nefcone.hpp"
#include "symprod/specpos.hpp"

struct symprod_config {
  symprod::io::AnyConfig cfg;
};

namespace {

thread_local std::string g_last_error;

int code_of(symprod::Errc e) {
  using symprod::Errc;
  switch (e) {
    case Errc::parse_error: return SYMPROD_EPARSE;
    case Errc::too_large: return SYMPROD_ETOOLARGE;
    case Errc::no_certificate: return SYMPROD_ENOCERT;
    case Errc::invalid_argument:
    case Errc::inconsistent:
    case Errc::missing_gonality:
    case Errc::not_certified: return SYMPROD_EINVAL;
  }
  return SYMPROD_EINTERNAL;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SYMPROD_OK;
  } catch (const symprod::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SYMPROD_EINTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SYMPROD_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) symprod::fail(symprod::Errc::invalid_argument, what);
}

}  // namespace

extern "C" {

const char* symprod_version(void) { return "1.0.0"; }

const char* symprod_last_error(void) { return g_last_error.c_str(); }

void symprod_string_free(char* s) { std::free(s); }

void symprod_config_free(symprod_config* cfg) { delete cfg; }

int symprod_config_parse(const char* config_json, symprod_config** out) {
  return guarded([&] {
    require(config_json && out, "null argument");
    auto doc = symprod::io::parse_document(config_json);
    *out = new symprod_config{symprod::io::config_from_json(doc)};
  });
}

int symprod_config_to_json(const symprod_config* cfg, char** out_json) {
  return guarded([&] {
    require(cfg && out_json, "null argument");
    *out_json = dup_string(symprod::io::config_to_json(cfg->cfg).dump());
  });
}

int symprod_config_fixture(const char* family, int32_t d, int32_t n, uint64_t seed,
                           symprod_config** out) {
  return guarded([&] {
    require(family && out, "null argument");
    namespace sp = symprod::specpos;
    std::string f = family;
    sp::Configuration<symprod::RationalField> cfg;
    if (f == "pencil")
      cfg = sp::fixture_pencil(d, n);
    else if (f == "quadric_ruling")
      cfg = sp::fixture_quadric_ruling(d);
    else if (f == "scroll")
      cfg = sp::fixture_scroll(d);
    else if (f == "triangle")
      cfg = sp::fixture_triangle();
    else if (f == "random_skew")
      cfg = sp::fixture_random_skew(d, n, seed);
    else
      symprod::fail(symprod::Errc::invalid_argument, "unknown fixture family '" + f + "'");
    *out = new symprod_config{std::move(cfg)};
  });
}

int symprod_config_reduce_mod(const symprod_config* cfg, uint32_t prime, symprod_config** out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    const auto* q = std::get_if<symprod::specpos::Configuration<symprod::RationalField>>(&cfg->cfg);
    require(q != nullptr, "reduce_mod needs a rational configuration");
    *out = new symprod_config{symprod::specpos::reduce_mod(*q, prime)};
  });
}

int symprod_specpos_decide(const symprod_config* cfg, uint32_t trials, uint64_t seed,
                           int32_t* out_verdict, char** out_json) {
  return guarded([&] {
    require(cfg && out_verdict && out_json, "null argument");
    std::visit(
        [&](const auto& c) {
          using F = typename std::decay_t<decltype(c)>::field_type;
          auto cert = symprod::specpos::decide(c, trials, seed);
          if (std::holds_alternative<symprod::specpos::SpecialCert<F>>(cert))
            *out_verdict = SYMPROD_VERDICT_SPECIAL;
          else if (std::holds_alternative<symprod::specpos::NotSpecialCert<F>>(cert))
            *out_verdict = SYMPROD_VERDICT_NOT_SPECIAL;
          else
            *out_verdict = SYMPROD_VERDICT_UNDECIDED;
          *out_json = dup_string(
              symprod::io::certificate_to_json(c.planes.front().field(), cert).dump());
        },
        cfg->cfg);
  });
}

int symprod_specpos_span(const symprod_config* cfg, char** out_json) {
  return guarded([&] {
    require(cfg && out_json, "null argument");
    auto report = std::visit([](const auto& c) { return symprod::specpos::check_span_bound(c); },
                             cfg->cfg);
    *out_json = dup_string(symprod::io::span_report_to_json(report).dump());
  });
}

int symprod_specpos_oracle(const symprod_config* cfg, char** out_json) {
  return guarded([&] {
    require(cfg && out_json, "null argument");
    const auto* p = std::get_if<symprod::specpos::Configuration<symprod::PrimeField>>(&cfg->cfg);
    require(p != nullptr, "oracle needs a prime-field configuration; reduce mod p first");
    auto report = symprod::specpos::oracle_ffield(*p);
    *out_json = dup_string(symprod::io::oracle_report_to_json(report).dump());
  });
}

int symprod_subspace_plucker(const char* subspace_json, char** out_json) {
  return guarded([&] {
    require(subspace_json && out_json, "null argument");
    auto doc = symprod::io::parse_document(subspace_json);
    auto sub = symprod::io::subspace_from_json(doc);
    std::visit(
        [&](const auto& s) {
          auto p = symprod::proj::plucker(s);
          *out_json = dup_string(symprod::io::plucker_to_json(s.field(), p).dump());
        },
        sub);
  });
}

int symprod_brill_noether_rho(int64_t g, int64_t r, int64_t d, int64_t* out_rho) {
  return guarded([&] {
    require(out_rho != nullptr, "null argument");
    *out_rho = symprod::curves::brill_noether_rho(g, r, d);
  });
}

int symprod_generic_min_degree(int64_t g, int64_t r, int64_t* out_degree) {
  return guarded([&] {
    require(out_degree != nullptr, "null argument");
    *out_degree = symprod::curves::generic_min_degree(g, r);
  });
}

int symprod_generic_gonality(int64_t g, int64_t* out_gonality) {
  return guarded([&] {
    require(out_gonality != nullptr, "null argument");
    *out_gonality = symprod::curves::generic_gonality(g);
  });
}

int symprod_degirr(const char* profile_json, char** out_json) {
  return guarded([&] {
    require(profile_json && out_json, "null argument");
    auto p = symprod::io::profile_from_json(symprod::io::parse_document(profile_json));
    *out_json = dup_string(symprod::io::interval_to_json(symprod::bounds::degirr_interval(p)).dump());
  });
}

int symprod_deg_gonality(const char* profile_json, int64_t k, char** out_json) {
  return guarded([&] {
    require(profile_json && out_json, "null argument");
    auto p = symprod::io::profile_from_json(symprod::io::parse_document(profile_json));
    *out_json = dup_string(symprod::io::interval_to_json(symprod::bounds::deg_gonality(p, k)).dump());
  });
}

int symprod_gonality_report(const char* profile_json, char** out_json) {
  return guarded([&] {
    require(profile_json && out_json, "null argument");
    auto p = symprod::io::profile_from_json(symprod::io::parse_document(profile_json));
    *out_json =
        dup_string(symprod::io::moving_to_json(symprod::bounds::moving_gonality_lower(p)).dump());
  });
}

int symprod_nefcone_verify(int64_t g, const char* a, const char* b, const char* tau_prev,
                           int64_t c, char** out_json) {
  return guarded([&] {
    require(a && b && tau_prev && out_json, "null argument");
    long long cc = c >= 0 ? c : symprod::nefcone::default_gonality_constant(g).c;
    auto report = symprod::nefcone::verify_tau_certificate(
        g, symprod::int_from_string(a), symprod::int_from_string(b),
        symprod::Rational::from_string(tau_prev), cc);
    *out_json = dup_string(symprod::io::cert_report_to_json(report).dump());
  });
}

int symprod_nefcone_search(int64_t g, int64_t c, const char* tau_prev, int64_t b_max,
                           char** out_json) {
  return guarded([&] {
    require(tau_prev && out_json, "null argument");
    long long cc = c >= 0 ? c : symprod::nefcone::default_gonality_constant(g).c;
    auto result =
        symprod::nefcone::search_min_ratio(g, cc, symprod::Rational::from_string(tau_prev), b_max);
    *out_json = dup_string(symprod::io::search_result_to_json(result).dump());
  });
}

}  // extern "C"
