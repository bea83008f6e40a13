#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "symprod/bounds.hpp"
#include "symprod/nefcone.hpp"
#include "symprod/specpos.hpp"

// Wire formats. Every field scalar (matrix entries, coefficients, ratios,
// big integers) is a JSON string ("5", "-3/7"); counts and dimensions are
// plain JSON numbers. Object keys serialize sorted, so emitted documents are
// byte-stable for fixed inputs.
namespace symprod::io {

using json = nlohmann::json;

using AnyConfig =
    std::variant<specpos::Configuration<RationalField>, specpos::Configuration<PrimeField>>;
using AnySubspace = std::variant<proj::Subspace<RationalField>, proj::Subspace<PrimeField>>;

json parse_document(const std::string& text);  // throws Errc::parse_error

// {"n":., "k":., "field":"rational"|{"prime":p}, "subspaces":[[row...],...]}
AnyConfig config_from_json(const json& j);
json config_to_json(const AnyConfig& c);

// {"ambient_n":., "field":(optional, default rational), "rows":[[..],..]}
AnySubspace subspace_from_json(const json& j);

template <class F>
json subspace_to_json(const proj::Subspace<F>& s) {
  const F& f = s.field();
  json rows = json::array();
  for (std::size_t r = 0; r < s.basis().rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < s.basis().cols(); ++c)
      row.push_back(f.to_string(s.basis().at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"ambient_n", s.ambient()}, {"rows", std::move(rows)}};
}

template <class F>
json plucker_to_json(const F& f, const proj::PluckerVector<F>& p) {
  json coords = json::array();
  for (const auto& e : p.coords) coords.push_back(f.to_string(e));
  return json{{"ambient_n", p.ambient_n}, {"k", p.k}, {"coords", std::move(coords)}};
}

template <class F>
json certificate_to_json(const F& f, const specpos::Certificate<F>& cert) {
  return std::visit(
      [&](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, specpos::SpecialCert<F>>) {
          json deps = json::array();
          for (const auto& row : v.dependencies) {
            json r = json::array();
            for (const auto& e : row) r.push_back(f.to_string(e));
            deps.push_back(std::move(r));
          }
          return json{{"verdict", "special"}, {"dependencies", std::move(deps)}};
        } else if constexpr (std::is_same_v<T, specpos::NotSpecialCert<F>>) {
          return json{{"verdict", "not_special"},
                      {"excluded_index", v.excluded_index},
                      {"trial", v.trial},
                      {"witness", subspace_to_json(v.witness)}};
        } else {
          return json{{"verdict", "undecided"}, {"trials_used", v.trials_used}};
        }
      },
      cert);
}

json span_report_to_json(const specpos::SpanBoundReport& r);
json oracle_report_to_json(const specpos::OracleReport& r);

// {"genus":., "class":"...", "gonality":?, "delta":{"1":..}, "elliptic_cover_degree":?}
curves::CurveProfile profile_from_json(const json& j);
json profile_to_json(const curves::CurveProfile& p);

json interval_to_json(const bounds::BoundInterval& b);
json moving_to_json(const bounds::MovingGonalityBound& m);

json cert_report_to_json(const nefcone::CertReport& r);
json search_result_to_json(const nefcone::SearchResult& s);

}  // namespace symprod::io
