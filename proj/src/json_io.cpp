#include "symprod/json_io.hpp"

namespace symprod::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::parse_error, what); }

long long require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    bad(std::string("missing or non-integer field '") + key + "'");
  return j.at(key).get<long long>();
}

std::string require_scalar(const json& j) {
  if (!j.is_string()) bad("matrix entries must be scalar strings");
  return j.get<std::string>();
}

struct ParsedField {
  bool rational = true;
  std::uint32_t prime = 0;
};

ParsedField parse_field_tag(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return {};
    bad("field must be \"rational\" or {\"prime\": p}");
  }
  if (j.is_object() && j.contains("prime") && j.at("prime").is_number_integer()) {
    long long p = j.at("prime").get<long long>();
    if (p < 2 || p >= (1LL << 31)) bad("prime out of range");
    return {false, static_cast<std::uint32_t>(p)};
  }
  bad("field must be \"rational\" or {\"prime\": p}");
}

json field_tag_json(bool rational, std::uint32_t prime) {
  if (rational) return json("rational");
  return json{{"prime", prime}};
}

template <class F>
Mat<F> rows_from_json(const F& f, const json& rows, int ambient_n) {
  if (!rows.is_array() || rows.empty()) bad("subspace rows must be a nonempty array");
  const std::size_t cols = static_cast<std::size_t>(ambient_n) + 1;
  Mat<F> m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || row.size() != cols)
      bad("each row needs ambient_n + 1 entries");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.parse(require_scalar(row.at(c)));
  }
  return m;
}

template <class F>
specpos::Configuration<F> config_from_json_typed(const F& f, const json& j) {
  int n = static_cast<int>(require_int(j, "n"));
  int k = static_cast<int>(require_int(j, "k"));
  if (!j.contains("subspaces") || !j.at("subspaces").is_array())
    bad("missing 'subspaces' array");
  std::vector<proj::Subspace<F>> planes;
  for (const json& rows : j.at("subspaces"))
    planes.push_back(proj::Subspace<F>::from_rows(n, rows_from_json(f, rows, n)));
  return specpos::make_configuration(n, k, std::move(planes));
}

template <class F>
json config_to_json_typed(const specpos::Configuration<F>& c, const json& field_tag) {
  const F& f = c.planes.front().field();
  json subs = json::array();
  for (const auto& s : c.planes) {
    json rows = json::array();
    for (std::size_t r = 0; r < s.basis().rows(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < s.basis().cols(); ++col)
        row.push_back(f.to_string(s.basis().at(r, col)));
      rows.push_back(std::move(row));
    }
    subs.push_back(std::move(rows));
  }
  return json{{"n", c.n}, {"k", c.k}, {"field", field_tag}, {"subspaces", std::move(subs)}};
}

}  // namespace

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

AnyConfig config_from_json(const json& j) {
  if (!j.is_object()) bad("configuration must be a JSON object");
  ParsedField tag = parse_field_tag(j.contains("field") ? j.at("field") : json("rational"));
  if (tag.rational) return config_from_json_typed(RationalField{}, j);
  return config_from_json_typed(PrimeField(tag.prime), j);
}

json config_to_json(const AnyConfig& c) {
  return std::visit(
      [](const auto& cfg) {
        using F = std::decay_t<decltype(cfg.planes.front().field())>;
        if constexpr (F::is_rational)
          return config_to_json_typed(cfg, field_tag_json(true, 0));
        else
          return config_to_json_typed(
              cfg, field_tag_json(false, cfg.planes.front().field().modulus()));
      },
      c);
}

AnySubspace subspace_from_json(const json& j) {
  if (!j.is_object()) bad("subspace must be a JSON object");
  int n = static_cast<int>(require_int(j, "ambient_n"));
  if (!j.contains("rows")) bad("missing 'rows'");
  ParsedField tag = parse_field_tag(j.contains("field") ? j.at("field") : json("rational"));
  if (tag.rational) {
    RationalField f;
    return proj::Subspace<RationalField>::from_rows(n, rows_from_json(f, j.at("rows"), n));
  }
  PrimeField f(tag.prime);
  return proj::Subspace<PrimeField>::from_rows(n, rows_from_json(f, j.at("rows"), n));
}

json span_report_to_json(const specpos::SpanBoundReport& r) {
  json ok;
  if (r.applicable)
    ok = r.satisfied;
  else
    ok = nullptr;  // the bound has no content for k = 1
  return json{{"span_dim", r.span_dim}, {"bound", r.bound},       {"applicable", r.applicable},
              {"theorem_range", r.theorem_range}, {"satisfied", r.satisfied}, {"ok", ok}};
}

json oracle_report_to_json(const specpos::OracleReport& r) {
  return json{{"special", r.special},
              {"planes_enumerated", r.planes_enumerated},
              {"prime", r.prime}};
}

curves::CurveProfile profile_from_json(const json& j) {
  if (!j.is_object()) bad("profile must be a JSON object");
  curves::CurveProfile p;
  p.genus = require_int(j, "genus");
  if (j.contains("class")) {
    if (!j.at("class").is_string()) bad("'class' must be a string");
    p.cls = curves::curve_class_from_name(j.at("class").get<std::string>());
  }
  if (j.contains("gonality")) p.gonality = require_int(j, "gonality");
  if (j.contains("elliptic_cover_degree"))
    p.elliptic_cover_degree = require_int(j, "elliptic_cover_degree");
  if (j.contains("delta")) {
    if (!j.at("delta").is_object()) bad("'delta' must be an object keyed by m");
    for (const auto& [key, val] : j.at("delta").items()) {
      if (key != "1" && key != "2" && key != "3") bad("delta keys must be \"1\", \"2\", \"3\"");
      if (!val.is_number_integer()) bad("delta values must be integers");
      p.delta[std::stoi(key)] = val.get<long long>();
    }
  }
  p.validate();
  return p;
}

json profile_to_json(const curves::CurveProfile& p) {
  json j{{"genus", p.genus}, {"class", curves::curve_class_name(p.cls)}};
  if (p.gonality) j["gonality"] = *p.gonality;
  if (p.elliptic_cover_degree) j["elliptic_cover_degree"] = *p.elliptic_cover_degree;
  if (!p.delta.empty()) {
    json d = json::object();
    for (const auto& [m, v] : p.delta) d[std::to_string(m)] = v;
    j["delta"] = std::move(d);
  }
  return j;
}

json interval_to_json(const bounds::BoundInterval& b) {
  json j{{"lo", b.lo},
         {"exact", b.exact},
         {"provenance", b.provenance},
         {"notes", b.notes}};
  if (b.hi)
    j["hi"] = *b.hi;
  else
    j["hi"] = nullptr;
  return j;
}

json moving_to_json(const bounds::MovingGonalityBound& m) {
  return json{{"bound", m.bound},
              {"rigidity_applicable", m.rigidity_applicable},
              {"equality_note", m.equality_note}};
}

json cert_report_to_json(const nefcone::CertReport& r) {
  json j{{"valid", r.valid},
         {"g", r.g},
         {"c", r.c},
         {"a", int_to_string(r.a)},
         {"b", int_to_string(r.b)},
         {"ratio", r.ratio.str()},
         {"l_squared", int_to_string(r.l_squared)}};
  // A, B, C exist once the positivity gate passed (valid, "leading", or
  // "integer-point" outcomes); earlier failures never computed them.
  if (!r.failed_check || *r.failed_check == "leading" || *r.failed_check == "integer-point") {
    j["quadratic"] =
        json{{"A", int_to_string(r.A)}, {"B", int_to_string(r.B)}, {"C", int_to_string(r.C)}};
  }
  if (r.discriminant)
    j["discriminant"] = int_to_string(*r.discriminant);
  else
    j["discriminant"] = nullptr;
  json pts = json::array();
  for (const auto& [m, fm] : r.checked_points)
    pts.push_back(json::array({std::to_string(m), int_to_string(fm)}));
  j["checked_points"] = std::move(pts);
  if (r.failed_check)
    j["failed_check"] = *r.failed_check;
  else
    j["failed_check"] = nullptr;
  return j;
}

json search_result_to_json(const nefcone::SearchResult& s) {
  json j{{"a", int_to_string(s.a)},
         {"b", int_to_string(s.b)},
         {"ratio", Rational(s.a, s.b).str()},
         {"report", cert_report_to_json(s.report)}};
  // The three published pairs are (6,32,13), (7,77,29), (8,17,6); anything
  // else out of the search is our own arithmetic, flagged as such.
  bool published = (s.report.g == 6 && s.a == 32 && s.b == 13) ||
                   (s.report.g == 7 && s.a == 77 && s.b == 29) ||
                   (s.report.g == 8 && s.a == 17 && s.b == 6);
  j["notes"] = published ? json::array()
                         : json::array({"toolkit-derived, unpublished"});
  return j;
}

}  // namespace symprod::io
