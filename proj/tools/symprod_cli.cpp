// Command-line front end. Links only the C API in symprod.h; every verdict
// and report arrives as a JSON document, which --json passes through
// verbatim and the default mode renders as plain text.
//
// Exit codes: 0 definitive verdict or value, 2 undecided, 1 bad input or
// exhausted search.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "symprod.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "symprod: " << msg << "\n";
  std::exit(kExitError);
}

void check(int rc) {
  if (rc != SYMPROD_OK) die(symprod_last_error());
}

// Owning wrappers so early exits cannot leak.
struct StringOut {
  char* s = nullptr;
  ~StringOut() { symprod_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct ConfigOut {
  symprod_config* c = nullptr;
  ~ConfigOut() { symprod_config_free(c); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_report(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) die("internal: report is not valid JSON");
  return j;
}

void emit(const json& j, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << human;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// Flags shared by the curve-profile commands, assembled into the profile
// JSON document the C API expects.
struct ProfileArgs {
  std::string profile_path;
  std::int64_t genus = -1;
  std::string cls = "arbitrary";
  std::int64_t gonality = -1;
  std::int64_t delta1 = -1, delta2 = -1, delta3 = -1;
  std::int64_t elliptic_cover_degree = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--profile", profile_path, "curve profile JSON file");
    cmd->add_option("--genus", genus, "genus of the curve");
    cmd->add_option("--class", cls,
                    "very_general | hyperelliptic | non_hyperelliptic | arbitrary");
    cmd->add_option("--gonality", gonality, "known gonality");
    cmd->add_option("--delta1", delta1, "minimal degree of a map to P^1 (gonality)");
    cmd->add_option("--delta2", delta2, "minimal degree of a plane model");
    cmd->add_option("--delta3", delta3, "minimal degree of a space model");
    cmd->add_option("--elliptic-cover-degree", elliptic_cover_degree,
                    "degree of a known cover of an elliptic curve");
  }

  std::string document() const {
    if (!profile_path.empty()) return read_file(profile_path);
    if (genus < 0) die("either --profile or --genus is required");
    json j{{"genus", genus}, {"class", cls}};
    if (gonality >= 0) j["gonality"] = gonality;
    json delta = json::object();
    if (delta1 >= 0) delta["1"] = delta1;
    if (delta2 >= 0) delta["2"] = delta2;
    if (delta3 >= 0) delta["3"] = delta3;
    if (!delta.empty()) j["delta"] = delta;
    if (elliptic_cover_degree >= 0) j["elliptic_cover_degree"] = elliptic_cover_degree;
    return j.dump();
  }
};

void load_config(const std::string& path, ConfigOut& out) {
  check(symprod_config_parse(read_file(path).c_str(), &out.c));
}

std::string render_interval(const json& j) {
  std::ostringstream out;
  out << "lower bound: " << j["lo"].get<long long>() << "\n";
  if (j["hi"].is_null())
    out << "upper bound: none\n";
  else
    out << "upper bound: " << j["hi"].get<long long>() << "\n";
  out << "exact: " << yesno(j["exact"].get<bool>()) << "\n";
  out << "provenance:";
  for (const auto& p : j["provenance"]) out << " " << p.get<std::string>();
  out << "\n";
  for (const auto& n : j["notes"]) out << "note: " << n.get<std::string>() << "\n";
  return out.str();
}

int run_interval_command(const ProfileArgs& prof, bool as_json, bool dego, std::int64_t k) {
  std::string doc = prof.document();
  StringOut s;
  if (dego)
    check(symprod_deg_gonality(doc.c_str(), k, &s.s));
  else
    check(symprod_degirr(doc.c_str(), &s.s));
  json j = parse_report(s.str());
  emit(j, as_json, render_interval(j));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for plane configurations, curve invariants and nef-cone slopes"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "emit one JSON document instead of text");
  app.add_option("--seed", seed, "seed for randomized paths (default 1)");

  // specpos-decide
  auto* decide = app.add_subcommand("specpos-decide",
                                    "decide special position with a checkable certificate");
  std::string decide_config;
  std::uint32_t decide_trials = 200;
  decide->add_option("--config", decide_config, "configuration JSON file")->required();
  decide->add_option("--trials", decide_trials, "witness-search trials per index (default 200)");

  // specpos-span
  auto* span = app.add_subcommand("specpos-span", "span dimension against floor(kd/2)-1");
  std::string span_config;
  span->add_option("--config", span_config, "configuration JSON file")->required();

  // specpos-oracle
  auto* oracle = app.add_subcommand("specpos-oracle",
                                    "exhaustive special-position check over a prime field");
  std::string oracle_config;
  std::int64_t oracle_prime = 0;
  oracle->add_option("--config", oracle_config, "configuration JSON file")->required();
  oracle->add_option("--prime", oracle_prime,
                     "reduce a rational configuration mod this prime first");

  // fixture
  auto* fixture = app.add_subcommand("fixture", "write a built-in example configuration");
  std::string fix_family, fix_out;
  std::int32_t fix_d = 3, fix_n = 3;
  fixture->add_option("--family", fix_family,
                      "pencil | quadric_ruling | scroll | triangle | random_skew")
      ->required();
  fixture->add_option("--d", fix_d, "number of planes (default 3)");
  fixture->add_option("--n", fix_n, "ambient projective dimension (default 3)");
  fixture->add_option("--out", fix_out, "output path (default: standard output)");

  // plucker
  auto* plucker = app.add_subcommand("plucker", "Plücker coordinates of one subspace");
  std::string plucker_path;
  plucker->add_option("--subspace", plucker_path, "subspace JSON file")->required();

  // bn
  auto* bn = app.add_subcommand("bn", "Brill-Noether number and generic existence");
  std::int64_t bn_g = 0, bn_r = 1, bn_d = -1;
  bn->add_option("--genus", bn_g, "genus")->required();
  bn->add_option("--r", bn_r, "projective dimension of the series")->required();
  bn->add_option("--d", bn_d, "degree of the series (default: least generic degree)");

  // gonality
  auto* gon = app.add_subcommand("gonality",
                                 "gonality bound for moving curves on the symmetric square");
  ProfileArgs gon_prof;
  gon_prof.attach(gon);

  // degirr
  auto* degirr = app.add_subcommand("degirr",
                                    "degree of irrationality of the symmetric square");
  ProfileArgs degirr_prof;
  degirr_prof.attach(degirr);

  // dego
  auto* dego = app.add_subcommand("dego", "degree of gonality of a symmetric product");
  ProfileArgs dego_prof;
  dego_prof.attach(dego);
  std::int64_t dego_k = 2;
  dego->add_option("--k", dego_k, "which symmetric product (default 2)");

  // nefcone-verify
  auto* verify = app.add_subcommand("nefcone-verify", "audit a nef-cone slope certificate");
  std::int64_t verify_g = 0, verify_c = -1;
  std::string verify_a, verify_b, verify_tau = "0";
  verify->add_option("--g", verify_g, "genus")->required();
  verify->add_option("--a", verify_a, "numerator of the claimed slope")->required();
  verify->add_option("--b", verify_b, "denominator of the claimed slope")->required();
  verify->add_option("--tau-prev", verify_tau, "previously certified lower slope (default 0)");
  verify->add_option("--c", verify_c, "gonality constant (default: built-in value for g)");

  // nefcone-search
  auto* search = app.add_subcommand("nefcone-search", "least certifiable slope a/b with b bounded");
  std::int64_t search_g = 0, search_c = -1, search_bmax = 0;
  std::string search_tau = "0";
  search->add_option("--g", search_g, "genus")->required();
  search->add_option("--b-max", search_bmax, "largest denominator to try")->required();
  search->add_option("--tau-prev", search_tau, "previously certified lower slope (default 0)");
  search->add_option("--c", search_c, "gonality constant (default: built-in value for g)");

  // --json / --seed may appear after the subcommand name, as in
  // `symprod_cli degirr --genus 6 --json`.
  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (decide->parsed()) {
    ConfigOut cfg;
    load_config(decide_config, cfg);
    int32_t verdict = 0;
    StringOut s;
    check(symprod_specpos_decide(cfg.c, decide_trials, seed, &verdict, &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "verdict: " << j["verdict"].get<std::string>() << "\n";
    if (verdict == SYMPROD_VERDICT_NOT_SPECIAL)
      human << "excluded index: " << j["excluded_index"].get<std::size_t>() << " (witness found at trial "
            << j["trial"].get<std::uint32_t>() << ")\n";
    if (verdict == SYMPROD_VERDICT_UNDECIDED)
      human << "trials used: " << j["trials_used"].get<std::uint32_t>() << "\n";
    emit(j, as_json, human.str());
    return verdict == SYMPROD_VERDICT_UNDECIDED ? kExitUndecided : kExitOk;
  }

  if (span->parsed()) {
    ConfigOut cfg;
    load_config(span_config, cfg);
    StringOut s;
    check(symprod_specpos_span(cfg.c, &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "span dimension: " << j["span_dim"].get<long long>() << "\n"
          << "bound floor(kd/2)-1: " << j["bound"].get<long long>() << "\n"
          << "applicable (k >= 2): " << yesno(j["applicable"].get<bool>()) << "\n"
          << "within theorem range (2 <= d <= n): " << yesno(j["theorem_range"].get<bool>())
          << "\n"
          << "satisfied: " << yesno(j["satisfied"].get<bool>()) << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (oracle->parsed()) {
    ConfigOut cfg;
    load_config(oracle_config, cfg);
    ConfigOut reduced;
    const symprod_config* effective = cfg.c;
    if (oracle_prime > 0) {
      check(symprod_config_reduce_mod(cfg.c, static_cast<uint32_t>(oracle_prime), &reduced.c));
      effective = reduced.c;
    }
    StringOut s;
    check(symprod_specpos_oracle(effective, &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "special: " << yesno(j["special"].get<bool>()) << "\n"
          << "planes enumerated: " << j["planes_enumerated"].get<std::uint64_t>() << "\n"
          << "prime: " << j["prime"].get<std::uint32_t>() << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (fixture->parsed()) {
    ConfigOut cfg;
    check(symprod_config_fixture(fix_family.c_str(), fix_d, fix_n, seed, &cfg.c));
    StringOut s;
    check(symprod_config_to_json(cfg.c, &s.s));
    if (fix_out.empty()) {
      std::cout << s.str() << "\n";
    } else {
      std::ofstream out(fix_out, std::ios::binary);
      if (!out) die("cannot write '" + fix_out + "'");
      out << s.str() << "\n";
    }
    return kExitOk;
  }

  if (plucker->parsed()) {
    StringOut s;
    check(symprod_subspace_plucker(read_file(plucker_path).c_str(), &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "coordinates:";
    for (const auto& c : j["coords"]) human << " " << c.get<std::string>();
    human << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (bn->parsed()) {
    int64_t min_degree = 0, gonality = 0;
    check(symprod_generic_min_degree(bn_g, bn_r, &min_degree));
    check(symprod_generic_gonality(bn_g, &gonality));
    int64_t d = bn_d >= 0 ? bn_d : min_degree;
    int64_t rho = 0;
    check(symprod_brill_noether_rho(bn_g, bn_r, d, &rho));
    json j{{"genus", bn_g},
           {"r", bn_r},
           {"d", d},
           {"rho", rho},
           {"exists_on_general_curve", rho >= 0},
           {"min_degree", min_degree},
           {"generic_gonality", gonality}};
    std::ostringstream human;
    human << "rho(g=" << bn_g << ", r=" << bn_r << ", d=" << d << ") = " << rho << "\n"
          << "series exists on a general curve: " << yesno(rho >= 0) << "\n"
          << "least degree with rho >= 0: " << min_degree << "\n"
          << "generic gonality: " << gonality << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (gon->parsed()) {
    std::string doc = gon_prof.document();
    StringOut s;
    check(symprod_gonality_report(doc.c_str(), &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "moving-curve gonality bound: " << j["bound"].get<long long>() << "\n"
          << "rigidity applies: " << yesno(j["rigidity_applicable"].get<bool>()) << "\n"
          << "equality: " << j["equality_note"].get<std::string>() << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (degirr->parsed()) return run_interval_command(degirr_prof, as_json, false, 2);
  if (dego->parsed()) return run_interval_command(dego_prof, as_json, true, dego_k);

  if (verify->parsed()) {
    StringOut s;
    check(symprod_nefcone_verify(verify_g, verify_a.c_str(), verify_b.c_str(),
                                 verify_tau.c_str(), verify_c, &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "valid: " << yesno(j["valid"].get<bool>()) << "\n"
          << "ratio: " << j["ratio"].get<std::string>() << "\n"
          << "L^2 = " << j["l_squared"].get<std::string>() << "\n";
    if (j.contains("quadratic")) {
      auto tail = [](const std::string& v) {
        return v.front() == '-' ? " - " + v.substr(1) : " + " + v;
      };
      human << "f(m) = " << j["quadratic"]["A"].get<std::string>() << " m^2"
            << tail(j["quadratic"]["B"].get<std::string>()) << " m"
            << tail(j["quadratic"]["C"].get<std::string>()) << "\n";
    }
    if (!j["discriminant"].is_null())
      human << "discriminant: " << j["discriminant"].get<std::string>() << "\n";
    if (!j["failed_check"].is_null())
      human << "failed check: " << j["failed_check"].get<std::string>() << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  if (search->parsed()) {
    StringOut s;
    check(symprod_nefcone_search(search_g, search_c, search_tau.c_str(), search_bmax, &s.s));
    json j = parse_report(s.str());
    std::ostringstream human;
    human << "best ratio: " << j["a"].get<std::string>() << "/" << j["b"].get<std::string>()
          << "\n"
          << "L^2 = " << j["report"]["l_squared"].get<std::string>() << "\n";
    for (const auto& n : j["notes"]) human << "note: " << n.get<std::string>() << "\n";
    emit(j, as_json, human.str());
    return kExitOk;
  }

  die("no subcommand handled");  // unreachable: require_subcommand(1)
}
