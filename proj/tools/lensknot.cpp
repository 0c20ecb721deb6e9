#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lensknot/errors.hpp"
#include "lensknot/homfly.hpp"
#include "lensknot/knotdb.hpp"
#include "lensknot/lenscrit.hpp"
#include "lensknot/report.hpp"
#include "lensknot/torus.hpp"

using namespace lensknot;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

json coeff_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

template <std::size_t N>
json poly_json(const Laurent<N>& p) {
  json vars = json::array(), terms = json::array();
  for (Var x : p.vars()) vars.push_back(std::string(1, var_name(x)));
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (long k : e) ex.push_back(k);
    terms.push_back({ex, coeff_json(c)});
  }
  return {{"text", p.to_string()}, {"vars", vars}, {"terms", terms}};
}

json poly_json(const ModLaurent1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({json::array({e}), c});
  return {{"text", p.to_string()}, {"vars", {std::string(1, var_name(p.var()))}}, {"modulus", p.modulus()}, {"terms", terms}};
}

json verdict_json(const Verdict& v) {
  return {{"criterion", criterion_name(v.criterion)},
          {"p", v.p},
          {"q", v.q},
          {"decision", decision_code(v.decision)},
          {"witness", v.witness ? poly_json(*v.witness) : json(nullptr)}};
}

std::string verdict_text(const Verdict& v) {
  std::string s = std::string(criterion_name(v.criterion)) + " at (" + std::to_string(v.p) + "," + std::to_string(v.q) +
                  "): " + (v.decision == Decision::RuledOut ? "RuledOut" : "NotDecided");
  if (v.witness) s += " (residue " + v.witness->to_string() + ")";
  return s;
}

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::Auto;
  if (s == "skein") return Engine::Skein;
  if (s == "hecke") return Engine::Hecke;
  throw UsageError("unknown engine '" + s + "'");
}

struct Options {
  bool as_json = false;
  std::string braid, engine = "auto", table_path;
  int n = 0, m = 0, p = 5, q = 1, count = 100, identity_count = 25;
  std::uint64_t seed = 20240601;
};

int cmd_homfly(const Options& o) {
  BraidWord b = parse_braid(o.braid);
  SkeinPoly p = homfly_closure(b, parse_engine(o.engine));
  LinkDiagram d = braid_closure(b);
  bool knot = d.num_components() == 1;
  if (o.as_json) {
    json j = {{"braid", serialize_braid(b)}, {"components", d.num_components()}, {"homfly", poly_json(p)}};
    if (knot) {
      j["p0"] = poly_json(z_slice(p, 0));
      j["p2"] = poly_json(z_slice(p, 2));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
    if (knot) std::cout << "P0 = " << z_slice(p, 0).to_string() << "\nP2 = " << z_slice(p, 2).to_string() << "\n";
  }
  return kOk;
}

int cmd_torus(const Options& o) {
  SkeinPoly p = torus_homfly(o.n, o.m);
  if (o.as_json) {
    json j = {{"n", o.n}, {"m", o.m}, {"homfly", poly_json(p)}, {"p2", poly_json(z_slice(p, 2))}};
    if (o.n >= 2 && o.m >= 1) j["x_qt"] = poly_json(jones_X(o.n, o.m));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.to_string() << "\nP2 = " << z_slice(p, 2).to_string() << "\n";
  }
  return kOk;
}

int cmd_generators(const Options& o) {
  auto gens = gamma_generators(o.p, o.q);
  const auto& basis = gamma_basis(o.p, o.q);
  if (o.as_json) {
    json g = json::array(), piv = json::array();
    for (int a = 1; a < o.p; ++a)
      for (int s = 0; s < 2; ++s) {
        int m = a * o.q + (s == 0 ? o.p : -o.p);
        g.push_back({{"n", a}, {"m", m}, {"p2_mod_p", poly_json(gens[2 * (a - 1) + s])}});
      }
    for (std::size_t i = 0; i < basis.pivots.size(); ++i) piv.push_back(poly_json(basis.pivot_polynomial(i)));
    std::cout << json{{"p", o.p}, {"q", o.q}, {"generators", g}, {"normal_form", piv}, {"span", basis.describe()}}.dump(2)
              << "\n";
    return kOk;
  }
  for (int a = 1; a < o.p; ++a)
    for (int s = 0; s < 2; ++s) {
      const auto& g = gens[2 * (a - 1) + s];
      if (g.is_zero()) continue;
      std::cout << "T(" << a << "," << a * o.q + (s == 0 ? o.p : -o.p) << "): " << g.to_string() << "\n";
    }
  std::cout << "normal form:\n";
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) std::cout << "  " << basis.pivot_polynomial(i).to_string() << "\n";
  std::cout << "span = " << basis.describe() << "\n";
  return kOk;
}

int cmd_check(const Options& o) {
  BraidWord b = parse_braid(o.braid);
  if (braid_closure(b).num_components() != 1) throw UsageError("the criteria apply to knots; this closure is a link");
  SkeinPoly p = homfly_closure(b, parse_engine(o.engine));
  std::vector<Verdict> verdicts{p2_criterion(z_slice(p, 2), o.p, o.q)};
  if (o.p == 5 && (o.q == 1 || o.q == -1)) verdicts.push_back(p0_criterion(z_slice(p, 0), o.q));
  if (o.as_json) {
    json v = json::array();
    for (const auto& x : verdicts) v.push_back(verdict_json(x));
    std::cout << json{{"braid", serialize_braid(b)}, {"p2", poly_json(z_slice(p, 2))}, {"verdicts", v}}.dump(2) << "\n";
  } else {
    for (const auto& x : verdicts) std::cout << verdict_text(x) << "\n";
  }
  return kOk;
}

int cmd_lensgen(const Options& o) {
  BraidWord t = parse_braid(o.braid);
  BraidWord w = lens_word(t, o.p, o.q);
  LinkDiagram d = lens_closure(t, o.p, o.q);
  SkeinPoly p = homfly_closure(w, parse_engine(o.engine));
  bool knot = d.num_components() == 1;
  std::optional<Verdict> v;
  if (knot && o.p > 3 && is_prime(o.p)) v = p2_criterion(z_slice(p, 2), o.p, o.q);
  if (o.as_json) {
    json j = {{"tangle", serialize_braid(t)}, {"p", o.p}, {"q", o.q}, {"braid", serialize_braid(w)},
              {"crossings", d.num_crossings()}, {"components", d.num_components()}, {"homfly", poly_json(p)}};
    if (v) j["verdict"] = verdict_json(*v);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "braid: " << serialize_braid(w) << "\n"
              << "crossings: " << d.num_crossings() << ", components: " << d.num_components() << "\n"
              << p.to_string() << "\n";
    if (v) std::cout << verdict_text(*v) << "\n";
  }
  return kOk;
}

int cmd_audit(const Options& o) {
  auto cong = run_congruence(congruence_cases(o.p, o.count, o.seed));
  std::vector<AuditOutcome> ident;
  if (o.p >= 5 && o.identity_count > 0) ident = run_second_coefficient(second_coefficient_cases(o.p, o.identity_count, o.seed));
  std::size_t ok_c = 0, ok_s = 0;
  for (const auto& a : cong) ok_c += a.passed;
  for (const auto& a : ident) ok_s += a.passed;
  auto describe = [](const AuditOutcome& a) {
    return serialize_braid(a.c.tangle) + " letter " + std::to_string(a.c.letter) +
           (a.error.empty() ? "" : " error: " + a.error);
  };
  if (o.as_json) {
    auto list = [&](const std::vector<AuditOutcome>& v) {
      json arr = json::array();
      for (const auto& a : v)
        arr.push_back({{"tangle", serialize_braid(a.c.tangle)}, {"letter", a.c.letter}, {"passed", a.passed},
                       {"error", a.error.empty() ? json(nullptr) : json(a.error)}});
      return arr;
    };
    std::cout << json{{"p", o.p}, {"seed", o.seed}, {"skein_congruence", list(cong)}, {"second_coefficient", list(ident)}}.dump(2)
              << "\n";
  } else {
    std::cout << "seed " << o.seed << ", p = " << o.p << "\n";
    std::cout << "skein congruence: " << ok_c << "/" << cong.size() << "\n";
    for (const auto& a : cong)
      if (!a.passed) std::cout << "  FAIL " << describe(a) << "\n";
    if (!ident.empty()) {
      std::cout << "second-coefficient identity: " << ok_s << "/" << ident.size() << "\n";
      for (const auto& a : ident)
        if (!a.passed) std::cout << "  FAIL " << describe(a) << "\n";
    }
  }
  return ok_c == cong.size() && ok_s == ident.size() ? kOk : kMismatch;
}

int cmd_table(const Options& o) {
  std::string path = o.table_path.empty() ? default_table_path() : o.table_path;
  auto records = load_table_file(path);
  for (const auto& r : records) {
    auto v = validate_record(r);
    if (!v.ok) throw ConsistencyError("invalid record: " + v.message);
  }
  auto rows = compute_table(records);
  auto s = summarize(rows);
  if (o.as_json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"name", r.name},
                     {"p0", poly_json(r.p0)},
                     {"p2", poly_json(r.p2)},
                     {"verdicts", {verdict_json(r.p0_plus), verdict_json(r.p2_plus), verdict_json(r.p0_minus),
                                   verdict_json(r.p2_minus)}},
                     {"expected", {{"p0", decision_code(r.expected_p0)}, {"p2", decision_code(r.expected_p2)}}},
                     {"match", chirality_name(r.match)}});
    std::cout << json{{"table", path},
                      {"policy", kMirrorPolicy},
                      {"rows", arr},
                      {"summary",
                       {{"ruled_out_p2", s.ruled_out_p2},
                        {"total", s.total},
                        {"not_decided_p2", s.not_decided_p2},
                        {"matched", s.matched}}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "table: " << path << "\n";
    std::cout << "policy: " << kMirrorPolicy << "\n\n";
    std::cout << std::left << std::setw(7) << "knot" << std::setw(12) << "expected" << std::setw(12) << "(5,1)"
              << std::setw(12) << "(5,-1)" << "match\n";
    auto pair = [](Decision a, Decision b) { return std::string(decision_code(a)) + " " + decision_code(b); };
    for (const auto& r : rows)
      std::cout << std::setw(7) << r.name << std::setw(12) << pair(r.expected_p0, r.expected_p2) << std::setw(12)
                << pair(r.p0_plus.decision, r.p2_plus.decision) << std::setw(12)
                << pair(r.p0_minus.decision, r.p2_minus.decision) << chirality_name(r.match) << "\n";
    std::cout << "\nnot decided (P2): ";
    for (std::size_t i = 0; i < s.not_decided_p2.size(); ++i) std::cout << (i ? ", " : "") << s.not_decided_p2[i];
    std::cout << "\nrows matching: " << s.matched << "/" << s.total << "\n";
    std::cout << "ruled out: " << s.ruled_out_p2 << "/" << s.total << " (P2, (5,1))\n";
  }
  return s.matched == s.total ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY polynomials of braid closures and lens-knot criteria"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "Structured output");

  auto* homfly = app.add_subcommand("homfly", "HOMFLY polynomial of a braid closure");
  homfly->add_option("braid", o.braid, "Braid, e.g. \"3 | 1 -2 1\"")->required();
  homfly->add_option("--engine", o.engine, "auto, skein or hecke");

  auto* torus = app.add_subcommand("torus", "Torus knot polynomial from the closed formula");
  torus->add_option("n", o.n)->required();
  torus->add_option("m", o.m)->required();

  auto* gens = app.add_subcommand("generators", "Generators and normal form of Gamma_{p,q}");
  gens->add_option("p", o.p)->required();
  gens->add_option("q", o.q)->required();

  auto* check = app.add_subcommand("check", "Run the criteria on a knot given as a braid");
  check->add_option("braid", o.braid)->required();
  check->add_option("p", o.p)->required();
  check->add_option("q", o.q)->required();
  check->add_option("--engine", o.engine, "auto, skein or hecke");

  auto* lensgen = app.add_subcommand("lensgen", "Closure of T^p Omega^q");
  lensgen->add_option("braid", o.braid, "Tangle T")->required();
  lensgen->add_option("p", o.p)->required();
  lensgen->add_option("q", o.q)->required();
  lensgen->add_option("--engine", o.engine, "auto, skein or hecke");

  auto* audit = app.add_subcommand("audit", "Randomized skein congruence checks on lens closures");
  audit->add_option("p", o.p)->required();
  audit->add_option("--count", o.count, "Cases for the skein congruence");
  audit->add_option("--identity-count", o.identity_count, "Cases for the second-coefficient identity (p >= 5)");
  audit->add_option("--seed", o.seed, "Random seed");

  auto* table = app.add_subcommand("table", "Verdicts for the bundled knot table");
  table->add_option("--table", o.table_path, "Table file (default: $LENSKNOT_TABLE or the bundled one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*homfly) return cmd_homfly(o);
    if (*torus) return cmd_torus(o);
    if (*gens) return cmd_generators(o);
    if (*check) return cmd_check(o);
    if (*lensgen) return cmd_lensgen(o);
    if (*audit) return cmd_audit(o);
    if (*table) return cmd_table(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
