#include "lensknot/knotdb.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>

#include "lensknot/errors.hpp"
#include "lensknot/homfly.hpp"

namespace lensknot {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string::npos ? std::string::npos : k - start)));
    if (k == std::string::npos) break;
    start = k + 1;
  }
  return out;
}

Decision parse_decision(const std::string& s, std::size_t line) {
  if (s == "D") return Decision::RuledOut;
  if (s == "ND") return Decision::NotDecided;
  throw ParseError("expected D or ND, got '" + s + "'", line);
}

// Strips a comment, returning it separately.
std::pair<std::string, std::string> cut_comment(const std::string& raw) {
  auto h = raw.find('#');
  if (h == std::string::npos) return {trim(raw), ""};
  return {trim(raw.substr(0, h)), trim(raw.substr(h + 1))};
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

}  // namespace

int crossing_number(const std::string& name) {
  auto u = name.find('_');
  if (u == std::string::npos || u == 0) throw UsageError("knot name '" + name + "' is not of the form N_k");
  try {
    return std::stoi(name.substr(0, u));
  } catch (const std::exception&) {
    throw UsageError("knot name '" + name + "' is not of the form N_k");
  }
}

std::vector<KnotRecord> load_table(std::istream& in) {
  std::vector<KnotRecord> out;
  std::set<std::string> names;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto [body, comment] = cut_comment(raw);
    if (body.empty()) continue;
    auto fields = split(body, ';');
    if (fields.size() != 4) throw ParseError("expected 4 ';'-separated fields, got " + std::to_string(fields.size()), line);
    KnotRecord r;
    r.name = fields[0];
    if (r.name.empty() || r.name.find_first_of(" \t") != std::string::npos)
      throw ParseError("bad knot name '" + r.name + "'", line);
    try {
      crossing_number(r.name);
      r.word = parse_braid(fields[1]);
    } catch (const std::exception& e) {
      throw ParseError(std::string("record ") + r.name + ": " + e.what(), line);
    }
    r.expected_p0 = parse_decision(fields[2], line);
    r.expected_p2 = parse_decision(fields[3], line);
    r.provenance = comment;
    r.line = line;
    if (!names.insert(r.name).second) throw ParseError("duplicate knot " + r.name, line);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<KnotRecord> load_table_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_table(in);
}

std::map<std::string, SkeinPoly> load_reference(std::istream& in) {
  std::map<std::string, SkeinPoly> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto body = cut_comment(raw).first;
    if (body.empty()) continue;
    auto fields = split(body, ';');
    if (fields.size() != 2) throw ParseError("expected 'name; polynomial'", line);
    try {
      if (!out.emplace(fields[0], parse_skein(fields[1])).second) throw ParseError("duplicate knot " + fields[0], line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }
  return out;
}

std::map<std::string, SkeinPoly> load_reference_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_reference(in);
}

std::string default_table_path() {
  if (const char* env = std::getenv("LENSKNOT_TABLE"); env && *env) return env;
  return std::string(LENSKNOT_DATA_DIR) + "/knots_le9.txt";
}

std::string default_reference_path() { return std::string(LENSKNOT_DATA_DIR) + "/knots_le9_homfly.txt"; }

Validation validate_record(const KnotRecord& r, const SkeinPoly* reference) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.message = r.name + ": " + msg;
    return v;
  };
  LinkDiagram d = braid_closure(r.word);
  if (d.num_components() != 1)
    return fail("closure has " + std::to_string(d.num_components()) + " components");
  int cn = crossing_number(r.name);
  if (static_cast<int>(r.word.length()) < cn)
    return fail("braid has " + std::to_string(r.word.length()) + " crossings, fewer than " + std::to_string(cn));
  if (reference == nullptr && r.name != "8_13") return v;

  SkeinPoly p = homfly_closure(r.word);
  if (reference && !(p == *reference) && !(p == mirror_transform(*reference)))
    return fail("HOMFLY mismatch: computed " + p.to_string() + ", reference " + reference->to_string() +
                ", difference " + (p - *reference).to_string());
  if (r.name == "8_13") {
    // The value quoted in the literature, up to mirror. It is also allowed
    // up to sign: it comes from tables in variables with m^2 = -z^2, and at
    // v = 1 it gives -1 where the Conway coefficient of 8_13 is +1.
    auto quoted = parse_laurent1("v^-2 - 1 - 2*v^2 + v^4");
    auto got = reduce_mod(z_slice(p, 2), 5);
    bool ok = false;
    for (const auto& c : {quoted, invert_variable(quoted)})
      ok = ok || got == reduce_mod(c, 5) || got == reduce_mod(c, 5).scaled(-1);
    if (!ok) return fail("P2 mod 5 is " + got.to_string() + ", expected +-(" + quoted.to_string() + ") up to mirror");
  }
  return v;
}

}  // namespace lensknot
