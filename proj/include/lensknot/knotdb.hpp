#pragma once

// The bundled table of prime knots up to nine crossings.
//
// One record per line:
//   name; strands | letters; expected P0 verdict; expected P2 verdict
// with `#` starting a comment (trailing comments hold per-record provenance).

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lensknot/braid.hpp"
#include "lensknot/lenscrit.hpp"
#include "lensknot/poly.hpp"

namespace lensknot {

struct KnotRecord {
  std::string name;
  BraidWord word;
  Decision expected_p0 = Decision::NotDecided;
  Decision expected_p2 = Decision::NotDecided;
  std::string provenance;
  std::size_t line = 0;
};

// Throws ParseError carrying the 1-based line number.
std::vector<KnotRecord> load_table(std::istream& in);
std::vector<KnotRecord> load_table_file(const std::string& path);

// `name; polynomial` lines.
std::map<std::string, SkeinPoly> load_reference(std::istream& in);
std::map<std::string, SkeinPoly> load_reference_file(const std::string& path);

// $LENSKNOT_TABLE, else data/knots_le9.txt in the source tree.
std::string default_table_path();
std::string default_reference_path();

// "8_13" -> 8
int crossing_number(const std::string& name);

struct Validation {
  bool ok = true;
  std::string message;
};

// The closure must be a knot with enough crossings for its name. With a
// reference polynomial the computed one must equal it or its mirror.
Validation validate_record(const KnotRecord& r, const SkeinPoly* reference = nullptr);

}  // namespace lensknot
