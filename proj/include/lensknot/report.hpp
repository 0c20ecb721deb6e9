#pragma once

// Batch runs over the knot table and randomized audits. Each has a serial
// and an OpenMP version; both produce identical results in input order.

#include <cstdint>
#include <string>
#include <vector>

#include "lensknot/knotdb.hpp"
#include "lensknot/lenscrit.hpp"

namespace lensknot {

enum class Chirality { Stored, Mirror, Neither };
const char* chirality_name(Chirality c);

struct TableRow {
  std::string name;
  SkeinPoly homfly{kSkeinVars};
  IntLaurent1 p0{{Var::v}}, p2{{Var::v}};
  // Verdicts at (5, 1) and (5, -1). The latter are the (5, 1) verdicts of
  // the mirror image.
  Verdict p0_plus, p2_plus, p0_minus, p2_minus;
  Decision expected_p0 = Decision::NotDecided, expected_p2 = Decision::NotDecided;
  Chirality match = Chirality::Neither;

  bool matches() const { return match != Chirality::Neither; }
  // Verdicts of the chirality used for the comparison (stored when neither fits).
  Decision chosen_p0() const;
  Decision chosen_p2() const;
};

extern const char* const kMirrorPolicy;

TableRow compute_row(const KnotRecord& r);
std::vector<TableRow> compute_table(const std::vector<KnotRecord>& records);
std::vector<TableRow> compute_table_serial(const std::vector<KnotRecord>& records);

struct TableSummary {
  std::size_t total = 0, ruled_out_p2 = 0, ruled_out_p0 = 0, matched = 0;
  std::vector<std::string> not_decided_p2;
};
TableSummary summarize(const std::vector<TableRow>& rows);

// One randomized skein case: a tangle, the letter to resolve, and (p, q).
struct AuditCase {
  BraidWord tangle;
  std::size_t letter = 0;
  int p = 5, q = 1;
};

struct AuditOutcome {
  AuditCase c;
  bool passed = false;
  std::string error;
};

// Tangles of 2-4 strands and up to 6 letters.
std::vector<AuditCase> congruence_cases(int p, int count, std::uint64_t seed);
// Tangles whose positive resolution closes to a knot; half with a
// two-component smoothing (2-4 strands), half with p+1 components (p+1 or
// p+2 strands).
std::vector<AuditCase> second_coefficient_cases(int p, int count, std::uint64_t seed);

std::vector<AuditOutcome> run_congruence(const std::vector<AuditCase>& cases, bool parallel = true);
std::vector<AuditOutcome> run_second_coefficient(const std::vector<AuditCase>& cases, bool parallel = true);

}  // namespace lensknot
