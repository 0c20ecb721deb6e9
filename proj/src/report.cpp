#include "lensknot/report.hpp"

#include <random>

#include "lensknot/errors.hpp"
#include "lensknot/homfly.hpp"

namespace lensknot {

const char* const kMirrorPolicy =
    "a row matches if both computed verdicts equal the expected ones for the stored braid, "
    "or else for its mirror image (the (5,-1) columns)";

const char* chirality_name(Chirality c) {
  switch (c) {
    case Chirality::Stored: return "stored";
    case Chirality::Mirror: return "mirror";
    default: return "none";
  }
}

Decision TableRow::chosen_p0() const { return match == Chirality::Mirror ? p0_minus.decision : p0_plus.decision; }
Decision TableRow::chosen_p2() const { return match == Chirality::Mirror ? p2_minus.decision : p2_plus.decision; }

TableRow compute_row(const KnotRecord& r) {
  TableRow row;
  row.name = r.name;
  row.expected_p0 = r.expected_p0;
  row.expected_p2 = r.expected_p2;
  row.homfly = homfly_closure(r.word);
  row.p0 = z_slice(row.homfly, 0);
  row.p2 = z_slice(row.homfly, 2);
  row.p0_plus = p0_criterion(row.p0, 1);
  row.p2_plus = p2_criterion(row.p2, 5, 1);
  row.p0_minus = p0_criterion(row.p0, -1);
  row.p2_minus = p2_criterion(row.p2, 5, -1);
  if (row.p0_plus.decision == r.expected_p0 && row.p2_plus.decision == r.expected_p2)
    row.match = Chirality::Stored;
  else if (row.p0_minus.decision == r.expected_p0 && row.p2_minus.decision == r.expected_p2)
    row.match = Chirality::Mirror;
  return row;
}

std::vector<TableRow> compute_table_serial(const std::vector<KnotRecord>& records) {
  std::vector<TableRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(compute_row(r));
  return rows;
}

std::vector<TableRow> compute_table(const std::vector<KnotRecord>& records) {
  // Fill the shared module caches before going wide.
  gamma_basis(5, 1);
  gamma_basis(5, -1);
  const long n = static_cast<long>(records.size());
  std::vector<TableRow> rows(records.size());
  std::vector<std::exception_ptr> errors(records.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = compute_row(records[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

TableSummary summarize(const std::vector<TableRow>& rows) {
  TableSummary s;
  s.total = rows.size();
  for (const auto& r : rows) {
    if (r.chosen_p2() == Decision::RuledOut)
      ++s.ruled_out_p2;
    else
      s.not_decided_p2.push_back(r.name);
    if (r.chosen_p0() == Decision::RuledOut) ++s.ruled_out_p0;
    if (r.matches()) ++s.matched;
  }
  return s;
}

namespace {

BraidWord random_word(std::mt19937_64& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), coin(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return BraidWord(strands, std::move(letters));
}

std::size_t random_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

template <class Check>
std::vector<AuditOutcome> run_cases(const std::vector<AuditCase>& cases, bool parallel, Check check) {
  std::vector<AuditOutcome> out(cases.size());
  const long n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    out[i].c = cases[i];
    try {
      out[i].passed = check(cases[i]);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

}  // namespace

std::vector<AuditCase> congruence_cases(int p, int count, std::uint64_t seed) {
  if (!is_prime(p)) throw UsageError("audit needs a prime p");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> strands(2, 4), len(1, 6);
  std::vector<AuditCase> cases;
  for (int i = 0; i < count; ++i) {
    BraidWord t = random_word(rng, strands(rng), len(rng));
    cases.push_back({t, random_index(rng, t.length()), p, 1});
  }
  return cases;
}

std::vector<AuditCase> second_coefficient_cases(int p, int count, std::uint64_t seed) {
  if (p < 5 || !is_prime(p)) throw UsageError("the second-coefficient audit needs a prime p >= 5");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(3, 8);
  std::vector<AuditCase> cases;
  for (int i = 0; i < count; ++i) {
    bool wide = i % 2 == 1;
    std::size_t want = wide ? static_cast<std::size_t>(p) + 1 : 2;
    std::uniform_int_distribution<int> strands = wide ? std::uniform_int_distribution<int>(p + 1, p + 2)
                                                      : std::uniform_int_distribution<int>(2, 4);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw ResourceError("could not sample a tangle with the wanted smoothing");
      BraidWord t = random_word(rng, strands(rng), len(rng));
      std::size_t idx = random_index(rng, t.length());
      auto tr = skein_triple(t, idx);
      if (lens_closure(tr.plus, p, 1).num_components() != 1) continue;
      if (lens_closure(tr.zero, p, 1).num_components() != want) continue;
      cases.push_back({t, idx, p, 1});
      break;
    }
  }
  return cases;
}

std::vector<AuditOutcome> run_congruence(const std::vector<AuditCase>& cases, bool parallel) {
  return run_cases(cases, parallel, [](const AuditCase& c) { return check_lens_congruence(c.tangle, c.letter, c.p, c.q); });
}

std::vector<AuditOutcome> run_second_coefficient(const std::vector<AuditCase>& cases, bool parallel) {
  return run_cases(cases, parallel, [](const AuditCase& c) { return check_second_coefficient(c.tangle, c.letter, c.p, c.q); });
}

}  // namespace lensknot
