#include "lensknot/lenscrit.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lensknot/errors.hpp"
#include "lensknot/torus.hpp"

namespace lensknot {

namespace {

using Row = std::vector<ModLaurent1>;

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

ModLaurent1 zero_u(std::uint32_t p) { return ModLaurent1(p, Var::u); }

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Row to_row(const ModLaurent1& f, std::uint32_t p) {
  Row row(p, zero_u(p));
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) throw UsageError("module elements must have even v-exponents, got v^" + std::to_string(e));
    long w = e / 2;
    long k = floor_div(w, static_cast<long>(p));
    row[w - k * static_cast<long>(p)].add_term(k, c);
  }
  return row;
}

ModLaurent1 from_row(const Row& row, std::uint32_t p) {
  ModLaurent1 f(p, Var::v);
  for (std::size_t r = 0; r < row.size(); ++r)
    for (const auto& [k, c] : row[r].terms()) f.add_term(2 * (static_cast<long>(p) * k + static_cast<long>(r)), c);
  return f;
}

bool row_zero(const Row& r) {
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Row& y, const ModLaurent1& a, const Row& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] -= a * x[i];
}

// Quotient and remainder of polynomials (nonnegative exponents) in u.
std::pair<ModLaurent1, ModLaurent1> poly_divmod(ModLaurent1 a, const ModLaurent1& b) {
  std::uint32_t p = b.modulus();
  ModLaurent1 quot = zero_u(p);
  long db = b.max_exponent();
  std::uint32_t inv = inverse_mod(b.coeff(db), p);
  while (!a.is_zero() && a.max_exponent() >= db) {
    long shift = a.max_exponent() - db;
    auto t = ModLaurent1::monomial(p, shift, static_cast<long long>(a.coeff(a.max_exponent())) * inv % p, Var::u);
    quot += t;
    a -= t * b;
  }
  return {quot, a};
}

long width(const ModLaurent1& f) { return f.max_exponent() - f.min_exponent(); }

// Euclidean quotient in F_p[u^{±1}]: a - q b has smaller width than b, or vanishes.
ModLaurent1 laurent_quotient(const ModLaurent1& a, const ModLaurent1& b) {
  long i = a.min_exponent(), j = b.min_exponent();
  auto [q, r] = poly_divmod(a.shifted(-i), b.shifted(-j));
  return q.shifted(i - j);
}

// Unit c u^k that turns f into a monic polynomial with nonzero constant term.
ModLaurent1 normalizing_unit(const ModLaurent1& f) {
  std::uint32_t p = f.modulus();
  return ModLaurent1::monomial(p, -f.min_exponent(), inverse_mod(f.coeff(f.max_exponent()), p), Var::u);
}

// Canonical representative of a modulo P, a polynomial of degree d of
// P-width: an element of span{1, ..., u^{d-1}}. Returns the quotient too.
std::pair<ModLaurent1, ModLaurent1> canonical_mod(const ModLaurent1& a, const ModLaurent1& P) {
  std::uint32_t p = P.modulus();
  if (a.is_zero()) return {zero_u(p), zero_u(p)};
  if (P.max_exponent() == 0) return {a.scaled(inverse_mod(P.coeff(0), p)), zero_u(p)};
  long i = a.min_exponent();
  ModLaurent1 rem = poly_divmod(a.shifted(-i), P).second;
  if (i > 0) {
    rem = poly_divmod(rem.shifted(i), P).second;
  } else if (i < 0) {
    // u^{-1} = -(P - c0) / (c0 u) mod P
    std::uint32_t c0 = P.coeff(0);
    ModLaurent1 uinv = (P - ModLaurent1::monomial(p, 0, c0, Var::u)).shifted(-1).scaled(p - inverse_mod(c0, p));
    for (long s = 0; s < -i; ++s) rem = poly_divmod(rem * uinv, P).second;
  }
  ModLaurent1 diff = a - rem;
  if (diff.is_zero()) return {zero_u(p), rem};
  long j = diff.min_exponent();
  auto [q, r] = poly_divmod(diff.shifted(-j), P);
  if (!r.is_zero()) throw ConsistencyError("canonical remainder is not congruent to the input");
  return {q.shifted(j), rem};
}

}  // namespace

ModLaurent1 ModuleBasis::pivot_polynomial(std::size_t i) const { return from_row(pivots.at(i).row, p); }

std::string ModuleBasis::describe() const {
  std::ostringstream out;
  out << "<";
  for (std::size_t i = 0; i < pivots.size(); ++i) out << (i ? ", " : "") << pivot_polynomial(i).to_string();
  out << "> over F_" << p << "[v^±" << 2 * p << "]";
  return out.str();
}

ModuleBasis module_normal_form(const std::vector<ModLaurent1>& generators, std::uint32_t p) {
  if (!is_prime(p)) throw UsageError("module coefficients need a prime modulus");
  ModuleBasis basis;
  basis.p = p;
  basis.generators = generators;
  std::vector<Row> rows;
  for (const auto& g : generators) {
    if (g.modulus() != p) throw UsageError("generator modulus differs from the module modulus");
    Row r = to_row(g, p);
    if (!row_zero(r)) rows.push_back(std::move(r));
  }

  for (std::uint32_t col = 0; col < p && !rows.empty(); ++col) {
    while (true) {
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i][col].is_zero()) live.push_back(i);
      if (live.empty()) break;
      std::size_t best = live[0];
      for (std::size_t i : live)
        if (width(rows[i][col]) < width(rows[best][col])) best = i;
      if (live.size() == 1) {
        Row r = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        ModLaurent1 unit = normalizing_unit(r[col]);
        for (auto& x : r) x = x * unit;
        basis.pivots.push_back({static_cast<int>(col), std::move(r)});
        break;
      }
      for (std::size_t i : live) {
        if (i == best) continue;
        axpy(rows[i], laurent_quotient(rows[i][col], rows[best][col]), rows[best]);
      }
      std::erase_if(rows, row_zero);
    }
  }

  // Reduce entries above each pivot so the form is unique.
  for (std::size_t j = 0; j < basis.pivots.size(); ++j) {
    const auto& pj = basis.pivots[j];
    for (std::size_t i = 0; i < j; ++i) {
      auto& pi = basis.pivots[i];
      auto [q, rem] = canonical_mod(pi.row[pj.column], pj.row[pj.column]);
      if (!q.is_zero()) axpy(pi.row, q, pj.row);
    }
  }
  return basis;
}

Membership is_member(const ModLaurent1& f, const ModuleBasis& basis) {
  if (f.modulus() != basis.p) throw UsageError("polynomial modulus differs from the module modulus");
  Row r = to_row(f, basis.p);
  for (const auto& pv : basis.pivots) {
    auto [q, rem] = canonical_mod(r[pv.column], pv.row[pv.column]);
    if (!q.is_zero()) axpy(r, q, pv.row);
  }
  Membership m;
  m.residue = from_row(r, basis.p);
  m.member = m.residue.is_zero();
  return m;
}

bool span_equal(const ModuleBasis& a, const ModuleBasis& b) {
  if (a.p != b.p) throw UsageError("cannot compare modules over different primes");
  for (std::size_t i = 0; i < a.pivots.size(); ++i)
    if (!is_member(a.pivot_polynomial(i), b).member) return false;
  for (std::size_t i = 0; i < b.pivots.size(); ++i)
    if (!is_member(b.pivot_polynomial(i), a).member) return false;
  return true;
}

std::vector<ModLaurent1> gamma_generators(int p, int q) {
  if (p <= 3 || !is_prime(p)) throw UsageError("Gamma needs a prime p > 3, got " + std::to_string(p));
  if (std::gcd(p, q) != 1) throw UsageError("Gamma needs gcd(p, q) = 1");
  std::vector<ModLaurent1> gens;
  for (int a = 1; a < p; ++a)
    for (int sign : {1, -1}) gens.push_back(reduce_mod(torus_p2(a, a * q + sign * p), static_cast<std::uint32_t>(p)));
  return gens;
}

const ModuleBasis& gamma_basis(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ModuleBasis> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
  }
  ModuleBasis b = module_normal_form(gamma_generators(p, q), static_cast<std::uint32_t>(p));
  std::lock_guard lock(mu);
  return cache.try_emplace({p, q}, std::move(b)).first->second;
}

const char* decision_code(Decision d) { return d == Decision::RuledOut ? "D" : "ND"; }
const char* criterion_name(Criterion c) { return c == Criterion::P0 ? "P0" : "P2"; }

Verdict p2_criterion(const IntLaurent1& p2, int p, int q) {
  const ModuleBasis& gamma = gamma_basis(p, q);
  Membership m = is_member(reduce_mod(p2, static_cast<std::uint32_t>(p)), gamma);
  Verdict v;
  v.criterion = Criterion::P2;
  v.p = p;
  v.q = q;
  if (!m.member) {
    v.decision = Decision::RuledOut;
    v.witness = m.residue;
  }
  return v;
}

Verdict p0_criterion(const IntLaurent1& p0, int q) {
  if (q != 1 && q != -1) throw UsageError("the P0 criterion is stated for q = 1 or -1");
  ModLaurent1 f = reduce_mod(q == 1 ? p0 : invert_variable(p0), 5);
  for (const auto& [e, c] : f.terms())
    if (e % 2 != 0) throw UsageError("P0 of a knot has even v-exponents only");
  Verdict v;
  v.criterion = Criterion::P0;
  v.p = 5;
  v.q = q;
  // a_{10k+4} = 2 a_{10k+2} and a_{10k+6} = 2 a_{10k+8} (mod 5)
  ModLaurent1 bad(5, Var::v);
  std::map<long, bool> seen;
  for (const auto& [e, c] : f.terms()) seen[floor_div(e, 10)] = true;
  for (const auto& [k, unused] : seen) {
    long b = 10 * k;
    long d1 = (static_cast<long>(f.coeff(b + 4)) - 2L * f.coeff(b + 2)) % 5;
    long d2 = (static_cast<long>(f.coeff(b + 6)) - 2L * f.coeff(b + 8)) % 5;
    if (d1 != 0) bad.add_term(b + 4, d1);
    if (d2 != 0) bad.add_term(b + 6, d2);
  }
  if (!bad.is_zero()) {
    v.decision = Decision::RuledOut;
    v.witness = bad;
  }
  return v;
}

SkeinPoly lens_homfly(const BraidWord& t, int p, int q, Engine engine) {
  return homfly_closure(lens_word(t, p, q), engine);
}

SkeinTriple skein_triple(const BraidWord& t, std::size_t letter) {
  if (letter >= t.length()) throw UsageError("letter index out of range");
  auto with = [&](int sign) {
    auto l = t.letters();
    l[letter] = sign * std::abs(l[letter]);
    return BraidWord(t.strands(), std::move(l));
  };
  auto l = t.letters();
  l.erase(l.begin() + static_cast<long>(letter));
  return {with(1), with(-1), BraidWord(t.strands(), std::move(l))};
}

bool check_lens_congruence(const BraidWord& t, std::size_t letter, int p, int q, Engine engine) {
  if (!is_prime(p)) throw UsageError("the congruence needs a prime p");
  auto [plus, minus, zero] = skein_triple(t, letter);
  SkeinPoly lhs = lens_homfly(plus, p, q, engine) * skein_monomial(-p, 0) -
                  lens_homfly(minus, p, q, engine) * skein_monomial(p, 0);
  SkeinPoly rhs = lens_homfly(zero, p, q, engine) * skein_monomial(0, p);
  return reduce_coefficients_mod(lhs - rhs, static_cast<std::uint32_t>(p)).is_zero();
}

bool check_second_coefficient(const BraidWord& t, std::size_t letter, int p, int q, Engine engine) {
  if (!is_prime(p)) throw UsageError("the congruence needs a prime p");
  auto [plus, minus, zero] = skein_triple(t, letter);
  LinkDiagram dplus = lens_closure(plus, p, q);
  if (dplus.num_components() != 1) throw UsageError("D+ must be a knot");
  LinkDiagram d0 = lens_closure(zero, p, q);
  std::size_t n = d0.num_components();
  if (n != 2 && n != static_cast<std::size_t>(p) + 1)
    throw ConsistencyError("D0 has " + std::to_string(n) + " components; expected 2 or p+1");

  IntLaurent1 lhs = z_slice(lens_homfly(plus, p, q, engine), 2).shifted(-p) -
                    z_slice(lens_homfly(minus, p, q, engine), 2).shifted(p);
  IntLaurent1 rhs({Var::v});
  if (n == static_cast<std::size_t>(p) + 1) {
    auto shift = deck_shift(d0);
    int fixed = -1, moving = -1;
    for (std::size_t c = 0; c < n; ++c) {
      if (shift[c] == static_cast<int>(c)) {
        if (fixed != -1) throw ConsistencyError("more than one component is fixed by the block shift");
        fixed = static_cast<int>(c);
      } else if (moving == -1) {
        moving = static_cast<int>(c);
      }
    }
    if (fixed == -1 || moving == -1) throw ConsistencyError("D0 has no fixed component and free orbit");
    long lambda = d0.linking_data().total;
    IntLaurent1 p2_d1 = p2(d0.sub_diagram({fixed}));
    IntLaurent1 p0_d2 = p0(d0.sub_diagram({moving}));
    IntLaurent1 factor = parse_laurent1("v^-1 - v");
    IntLaurent1 prod = IntLaurent1::monomial(Var::v, 2 * lambda) * p2_d1;
    for (int i = 0; i < p; ++i) prod *= factor * p0_d2;
    rhs = prod;
  }
  return reduce_mod(lhs - rhs, static_cast<std::uint32_t>(p)).is_zero();
}

}  // namespace lensknot
