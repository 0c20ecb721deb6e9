#pragma once

// Lens-knot obstructions.
//
// Gamma_{p,q} is the F_p[v^{±2p}]-module spanned by the mod-p second
// coefficients of the torus knots T(a, aq ± p), 1 <= a <= p-1. Writing
// w = v^2 and u = w^p, a polynomial in even powers of v is a vector of p
// entries in F_p[u^{±1}] (one per residue class of the w-exponent mod p).
// That ring is Euclidean for the width deg - ord, so module membership is
// decided with a Hermite normal form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lensknot/braid.hpp"
#include "lensknot/homfly.hpp"
#include "lensknot/poly.hpp"

namespace lensknot {

struct ModuleBasis {
  struct Pivot {
    int column = 0;
    // p entries in F_p[u^{±1}] (Var::u); entry `column` is monic with a
    // nonzero constant term, entries before it vanish.
    std::vector<ModLaurent1> row;
  };

  std::uint32_t p = 0;
  std::vector<ModLaurent1> generators;
  std::vector<Pivot> pivots;

  // Pivot i turned back into a polynomial in v.
  ModLaurent1 pivot_polynomial(std::size_t i) const;
  // `<v^8> over F_5[v^±10]`
  std::string describe() const;
};

ModuleBasis module_normal_form(const std::vector<ModLaurent1>& generators, std::uint32_t p);

struct Membership {
  bool member = false;
  // What is left after reduction; zero exactly for members.
  ModLaurent1 residue{2};
};

Membership is_member(const ModLaurent1& f, const ModuleBasis& basis);
bool span_equal(const ModuleBasis& a, const ModuleBasis& b);

std::vector<ModLaurent1> gamma_generators(int p, int q);
// Normal form of Gamma_{p,q}, computed once per (p, q) and shared.
const ModuleBasis& gamma_basis(int p, int q);

enum class Decision { RuledOut, NotDecided };
enum class Criterion { P0, P2 };

// "D" / "ND"
const char* decision_code(Decision d);
const char* criterion_name(Criterion c);

struct Verdict {
  Decision decision = Decision::NotDecided;
  Criterion criterion = Criterion::P2;
  int p = 0;
  int q = 0;
  std::optional<ModLaurent1> witness;
};

Verdict p2_criterion(const IntLaurent1& p2, int p, int q);
// The p = 5 criterion on the first coefficient; q = -1 runs it on the mirror.
Verdict p0_criterion(const IntLaurent1& p0, int q = 1);

// HOMFLY polynomial of the closure of T^p Omega_n^q.
SkeinPoly lens_homfly(const BraidWord& t, int p, int q, Engine engine = Engine::Auto);

// Words with the chosen letter made positive / negative / deleted.
struct SkeinTriple {
  BraidWord plus, minus, zero;
};
SkeinTriple skein_triple(const BraidWord& t, std::size_t letter);

// v^{-p} P(D+) - v^p P(D-) == z^p P(D0) mod p, with D the lens closures.
bool check_lens_congruence(const BraidWord& t, std::size_t letter, int p, int q, Engine engine = Engine::Auto);

// The second-coefficient identity for lens closures. D+ must be a knot.
bool check_second_coefficient(const BraidWord& t, std::size_t letter, int p, int q, Engine engine = Engine::Auto);

}  // namespace lensknot
