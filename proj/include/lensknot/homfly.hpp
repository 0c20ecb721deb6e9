#pragma once

// HOMFLY polynomial in the convention
//   v^{-1} P(L+) - v P(L-) = z P(L0),   P(unknot) = 1.
//
// homfly() runs the descending-diagram skein recursion on a LinkDiagram.
// homfly_braid() evaluates the Ocneanu trace on the Hecke algebra instead;
// it is the faster route for long braids on few strands and serves as an
// independent second engine.

#include <cstddef>
#include <string>

#include "lensknot/braid.hpp"
#include "lensknot/poly.hpp"

namespace lensknot {

struct SkeinOptions {
  // Maximum number of distinct skein-tree nodes expanded before giving up.
  std::size_t node_budget = 20'000'000;
};

struct SkeinStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
};

SkeinPoly homfly(const LinkDiagram& d, const SkeinOptions& options = {}, SkeinStats* stats = nullptr);

// Memo key of a diagram: components in basepoint order, crossings renumbered
// by first visit. Equal keys mean identical diagrams up to crossing names.
std::string canonical_key(const LinkDiagram& d);

SkeinPoly homfly_braid(const BraidWord& b);

enum class Engine { Auto, Skein, Hecke };

// Polynomial of a braid closure. Auto picks the Hecke engine for long words.
SkeinPoly homfly_closure(const BraidWord& b, Engine engine = Engine::Auto);

// ((v^{-1} - v) / z)^{c-1}
SkeinPoly unlink_polynomial(int components);

// z^0 and z^2 coefficients of a knot's polynomial.
IntLaurent1 p0(const LinkDiagram& knot);
IntLaurent1 p2(const LinkDiagram& knot);

// Lowest coefficient of an n-component link against the component knots.
bool check_lowest_coefficient(const LinkDiagram& d);
// Next coefficient (z^{3-n}) against 2-component sublinks and components.
bool check_next_coefficient(const LinkDiagram& d);

}  // namespace lensknot
