#pragma once

// Jones' closed formula for torus knots, and its conversion to (v, z).

#include <vector>

#include "lensknot/poly.hpp"

namespace lensknot {

// [k]! = (1 - q)(1 - q^2)...(1 - q^k), built incrementally. Not shared
// between threads; make one per computation.
class QFactorialCache {
 public:
  const IntLaurent1& get(int k);

 private:
  std::vector<IntLaurent1> table_;
};

IntLaurent1 qfactorial(int k);
// (1 - q^k) / (1 - q) = 1 + q + ... + q^{k-1}
IntLaurent1 qbracket(int k);

// X_{T(n,m)}(q, t) for coprime n >= 2, m >= 1.
IntLaurent2 jones_X(int n, int m);

// Substitutes t = v^2 q^{-1} and rewrites in powers of q - 2 + q^{-1} = z^2.
SkeinPoly xqt_to_pvz(const IntLaurent2& x);

// HOMFLY polynomial of the torus knot T(n, m), any sign of m.
SkeinPoly torus_homfly(int n, int m);
IntLaurent1 torus_p2(int n, int m);

}  // namespace lensknot
