#include "lensknot/torus.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

namespace lensknot {

namespace {

IntLaurent1 q_mono(long e, const Integer& c = 1) { return IntLaurent1::monomial(Var::q, e, c); }

// Lift a polynomial in q into Z[q, t].
IntLaurent2 lift(const IntLaurent1& f) {
  IntLaurent2 r(kJonesVars);
  for (const auto& [e, c] : f.terms()) r.add_term({e[0], 0}, c);
  return r;
}

IntLaurent2 qt(long qe, long te, const Integer& c = 1) { return IntLaurent2::monomial(kJonesVars, {qe, te}, c); }

}  // namespace

const IntLaurent1& QFactorialCache::get(int k) {
  if (k < 0) throw UsageError("q-factorial of a negative integer");
  if (table_.empty()) table_.push_back(IntLaurent1::constant(Var::q, 1));
  while (static_cast<int>(table_.size()) <= k) {
    long next = static_cast<long>(table_.size());
    table_.push_back(table_.back() * (q_mono(0) - q_mono(next)));
  }
  return table_[k];
}

IntLaurent1 qfactorial(int k) {
  QFactorialCache cache;
  return cache.get(k);
}

IntLaurent1 qbracket(int k) {
  if (k < 1) throw UsageError("q-bracket needs k >= 1");
  IntLaurent1 r({Var::q});
  for (long i = 0; i < k; ++i) r.add_term({i}, 1);
  return r;
}

IntLaurent2 jones_X(int n, int m) {
  if (n < 2 || m < 1) throw UsageError("jones_X needs n >= 2 and m >= 1");
  if (std::gcd(n, m) != 1) throw UsageError("jones_X is defined for torus knots only (gcd(n, m) = 1)");
  long twice_e = static_cast<long>(n - 1) * (m - 1);
  if (twice_e % 2 != 0) throw ConsistencyError("(n-1)(m-1) is odd for a coprime pair");

  QFactorialCache fact;
  const IntLaurent2 top = lift(fact.get(n - 1));
  // Sum over gamma + beta + 1 = n, every term brought over [n-1]!.
  IntLaurent2 sum(kJonesVars);
  for (int beta = 0; beta <= n - 1; ++beta) {
    int gamma = n - 1 - beta;
    IntLaurent2 term = qt(static_cast<long>(beta) * m + static_cast<long>(gamma) * (gamma + 1) / 2, 0,
                          beta % 2 == 0 ? 1 : -1);
    for (int i = -gamma; i <= beta; ++i) term *= qt(i, 0) - qt(1, 1);
    IntLaurent2 binom = exact_divide(top, lift(fact.get(gamma) * fact.get(beta)));
    sum += term * binom;
  }
  // X = t^e (1 - q) S' / ([n]! (1 - tq))
  IntLaurent2 num = (qt(0, 0) - qt(1, 0)) * sum.shifted({0, twice_e / 2});
  IntLaurent2 den = lift(fact.get(n)) * (qt(0, 0) - qt(1, 1));
  return RatFunc2(num, den).to_polynomial();
}

SkeinPoly xqt_to_pvz(const IntLaurent2& x) {
  if (x.vars() != kJonesVars) throw UsageError("xqt_to_pvz expects a polynomial in (q, t)");
  // a[k] is the coefficient of q^k, a polynomial in v.
  std::map<long, IntLaurent1> a;
  for (const auto& [e, c] : x.terms()) {
    auto [it, inserted] = a.try_emplace(e[0] - e[1], IntLaurent1({Var::v}));
    it->second.add_term({2 * e[1]}, c);
  }
  std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [k, f] : a) {
    auto it = a.find(-k);
    if (it == a.end() || !(it->second == f))
      throw ConsistencyError("X(q, t) is not symmetric under q -> 1/q after t = v^2/q");
  }

  // (q - 2 + q^{-1})^i as coefficient lists.
  auto basis = [](long i) {
    std::map<long, Integer> b{{0, 1}};
    for (long r = 0; r < i; ++r) {
      std::map<long, Integer> nb;
      for (const auto& [k, c] : b) {
        nb[k + 1] += c;
        nb[k] -= 2 * c;
        nb[k - 1] += c;
      }
      b = std::move(nb);
    }
    return b;
  };

  std::map<long, IntLaurent1> slices;
  long guard = a.empty() ? 0 : a.rbegin()->first + 1;
  while (!a.empty()) {
    if (guard-- < 0) throw ConsistencyError("z-basis rewrite did not terminate");
    auto [top, lead] = *a.rbegin();
    if (top < 0) throw ConsistencyError("z-basis rewrite left negative q powers only");
    slices.emplace(2 * top, lead);
    for (const auto& [k, c] : basis(top)) {
      auto [it, inserted] = a.try_emplace(k, IntLaurent1({Var::v}));
      it->second -= lead.scaled(c);
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return from_z_slices(slices);
}

SkeinPoly torus_homfly(int n, int m) {
  if (n < 1) throw UsageError("torus_homfly needs n >= 1");
  if (std::gcd(n, m) != 1) throw UsageError("torus_homfly is for knots; gcd(n, m) must be 1");
  if (n == 1 || std::abs(m) == 1) return skein_constant(1);
  if (m < 0) return mirror_transform(torus_homfly(n, -m));
  return xqt_to_pvz(jones_X(n, m));
}

IntLaurent1 torus_p2(int n, int m) { return z_slice(torus_homfly(n, m), 2); }

}  // namespace lensknot
