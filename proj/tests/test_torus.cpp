#include <numeric>
#include <random>

#include "doctest.h"
#include "lensknot/homfly.hpp"
#include "lensknot/torus.hpp"

using namespace lensknot;

namespace {
IntLaurent1 q1(const char* s) { return parse_laurent1(s, Var::q); }
}  // namespace

TEST_CASE("q-factorials and brackets") {
  CHECK(qfactorial(0) == q1("1"));
  CHECK(qfactorial(2) == q1("1 - q - q^2 + q^3"));
  CHECK(qbracket(3) == q1("1 + q + q^2"));
  CHECK(qbracket(1) == q1("1"));
  CHECK_THROWS_AS(qfactorial(-1), UsageError);
  CHECK_THROWS_AS(qbracket(0), UsageError);
  QFactorialCache cache;
  for (int k = 1; k <= 8; ++k)
    CHECK(cache.get(k) == cache.get(k - 1) * (q1("1") - IntLaurent1::monomial(Var::q, k)));
}

TEST_CASE("Jones formula on small cases") {
  CHECK(xqt_to_pvz(jones_X(2, 3)) == parse_skein("2*v^2 - v^4 + v^2*z^2"));
  for (int n = 2; n <= 6; ++n) CHECK(xqt_to_pvz(jones_X(n, 1)) == skein_constant(1));
  CHECK(z_slice(xqt_to_pvz(jones_X(2, 7)), 2) == parse_laurent1("10*v^6 - 4*v^8"));
  CHECK(xqt_to_pvz(IntLaurent2::constant(kJonesVars, 1)) == skein_constant(1));
  CHECK(xqt_to_pvz(IntLaurent2::parse("3*q^2*t^2 - q*t", kJonesVars)) ==
        SkeinPoly::parse("3*v^4 - v^2", kSkeinVars));
  CHECK_THROWS_AS(jones_X(2, 4), UsageError);
  CHECK_THROWS_AS(jones_X(1, 3), UsageError);
  CHECK_THROWS_AS(xqt_to_pvz(IntLaurent2::parse("q", kJonesVars)), ConsistencyError);
}

TEST_CASE("torus polynomials") {
  CHECK(torus_p2(2, -3) == parse_laurent1("v^-2"));
  CHECK(torus_p2(4, 9) == parse_laurent1("770*v^24 - 1210*v^26 - 70*v^30 + 560*v^28"));
  CHECK(torus_p2(3, 8) == parse_laurent1("21*v^18 - 105*v^16 + 105*v^14"));
  CHECK(torus_p2(2, 7) == parse_laurent1("10*v^6 - 4*v^8"));
  CHECK(torus_p2(1, 6).is_zero());
  CHECK(torus_p2(4, -1).is_zero());
  CHECK_THROWS_AS(torus_homfly(2, 4), UsageError);
  for (int n = 1; n <= 6; ++n) {
    CHECK(torus_homfly(n, 1) == skein_constant(1));
    CHECK(torus_homfly(n, -1) == skein_constant(1));
  }
  for (int m = -8; m <= 8; ++m) CHECK(torus_homfly(1, m) == skein_constant(1));
}

// P_2(1) is the z^2 Conway coefficient, (n^2 - 1)(m^2 - 1) / 24 for T(n, m).
TEST_CASE("second coefficients match the Conway polynomial") {
  for (int n = 2; n <= 6; ++n) {
    for (int m = -17; m <= 17; ++m) {
      if (std::gcd(n, m) != 1) continue;
      long expected = static_cast<long>(n * n - 1) * (m * m - 1) / 24;
      CHECK(torus_p2(n, m).evaluate({Rational(1)}) == expected);
    }
  }
}

TEST_CASE("formula equals the skein engine on torus braids") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int n = 2; n <= 4; ++n) {
    for (int m = -9; m <= 9; ++m) {
      if (std::gcd(n, m) != 1) continue;
      auto formula = torus_homfly(n, m);
      auto skein = homfly(braid_closure(torus_braid(n, m)));
      CHECK_MESSAGE(formula == skein, "T(" << n << "," << m << ")");
      for (int k = 0; k < 20; ++k) {
        int a = num(rng), b = num(rng);
        Rational x(a == 0 ? 1 : a, den(rng)), y(b == 0 ? -1 : b, den(rng));
        x.canonicalize();
        y.canonicalize();
        CHECK(formula.evaluate({x, y}) == skein.evaluate({x, y}));
      }
    }
  }
}

TEST_CASE("formula equals the Hecke engine on wider torus knots") {
  for (int n = 5; n <= 6; ++n)
    for (int m = -13; m <= 13; ++m)
      if (std::gcd(n, m) == 1) CHECK_MESSAGE(torus_homfly(n, m) == homfly_braid(torus_braid(n, m)), "T(" << n << "," << m << ")");
}
