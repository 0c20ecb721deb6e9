#include <numeric>
#include <random>

#include "doctest.h"
#include "lensknot/lenscrit.hpp"
#include "lensknot/torus.hpp"

using namespace lensknot;

namespace {

ModLaurent1 mod(const char* s, std::uint32_t p) { return reduce_mod(parse_laurent1(s), p); }

BraidWord random_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1), coin(0, 1);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) letters.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return BraidWord(strands, letters);
}

// A tangle and letter whose smoothing has the wanted number of components
// while the positive resolution closes to a knot.
std::pair<BraidWord, std::size_t> sample_for_identity(std::mt19937& rng, int p, std::size_t components, int strands) {
  std::uniform_int_distribution<int> len(3, 8);
  while (true) {
    BraidWord t = random_word(rng, strands, len(rng));
    std::size_t idx = std::uniform_int_distribution<std::size_t>(0, t.length() - 1)(rng);
    auto tr = skein_triple(t, idx);
    if (lens_closure(tr.plus, p, 1).num_components() != 1) continue;
    if (lens_closure(tr.zero, p, 1).num_components() != components) continue;
    return {t, idx};
  }
}

}  // namespace

TEST_CASE("Gamma for p = 5 and 7") {
  const auto& g5 = gamma_basis(5, 1);
  CHECK(g5.generators.size() == 8);
  CHECK(span_equal(g5, module_normal_form({mod("v^8", 5)}, 5)));
  CHECK(g5.describe() == "<v^8> over F_5[v^±10]");
  CHECK(span_equal(gamma_basis(7, 1), module_normal_form({mod("2*v^6 + 3*v^8", 7), mod("6*v^8 + 4*v^10", 7)}, 7)));
  CHECK_FALSE(span_equal(gamma_basis(7, 1), module_normal_form({mod("v^8", 7)}, 7)));
  // zero generators from the unknots are kept in the list
  int zeros = 0;
  for (const auto& x : gamma_generators(5, 1)) zeros += x.is_zero();
  CHECK(zeros >= 2);
  CHECK_THROWS_AS(gamma_generators(3, 1), UsageError);
  CHECK_THROWS_AS(gamma_generators(9, 1), UsageError);
  CHECK_THROWS_AS(gamma_generators(5, 10), UsageError);
}

TEST_CASE("membership") {
  const auto& g5 = gamma_basis(5, 1);
  CHECK(is_member(mod("3*v^18 + v^-2 - 2*v^28", 5), g5).member);
  auto m = is_member(mod("v^-2 - 1 - 2*v^2 + v^4", 5), g5);
  CHECK_FALSE(m.member);
  // v^-2 is a unit multiple of v^8
  CHECK(m.residue == mod("v^4 - 2*v^2 - 1", 5));
  // the residue differs from the input by a module element
  auto f = mod("v^8 + v^2 - v^-12", 5);
  auto r = is_member(f, g5);
  CHECK_FALSE(r.member);
  CHECK(is_member(f - r.residue, g5).member);
  CHECK_THROWS_AS(is_member(mod("v^3", 5), g5), UsageError);
  CHECK_THROWS_AS(is_member(mod("v^2", 7), g5), UsageError);
  CHECK_THROWS_AS(span_equal(g5, gamma_basis(7, 1)), UsageError);
  CHECK(is_member(ModLaurent1(5), module_normal_form({}, 5)).member);
}

TEST_CASE("normal form is canonical") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coeff(0, 6), expo(-12, 12), count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ModLaurent1> gens;
    for (int g = count(rng); g > 0; --g) {
      ModLaurent1 x(7);
      for (int k = 0; k < 4; ++k) x.add_term(2 * expo(rng), coeff(rng));
      gens.push_back(x);
    }
    auto a = module_normal_form(gens, 7);
    std::vector<ModLaurent1> piv;
    for (std::size_t i = 0; i < a.pivots.size(); ++i) piv.push_back(a.pivot_polynomial(i));
    auto b = module_normal_form(piv, 7);
    REQUIRE(a.pivots.size() == b.pivots.size());
    for (std::size_t i = 0; i < a.pivots.size(); ++i) CHECK(a.pivot_polynomial(i) == b.pivot_polynomial(i));
    for (const auto& g : gens) CHECK(is_member(g, a).member);
    // multiplying by units and adding combinations changes nothing
    std::vector<ModLaurent1> mixed;
    for (std::size_t i = 0; i < gens.size(); ++i)
      mixed.push_back(gens[i].shifted(14 * (static_cast<long>(i) - 1)).scaled(3) + gens[0]);
    mixed.push_back(gens[0]);
    CHECK(span_equal(a, module_normal_form(mixed, 7)));
  }
  CHECK_THROWS_AS(module_normal_form({mod("v", 5)}, 5), UsageError);
  CHECK_THROWS_AS(module_normal_form({}, 6), UsageError);
}

TEST_CASE("lens torus knots pass both criteria") {
  for (int p : {5, 7}) {
    for (int q : {1, 2, -1}) {
      for (int n = 1; n <= 6; ++n) {
        for (int m = -17; m <= 17; ++m) {
          if (std::gcd(n, m) != 1 || !is_lens_torus(n, m, p, q)) continue;
          auto v = p2_criterion(torus_p2(n, m), p, q);
          CHECK_MESSAGE(v.decision == Decision::NotDecided, "T(" << n << "," << m << ") p=" << p << " q=" << q);
          if (p == 5 && (q == 1 || q == -1)) {
            auto w = p0_criterion(z_slice(torus_homfly(n, m), 0), q);
            CHECK_MESSAGE(w.decision == Decision::NotDecided, "T(" << n << "," << m << ") q=" << q);
          }
        }
      }
    }
  }
}

TEST_CASE("verdicts on small knots") {
  auto t27 = p2_criterion(torus_p2(2, 7), 5, 1);
  CHECK(t27.decision == Decision::NotDecided);
  CHECK_FALSE(t27.witness.has_value());
  auto v = p2_criterion(parse_laurent1("v^-2 - 1 - 2*v^2 + v^4"), 5, 1);
  CHECK(v.decision == Decision::RuledOut);
  CHECK(std::string(decision_code(v.decision)) == "D");
  REQUIRE(v.witness.has_value());
  CHECK_FALSE(v.witness->is_zero());
  // figure-eight: P0 = v^-2 - 1 + v^2
  auto f8 = p0_criterion(parse_laurent1("v^-2 - 1 + v^2"));
  CHECK(f8.decision == Decision::RuledOut);
  CHECK(std::string(criterion_name(f8.criterion)) == "P0");
  CHECK_THROWS_AS(p0_criterion(parse_laurent1("1"), 2), UsageError);
}

TEST_CASE("random lens knots have admissible second coefficients") {
  std::mt19937 rng(17);
  int found = 0;
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 400 && found < 12; ++trial) {
    BraidWord t = random_word(rng, 2 + trial % 2, len(rng));
    int q = trial % 3 == 0 ? 2 : 1;
    auto d = lens_closure(t, 5, q);
    if (d.num_components() != 1) continue;
    ++found;
    auto p2v = z_slice(lens_homfly(t, 5, q), 2);
    CHECK_MESSAGE(p2_criterion(p2v, 5, q).decision == Decision::NotDecided, serialize_braid(t) << " q=" << q);
  }
  CHECK(found == 12);
}

TEST_CASE("skein congruence for lens closures") {
  std::mt19937 rng(23);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      int strands = 2 + trial % 3;
      BraidWord t = random_word(rng, strands, 1 + trial % 6);
      std::size_t idx = std::uniform_int_distribution<std::size_t>(0, t.length() - 1)(rng);
      CHECK_MESSAGE(check_lens_congruence(t, idx, p, 1), serialize_braid(t) << " letter " << idx << " p=" << p);
    }
  }
  CHECK_THROWS_AS(check_lens_congruence(BraidWord(2, {1}), 0, 4, 1), UsageError);
  CHECK_THROWS_AS(check_lens_congruence(BraidWord(2, {1}), 1, 5, 1), UsageError);
}

TEST_CASE("second-coefficient identity, two-component smoothing") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    auto [t, idx] = sample_for_identity(rng, 5, 2, 2 + trial % 3);
    CHECK_MESSAGE(check_second_coefficient(t, idx, 5, 1), serialize_braid(t) << " letter " << idx);
  }
}

TEST_CASE("second-coefficient identity, p+1 components") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    auto [t, idx] = sample_for_identity(rng, 5, 6, 7);
    CHECK_MESSAGE(check_second_coefficient(t, idx, 5, 1), serialize_braid(t) << " letter " << idx);
  }
  CHECK_THROWS_AS(check_second_coefficient(BraidWord(2, {1, 1}), 0, 5, 1), UsageError);
}
