#pragma once

// Exact sparse Laurent polynomials.
//
// Laurent<N> is a polynomial in N commuting variables with integer
// exponents of either sign and arbitrary-size integer coefficients. The
// term map never stores a zero coefficient, so structural equality is
// mathematical equality. ModLaurent1 is the one-variable analogue over a
// prime field, and RatFunc2 is a quotient of two-variable polynomials used
// while evaluating closed formulas that only become polynomial at the end.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lensknot/errors.hpp"

namespace lensknot {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : char { v = 'v', z = 'z', q = 'q', t = 't', u = 'u', w = 'w' };

inline char var_name(Var x) { return static_cast<char>(x); }

namespace detail {

struct ParsedTerm {
  std::vector<long> exponents;
  Integer coeff;
};

// Parses `c*x^a*y^b - ...` against the given variable names. Exponents of
// repeated variables add.
std::vector<ParsedTerm> parse_terms(std::string_view text, const Var* vars, std::size_t nvars);

std::string format_terms(const std::vector<std::pair<std::vector<long>, Integer>>& terms,
                         const Var* vars, std::size_t nvars);

}  // namespace detail

template <std::size_t N>
class Laurent {
 public:
  static_assert(N >= 1);
  using Exponents = std::array<long, N>;
  using Vars = std::array<Var, N>;
  using Terms = std::map<Exponents, Integer>;

  explicit Laurent(Vars vars) : vars_(vars) {}
  Laurent(Vars vars, const Terms& terms) : vars_(vars) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Laurent constant(Vars vars, const Integer& c) {
    Laurent r(vars);
    r.add_term(Exponents{}, c);
    return r;
  }
  static Laurent monomial(Vars vars, const Exponents& e, const Integer& c = 1) {
    Laurent r(vars);
    r.add_term(e, c);
    return r;
  }

  // One-variable conveniences.
  static Laurent monomial(Var x, long e, const Integer& c = 1)
    requires(N == 1)
  {
    return monomial(Vars{x}, Exponents{e}, c);
  }
  static Laurent constant(Var x, const Integer& c)
    requires(N == 1)
  {
    return constant(Vars{x}, c);
  }
  Integer coeff(long e) const
    requires(N == 1)
  {
    return coeff(Exponents{e});
  }
  Laurent shifted(long e) const
    requires(N == 1)
  {
    return shifted(Exponents{e});
  }
  Var var() const
    requires(N == 1)
  {
    return vars_[0];
  }

  const Vars& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this += scale * x^shift * other
  void add_scaled_shifted(const Laurent& other, const Exponents& shift, const Integer& scale) {
    require_same_vars(other);
    if (scale == 0) return;
    for (const auto& [e, c] : other.terms_) {
      Exponents s;
      for (std::size_t i = 0; i < N; ++i) s[i] = e[i] + shift[i];
      add_term(s, c * scale);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    add_scaled_shifted(o, Exponents{}, 1);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    add_scaled_shifted(o, Exponents{}, -1);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.require_same_vars(b);
    Laurent r(a.vars_);
    for (const auto& [e, c] : b.terms_) r.add_scaled_shifted(a, e, c);
    return r;
  }
  Laurent operator-() const { return scaled(-1); }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Laurent scaled(const Integer& s) const {
    Laurent r(vars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  Laurent shifted(const Exponents& shift) const {
    Laurent r(vars_);
    for (const auto& [e, c] : terms_) {
      Exponents s;
      for (std::size_t i = 0; i < N; ++i) s[i] = e[i] + shift[i];
      r.terms_.emplace(s, c);
    }
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent result = constant(vars_, 1);
    Laurent base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  // Componentwise minimum / maximum exponent. Zero polynomial gives zeros.
  Exponents min_exponents() const {
    Exponents m{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  Exponents max_exponents() const {
    Exponents m{};
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < N; ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  Rational evaluate(const std::array<Rational, N>& point) const {
    for (const auto& x : point)
      if (x == 0) throw UsageError("evaluate: variables must be assigned nonzero values");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < N; ++i) term *= rational_pow(point[i], e[i]);
      sum += term;
    }
    return sum;
  }

  std::string to_string() const {
    std::vector<std::pair<std::vector<long>, Integer>> terms;
    terms.reserve(terms_.size());
    for (const auto& [e, c] : terms_) terms.emplace_back(std::vector<long>(e.begin(), e.end()), c);
    return detail::format_terms(terms, vars_.data(), N);
  }

  static Laurent parse(std::string_view text, Vars vars) {
    Laurent r(vars);
    for (auto& t : detail::parse_terms(text, vars.data(), N)) {
      Exponents e;
      for (std::size_t i = 0; i < N; ++i) e[i] = t.exponents[i];
      r.add_term(e, t.coeff);
    }
    return r;
  }

  void require_same_vars(const Laurent& o) const {
    if (vars_ != o.vars_) throw UsageError("polynomial variable tags do not match");
  }

 private:
  static Rational rational_pow(const Rational& x, long e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1) / x;
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (k > 0) {
      if (k & 1UL) r *= b;
      k >>= 1UL;
      if (k > 0) b *= b;
    }
    return r;
  }

  Vars vars_;
  Terms terms_;
};

using IntLaurent1 = Laurent<1>;
using IntLaurent2 = Laurent<2>;
// HOMFLY polynomials live in Z[v^{±1}, z^{±1}].
using SkeinPoly = Laurent<2>;

inline constexpr SkeinPoly::Vars kSkeinVars{Var::v, Var::z};
inline constexpr IntLaurent2::Vars kJonesVars{Var::q, Var::t};

inline SkeinPoly skein_monomial(long v_exp, long z_exp, const Integer& c = 1) {
  return SkeinPoly::monomial(kSkeinVars, {v_exp, z_exp}, c);
}
inline SkeinPoly skein_constant(const Integer& c) { return SkeinPoly::constant(kSkeinVars, c); }
inline SkeinPoly parse_skein(std::string_view text) { return SkeinPoly::parse(text, kSkeinVars); }
inline IntLaurent1 parse_laurent1(std::string_view text, Var x = Var::v) {
  return IntLaurent1::parse(text, {x});
}

// Coefficient of z^k, as a polynomial in v.
IntLaurent1 z_slice(const SkeinPoly& p, long k);

// Inverse of z_slice: sum over k of slices[k] * z^k.
SkeinPoly from_z_slices(const std::map<long, IntLaurent1>& slices);

// v -> v^{-1}, z -> -z: the HOMFLY polynomial of the mirror image.
SkeinPoly mirror_transform(const SkeinPoly& p);

// v -> v^{-1} on a one-variable polynomial.
IntLaurent1 invert_variable(const IntLaurent1& f);

bool is_prime(long n);

// One-variable Laurent polynomial over F_p, residues kept in [1, p-1].
class ModLaurent1 {
 public:
  using Terms = std::map<long, std::uint32_t>;

  explicit ModLaurent1(std::uint32_t p, Var var = Var::v);

  static ModLaurent1 monomial(std::uint32_t p, long e, long long c = 1, Var var = Var::v);

  std::uint32_t modulus() const { return p_; }
  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coeff(long e) const;

  void add_term(long e, long long c);

  ModLaurent1& operator+=(const ModLaurent1& o);
  ModLaurent1& operator-=(const ModLaurent1& o);
  friend ModLaurent1 operator+(ModLaurent1 a, const ModLaurent1& b) { return a += b; }
  friend ModLaurent1 operator-(ModLaurent1 a, const ModLaurent1& b) { return a -= b; }
  friend ModLaurent1 operator*(const ModLaurent1& a, const ModLaurent1& b);
  friend bool operator==(const ModLaurent1& a, const ModLaurent1& b) {
    return a.p_ == b.p_ && a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  ModLaurent1 scaled(long long s) const;
  ModLaurent1 shifted(long e) const;
  ModLaurent1 with_var(Var var) const;

  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  std::string to_string() const;

 private:
  void require_compatible(const ModLaurent1& o) const;

  std::uint32_t p_;
  Var var_;
  Terms terms_;
};

// Coefficientwise reduction; terms divisible by p disappear.
ModLaurent1 reduce_mod(const IntLaurent1& f, std::uint32_t p);

// Coefficientwise reduction of a two-variable polynomial.
SkeinPoly reduce_coefficients_mod(const SkeinPoly& f, std::uint32_t p);

// Exact quotient a / b. Throws ConsistencyError when b does not divide a.
IntLaurent2 exact_divide(const IntLaurent2& a, const IntLaurent2& b);

// Quotient of two-variable Laurent polynomials over Z. Normalization removes
// common integer content and moves monomial factors onto the numerator;
// equality is decided by cross-multiplication.
class RatFunc2 {
 public:
  explicit RatFunc2(IntLaurent2 num);
  RatFunc2(IntLaurent2 num, IntLaurent2 den);

  const IntLaurent2& numerator() const { return num_; }
  const IntLaurent2& denominator() const { return den_; }

  friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
  friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);
  friend bool operator==(const RatFunc2& a, const RatFunc2& b);

  // The polynomial value; throws ConsistencyError if the denominator does
  // not divide the numerator.
  IntLaurent2 to_polynomial() const;

 private:
  void normalize();

  IntLaurent2 num_;
  IntLaurent2 den_;
};

}  // namespace lensknot
