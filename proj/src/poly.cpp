#include "lensknot/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lensknot {

namespace detail {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const Var* vars, std::size_t nvars)
      : text_(text), vars_(vars), nvars_(nvars) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> out;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      ParsedTerm t = term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  ParsedTerm term() {
    ParsedTerm t{std::vector<long>(nvars_, 0), 1};
    factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      factor(t);
      skip_ws();
    }
    return t;
  }

  void factor(ParsedTerm& t) {
    if (at_end()) throw ParseError("expected a factor", pos_);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      t.coeff *= Integer(std::string(text_.substr(start, pos_ - start)));
      return;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (c == var_name(vars_[i])) {
        ++pos_;
        long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = exponent();
        }
        t.exponents[i] += e;
        return;
      }
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  long exponent() {
    bool paren = !at_end() && peek() == '(';
    if (paren) {
      ++pos_;
      skip_ws();
    }
    long sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an exponent", pos_);
    long e = sign * std::stol(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return e;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  const Var* vars_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, const Var* vars, std::size_t nvars) {
  return TermParser(text, vars, nvars).parse();
}

std::string format_terms(const std::vector<std::pair<std::vector<long>, Integer>>& terms,
                         const Var* vars, std::size_t nvars) {
  if (terms.empty()) return "0";
  // Descending order with the last variable most significant.
  std::vector<const std::pair<std::vector<long>, Integer>*> order;
  order.reserve(terms.size());
  for (const auto& t : terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [nvars](const auto* a, const auto* b) {
    for (std::size_t i = nvars; i-- > 0;) {
      if (a->first[i] != b->first[i]) return a->first[i] > b->first[i];
    }
    return false;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [exps, c] = *t;
    bool negative = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (exps[i] == 0) continue;
      std::string f(1, var_name(vars[i]));
      if (exps[i] != 1) f += "^" + std::to_string(exps[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace detail

IntLaurent1 z_slice(const SkeinPoly& p, long k) {
  IntLaurent1 r({Var::v});
  for (const auto& [e, c] : p.terms())
    if (e[1] == k) r.add_term({e[0]}, c);
  return r;
}

SkeinPoly from_z_slices(const std::map<long, IntLaurent1>& slices) {
  SkeinPoly r(kSkeinVars);
  for (const auto& [k, f] : slices)
    for (const auto& [e, c] : f.terms()) r.add_term({e[0], k}, c);
  return r;
}

SkeinPoly mirror_transform(const SkeinPoly& p) {
  SkeinPoly r(kSkeinVars);
  for (const auto& [e, c] : p.terms()) r.add_term({-e[0], e[1]}, (e[1] % 2 == 0) ? c : Integer(-c));
  return r;
}

IntLaurent1 invert_variable(const IntLaurent1& f) {
  IntLaurent1 r(f.vars());
  for (const auto& [e, c] : f.terms()) r.add_term({-e[0]}, c);
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ModLaurent1

ModLaurent1::ModLaurent1(std::uint32_t p, Var var) : p_(p), var_(var) {
  if (p < 2) throw UsageError("modulus must be at least 2");
}

ModLaurent1 ModLaurent1::monomial(std::uint32_t p, long e, long long c, Var var) {
  ModLaurent1 r(p, var);
  r.add_term(e, c);
  return r;
}

std::uint32_t ModLaurent1::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0U : it->second;
}

void ModLaurent1::add_term(long e, long long c) {
  long long m = static_cast<long long>(p_);
  long long r = ((c % m) + m) % m;
  if (r == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, static_cast<std::uint32_t>(r));
  if (!inserted) {
    std::uint32_t s = static_cast<std::uint32_t>((it->second + r) % m);
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

void ModLaurent1::require_compatible(const ModLaurent1& o) const {
  if (p_ != o.p_) throw UsageError("moduli do not match");
  if (var_ != o.var_) throw UsageError("polynomial variable tags do not match");
}

ModLaurent1& ModLaurent1::operator+=(const ModLaurent1& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ModLaurent1& ModLaurent1::operator-=(const ModLaurent1& o) {
  require_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, static_cast<long long>(p_) - c);
  return *this;
}

ModLaurent1 operator*(const ModLaurent1& a, const ModLaurent1& b) {
  a.require_compatible(b);
  ModLaurent1 r(a.p_, a.var_);
  const unsigned long long m = a.p_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ea + eb, static_cast<long long>((static_cast<unsigned long long>(ca) * cb) % m));
  return r;
}

ModLaurent1 ModLaurent1::scaled(long long s) const {
  ModLaurent1 r(p_, var_);
  long long m = static_cast<long long>(p_);
  long long sr = ((s % m) + m) % m;
  for (const auto& [e, c] : terms_) r.add_term(e, (static_cast<long long>(c) * sr) % m);
  return r;
}

ModLaurent1 ModLaurent1::shifted(long e) const {
  ModLaurent1 r(p_, var_);
  for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + e, c);
  return r;
}

ModLaurent1 ModLaurent1::with_var(Var var) const {
  ModLaurent1 r = *this;
  r.var_ = var;
  return r;
}

std::string ModLaurent1::to_string() const {
  std::vector<std::pair<std::vector<long>, Integer>> terms;
  for (const auto& [e, c] : terms_) terms.emplace_back(std::vector<long>{e}, Integer(c));
  return detail::format_terms(terms, &var_, 1);
}

ModLaurent1 reduce_mod(const IntLaurent1& f, std::uint32_t p) {
  if (!is_prime(p)) throw UsageError("reduce_mod: modulus " + std::to_string(p) + " is not prime");
  ModLaurent1 r(p, f.var());
  for (const auto& [e, c] : f.terms()) {
    unsigned long res = mpz_fdiv_ui(c.get_mpz_t(), p);
    if (res != 0) r.add_term(e[0], static_cast<long long>(res));
  }
  return r;
}

SkeinPoly reduce_coefficients_mod(const SkeinPoly& f, std::uint32_t p) {
  SkeinPoly r(f.vars());
  for (const auto& [e, c] : f.terms()) {
    unsigned long res = mpz_fdiv_ui(c.get_mpz_t(), p);
    if (res != 0) r.add_term(e, Integer(res));
  }
  return r;
}

// Exact division

IntLaurent2 exact_divide(const IntLaurent2& a, const IntLaurent2& b) {
  a.require_same_vars(b);
  if (b.is_zero()) throw UsageError("exact_divide: division by zero");
  if (a.is_zero()) return IntLaurent2(a.vars());

  // Strip monomial factors; b is then coprime to both variables, so b | a in
  // the Laurent ring iff b | A in the polynomial ring.
  auto ma = a.min_exponents();
  auto mb = b.min_exponents();
  IntLaurent2 rem = a.shifted({-ma[0], -ma[1]});
  IntLaurent2 div = b.shifted({-mb[0], -mb[1]});

  // Lexicographic leading terms (first variable most significant).
  const auto& [lead_e, lead_c] = *div.terms().rbegin();
  IntLaurent2 quot(a.vars());
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms().rbegin();
    IntLaurent2::Exponents qe{re[0] - lead_e[0], re[1] - lead_e[1]};
    if (qe[0] < 0 || qe[1] < 0 || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t()))
      throw ConsistencyError("exact_divide: divisor does not divide dividend");
    Integer qc = rc / lead_c;
    quot.add_term(qe, qc);
    rem.add_scaled_shifted(div, qe, -qc);
  }
  return quot.shifted({ma[0] - mb[0], ma[1] - mb[1]});
}

// RatFunc2

RatFunc2::RatFunc2(IntLaurent2 num) : num_(std::move(num)), den_(IntLaurent2::constant(num_.vars(), 1)) {}

RatFunc2::RatFunc2(IntLaurent2 num, IntLaurent2 den) : num_(std::move(num)), den_(std::move(den)) {
  num_.require_same_vars(den_);
  if (den_.is_zero()) throw UsageError("RatFunc2: zero denominator");
  normalize();
}

void RatFunc2::normalize() {
  if (num_.is_zero()) {
    den_ = IntLaurent2::constant(num_.vars(), 1);
    return;
  }
  Integer g = 0;
  for (const auto& [e, c] : num_.terms()) g = gcd(g, c);
  for (const auto& [e, c] : den_.terms()) g = gcd(g, c);
  if (den_.terms().rbegin()->second < 0) g = -g;
  if (g != 1) {
    IntLaurent2 n(num_.vars()), d(den_.vars());
    for (const auto& [e, c] : num_.terms()) n.add_term(e, c / g);
    for (const auto& [e, c] : den_.terms()) d.add_term(e, c / g);
    num_ = std::move(n);
    den_ = std::move(d);
  }
  auto m = den_.min_exponents();
  if (m[0] != 0 || m[1] != 0) {
    den_ = den_.shifted({-m[0], -m[1]});
    num_ = num_.shifted({-m[0], -m[1]});
  }
}

RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
  if (a.den_ == b.den_) return RatFunc2(a.num_ + b.num_, a.den_);
  return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
  if (a.den_ == b.den_) return RatFunc2(a.num_ - b.num_, a.den_);
  return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
  return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
  if (b.num_.is_zero()) throw UsageError("RatFunc2: division by zero");
  return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc2& a, const RatFunc2& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

IntLaurent2 RatFunc2::to_polynomial() const { return exact_divide(num_, den_); }

}  // namespace lensknot
