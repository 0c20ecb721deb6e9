// Second HOMFLY engine: expand the braid in the Hecke algebra basis T_w and
// apply the Markov trace.
//
// With g_i = v^{-1} sigma_i the skein relation becomes g_i^2 = z g_i + 1, and
// the closure functional F_n satisfies
//   F_n(x) = delta F_{n-1}(x)            for x in H_{n-1},
//   F_n(a g_{n-1} b) = v^{-1} F_{n-1}(ab) for a, b in H_{n-1},
// so P(closure of beta) = v^{writhe} F_n(beta in g-letters).

#include <cstdint>
#include <cstdlib>
#include <unordered_map>

#include "lensknot/homfly.hpp"

namespace lensknot {

namespace {

// One-line permutation packed four bits per entry.
using Perm = std::uint64_t;

int entry(Perm w, int i) { return static_cast<int>((w >> (4 * i)) & 0xF); }

Perm set_entry(Perm w, int i, int x) {
  return (w & ~(Perm{0xF} << (4 * i))) | (Perm(x) << (4 * i));
}

Perm swap_positions(Perm w, int i) {
  int a = entry(w, i), b = entry(w, i + 1);
  return set_entry(set_entry(w, i, b), i + 1, a);
}

int position_of(Perm w, int n, int value) {
  for (int i = 0; i < n; ++i)
    if (entry(w, i) == value) return i;
  return -1;
}

Perm swap_values(Perm w, int n, int k) {
  int a = position_of(w, n, k), b = position_of(w, n, k + 1);
  return set_entry(set_entry(w, a, k + 1), b, k);
}

Perm identity(int n) {
  Perm w = 0;
  for (int i = 0; i < n; ++i) w = set_entry(w, i, i);
  return w;
}

using Element = std::unordered_map<Perm, SkeinPoly>;

void accumulate(Element& e, Perm w, const SkeinPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

const SkeinPoly kZ = skein_monomial(0, 1);

// x * g_k (inverse: x * g_k^{-1} = x * g_k - z x).
Element right_multiply(const Element& x, int k, bool inverse) {
  Element out;
  out.reserve(x.size() * 2);
  for (const auto& [w, c] : x) {
    Perm ws = swap_positions(w, k);
    bool ascent = entry(w, k) < entry(w, k + 1);
    if (ascent == !inverse) {
      accumulate(out, ws, c);
    } else if (!inverse) {
      accumulate(out, w, c * kZ);
      accumulate(out, ws, c);
    } else {
      accumulate(out, ws, c);
      accumulate(out, w, -(c * kZ));
    }
  }
  return out;
}

// g_k * x
Element left_multiply(const Element& x, int n, int k) {
  Element out;
  for (const auto& [w, c] : x) {
    Perm sw = swap_values(w, n, k);
    if (position_of(w, n, k) < position_of(w, n, k + 1)) {
      accumulate(out, sw, c);
    } else {
      accumulate(out, w, c * kZ);
      accumulate(out, sw, c);
    }
  }
  return out;
}

class Trace {
 public:
  const SkeinPoly& of(int n, Perm w) {
    std::uint64_t key = (w << 4) | static_cast<std::uint64_t>(n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SkeinPoly value = compute(n, w);
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  SkeinPoly compute(int n, Perm w) {
    if (n == 1) return skein_constant(1);
    if (entry(w, n - 1) == n - 1) return delta_ * of(n - 1, w);
    // Bubble the largest value to the end: w = w' s_{n-2} ... s_k.
    int k = position_of(w, n, n - 1);
    Perm wp = w;
    for (int i = k; i < n - 1; ++i) wp = swap_positions(wp, i);
    Element x{{wp, skein_constant(1)}};
    for (int i = k; i <= n - 3; ++i) x = left_multiply(x, n - 1, i);
    SkeinPoly sum(kSkeinVars);
    for (const auto& [u, c] : x) sum += c * of(n - 1, u);
    return sum.shifted({-1, 0});
  }

  SkeinPoly delta_ = unlink_polynomial(2);
  std::unordered_map<std::uint64_t, SkeinPoly> memo_;
};

}  // namespace

SkeinPoly homfly_braid(const BraidWord& b) {
  const int n = b.strands();
  if (n > 15) throw UsageError("homfly_braid supports at most 15 strands");
  Element x{{identity(n), skein_constant(1)}};
  for (int e : b.letters()) x = right_multiply(x, std::abs(e) - 1, e < 0);
  Trace trace;
  SkeinPoly result(kSkeinVars);
  for (const auto& [w, c] : x) result += c * trace.of(n, w);
  return result.shifted({b.writhe(), 0});
}

}  // namespace lensknot
