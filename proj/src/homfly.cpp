#include "lensknot/homfly.hpp"

#include <cstdint>
#include <unordered_map>

namespace lensknot {

namespace {

// A diagram as signed Gauss code: one visit list per component, each visit
// encoded as (crossing << 1) | over.
struct Gauss {
  std::vector<std::vector<std::int32_t>> comps;
  std::vector<std::int8_t> sign;
};

Gauss to_gauss(const LinkDiagram& d) {
  Gauss g;
  g.sign.reserve(d.num_crossings());
  for (const auto& x : d.crossings()) g.sign.push_back(static_cast<std::int8_t>(x.sign));
  for (const auto& comp : d.components()) {
    auto& visits = g.comps.emplace_back();
    for (int arc : comp) {
      int c = d.head_crossing(arc);
      if (c >= 0) visits.push_back((c << 1) | (d.enters_over(arc) ? 1 : 0));
    }
  }
  return g;
}

struct Canonical {
  Gauss g;
  int free_loops = 0;
  std::string key;
};

// Drops crossingless circles (they only contribute a factor of delta) and
// renumbers crossings by first visit.
Canonical canonicalize(const Gauss& in) {
  Canonical out;
  std::vector<std::int32_t> rename(in.sign.size(), -1);
  std::int32_t next = 0;
  for (const auto& comp : in.comps) {
    if (comp.empty()) {
      ++out.free_loops;
      continue;
    }
    auto& c = out.g.comps.emplace_back();
    c.reserve(comp.size());
    for (std::int32_t code : comp) {
      std::int32_t id = code >> 1;
      if (rename[id] < 0) {
        rename[id] = next++;
        out.g.sign.push_back(in.sign[id]);
      }
      c.push_back((rename[id] << 1) | (code & 1));
    }
  }
  // Length-prefixed, so the encoding is injective.
  std::string& key = out.key;
  auto put = [&key](std::int32_t x) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>((x >> 8) & 0xff));
    key.push_back(static_cast<char>((x >> 16) & 0xff));
  };
  for (const auto& c : out.g.comps) {
    put(static_cast<std::int32_t>(c.size()));
    for (std::int32_t code : c) put(code);
  }
  for (auto s : out.g.sign) key.push_back(s > 0 ? '+' : '-');
  return out;
}

Gauss switch_crossing(Gauss g, std::int32_t id) {
  for (auto& comp : g.comps)
    for (auto& code : comp)
      if ((code >> 1) == id) code ^= 1;
  g.sign[id] = static_cast<std::int8_t>(-g.sign[id]);
  return g;
}

Gauss smooth_crossing(const Gauss& g, std::int32_t id) {
  std::size_t ci = 0, i = 0, cj = 0, j = 0;
  bool found_first = false;
  for (std::size_t c = 0; c < g.comps.size(); ++c) {
    for (std::size_t k = 0; k < g.comps[c].size(); ++k) {
      if ((g.comps[c][k] >> 1) != id) continue;
      if (!found_first) {
        ci = c;
        i = k;
        found_first = true;
      } else {
        cj = c;
        j = k;
      }
    }
  }
  Gauss out;
  out.sign = g.sign;
  if (ci == cj) {
    const auto& comp = g.comps[ci];
    std::vector<std::int32_t> outer(comp.begin(), comp.begin() + i);
    outer.insert(outer.end(), comp.begin() + j + 1, comp.end());
    std::vector<std::int32_t> inner(comp.begin() + i + 1, comp.begin() + j);
    for (std::size_t c = 0; c < g.comps.size(); ++c) {
      if (c == ci) {
        out.comps.push_back(std::move(outer));
        out.comps.push_back(std::move(inner));
      } else {
        out.comps.push_back(g.comps[c]);
      }
    }
  } else {
    const auto& c1 = g.comps[ci];
    const auto& c2 = g.comps[cj];
    std::vector<std::int32_t> merged(c1.begin(), c1.begin() + i);
    merged.insert(merged.end(), c2.begin() + j + 1, c2.end());
    merged.insert(merged.end(), c2.begin(), c2.begin() + j);
    merged.insert(merged.end(), c1.begin() + i + 1, c1.end());
    for (std::size_t c = 0; c < g.comps.size(); ++c) {
      if (c == ci)
        out.comps.push_back(std::move(merged));
      else if (c != cj)
        out.comps.push_back(g.comps[c]);
    }
  }
  return out;
}

class DescendingEngine {
 public:
  explicit DescendingEngine(const SkeinOptions& options) : options_(options) {}

  SkeinPoly run(const Gauss& g) { return eval(g); }
  const SkeinStats& stats() const { return stats_; }

 private:
  const SkeinPoly& delta_pow(int k) {
    while (static_cast<int>(delta_.size()) <= k)
      delta_.push_back(unlink_polynomial(static_cast<int>(delta_.size()) + 1));
    return delta_[k];
  }

  SkeinPoly eval(const Gauss& g) {
    Canonical c = canonicalize(g);
    if (c.g.comps.empty()) return delta_pow(c.free_loops - 1);
    SkeinPoly core = solve(c);
    return c.free_loops == 0 ? core : core * delta_pow(c.free_loops);
  }

  SkeinPoly solve(const Canonical& c) {
    if (auto it = memo_.find(c.key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    if (++stats_.nodes > options_.node_budget)
      throw ResourceError("skein recursion exceeded its node budget of " +
                          std::to_string(options_.node_budget));

    const Gauss& g = c.g;
    std::vector<char> seen(g.sign.size(), 0);
    std::int32_t bad = -1;
    for (const auto& comp : g.comps) {
      for (std::int32_t code : comp) {
        std::int32_t id = code >> 1;
        if (seen[id]) continue;
        seen[id] = 1;
        if ((code & 1) == 0) {
          bad = id;
          break;
        }
      }
      if (bad >= 0) break;
    }

    SkeinPoly result(kSkeinVars);
    if (bad < 0) {
      result = delta_pow(static_cast<int>(g.comps.size()) - 1);
    } else {
      SkeinPoly switched = eval(switch_crossing(g, bad));
      SkeinPoly smoothed = eval(smooth_crossing(g, bad));
      if (g.sign[bad] > 0) {
        // P+ = v^2 P- + v z P0
        result = switched.shifted({2, 0});
        result.add_scaled_shifted(smoothed, {1, 1}, 1);
      } else {
        // P- = v^-2 P+ - v^-1 z P0
        result = switched.shifted({-2, 0});
        result.add_scaled_shifted(smoothed, {-1, 1}, -1);
      }
    }
    memo_.emplace(c.key, result);
    return result;
  }

  SkeinOptions options_;
  SkeinStats stats_;
  std::unordered_map<std::string, SkeinPoly> memo_;
  std::vector<SkeinPoly> delta_;
};

IntLaurent1 knot_slice(const LinkDiagram& knot, long k) {
  if (knot.num_components() != 1)
    throw UsageError("expected a knot, got a " + std::to_string(knot.num_components()) +
                     "-component link");
  return z_slice(homfly(knot), k);
}

}  // namespace

SkeinPoly unlink_polynomial(int components) {
  if (components < 1) throw UsageError("an unlink has at least one component");
  SkeinPoly delta = parse_skein("v^-1*z^-1 - v*z^-1");
  return delta.pow(static_cast<unsigned>(components - 1));
}

std::string canonical_key(const LinkDiagram& d) { return canonicalize(to_gauss(d)).key; }

SkeinPoly homfly(const LinkDiagram& d, const SkeinOptions& options, SkeinStats* stats) {
  DescendingEngine engine(options);
  SkeinPoly result = engine.run(to_gauss(d));
  if (stats) *stats = engine.stats();
  return result;
}

SkeinPoly homfly_closure(const BraidWord& b, Engine engine) {
  if (engine == Engine::Auto) engine = b.length() > 24 && b.strands() <= 9 ? Engine::Hecke : Engine::Skein;
  return engine == Engine::Hecke ? homfly_braid(b) : homfly(braid_closure(b));
}

IntLaurent1 p0(const LinkDiagram& knot) { return knot_slice(knot, 0); }
IntLaurent1 p2(const LinkDiagram& knot) { return knot_slice(knot, 2); }

bool check_lowest_coefficient(const LinkDiagram& d) {
  const long n = static_cast<long>(d.num_components());
  if (n < 2) throw UsageError("check_lowest_coefficient needs at least two components");
  auto link = d.linking_data();
  IntLaurent1 rhs = parse_laurent1("v^-1 - v").pow(static_cast<unsigned>(n - 1)).shifted(2 * link.total);
  for (int i = 0; i < n; ++i) rhs *= z_slice(homfly(d.sub_diagram({i})), 0);
  return z_slice(homfly(d), 1 - n) == rhs;
}

bool check_next_coefficient(const LinkDiagram& d) {
  const int n = static_cast<int>(d.num_components());
  if (n < 3) throw UsageError("check_next_coefficient needs at least three components");
  auto link = d.linking_data();
  std::vector<IntLaurent1> P0, P2;
  for (int i = 0; i < n; ++i) {
    SkeinPoly pk = homfly(d.sub_diagram({i}));
    P0.push_back(z_slice(pk, 0));
    P2.push_back(z_slice(pk, 2));
  }
  const IntLaurent1 d1 = parse_laurent1("v^-1 - v");

  IntLaurent1 pairs({Var::v});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      IntLaurent1 term = z_slice(homfly(d.sub_diagram({i, j})), 1).shifted(-2 * link.lambda[i][j]);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) term *= P0[k];
      pairs += term;
    }
  }
  IntLaurent1 singles({Var::v});
  for (int i = 0; i < n; ++i) {
    IntLaurent1 term = P2[i];
    for (int j = 0; j < n; ++j)
      if (j != i) term *= P0[j];
    singles += term;
  }
  IntLaurent1 rhs = (d1.pow(n - 2) * pairs - d1.pow(n - 1) * singles.scaled(n - 2)).shifted(2 * link.total);
  return z_slice(homfly(d), 3 - n) == rhs;
}

}  // namespace lensknot
