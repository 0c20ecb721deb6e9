#include "lensknot/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace lensknot {

// BraidWord

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw UsageError("a braid needs at least one strand");
  for (int e : letters_) {
    if (e == 0 || std::abs(e) > strands_ - 1)
      throw UsageError("braid letter " + std::to_string(e) + " invalid on " +
                       std::to_string(strands_) + " strands");
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (int e : letters_) w += e > 0 ? 1 : -1;
  return w;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> at(strands_);
  std::iota(at.begin(), at.end(), 0);
  for (int e : letters_) {
    int i = std::abs(e);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<int> perm(strands_);
  for (int pos = 0; pos < strands_; ++pos) perm[at[pos]] = pos;
  return perm;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& e : inv) e = -e;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<int> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::widened(int strands) const {
  if (strands < strands_) throw UsageError("cannot narrow a braid");
  return BraidWord(strands, letters_);
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw UsageError("braid strand counts differ");
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(out));
}

BraidWord torus_braid(int n, int m) {
  if (n < 2) throw UsageError("torus_braid needs n >= 2");
  std::vector<int> cycle;
  for (int i = 1; i < n; ++i) cycle.push_back(i);
  return BraidWord(n, std::move(cycle)).power(m);
}

BraidWord full_twist(int n, int q) {
  if (n < 2) throw UsageError("full_twist needs n >= 2");
  return torus_braid(n, n * q);
}

BraidWord parse_braid(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError(std::string("expected ") + what, start);
    if (pos - digits > 6) throw ParseError(std::string(what) + " out of range", start);
    return std::make_pair(std::stoi(std::string(text.substr(start, pos - start))), start);
  };

  auto [strands, spos] = read_int("strand count");
  if (strands < 1) throw ParseError("strand count must be positive", spos);
  skip_ws();
  if (pos >= text.size() || text[pos] != '|') throw ParseError("expected '|'", pos);
  ++pos;
  std::vector<int> letters;
  skip_ws();
  while (pos < text.size()) {
    auto [e, epos] = read_int("braid letter");
    if (e == 0 || std::abs(e) > strands - 1)
      throw ParseError("braid letter " + std::to_string(e) + " out of range", epos);
    letters.push_back(e);
    skip_ws();
  }
  return BraidWord(strands, std::move(letters));
}

std::string serialize_braid(const BraidWord& b) {
  std::ostringstream out;
  out << b.strands() << " |";
  for (int e : b.letters()) out << ' ' << e;
  return out.str();
}

// LinkDiagram

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int num_arcs)
    : crossings_(std::move(crossings)), num_arcs_(num_arcs) {
  if (num_arcs_ < 1) throw StructuralError("a diagram needs at least one arc");
  head_.assign(num_arcs_, -1);
  tail_.assign(num_arcs_, -1);
  auto claim = [&](std::vector<int>& slot, int arc, int c, const char* role) {
    if (arc < 0 || arc >= num_arcs_)
      throw StructuralError("crossing " + std::to_string(c) + " references unknown arc " +
                            std::to_string(arc));
    if (slot[arc] != -1)
      throw StructuralError("arc " + std::to_string(arc) + " is " + role + " twice");
    slot[arc] = c;
  };
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const Crossing& x = crossings_[i];
    if (x.sign != 1 && x.sign != -1) throw StructuralError("crossing sign must be +1 or -1");
    int c = static_cast<int>(i);
    claim(head_, x.under_in(), c, "incoming");
    claim(head_, x.over_in(), c, "incoming");
    claim(tail_, x.under_out(), c, "outgoing");
    claim(tail_, x.over_out(), c, "outgoing");
  }
  for (int a = 0; a < num_arcs_; ++a) {
    if ((head_[a] == -1) != (tail_[a] == -1))
      throw StructuralError("arc " + std::to_string(a) + " has only one end attached");
  }

  arc_component_.assign(num_arcs_, -1);
  for (int a = 0; a < num_arcs_; ++a) {
    if (arc_component_[a] != -1) continue;
    int comp = static_cast<int>(components_.size());
    components_.emplace_back();
    int cur = a;
    do {
      if (arc_component_[cur] != -1) throw StructuralError("arc traversal is not a cycle");
      arc_component_[cur] = comp;
      components_.back().push_back(cur);
      cur = next_arc(cur);
    } while (cur != a);
  }
}

int LinkDiagram::next_arc(int arc) const {
  int c = head_[arc];
  if (c < 0) return arc;
  const Crossing& x = crossings_[c];
  return x.under_in() == arc ? x.under_out() : x.over_out();
}

bool LinkDiagram::enters_over(int arc) const {
  int c = head_[arc];
  return c >= 0 && crossings_[c].over_in() == arc;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

LinkingData LinkDiagram::linking_data() const {
  std::size_t n = components_.size();
  LinkingData out;
  out.lambda.assign(n, std::vector<long>(n, 0));
  for (const auto& x : crossings_) {
    out.writhe += x.sign;
    int a = arc_component_[x.under_in()], b = arc_component_[x.over_in()];
    if (a != b) {
      out.lambda[a][b] += x.sign;
      out.lambda[b][a] += x.sign;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (out.lambda[i][j] % 2 != 0)
        throw StructuralError("odd signed crossing count between two components");
      out.lambda[i][j] /= 2;
      if (i < j) out.total += out.lambda[i][j];
    }
  }
  return out;
}

LinkDiagram LinkDiagram::rebuild(std::vector<Crossing> crossings, int num_arcs,
                                 const std::vector<std::pair<int, int>>& merges,
                                 const std::vector<bool>& keep, std::optional<LensData> lens) {
  std::vector<int> parent(num_arcs);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (auto [a, b] : merges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<bool> live(num_arcs, false);
  for (int a = 0; a < num_arcs; ++a)
    if (keep[a]) live[find(a)] = true;
  std::vector<int> label(num_arcs, -1);
  int next = 0;
  for (int a = 0; a < num_arcs; ++a)
    if (live[a] && find(a) == a) label[a] = next++;

  for (auto& x : crossings)
    for (int& a : x.arcs) a = label[find(a)];
  if (lens) {
    for (auto& level : lens->level_arcs)
      for (int& a : level) a = label[find(a)];
  }
  LinkDiagram d(std::move(crossings), next);
  d.lens_ = std::move(lens);
  return d;
}

LinkDiagram LinkDiagram::switched(std::size_t i) const {
  if (i >= crossings_.size()) throw UsageError("crossing index out of range");
  LinkDiagram d = *this;
  Crossing& x = d.crossings_[i];
  auto [a, b, c, e] = x.arcs;
  x.arcs = x.sign > 0 ? std::array<int, 4>{e, a, b, c} : std::array<int, 4>{b, c, e, a};
  x.sign = -x.sign;
  return d;
}

LinkDiagram LinkDiagram::smoothed(std::size_t i) const {
  if (i >= crossings_.size()) throw UsageError("crossing index out of range");
  const Crossing& x = crossings_[i];
  std::vector<std::pair<int, int>> merges{{x.under_in(), x.over_out()}, {x.over_in(), x.under_out()}};
  std::vector<Crossing> rest;
  rest.reserve(crossings_.size() - 1);
  for (std::size_t j = 0; j < crossings_.size(); ++j)
    if (j != i) rest.push_back(crossings_[j]);
  return rebuild(std::move(rest), num_arcs_, merges, std::vector<bool>(num_arcs_, true), lens_);
}

LinkDiagram LinkDiagram::sub_diagram(const std::vector<int>& comps) const {
  std::vector<bool> in(components_.size(), false);
  for (int c : comps) {
    if (c < 0 || static_cast<std::size_t>(c) >= components_.size())
      throw UsageError("component index out of range");
    in[c] = true;
  }
  std::vector<bool> keep(num_arcs_);
  for (int a = 0; a < num_arcs_; ++a) keep[a] = in[arc_component_[a]];
  std::vector<Crossing> rest;
  std::vector<std::pair<int, int>> merges;
  for (const auto& x : crossings_) {
    bool u = in[arc_component_[x.under_in()]], o = in[arc_component_[x.over_in()]];
    if (u && o) {
      rest.push_back(x);
    } else if (u) {
      merges.emplace_back(x.under_in(), x.under_out());
    } else if (o) {
      merges.emplace_back(x.over_in(), x.over_out());
    }
  }
  if (rest.empty() && std::none_of(keep.begin(), keep.end(), [](bool b) { return b; }))
    throw UsageError("sub_diagram needs at least one component");
  return rebuild(std::move(rest), num_arcs_, merges, keep, std::nullopt);
}

LinkDiagram mirror_diagram(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (std::size_t i = 0; i < d.num_crossings(); ++i) out = out.switched(i);
  return out;
}

// Closures

namespace {

struct Block {
  const std::vector<int>* letters;
  int tag;
};

LinkDiagram close_blocks(int n, const std::vector<Block>& blocks, std::optional<LensData> lens) {
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  int next = n;
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> levels;
  for (const auto& blk : blocks) {
    levels.push_back(cur);
    for (std::size_t k = 0; k < blk.letters->size(); ++k) {
      int e = (*blk.letters)[k];
      int a = std::abs(e) - 1, b = a + 1;
      int out_a = next++, out_b = next++;
      Crossing x;
      x.sign = e > 0 ? 1 : -1;
      x.arcs = e > 0 ? std::array<int, 4>{cur[a], out_a, out_b, cur[b]}
                     : std::array<int, 4>{cur[b], cur[a], out_a, out_b};
      x.block = blk.tag;
      x.letter = static_cast<int>(k);
      crossings.push_back(x);
      cur[a] = out_a;
      cur[b] = out_b;
    }
  }
  std::vector<std::pair<int, int>> merges;
  for (int j = 0; j < n; ++j) merges.emplace_back(cur[j], j);
  if (lens) lens->level_arcs = std::move(levels);
  // Bottom ends close onto the tops; relabel contiguously.
  std::vector<int> parent(next);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : merges) parent[a] = b;
  std::vector<int> label(next, -1);
  int count = 0;
  for (int a = 0; a < next; ++a)
    if (parent[a] == a) label[a] = count++;
  for (auto& x : crossings)
    for (int& a : x.arcs) a = label[parent[a]];
  if (lens)
    for (auto& level : lens->level_arcs)
      for (int& a : level) a = label[parent[a]];
  LinkDiagram d(std::move(crossings), count);
  if (lens) d.set_lens_data(std::move(*lens));
  return d;
}

}  // namespace

LinkDiagram braid_closure(const BraidWord& b) {
  return close_blocks(b.strands(), {{&b.letters(), -1}}, std::nullopt);
}

BraidWord lens_word(const BraidWord& t, int p, int q) {
  if (p < 2) throw UsageError("lens closure needs p >= 2");
  if (std::gcd(p, q) != 1) throw UsageError("lens closure needs gcd(p, q) = 1");
  BraidWord word = t.power(p);
  if (t.strands() >= 2) word = word * full_twist(t.strands(), q);
  return word;
}

LinkDiagram lens_closure(const BraidWord& t, int p, int q) {
  lens_word(t, p, q);  // validates parameters
  int n = t.strands();
  std::vector<int> twist = n >= 2 ? full_twist(n, q).letters() : std::vector<int>{};
  std::vector<Block> blocks;
  for (int b = 0; b < p; ++b) blocks.push_back({&t.letters(), b});
  blocks.push_back({&twist, p});
  LensData data;
  data.p = p;
  data.q = q;
  data.strands = n;
  return close_blocks(n, blocks, data);
}

std::vector<int> deck_shift(const LinkDiagram& d) {
  const auto& lens = d.lens_data();
  if (!lens) throw UsageError("deck_shift needs a diagram built by lens_closure");
  std::vector<int> image(d.num_components(), -1);
  for (int j = 0; j < lens->strands; ++j) {
    int from = d.component_of_arc(lens->level_arcs[0][j]);
    int to = d.component_of_arc(lens->level_arcs[1 % lens->p][j]);
    if (image[from] != -1 && image[from] != to)
      throw ConsistencyError("block shift is not well defined on components");
    image[from] = to;
  }
  for (int c : image)
    if (c == -1) throw ConsistencyError("a component misses the first tangle level");
  return image;
}

bool is_lens_torus(int n, int m, int p, int q) {
  if (p < 2) throw UsageError("is_lens_torus needs p >= 2");
  long diff = static_cast<long>(m) - static_cast<long>(n) * q;
  return diff % p == 0;
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<long, 4>> raw;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  skip_ws();
  if (text.substr(pos, 2) != "PD") throw ParseError("expected 'PD'", pos);
  pos += 2;
  expect('[');
  skip_ws();
  while (pos < text.size() && text[pos] != ']') {
    if (!raw.empty()) expect(',');
    expect('X');
    expect('[');
    std::array<long, 4> x{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) expect(',');
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a positive arc label", start);
      x[k] = std::stol(std::string(text.substr(start, pos - start)));
    }
    expect(']');
    raw.push_back(x);
    skip_ws();
  }
  expect(']');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  if (raw.empty()) return LinkDiagram();

  std::map<long, int> ids;
  for (const auto& x : raw)
    for (long a : x) ids.emplace(a, 0);
  int next = 0;
  for (auto& [label, id] : ids) id = next++;
  std::vector<Crossing> crossings;
  for (const auto& x : raw) {
    Crossing c;
    long j = x[1], l = x[3];
    c.sign = (j - l == 1 || l - j > 1) ? 1 : -1;
    for (int k = 0; k < 4; ++k) c.arcs[k] = ids[x[k]];
    crossings.push_back(c);
  }
  return LinkDiagram(std::move(crossings), next);
}

}  // namespace lensknot
