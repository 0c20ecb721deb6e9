#pragma once

// Braid words and oriented link diagrams.
//
// A LinkDiagram is stored PD-style: every crossing lists its four incident
// arc labels counterclockwise starting from the incoming under-arc, so
// arcs[2] is always the outgoing under-arc. For a positive crossing the
// over-strand runs arcs[3] -> arcs[1]; for a negative one arcs[1] -> arcs[3].
// Arc labels are 0..num_arcs-1. An arc referenced by no crossing is a
// crossingless unknotted circle.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lensknot/errors.hpp"

namespace lensknot {

class BraidWord {
 public:
  BraidWord() : BraidWord(1, {}) {}
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  int writhe() const;
  // perm[i] is the bottom position reached by the strand starting at top position i.
  std::vector<int> permutation() const;
  BraidWord inverse() const;
  // k-th power; negative k uses the inverse.
  BraidWord power(int k) const;
  // Same word on more strands.
  BraidWord widened(int strands) const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord& a, const BraidWord& b) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

// Omega_n^q = (s_1 ... s_{n-1})^{nq}.
BraidWord full_twist(int n, int q);
// (s_1 ... s_{n-1})^m.
BraidWord torus_braid(int n, int m);

// Text format `<strands> | <letter> <letter> ...`.
BraidWord parse_braid(std::string_view text);
std::string serialize_braid(const BraidWord& b);

struct Crossing {
  int sign = 1;
  std::array<int, 4> arcs{};
  // Provenance inside a lens closure: block index (0..p-1 for tangle copies,
  // p for the twist) and letter index within that block. -1 elsewhere.
  int block = -1;
  int letter = -1;

  int under_in() const { return arcs[0]; }
  int under_out() const { return arcs[2]; }
  int over_in() const { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_out() const { return sign > 0 ? arcs[1] : arcs[3]; }
};

// Extra structure carried by lens closures.
struct LensData {
  int p = 0;
  int q = 0;
  int strands = 0;
  // level_arcs[b][j]: arc at position j entering tangle block b.
  std::vector<std::vector<int>> level_arcs;
};

struct LinkingData {
  std::vector<std::vector<long>> lambda;  // pairwise linking numbers
  long total = 0;
  long writhe = 0;
};

class LinkDiagram {
 public:
  LinkDiagram() : LinkDiagram(std::vector<Crossing>{}, 1) {}
  // Throws StructuralError when connectivity is malformed.
  LinkDiagram(std::vector<Crossing> crossings, int num_arcs);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int num_arcs() const { return num_arcs_; }
  std::size_t num_crossings() const { return crossings_.size(); }

  // Components ordered by least arc label, each traversed from that arc.
  const std::vector<std::vector<int>>& components() const { return components_; }
  std::size_t num_components() const { return components_.size(); }
  int component_of_arc(int arc) const { return arc_component_[arc]; }

  // Crossing at the head / tail of an arc, or -1 for a free circle.
  int head_crossing(int arc) const { return head_[arc]; }
  int tail_crossing(int arc) const { return tail_[arc]; }
  // Arc following `arc` through its head crossing.
  int next_arc(int arc) const;
  // Whether `arc` enters its head crossing on the over-strand.
  bool enters_over(int arc) const;

  int writhe() const;
  LinkingData linking_data() const;

  LinkDiagram switched(std::size_t crossing) const;
  LinkDiagram smoothed(std::size_t crossing) const;
  // Keeps only the listed components and the crossings among them.
  LinkDiagram sub_diagram(const std::vector<int>& components) const;

  const std::optional<LensData>& lens_data() const { return lens_; }
  void set_lens_data(LensData data) { lens_ = std::move(data); }

 private:
  // Merges arc pairs, drops labels no longer present, and renumbers
  // preserving order. `keep` marks labels that survive.
  static LinkDiagram rebuild(std::vector<Crossing> crossings, int num_arcs,
                             const std::vector<std::pair<int, int>>& merges,
                             const std::vector<bool>& keep, std::optional<LensData> lens);

  std::vector<Crossing> crossings_;
  int num_arcs_;
  std::vector<int> head_, tail_;
  std::vector<int> arc_component_;
  std::vector<std::vector<int>> components_;
  std::optional<LensData> lens_;
};

LinkDiagram mirror_diagram(const LinkDiagram& d);

// Closure of a braid. Arc j is the top of strand position j, so components
// come out ordered by least strand index.
LinkDiagram braid_closure(const BraidWord& b);

// Tangle product T^p * Omega_n^q read top to bottom, then closed.
// Requires p >= 2 and gcd(p, q) = 1.
LinkDiagram lens_closure(const BraidWord& t, int p, int q);
// The braid word whose closure lens_closure builds.
BraidWord lens_word(const BraidWord& t, int p, int q);

// Permutation of components induced by shifting tangle blocks by one.
// result[c] is the image of component c. Throws UsageError without lens data.
std::vector<int> deck_shift(const LinkDiagram& d);

bool is_lens_torus(int n, int m, int p, int q);

// KnotTheory-style planar diagram, e.g. `PD[X[1,5,2,4], X[3,1,4,6], ...]`.
LinkDiagram parse_pd(std::string_view text);

}  // namespace lensknot
