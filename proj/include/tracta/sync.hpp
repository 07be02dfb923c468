#pragma once

#include <vector>

#include "tracta/nfa.hpp"

namespace tracta {

// k synchronized tracks of a base domain (letters or nonempty steps).
Domain tuple_domain(const Domain& track, int arity);

// All well-formed padded words: once a track shows the pad it shows it to
// the end. Every state is accepting.
Dfa wf_universe(const Domain& tuple_dom);

// Position-wise tupling, shorter tracks padded at the tail.
Word convolve_tracks(const Domain& tuple_dom, const std::vector<Word>& tracks);
Word convolve(const Domain& track, const Word& u, const Word& v);
// The individual tracks, pads dropped.
std::vector<Word> deconvolve(const Domain& tuple_dom, const Word& w);

// One automaton placed on chosen tracks of a wider tuple. `tracks` gives the
// target track of each component track (repeats and overlaps are legal), so
// a binary relation on tracks [i,j] or a language on track [i] can be
// combined freely.
struct TrackedComponent {
  const Dfa* dfa;           // over the base domain (arity 1) or a tuple of it
  std::vector<int> tracks;  // target track per component track
};

// Minimal acceptor of the well-formed tuple words whose restriction to each
// component's tracks (tail pads dropped) that component accepts.
Dfa embed_tracks(const Domain& tuple_dom, const std::vector<TrackedComponent>& parts,
                 const Budget& budget = Budget());

// Keep only the listed tracks, in the listed order; dropped tracks are
// existentially projected away. A single kept track yields a base-domain
// automaton. Result is minimal.
Dfa project_tracks(const Dfa& rel, const std::vector<int>& keep,
                   const Budget& budget = Budget());

// A binary relation on padded pairs of base-domain words, held as the
// canonical minimal DFA of its convolution language, so operator== is
// relation equality.
class SyncRelation {
 public:
  // Ill-formed pair words in the input are dropped.
  static SyncRelation from_dfa(const Dfa& pair_dfa, const Budget& budget = Budget());

  Domain track_domain() const { return dfa_.domain.base_domain(); }
  const Dfa& pair_dfa() const { return dfa_; }

  bool member(const Word& u, const Word& v) const;
  bool is_empty_rel() const { return is_empty(dfa_); }

  bool operator==(const SyncRelation& o) const { return same_dfa(dfa_, o.dfa_); }
  bool operator!=(const SyncRelation& o) const { return !(*this == o); }

 private:
  explicit SyncRelation(Dfa d) : dfa_(std::move(d)) {}

  friend SyncRelation all_pairs(const Dfa&, const Budget&);
  friend SyncRelation identity(const Dfa&, const Budget&);
  friend SyncRelation restrict_left(const SyncRelation&, const Dfa&, const Budget&);
  friend SyncRelation restrict_right(const SyncRelation&, const Dfa&, const Budget&);
  friend SyncRelation intersect(const SyncRelation&, const SyncRelation&, const Budget&);
  friend SyncRelation union_rel(const SyncRelation&, const SyncRelation&, const Budget&);
  friend SyncRelation difference(const SyncRelation&, const SyncRelation&, const Budget&);

  Dfa dfa_;  // minimal, over tuple_domain(track, 2), well-formed
};

// {u ⊗ v | u, v ∈ L}.
SyncRelation all_pairs(const Dfa& language, const Budget& budget = Budget());
// {w ⊗ w | w ∈ L}.
SyncRelation identity(const Dfa& language, const Budget& budget = Budget());

bool pair_membership(const SyncRelation& r, const Word& u, const Word& v);

// Domain and image of the relation, as minimal base-domain automata.
Dfa project_left(const SyncRelation& r, const Budget& budget = Budget());
Dfa project_right(const SyncRelation& r, const Budget& budget = Budget());

SyncRelation restrict_left(const SyncRelation& r, const Dfa& language,
                           const Budget& budget = Budget());
SyncRelation restrict_right(const SyncRelation& r, const Dfa& language,
                            const Budget& budget = Budget());

SyncRelation intersect(const SyncRelation& a, const SyncRelation& b,
                       const Budget& budget = Budget());
SyncRelation union_rel(const SyncRelation& a, const SyncRelation& b,
                       const Budget& budget = Budget());
SyncRelation difference(const SyncRelation& a, const SyncRelation& b,
                        const Budget& budget = Budget());

// {v | (u,v) ∈ R} and {u | (u,v) ∈ R}.
Dfa image(const SyncRelation& r, const Word& u, const Budget& budget = Budget());
Dfa preimage(const SyncRelation& r, const Word& v, const Budget& budget = Budget());

}  // namespace tracta
