#include "tracta/sync.hpp"

#include <algorithm>

namespace tracta {

Domain tuple_domain(const Domain& track, int arity) {
  if (track.kind() == Domain::Kind::Tuple)
    throw InvariantError("tracks of a tuple must be base domains");
  return Domain::tuple(track.kind(), track.alphabet(), arity);
}

Dfa wf_universe(const Domain& tuple_dom) {
  if (tuple_dom.kind() != Domain::Kind::Tuple)
    throw InvariantError("well-formedness is about tuple domains");
  int k = tuple_dom.arity();
  Dfa d(tuple_dom);
  // State = set of tracks already padded; a padded track may not wake up.
  for (unsigned mask = 0; mask < (1u << k); ++mask) d.add_state(true);
  tuple_dom.for_each([&](Symbol s) {
    auto cols = tuple_dom.unpack(s);
    unsigned active = 0, padded = 0;
    for (int i = 0; i < k; ++i)
      (cols[static_cast<std::size_t>(i)] ? active : padded) |= 1u << i;
    for (unsigned mask = 0; mask < (1u << k); ++mask)
      if (!(mask & active)) d.add_arc(mask, s, mask | padded);
  });
  d.initial = 0;
  return trim(d);
}

Word convolve_tracks(const Domain& tuple_dom, const std::vector<Word>& tracks) {
  if (tuple_dom.kind() != Domain::Kind::Tuple)
    throw InvariantError("convolution needs a tuple domain");
  if (static_cast<int>(tracks.size()) != tuple_dom.arity())
    throw InvariantError("convolution arity mismatch");
  std::size_t len = 0;
  for (const Word& t : tracks) len = std::max(len, t.size());
  Word out;
  out.reserve(len);
  std::vector<std::optional<Symbol>> col(tracks.size());
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < tracks.size(); ++j)
      col[j] = i < tracks[j].size() ? std::optional<Symbol>(tracks[j][i]) : std::nullopt;
    out.push_back(tuple_dom.pack(col));
  }
  return out;
}

Word convolve(const Domain& track, const Word& u, const Word& v) {
  return convolve_tracks(tuple_domain(track, 2), {u, v});
}

std::vector<Word> deconvolve(const Domain& tuple_dom, const Word& w) {
  if (tuple_dom.kind() != Domain::Kind::Tuple)
    throw InvariantError("deconvolution needs a tuple domain");
  std::vector<Word> tracks(static_cast<std::size_t>(tuple_dom.arity()));
  for (Symbol s : w) {
    auto cols = tuple_dom.unpack(s);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (cols[j]) tracks[j].push_back(*cols[j]);
  }
  return tracks;
}

namespace {

// The component's view of a tuple column: its tracks in order, or nothing
// when all of them are padded.
std::optional<Symbol> component_symbol(const TrackedComponent& part,
                                       const std::vector<std::optional<Symbol>>& cols) {
  std::vector<std::optional<Symbol>> r(part.tracks.size());
  bool any = false;
  for (std::size_t i = 0; i < part.tracks.size(); ++i) {
    r[i] = cols[static_cast<std::size_t>(part.tracks[i])];
    if (r[i]) any = true;
  }
  if (!any) return std::nullopt;
  if (part.tracks.size() == 1) {
    if (!r[0]) throw InvariantError("half-padded column on a single track");
    return *r[0];
  }
  return part.dfa->domain.pack(r);
}

}  // namespace

Dfa embed_tracks(const Domain& tuple_dom, const std::vector<TrackedComponent>& parts,
                 const Budget& budget) {
  if (tuple_dom.kind() != Domain::Kind::Tuple)
    throw InvariantError("embedding targets a tuple domain");
  int k = tuple_dom.arity();
  for (const auto& part : parts) {
    const Domain& cd = part.dfa->domain;
    std::size_t arity = cd.kind() == Domain::Kind::Tuple
                            ? static_cast<std::size_t>(cd.arity())
                            : 1;
    if (part.tracks.size() != arity) throw InvariantError("component track count mismatch");
    if (cd.base() != tuple_dom.base() || !same_alphabet(cd.alphabet(), tuple_dom.alphabet()))
      throw InvariantError("component over a different base domain");
    for (int t : part.tracks)
      if (t < 0 || t >= k) throw InvariantError("track index out of range");
  }

  Dfa acc = wf_universe(tuple_dom);
  for (const auto& part : parts) {
    const Dfa& c = *part.dfa;
    Dfa e(tuple_dom);
    for (State q = 0; q < c.num_states(); ++q) e.add_state(c.finals[q] != 0);
    e.initial = c.initial;
    tuple_dom.for_each([&](Symbol s) {
      auto cols = tuple_dom.unpack(s);
      auto cs = component_symbol(part, cols);
      for (State q = 0; q < c.num_states(); ++q) {
        if (!cs) {
          e.add_arc(q, s, q);  // this component's tracks are all past their end
        } else if (auto t = c.step(q, *cs)) {
          e.add_arc(q, s, *t);
        }
      }
    });
    acc = intersect(acc, e, budget);
  }
  return minimize(acc, budget);
}

Dfa project_tracks(const Dfa& rel, const std::vector<int>& keep, const Budget& budget) {
  const Domain& td = rel.domain;
  if (td.kind() != Domain::Kind::Tuple)
    throw InvariantError("projection needs a tuple domain");
  if (keep.empty()) throw InvariantError("projection must keep a track");
  for (int t : keep)
    if (t < 0 || t >= td.arity()) throw InvariantError("track index out of range");

  Domain out_dom = keep.size() == 1
                       ? td.base_domain()
                       : Domain::tuple(td.base(), td.alphabet(), static_cast<int>(keep.size()));
  Nfa n(out_dom);
  for (State q = 0; q < rel.num_states(); ++q) n.add_state(rel.finals[q] != 0);
  if (rel.num_states() != 0) n.initials = {rel.initial};
  std::vector<std::optional<Symbol>> r(keep.size());
  for (State q = 0; q < rel.num_states(); ++q)
    for (const auto& [s, t] : rel.delta[q]) {
      auto cols = td.unpack(s);
      bool any = false;
      for (std::size_t i = 0; i < keep.size(); ++i) {
        r[i] = cols[static_cast<std::size_t>(keep[i])];
        if (r[i]) any = true;
      }
      if (!any)
        n.add_arc(q, kEps, t);  // column invisible after projection
      else if (keep.size() == 1)
        n.add_arc(q, *r[0], t);
      else
        n.add_arc(q, out_dom.pack(r), t);
    }
  return minimize(determinize(n, budget), budget);
}

SyncRelation SyncRelation::from_dfa(const Dfa& pair_dfa, const Budget& budget) {
  const Domain& td = pair_dfa.domain;
  if (td.kind() != Domain::Kind::Tuple || td.arity() != 2)
    throw InvariantError("pair relation needs a two-track domain");
  return SyncRelation(minimize(intersect(pair_dfa, wf_universe(td), budget), budget));
}

bool SyncRelation::member(const Word& u, const Word& v) const {
  return dfa_.accepts(convolve_tracks(dfa_.domain, {u, v}));
}

SyncRelation all_pairs(const Dfa& language, const Budget& budget) {
  Domain pd = tuple_domain(language.domain, 2);
  return SyncRelation(
      embed_tracks(pd, {{&language, {0}}, {&language, {1}}}, budget));
}

SyncRelation identity(const Dfa& language, const Budget& budget) {
  Domain pd = tuple_domain(language.domain, 2);
  // Same symbol on both tracks, never a pad: just relabel the arcs.
  Dfa d(pd);
  for (State q = 0; q < language.num_states(); ++q) d.add_state(language.finals[q] != 0);
  if (language.num_states() == 0) d.add_state(false);
  d.initial = language.num_states() == 0 ? 0 : language.initial;
  for (State q = 0; q < language.num_states(); ++q)
    for (const auto& [x, t] : language.delta[q])
      d.add_arc(q, pd.pack({x, x}), t);
  return SyncRelation(minimize(d, budget));
}

bool pair_membership(const SyncRelation& r, const Word& u, const Word& v) {
  return r.member(u, v);
}

Dfa project_left(const SyncRelation& r, const Budget& budget) {
  return project_tracks(r.pair_dfa(), {0}, budget);
}

Dfa project_right(const SyncRelation& r, const Budget& budget) {
  return project_tracks(r.pair_dfa(), {1}, budget);
}

SyncRelation restrict_left(const SyncRelation& r, const Dfa& language, const Budget& budget) {
  Dfa e = embed_tracks(r.pair_dfa().domain, {{&language, {0}}}, budget);
  return SyncRelation(minimize(intersect(r.pair_dfa(), e, budget), budget));
}

SyncRelation restrict_right(const SyncRelation& r, const Dfa& language, const Budget& budget) {
  Dfa e = embed_tracks(r.pair_dfa().domain, {{&language, {1}}}, budget);
  return SyncRelation(minimize(intersect(r.pair_dfa(), e, budget), budget));
}

SyncRelation intersect(const SyncRelation& a, const SyncRelation& b, const Budget& budget) {
  return SyncRelation(minimize(intersect(a.dfa_, b.dfa_, budget), budget));
}

SyncRelation union_rel(const SyncRelation& a, const SyncRelation& b, const Budget& budget) {
  return SyncRelation(minimize(determinize(union_nfa(a.dfa_, b.dfa_), budget), budget));
}

SyncRelation difference(const SyncRelation& a, const SyncRelation& b, const Budget& budget) {
  return SyncRelation(minimize(difference(a.dfa_, b.dfa_, budget), budget));
}

Dfa image(const SyncRelation& r, const Word& u, const Budget& budget) {
  Dfa point = word_set_dfa(r.track_domain(), {u});
  return project_right(restrict_left(r, point, budget), budget);
}

Dfa preimage(const SyncRelation& r, const Word& v, const Budget& budget) {
  Dfa point = word_set_dfa(r.track_domain(), {v});
  return project_left(restrict_right(r, point, budget), budget);
}

}  // namespace tracta
