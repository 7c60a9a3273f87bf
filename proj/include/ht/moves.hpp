#pragma once

#include <set>

#include "ht/sphere_map.hpp"

namespace ht {

/// Finger move of e over v: flips cr(e,f) exactly for every f incident to v,
/// leaves every other pairwise parity and lambda unchanged.
/// Pre: v is not an endpoint of e.
SphereDrawing vertex_edge_switch(const SphereDrawing& d, VertexId v, EdgeId e);

/// Variant whose corridor never crosses the chains of `avoid` edges.
SphereDrawing vertex_edge_switch_avoiding(const SphereDrawing& d, VertexId v, EdgeId e,
                                          const std::set<EdgeId>& avoid);

/// Vertex-edge switches (v,e) for every nontrivial e not incident to v, then
/// lambda flips on every edge at v. Preserves projective-HT validity and the
/// triviality of every cycle.
SphereDrawing vertex_crosscap_switch(const SphereDrawing& d, VertexId v);
SphereDrawing vertex_crosscap_switch_avoiding(const SphereDrawing& d, VertexId v,
                                              const std::set<EdgeId>& avoid);

/// Slides v along uv towards u until uv is free of crossings; the crossings
/// migrate to the other edges at v. Pre: uv even. All pairwise crossing
/// parities are preserved.
SphereDrawing almost_contract(const SphereDrawing& d, const Cycle& z, EdgeId uv, EdgeId vw);

/// Same surgery without the cycle bookkeeping checks.
SphereDrawing slide_contract(const SphereDrawing& d, EdgeId uv, VertexId v);

/// Local moves next to the vertices of z making every edge of z even.
/// Pre: lambda = 0 on E(z). Parities of pairs with neither edge on z are
/// preserved exactly.
SphereDrawing make_even_cycle(const SphereDrawing& d, const Cycle& z);

/// Concentrates the crossings of z onto one edge by almost-contractions and
/// removes that edge's self-crossings; z becomes simple. Pre: z's edges even.
SphereDrawing make_simple_cycle(const SphereDrawing& d, const Cycle& z);

/// Flips cr(e,f) for the single adjacent pair (e,f) at their shared vertex v,
/// changing no other pairwise parity. Sweeps never cross darts of `frozen`
/// edges at v.
SphereDrawing flip_adjacent_pair(const SphereDrawing& d, VertexId v, EdgeId e, EdgeId f,
                                 const std::set<EdgeId>& frozen = {});

/// Parity-neutral finger: e dips across a few segments and returns. Used by
/// the scrambler. target_face is an index into the current face list.
SphereDrawing finger_excursion(const SphereDrawing& d, EdgeId e, int target_face,
                               const std::set<EdgeId>& avoid = {});

/// S2 -> RP2: pulls every nontrivial edge through a fresh crosscap node.
/// The result carries the crosscap node; cr grows by lambda(e)lambda(f).
SphereDrawing rp2_export(const SphereDrawing& d);

/// RP2 -> S2: replaces the crosscap node by chords inside the removed disk;
/// two chords cross once iff their boundary ends interleave. lambda becomes
/// the passage count mod 2.
SphereDrawing rp2_import(const SphereDrawing& rp2);

}  // namespace ht
